// Copyright 2026 The symlie Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symlie/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "symlie/error.hpp"

namespace symlie {

std::string format_real(double v) {
  if (v == 0.0) return "0";  // folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string matrix_to_json(const ComplexMatrix& m) {
  // Written by hand so numbers keep the 17-digit formatting.
  std::string out = "[\n";
  for (std::size_t r = 0; r < m.dim(); ++r) {
    out += "  [";
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (c) out += ", ";
      out += "[" + format_real(m(r, c).real()) + ", " + format_real(m(r, c).imag()) + "]";
    }
    out += r + 1 < m.dim() ? "],\n" : "]\n";
  }
  return out + "]\n";
}

ComplexMatrix matrix_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix is not valid JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("matrix")) doc = doc["matrix"];
  if (!doc.is_array() || doc.empty()) throw ParseError("matrix JSON must be a non-empty array of rows");
  const std::size_t dim = doc.size();
  std::vector<cplx> data;
  data.reserve(dim * dim);
  for (const auto& row : doc) {
    if (!row.is_array() || row.size() != dim) throw ParseError("matrix JSON is not square");
    for (const auto& entry : row) {
      if (entry.is_number()) {
        data.emplace_back(entry.get<double>(), 0.0);
      } else if (entry.is_array() && entry.size() == 2 && entry[0].is_number() &&
                 entry[1].is_number()) {
        data.emplace_back(entry[0].get<double>(), entry[1].get<double>());
      } else {
        throw ParseError("matrix entries must be [re, im] pairs");
      }
    }
  }
  return ComplexMatrix(dim, std::move(data));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << contents;
}

}  // namespace symlie
