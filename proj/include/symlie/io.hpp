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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "symlie/matrix.hpp"

namespace symlie {

/// 17 significant digits; round-trips every double.
std::string format_real(double v);

/// Matrix as JSON nested arrays of [re, im] pairs.
std::string matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace symlie
