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

// symlie command line: basis, dim, check, path, synth, random, verify.

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "symlie/algebra.hpp"
#include "symlie/circuit.hpp"
#include "symlie/error.hpp"
#include "symlie/group_ops.hpp"
#include "symlie/io.hpp"
#include "symlie/symmetry.hpp"
#include "symlie/verify.hpp"

namespace symlie::cli {
namespace {

/// Relative --out paths are resolved under this directory when it is set.
constexpr const char* kOutputDirEnv = "SYMLIE_OUTPUT_DIR";

struct RunConfig {
  std::string command;
  int n = 0;  // 0: take n from the symmetry file
  std::string symmetry = "full_swap";
  double tol = 1e-10;
  std::uint64_t seed = 1;
  std::string out;
  std::string format;  // empty: command default
  bool no_header = false;

  // command-specific
  std::string matrix_path;
  int samples = 10;
  int depth = 8;
  std::string pauli;
  std::string sum_path;
  int element = -1;
  double alpha = 0.0;
  std::string eval_path;
  bool generators_only = false;
};

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n", cfg.n, "Qubit count (required with presets)")->check(CLI::Range(1, 64));
  sub->add_option("--symmetry", cfg.symmetry,
                  "Symmetry spec JSON file or preset: trivial, full_swap, cyclic, dihedral");
  sub->add_option("--tol", cfg.tol, "Tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "RNG seed");
  sub->add_option("--out", cfg.out, "Write primary output to this file instead of stdout");
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_flag("--no-header", cfg.no_header, "Suppress the timestamped header line");
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

class Output {
 public:
  Output(const RunConfig& cfg, std::string default_format, std::ostream& out)
      : cfg_(cfg), format_(cfg.format.empty() ? std::move(default_format) : cfg.format), out_(out) {}

  const std::string& format() const { return format_; }
  std::ostringstream& body() { return body_; }

  void flush() {
    std::string text;
    if (!cfg_.no_header && format_ != "json") text = "# symlie " + cfg_.command + " " + timestamp() + "\n";
    text += body_.str();
    if (cfg_.out.empty()) {
      out_ << text;
      return;
    }
    std::filesystem::path path(cfg_.out);
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir && path.is_relative())
      path = std::filesystem::path(dir) / path;
    write_file(path, text);
  }

 private:
  const RunConfig& cfg_;
  std::string format_;
  std::ostream& out_;
  std::ostringstream body_;
};

SymmetrySpec resolve_spec(const RunConfig& cfg) {
  // Presets and files share the closure path through SymmetrySpec.
  if (is_preset_name(cfg.symmetry)) {
    if (cfg.n < 1) throw ParseError("--n is required with a symmetry preset");
    return preset_spec(cfg.symmetry, cfg.n);
  }
  if (!std::filesystem::exists(cfg.symmetry))
    throw ParseError("--symmetry \"" + cfg.symmetry + "\" is neither a preset nor a readable file");
  SymmetrySpec spec = parse_symmetry_json(read_file(cfg.symmetry));
  if (cfg.n != 0 && cfg.n != spec.n)
    throw ParseError("--n " + std::to_string(cfg.n) + " disagrees with the symmetry file (n = " +
                     std::to_string(spec.n) + ")");
  return spec;
}

// ---------------------------------------------------------------------------

int cmd_basis(const RunConfig& cfg, std::ostream& out) {
  const SymmetrySpec spec = resolve_spec(cfg);
  const SymmetryGroup group = build_group(spec);
  const InvariantBasis basis = build_basis(spec.n, group);
  Output o(cfg, "text", out);
  if (o.format() == "json") {
    nlohmann::ordered_json doc;
    doc["n"] = spec.n;
    doc["group"] = spec.label;
    doc["order"] = group.order();
    doc["dim"] = basis.size();
    doc["elements"] = nlohmann::ordered_json::array();
    for (const PauliSum& e : basis.elements) {
      auto terms = nlohmann::ordered_json::array();
      for (const PauliTerm& t : e.terms())
        terms.push_back({{"pauli", t.pauli.letters()}, {"coeff", {t.coeff.real(), t.coeff.imag()}}});
      doc["elements"].push_back(terms);
    }
    o.body() << doc.dump(2) << "\n";
  } else if (o.format() == "csv") {
    o.body() << "index,representative,orbit_size\n";
    for (std::size_t i = 0; i < basis.size(); ++i)
      o.body() << i << "," << basis.representatives[i].letters() << "," << basis.elements[i].size() << "\n";
  } else {
    for (const PauliSum& e : basis.elements) o.body() << e.to_line() << "\n";
    o.body() << "dim " << basis.size() << "\n";
  }
  o.flush();
  return kOk;
}

int cmd_dim(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  struct Row {
    int n;
    std::string group;
    std::size_t dim;
    std::uint64_t burnside;
  };
  std::vector<Row> rows;
  auto add_row = [&](const SymmetrySpec& spec) {
    const SymmetryGroup g = build_group(spec);
    rows.push_back({spec.n, spec.label, build_basis(spec.n, g).size(), burnside_dimension(spec.n, g)});
  };
  if (is_preset_name(cfg.symmetry)) {
    if (cfg.n < 1) throw ParseError("--n is required with a symmetry preset");
    for (int n = 1; n <= cfg.n; ++n) add_row(preset_spec(cfg.symmetry, n));
  } else {
    add_row(resolve_spec(cfg));
  }
  Output o(cfg, "csv", out);
  bool consistent = true;
  if (o.format() == "json") {
    auto doc = nlohmann::ordered_json::array();
    for (const Row& r : rows) doc.push_back({{"n", r.n}, {"group", r.group}, {"dimension", r.dim}});
    o.body() << doc.dump(2) << "\n";
  } else {
    o.body() << "n,group,dimension\n";
    for (const Row& r : rows) o.body() << r.n << "," << r.group << "," << r.dim << "\n";
  }
  for (const Row& r : rows) {
    if (r.dim != r.burnside) {
      err << "error: n=" << r.n << " basis size " << r.dim << " differs from Burnside count " << r.burnside
          << "\n";
      consistent = false;
    }
  }
  o.flush();
  return consistent ? kOk : kViolated;
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.matrix_path.empty()) throw ParseError("check needs --matrix <file>");
  const ComplexMatrix u = matrix_from_json(read_file(cfg.matrix_path));
  RunConfig c = cfg;
  if (c.n == 0 && is_preset_name(c.symmetry)) c.n = u.qubits();
  const SymmetrySpec spec = resolve_spec(c);
  const SymmetryGroup group = build_group(spec);
  if (u.dim() != (std::size_t{1} << spec.n))
    throw DimensionError("matrix is " + std::to_string(u.dim()) + "x" + std::to_string(u.dim()) +
                         ", expected 2^" + std::to_string(spec.n));
  const double unit_res = u.unitarity_residual();
  if (!(unit_res < kUnitaryTol))
    err << "warning: input is not unitary (‖UU† − 1‖_F = " << format_real(unit_res) << ")\n";

  const auto mode = cfg.generators_only ? InvarianceMode::kGeneratorsOnly : InvarianceMode::kFullGroup;
  const auto& checked = cfg.generators_only ? group.generators() : group.elements();
  std::vector<double> defects;
  for (const SymmetryElement& e : checked) defects.push_back(symmetry_defect(u, e));
  const InvarianceResult verdict = is_invariant(u, group, cfg.tol, mode);

  Output o(cfg, "text", out);
  if (o.format() == "json") {
    nlohmann::ordered_json doc;
    doc["n"] = spec.n;
    doc["tolerance"] = cfg.tol;
    doc["unitarity_residual"] = unit_res;
    doc["elements"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < defects.size(); ++i)
      doc["elements"].push_back({{"index", i}, {"element", checked[i].describe()}, {"defect", defects[i]}});
    doc["max_defect"] = verdict.max_residual;
    doc["invariant"] = verdict.invariant;
    o.body() << doc.dump(2) << "\n";
  } else if (o.format() == "csv") {
    o.body() << "index,element,defect\n";
    for (std::size_t i = 0; i < defects.size(); ++i)
      o.body() << i << ",\"" << checked[i].describe() << "\"," << format_real(defects[i]) << "\n";
  } else {
    for (std::size_t i = 0; i < defects.size(); ++i)
      o.body() << i << "  " << checked[i].describe() << "  " << format_real(defects[i]) << "\n";
    o.body() << "max_defect " << format_real(verdict.max_residual) << "\n";
    o.body() << "verdict " << (verdict.invariant ? "invariant" : "not_invariant") << "\n";
  }
  o.flush();
  return verdict.invariant ? kOk : kViolated;
}

int cmd_path(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.matrix_path.empty()) throw ParseError("path needs --matrix <file>");
  if (cfg.samples < 1) throw ParseError("--samples must be at least 1");
  const ComplexMatrix m = matrix_from_json(read_file(cfg.matrix_path));
  RunConfig c = cfg;
  if (c.n == 0 && is_preset_name(c.symmetry)) c.n = m.qubits();
  const SymmetrySpec spec = resolve_spec(c);
  const SymmetryGroup group = build_group(spec);
  if (m.dim() != (std::size_t{1} << spec.n)) throw DimensionError("matrix dimension does not match n");
  std::optional<Unitary> a;
  try {
    a.emplace(m);
  } catch (const NumericError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const ConnectednessPath path(*a);
  Output o(cfg, "csv", out);
  const bool json = o.format() == "json";
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (!json) o.body() << "t,invariance_defect,unitarity_residual\n";
  for (int k = 0; k <= cfg.samples; ++k) {
    const double t = static_cast<double>(k) / cfg.samples;
    const Unitary at = path.at(t);
    const double defect = is_invariant(at.matrix(), group, cfg.tol).max_residual;
    if (json)
      rows.push_back({{"t", t}, {"invariance_defect", defect}, {"unitarity_residual", at.unitarity_residual()}});
    else
      o.body() << format_real(t) << "," << format_real(defect) << "," << format_real(at.unitarity_residual())
               << "\n";
  }
  if (json) o.body() << rows.dump(2) << "\n";
  o.flush();
  return kOk;
}

int cmd_synth(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Output o(cfg, cfg.eval_path.empty() ? "text" : "json", out);
  if (!cfg.eval_path.empty()) {
    const Circuit c = Circuit::from_text(read_file(cfg.eval_path));
    o.body() << matrix_to_json(circuit_to_matrix(c).matrix());
    o.flush();
    return kOk;
  }
  const int sources = !cfg.pauli.empty() + !cfg.sum_path.empty() + (cfg.element >= 0);
  if (sources != 1) throw ParseError("synth needs exactly one of --pauli, --sum, --element, or --eval");
  Circuit c;
  try {
    if (!cfg.pauli.empty()) {
      c = synthesize_pauli_exponential(PauliString::from_letters(cfg.pauli), cfg.alpha);
    } else if (!cfg.sum_path.empty()) {
      c = synthesize_sum_exponential(PauliSum::from_text(read_file(cfg.sum_path)), cfg.alpha);
    } else {
      const SymmetrySpec spec = resolve_spec(cfg);
      const InvariantBasis basis = build_basis(spec.n, build_group(spec));
      if (static_cast<std::size_t>(cfg.element) >= basis.size())
        throw ParseError("--element out of range (basis has " + std::to_string(basis.size()) + " elements)");
      c = synthesize_sum_exponential(basis.elements[cfg.element], cfg.alpha);
    }
  } catch (const ConditionError& e) {
    err << "refused: " << e.what() << "\n";
    return kViolated;
  }
  if (o.format() == "json") {
    nlohmann::ordered_json doc;
    doc["qubits"] = c.n;
    auto gates = nlohmann::ordered_json::array();
    std::istringstream lines(c.to_text());
    std::string line;
    std::getline(lines, line);  // QUBITS header
    while (std::getline(lines, line)) gates.push_back(line);
    doc["gates"] = gates;
    o.body() << doc.dump(2) << "\n";
  } else {
    o.body() << c.to_text();
  }
  o.flush();
  return kOk;
}

int cmd_random(const RunConfig& cfg, std::ostream& out) {
  const SymmetrySpec spec = resolve_spec(cfg);
  const InvariantBasis basis = build_basis(spec.n, build_group(spec));
  const Unitary u = random_invariant(basis, cfg.seed, cfg.depth);
  RunConfig c = cfg;
  c.no_header = true;  // the file must stay valid JSON
  Output o(c, "json", out);
  o.body() << matrix_to_json(u.matrix());
  o.flush();
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const SymmetrySpec spec = resolve_spec(cfg);
  const InvariantBasis basis = build_basis(spec.n, build_group(spec));
  VerifyConfig vc;
  vc.tol = cfg.tol;
  vc.seed = cfg.seed;
  const std::vector<SuiteResult> results = run_verify(basis, vc);
  const bool all = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed; });
  Output o(cfg, "text", out);
  if (o.format() == "json") {
    nlohmann::ordered_json doc;
    doc["n"] = spec.n;
    doc["group"] = spec.label;
    doc["dim"] = basis.size();
    doc["suites"] = nlohmann::ordered_json::array();
    for (const SuiteResult& r : results)
      doc["suites"].push_back({{"suite", r.name}, {"passed", r.passed}, {"checks", r.checks}, {"worst", r.worst},
                               {"detail", r.detail}});
    doc["passed"] = all;
    o.body() << doc.dump(2) << "\n";
  } else if (o.format() == "csv") {
    o.body() << "suite,status,checks,worst\n";
    for (const SuiteResult& r : results)
      o.body() << r.name << "," << (r.passed ? "pass" : "fail") << "," << r.checks << "," << format_real(r.worst)
               << "\n";
  } else {
    o.body() << "n " << spec.n << "  group " << spec.label << "  dim " << basis.size() << "\n";
    for (const SuiteResult& r : results)
      o.body() << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  checks=" << r.checks
               << "  worst=" << format_real(r.worst) << "  " << r.detail << "\n";
    o.body() << (all ? "all suites passed" : "some suites failed") << "\n";
  }
  o.flush();
  return all ? kOk : kViolated;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"symlie: symmetry-restricted subalgebras of su(2^n), invariance checks and circuit synthesis"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* basis = app.add_subcommand("basis", "List the invariant Pauli-sum basis");
  auto* dim = app.add_subcommand("dim", "Dimension table (n, group, dimension)");
  auto* check = app.add_subcommand("check", "Invariance report for a matrix file");
  auto* path = app.add_subcommand("path", "Sample the eigenphase path A(t) from 1 to A");
  auto* synth = app.add_subcommand("synth", "Compile a Pauli exponential to a circuit");
  auto* random = app.add_subcommand("random", "Seeded random invariant unitary as JSON");
  auto* verify = app.add_subcommand("verify", "Run composition, closure, diagram and path suites");
  for (CLI::App* sub : {basis, dim, check, path, synth, random, verify}) add_common(sub, cfg);

  check->add_option("--matrix", cfg.matrix_path, "Matrix JSON file")->required();
  check->add_flag("--generators-only", cfg.generators_only, "Check generators instead of every element");
  path->add_option("--matrix", cfg.matrix_path, "Unitary JSON file")->required();
  path->add_option("--samples", cfg.samples, "Number of intervals on [0, 1]");
  synth->add_option("--pauli", cfg.pauli, "Pauli letters, most-significant qubit first");
  synth->add_option("--sum", cfg.sum_path, "Pauli sum text file");
  synth->add_option("--element", cfg.element, "Index into the invariant basis");
  synth->add_option("--alpha", cfg.alpha, "Rotation angle α in exp(−iα/2·h)");
  synth->add_option("--eval", cfg.eval_path, "Evaluate a circuit file to a matrix");
  random->add_option("--depth", cfg.depth, "Number of exponential factors")->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*basis) return cfg.command = "basis", cmd_basis(cfg, out);
    if (*dim) return cfg.command = "dim", cmd_dim(cfg, out, err);
    if (*check) return cfg.command = "check", cmd_check(cfg, out, err);
    if (*path) return cfg.command = "path", cmd_path(cfg, out, err);
    if (*synth) return cfg.command = "synth", cmd_synth(cfg, out, err);
    if (*random) return cfg.command = "random", cmd_random(cfg, out);
    if (*verify) return cfg.command = "verify", cmd_verify(cfg, out);
  } catch (const NumericError& e) {
    err << "error: " << e.what() << "\n";
    return kViolated;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace symlie::cli
