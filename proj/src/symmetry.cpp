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

#include "symlie/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

#include <json.hpp>

#include "symlie/error.hpp"
#include "symlie/io.hpp"
#include "symlie/kernels.hpp"

namespace symlie {

// ---------------------------------------------------------------------------
// QubitPermutation

QubitPermutation::QubitPermutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  if (n < 1 || n > PauliString::kMaxQubits) throw DomainError("permutation needs 1..64 qubits");
  std::vector<bool> hit(n, false);
  for (int v : image_) {
    if (v < 0 || v >= n || hit[v]) throw DomainError("permutation image is not a bijection: " + to_string());
    hit[v] = true;
  }
}

QubitPermutation QubitPermutation::identity(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  return QubitPermutation(std::move(img));
}

QubitPermutation QubitPermutation::transposition(int n, int a, int b) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  if (a < 0 || b < 0 || a >= n || b >= n) throw DomainError("transposition index out of range");
  std::swap(img[a], img[b]);
  return QubitPermutation(std::move(img));
}

bool QubitPermutation::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (image_[i] != i) return false;
  return true;
}

QubitPermutation QubitPermutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < n(); ++i) inv[image_[i]] = i;
  return QubitPermutation(std::move(inv));
}

int QubitPermutation::cycle_count() const {
  std::vector<bool> seen(image_.size(), false);
  int cycles = 0;
  for (int i = 0; i < n(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = image_[j]) seen[j] = true;
  }
  return cycles;
}

std::size_t QubitPermutation::map_index(std::size_t b) const {
  std::size_t out = 0;
  for (int q = 0; q < n(); ++q) out |= ((b >> q) & 1u) << image_[q];
  return out;
}

std::string QubitPermutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(image_[i]);
  }
  return s + "]";
}

QubitPermutation compose(const QubitPermutation& after, const QubitPermutation& before) {
  if (after.n() != before.n()) throw DimensionError("permutation composition: qubit count mismatch");
  std::vector<int> img(before.n());
  for (int i = 0; i < before.n(); ++i) img[i] = after[before[i]];
  return QubitPermutation(std::move(img));
}

ComplexMatrix permutation_to_matrix(const QubitPermutation& p) {
  const std::size_t dim = std::size_t{1} << p.n();
  ComplexMatrix m(dim);
  for (std::size_t b = 0; b < dim; ++b) m(p.map_index(b), b) = 1.0;
  return m;
}

PauliString conjugate_pauli(const QubitPermutation& p, const PauliString& s) {
  if (p.n() != s.n()) throw DimensionError("conjugate_pauli: qubit count mismatch");
  std::uint64_t x = 0, z = 0;
  for (int q = 0; q < p.n(); ++q) {
    x |= ((s.x_mask() >> q) & 1u) << p[q];
    z |= ((s.z_mask() >> q) & 1u) << p[q];
  }
  return PauliString(s.n(), x, z, s.phase_exp());
}

PauliSum conjugate_sum(const QubitPermutation& p, const PauliSum& s) {
  std::vector<PauliTerm> terms;
  terms.reserve(s.size());
  for (const PauliTerm& t : s.terms()) terms.push_back({conjugate_pauli(p, t.pauli), t.coeff});
  return PauliSum(s.n(), terms);
}

// ---------------------------------------------------------------------------
// SymmetryElement

namespace {

constexpr double kRawUnitaryTol = 1e-10;
constexpr double kPhaseDedupTol = 1e-9;

// First entry with non-negligible magnitude rotated onto the positive real axis.
ComplexMatrix normalize_global_phase(ComplexMatrix m) {
  for (const cplx& v : m.data()) {
    if (std::abs(v) > 1e-6) {
      const cplx rot = std::conj(v) / std::abs(v);
      m *= rot;
      break;
    }
  }
  return m;
}

}  // namespace

SymmetryElement::SymmetryElement(ComplexMatrix unitary) : value_(std::move(unitary)) {
  const double r = std::get<ComplexMatrix>(value_).unitarity_residual();
  if (!(r < kRawUnitaryTol)) {
    throw DomainError("symmetry matrix is not unitary: ‖SS† − 1‖_F = " + format_real(r));
  }
}

int SymmetryElement::n() const {
  return is_permutation() ? permutation().n() : raw_matrix().qubits();
}

ComplexMatrix SymmetryElement::matrix() const {
  return is_permutation() ? permutation_to_matrix(permutation()) : raw_matrix();
}

std::string SymmetryElement::describe() const {
  return is_permutation() ? "perm " + permutation().to_string() : "unitary";
}

bool SymmetryGroup::is_permutation_group() const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [](const SymmetryElement& e) { return e.is_permutation(); });
}

std::vector<QubitPermutation> SymmetryGroup::permutations() const {
  std::vector<QubitPermutation> out;
  out.reserve(elements_.size());
  for (const SymmetryElement& e : elements_) {
    if (!e.is_permutation()) {
      throw UnsupportedSymmetryError(
          "operation requires a qubit-permutation group; raw unitary symmetry elements are "
          "supported for invariance checking only");
    }
    out.push_back(e.permutation());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Group closure

namespace {

std::string not_finite_message(std::size_t cap) {
  return "group not finite at this cap (closure exceeded " + std::to_string(cap) + " elements)";
}

std::vector<SymmetryElement> close_permutations(int n, const std::vector<QubitPermutation>& gens,
                                                std::size_t cap) {
  std::set<QubitPermutation> seen;
  std::vector<QubitPermutation> order;
  std::deque<std::size_t> frontier;
  auto visit = [&](QubitPermutation p) {
    if (!seen.insert(p).second) return;
    if (order.size() >= cap) throw GroupNotFiniteError(not_finite_message(cap));
    order.push_back(std::move(p));
    frontier.push_back(order.size() - 1);
  };
  visit(QubitPermutation::identity(n));
  while (!frontier.empty()) {
    const std::size_t idx = frontier.front();
    frontier.pop_front();
    for (const QubitPermutation& g : gens) visit(compose(g, order[idx]));
  }
  for (const QubitPermutation& p : order)
    if (!seen.contains(p.inverse())) throw NumericError("permutation closure missing an inverse");
  return {order.begin(), order.end()};
}

// Bucket key: normalized entries rounded to a 1e-6 grid.
std::vector<long long> bucket_key(const ComplexMatrix& m) {
  std::vector<long long> key;
  key.reserve(2 * m.data().size());
  for (const cplx& v : m.data()) {
    key.push_back(std::llround(v.real() * 1e6));
    key.push_back(std::llround(v.imag() * 1e6));
  }
  return key;
}

class PhaseFreeMatrixSet {
 public:
  /// Index of an element equal to m up to global phase, if present.
  std::optional<std::size_t> find(const ComplexMatrix& normalized) const {
    auto it = buckets_.find(bucket_key(normalized));
    if (it == buckets_.end()) return std::nullopt;
    for (std::size_t idx : it->second)
      if (distance(items_[idx], normalized) < kPhaseDedupTol) return idx;
    return std::nullopt;
  }
  std::size_t insert(ComplexMatrix normalized) {
    buckets_[bucket_key(normalized)].push_back(items_.size());
    items_.push_back(std::move(normalized));
    return items_.size() - 1;
  }
  const std::vector<ComplexMatrix>& items() const { return items_; }

 private:
  std::map<std::vector<long long>, std::vector<std::size_t>> buckets_;
  std::vector<ComplexMatrix> items_;
};

std::vector<SymmetryElement> close_matrices(int n, const std::vector<ComplexMatrix>& gens,
                                            std::size_t cap) {
  PhaseFreeMatrixSet set;
  std::deque<std::size_t> frontier;
  auto visit = [&](const ComplexMatrix& m) {
    ComplexMatrix norm = normalize_global_phase(m);
    if (set.find(norm)) return;
    if (set.items().size() >= cap) throw GroupNotFiniteError(not_finite_message(cap));
    frontier.push_back(set.insert(std::move(norm)));
  };
  visit(ComplexMatrix::identity(std::size_t{1} << n));
  while (!frontier.empty()) {
    const std::size_t idx = frontier.front();
    frontier.pop_front();
    const ComplexMatrix current = set.items()[idx];
    for (const ComplexMatrix& g : gens) visit(g * current);
  }
  for (const ComplexMatrix& m : set.items())
    if (!set.find(normalize_global_phase(m.adjoint())))
      throw NumericError("unitary closure missing an inverse");
  std::vector<SymmetryElement> out;
  out.reserve(set.items().size());
  for (const ComplexMatrix& m : set.items()) out.emplace_back(m);
  return out;
}

}  // namespace

SymmetryGroup generate_group(int n, const std::vector<SymmetryElement>& generators,
                             std::size_t cap) {
  if (n < 1) throw DomainError("symmetry group needs n >= 1");
  for (const SymmetryElement& g : generators)
    if (g.n() != n) throw DimensionError("generator acts on a different number of qubits");

  SymmetryGroup group;
  group.n_ = n;
  group.generators_ = generators;
  const bool all_perm = std::all_of(generators.begin(), generators.end(),
                                    [](const SymmetryElement& g) { return g.is_permutation(); });
  if (all_perm) {
    std::vector<QubitPermutation> gens;
    for (const SymmetryElement& g : generators) gens.push_back(g.permutation());
    group.elements_ = close_permutations(n, gens, cap);
  } else {
    if (n > kDefaultMatrixQubitCap) throw CapacityError("raw-unitary symmetry beyond matrix cap");
    std::vector<ComplexMatrix> gens;
    for (const SymmetryElement& g : generators) gens.push_back(g.matrix());
    group.elements_ = close_matrices(n, gens, cap);
  }
  return group;
}

// ---------------------------------------------------------------------------
// Invariance

double symmetry_defect(const ComplexMatrix& u, const SymmetryElement& s) {
  if (s.n() != u.qubits() || u.dim() != (std::size_t{1} << s.n())) {
    throw DimensionError("symmetry_defect: matrix dimension " + std::to_string(u.dim()) +
                         " does not match a " + std::to_string(s.n()) + "-qubit symmetry");
  }
  if (s.is_permutation()) {
    // ‖SU − US‖_F = ‖SUS† − U‖_F, and (SUS†)[σr][σc] = U[r][c].
    const QubitPermutation& p = s.permutation();
    const std::size_t dim = u.dim();
    std::vector<std::size_t> sigma(dim);
    for (std::size_t b = 0; b < dim; ++b) sigma[b] = p.map_index(b);
    ComplexMatrix conj(dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) conj(sigma[r], sigma[c]) = u(r, c);
    return distance(conj, u);
  }
  const ComplexMatrix& m = s.raw_matrix();
  return distance(m * u, u * m);
}

std::vector<double> element_defects(const ComplexMatrix& u, const SymmetryGroup& g) {
  std::vector<double> out;
  out.reserve(g.order());
  for (const SymmetryElement& e : g.elements()) out.push_back(symmetry_defect(u, e));
  return out;
}

InvarianceResult is_invariant(const ComplexMatrix& u, const SymmetryGroup& g, double tol,
                              InvarianceMode mode) {
  if (u.dim() != (std::size_t{1} << g.n())) throw DimensionError("is_invariant: dimension mismatch");
  const auto& checked = mode == InvarianceMode::kFullGroup ? g.elements() : g.generators();
  double worst = 0.0;
  for (const SymmetryElement& e : checked) worst = std::max(worst, symmetry_defect(u, e));
  return {worst < tol, worst};
}

// ---------------------------------------------------------------------------
// Specs

bool is_preset_name(std::string_view name) {
  return name == "trivial" || name == "full_swap" || name == "cyclic" || name == "dihedral";
}

SymmetrySpec preset_spec(std::string_view name, int n) {
  if (n < 1) throw DomainError("preset needs n >= 1");
  SymmetrySpec spec;
  spec.n = n;
  spec.label = std::string(name);
  if (name == "trivial") {
    // closure of the empty generator set is {identity}
  } else if (name == "full_swap") {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) spec.generators.emplace_back(QubitPermutation::transposition(n, a, b));
  } else if (name == "cyclic" || name == "dihedral") {
    std::vector<int> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
    spec.generators.emplace_back(QubitPermutation(rot));
    if (name == "dihedral") {
      std::vector<int> refl(n);
      for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
      spec.generators.emplace_back(QubitPermutation(refl));
    }
  } else {
    throw ParseError("unknown symmetry preset \"" + std::string(name) +
                     "\" (expected trivial, full_swap, cyclic or dihedral)");
  }
  return spec;
}

SymmetrySpec parse_symmetry_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("symmetry spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("symmetry spec needs an integer \"n\"");
  const int n = doc["n"].get<int>();
  if (n < 1 || n > PauliString::kMaxQubits) throw ParseError("symmetry spec \"n\" out of range");

  if (doc.contains("preset")) return preset_spec(doc["preset"].get<std::string>(), n);
  if (!doc.contains("generators")) throw ParseError("symmetry spec needs \"generators\" or \"preset\"");
  const auto& gens = doc["generators"];
  if (gens.is_string()) return preset_spec(gens.get<std::string>(), n);
  if (!gens.is_array()) throw ParseError("\"generators\" must be an array or a preset name");

  SymmetrySpec spec;
  spec.n = n;
  spec.label = doc.contains("label") && doc["label"].is_string() ? doc["label"].get<std::string>() : "custom";
  try {
    for (const auto& g : gens) {
      if (g.contains("perm")) {
        QubitPermutation p(g["perm"].get<std::vector<int>>());
        if (p.n() != n) throw ParseError("generator permutation length differs from n");
        spec.generators.emplace_back(std::move(p));
      } else if (g.contains("unitary")) {
        ComplexMatrix m = matrix_from_json(g["unitary"].dump());
        if (m.dim() != (std::size_t{1} << n)) throw ParseError("generator unitary is not 2^n x 2^n");
        spec.generators.emplace_back(std::move(m));
      } else {
        throw ParseError("each generator needs \"perm\" or \"unitary\"");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed generator: ") + e.what());
  }
  return spec;
}

SymmetryGroup build_group(const SymmetrySpec& spec, std::size_t cap) {
  return generate_group(spec.n, spec.generators, cap);
}

}  // namespace symlie
