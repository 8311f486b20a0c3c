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

#include "symlie/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "symlie/error.hpp"

namespace symlie {
namespace {

std::vector<PauliString> orbit_of(const PauliString& s, const std::vector<QubitPermutation>& perms) {
  std::vector<PauliString> out;
  out.reserve(perms.size());
  for (const QubitPermutation& p : perms) out.push_back(conjugate_pauli(p, s));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PauliSum unit_sum(int n, const std::vector<PauliString>& orbit) {
  std::vector<PauliTerm> terms;
  terms.reserve(orbit.size());
  for (const PauliString& p : orbit) terms.push_back({p, 1.0});
  return PauliSum(n, terms);
}

}  // namespace

std::vector<PauliString> pauli_orbit(const PauliString& s, const SymmetryGroup& g) {
  if (s.n() != g.n()) throw DimensionError("pauli_orbit: qubit count mismatch");
  return orbit_of(s, g.permutations());
}

PauliSum symmetrize(const PauliString& s, const SymmetryGroup& g) {
  return unit_sum(s.n(), pauli_orbit(s, g));
}

InvariantBasis build_basis(int n, const SymmetryGroup& g, int max_qubits) {
  if (n != g.n()) throw DimensionError("build_basis: group acts on a different qubit count");
  if (n > max_qubits) {
    throw CapacityError("basis enumeration of 4^" + std::to_string(n) + " strings exceeds the cap of " +
                        std::to_string(max_qubits) + " qubits");
  }
  const std::vector<QubitPermutation> perms = g.permutations();
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  const std::uint64_t total = std::uint64_t{1} << (2 * n);

  InvariantBasis basis;
  basis.n = n;
  basis.group = g;
  std::vector<bool> assigned(total, false);
  assigned[0] = true;  // all-identity orbit excluded
  // idx = (z << n) | x, so increasing idx visits strings in (z, x) order and
  // the first unassigned string is the smallest member of its orbit.
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    if (assigned[idx]) continue;
    const PauliString rep(n, idx & mask, idx >> n);
    std::vector<PauliString> orbit = orbit_of(rep, perms);
    const std::size_t element = basis.elements.size();
    for (const PauliString& p : orbit) {
      assigned[(p.z_mask() << n) | p.x_mask()] = true;
      basis.orbit_index.emplace(p, element);
    }
    basis.representatives.push_back(rep);
    basis.elements.push_back(unit_sum(n, orbit));
  }
  return basis;
}

std::uint64_t burnside_dimension(int n, const SymmetryGroup& g) {
  if (n != g.n()) throw DimensionError("burnside_dimension: qubit count mismatch");
  if (n > 31) throw CapacityError("burnside_dimension: 4^n overflows for n > 31");
  unsigned __int128 fixed = 0;
  for (const QubitPermutation& p : g.permutations())
    fixed += static_cast<unsigned __int128>(1) << (2 * p.cycle_count());
  const unsigned __int128 orbits = fixed / g.order();
  if (orbits * g.order() != fixed) throw NumericError("Burnside sum not divisible by group order");
  return static_cast<std::uint64_t>(orbits - 1);
}

double in_span(const PauliSum& x, const InvariantBasis& basis) {
  if (x.n() != basis.n) throw DimensionError("in_span: qubit count mismatch");
  struct OrbitAccum {
    cplx sum{};
    std::vector<cplx> present;
  };
  std::unordered_map<std::size_t, OrbitAccum> touched;
  double outside = 0.0;
  for (const PauliTerm& t : x.terms()) {
    auto it = basis.orbit_index.find(t.pauli);
    if (it == basis.orbit_index.end()) {
      outside += std::norm(t.coeff);
      continue;
    }
    OrbitAccum& acc = touched[it->second];
    acc.sum += t.coeff;
    acc.present.push_back(t.coeff);
  }
  double remainder = outside;
  for (const auto& [element, acc] : touched) {
    const std::size_t orbit_size = basis.elements[element].size();
    const cplx mean = acc.sum / static_cast<double>(orbit_size);
    for (const cplx& c : acc.present) remainder += std::norm(c - mean);
    remainder += static_cast<double>(orbit_size - acc.present.size()) * std::norm(mean);
  }
  return std::sqrt(remainder);
}

ClosureReport closure_report(const InvariantBasis& basis, double tol) {
  ClosureReport report;
  report.tolerance = tol;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const double r = in_span(sum_commutator(basis.elements[i], basis.elements[j]), basis);
      ++report.pair_count;
      if (report.pair_count == 1 || r > report.max_residual) {
        report.max_residual = r;
        report.worst_i = i;
        report.worst_j = j;
      }
    }
  report.passed = report.max_residual < tol;
  return report;
}

}  // namespace symlie
