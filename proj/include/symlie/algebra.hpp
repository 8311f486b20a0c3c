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

// Basis of the invariant subalgebra by orbit symmetrization of Pauli strings.
//
// Each basis element is the Hermitian sum h = Σ_{s ∈ orbit} s with unit
// coefficients; the anti-Hermitian algebra element is ih. The all-identity
// orbit is excluded, so every element is traceless.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "symlie/pauli.hpp"
#include "symlie/symmetry.hpp"

namespace symlie {

/// 4^n strings are enumerated; larger n is refused.
inline constexpr int kDefaultEnumerationQubitCap = 8;

struct InvariantBasis {
  int n = 0;
  SymmetryGroup group;
  /// Sorted by representative (smallest (z_mask, x_mask) in the orbit).
  std::vector<PauliSum> elements;
  std::vector<PauliString> representatives;
  /// Every phase-free non-identity string → index of the element holding its orbit.
  std::map<PauliString, std::size_t> orbit_index;

  std::size_t size() const { return elements.size(); }
};

struct ClosureReport {
  std::size_t pair_count = 0;
  double max_residual = 0.0;
  std::size_t worst_i = 0;
  std::size_t worst_j = 0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Images of s under every group element, sorted, duplicates removed.
/// Throws UnsupportedSymmetryError for groups with raw-unitary elements.
std::vector<PauliString> pauli_orbit(const PauliString& s, const SymmetryGroup& g);

/// Σ over the orbit of s, unit coefficients.
PauliSum symmetrize(const PauliString& s, const SymmetryGroup& g);

InvariantBasis build_basis(int n, const SymmetryGroup& g,
                           int max_qubits = kDefaultEnumerationQubitCap);

/// (1/|G|) Σ_g 4^cycles(g) − 1: the number of non-identity Pauli orbits.
std::uint64_t burnside_dimension(int n, const SymmetryGroup& g);

/// Norm of x minus its orthogonal projection onto span(B), in coefficient space.
/// Zero exactly when every term of x lies in a basis orbit with the
/// coefficient constant across that orbit.
double in_span(const PauliSum& x, const InvariantBasis& basis);

/// in_span of every pairwise commutator [b_i, b_j], i < j.
ClosureReport closure_report(const InvariantBasis& basis, double tol = 1e-10);

}  // namespace symlie
