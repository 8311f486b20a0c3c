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

// Unitary-level operations: the exponential map from the invariant algebra,
// composition, seeded sampling of invariant unitaries, eigendecomposition with
// degenerate-cluster handling, the path A(t) = P D(t) P† and projection to SU.

#pragma once

#include <cstdint>
#include <vector>

#include "symlie/algebra.hpp"
#include "symlie/matrix.hpp"
#include "symlie/pauli.hpp"
#include "symlie/symmetry.hpp"

namespace symlie {

inline constexpr double kUnitaryTol = 1e-9;

/// Dense matrix with ‖UU† − 𝟙‖_F < 1e-9, checked at construction.
class Unitary {
 public:
  /// Throws NumericError when the residual is not below `tol`.
  explicit Unitary(ComplexMatrix m, double tol = kUnitaryTol);
  static Unitary identity(std::size_t dim);

  const ComplexMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.dim(); }
  int qubits() const { return m_.qubits(); }
  /// Cached ‖UU† − 𝟙‖_F.
  double unitarity_residual() const { return residual_; }
  Unitary adjoint() const;

 private:
  ComplexMatrix m_;
  double residual_;
};

/// exp(−i·alpha/2·matrix(h)). Throws ConventionError unless h has real coefficients.
Unitary exp_generator(const PauliSum& h, double alpha, int max_qubits = kDefaultMatrixQubitCap);

/// u2 · u1 (u1 applied first).
Unitary compose(const Unitary& u1, const Unitary& u2);

/// Product of `depth` exponentials of uniformly drawn basis elements, angles
/// uniform in [0, 2π). Deterministic per seed.
Unitary random_invariant(const InvariantBasis& basis, std::uint64_t seed, int depth);
Unitary random_invariant(int n, const SymmetryGroup& g, std::uint64_t seed, int depth);

struct EigDecomposition {
  /// Columns are orthonormal eigenvectors, grouped by cluster.
  ComplexMatrix vectors;
  /// Principal angles in (−π, π], identical within a cluster.
  std::vector<double> thetas;
  /// Column index where each cluster starts; cluster k spans
  /// [cluster_starts[k], cluster_starts[k+1]).
  std::vector<std::size_t> cluster_starts;
  double reconstruction_residual = 0.0;  // ‖P D P† − A‖_F
  double orthonormality_residual = 0.0;  // ‖P†P − 𝟙‖_F
  bool used_fallback = false;

  std::size_t cluster_count() const { return cluster_starts.size(); }
  std::size_t cluster_size(std::size_t k) const;
};

inline constexpr double kEigenClusterTol = 1e-8;

/// Throws NumericError (with residuals) if neither strategy meets 1e-9.
EigDecomposition eig_unitary(const Unitary& a);

/// A(t) = P diag(e^{i t θ}) P† from one cached decomposition.
class ConnectednessPath {
 public:
  explicit ConnectednessPath(const Unitary& a);
  /// Throws DomainError unless 0 ≤ t ≤ 1.
  Unitary at(double t) const;
  const EigDecomposition& decomposition() const { return eig_; }
  /// Σ|θ|: Lipschitz constant of t ↦ A(t) in Frobenius norm.
  double lipschitz_bound() const;

 private:
  EigDecomposition eig_;
};

Unitary connectedness_path(const Unitary& a, double t);

/// U · det(U)^(−1/2^n), principal root.
Unitary project_to_su(const Unitary& u);

}  // namespace symlie
