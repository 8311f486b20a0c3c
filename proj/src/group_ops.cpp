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

#include "symlie/group_ops.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "symlie/error.hpp"
#include "symlie/io.hpp"
#include "symlie/kernels.hpp"
#include "symlie/linalg.hpp"

namespace symlie {

Unitary::Unitary(ComplexMatrix m, double tol) : m_(std::move(m)), residual_(m_.unitarity_residual()) {
  if (!(residual_ < tol)) {
    throw NumericError("matrix is not unitary: ‖UU† − 1‖_F = " + format_real(residual_));
  }
}

Unitary Unitary::identity(std::size_t dim) { return Unitary(ComplexMatrix::identity(dim)); }

Unitary Unitary::adjoint() const { return Unitary(m_.adjoint()); }

Unitary exp_generator(const PauliSum& h, double alpha, int max_qubits) {
  if (!h.is_hermitian()) {
    throw ConventionError("exp_generator expects a Hermitian generator (real coefficients); "
                          "the algebra element is i·h");
  }
  const ComplexMatrix m = sum_to_matrix(h, max_qubits);
  const linalg::HermitianEigen he = linalg::hermitian_eigen(m);
  const std::size_t dim = m.dim();
  std::vector<cplx> phases(dim);
  for (std::size_t j = 0; j < dim; ++j) phases[j] = std::polar(1.0, -0.5 * alpha * he.values[j]);
  ComplexMatrix vd = he.vectors;
  kernels::active().scale_columns(vd.data(), phases, dim);
  return Unitary(multiply_adjoint(vd, he.vectors));
}

Unitary compose(const Unitary& u1, const Unitary& u2) {
  require_same_dim(u1.matrix(), u2.matrix(), "compose");
  return Unitary(u2.matrix() * u1.matrix());
}

Unitary random_invariant(const InvariantBasis& basis, std::uint64_t seed, int depth) {
  if (depth < 0) throw DomainError("random_invariant: depth must be non-negative");
  if (basis.elements.empty()) throw DomainError("degenerate group: invariant basis is empty");
  std::mt19937_64 rng(seed);
  const std::size_t dim = std::size_t{1} << basis.n;
  Unitary u = Unitary::identity(dim);
  for (int k = 0; k < depth; ++k) {
    // Explicit draws keep the stream identical across standard libraries.
    const std::size_t pick = static_cast<std::size_t>(rng() % basis.elements.size());
    const double angle = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 * std::numbers::pi;
    u = compose(u, exp_generator(basis.elements[pick], angle));
  }
  return u;
}

Unitary random_invariant(int n, const SymmetryGroup& g, std::uint64_t seed, int depth) {
  return random_invariant(build_basis(n, g), seed, depth);
}

// ---------------------------------------------------------------------------
// Path

ConnectednessPath::ConnectednessPath(const Unitary& a) : eig_(eig_unitary(a)) {}

Unitary ConnectednessPath::at(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("connectedness path parameter must lie in [0, 1]");
  const std::size_t dim = eig_.vectors.dim();
  std::vector<cplx> phases(dim);
  for (std::size_t j = 0; j < dim; ++j) phases[j] = std::polar(1.0, t * eig_.thetas[j]);
  ComplexMatrix pd = eig_.vectors;
  kernels::active().scale_columns(pd.data(), phases, dim);
  return Unitary(multiply_adjoint(pd, eig_.vectors));
}

double ConnectednessPath::lipschitz_bound() const {
  double total = 0.0;
  for (double th : eig_.thetas) total += std::abs(th);
  return total;
}

Unitary connectedness_path(const Unitary& a, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("connectedness path parameter must lie in [0, 1]");
  return ConnectednessPath(a).at(t);
}

Unitary project_to_su(const Unitary& u) {
  const cplx det = linalg::determinant(u.matrix());
  const double dim = static_cast<double>(u.dim());
  // Principal root of det^{-1}: magnitude |det|^{-1/dim}, angle −arg(det)/dim.
  const cplx factor = std::polar(std::pow(std::abs(det), -1.0 / dim), -std::arg(det) / dim);
  ComplexMatrix m = u.matrix();
  m *= factor;
  return Unitary(std::move(m));
}

}  // namespace symlie
