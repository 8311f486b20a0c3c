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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "symlie/error.hpp"
#include "symlie/group_ops.hpp"
#include "symlie/io.hpp"
#include "symlie/kernels.hpp"
#include "symlie/linalg.hpp"

namespace symlie {
namespace linalg {
namespace {

using EMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EMatrix> view(const ComplexMatrix& m) {
  return {m.data().data(), static_cast<Eigen::Index>(m.dim()), static_cast<Eigen::Index>(m.dim())};
}

ComplexMatrix from_eigen(const Eigen::MatrixXcd& e) {
  ComplexMatrix out(static_cast<std::size_t>(e.rows()));
  for (Eigen::Index r = 0; r < e.rows(); ++r)
    for (Eigen::Index c = 0; c < e.cols(); ++c) out(r, c) = e(r, c);
  return out;
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(Eigen::MatrixXcd(view(h)));
  if (solver.info() != Eigen::Success) throw NumericError("Hermitian eigensolver did not converge");
  HermitianEigen out{{}, from_eigen(solver.eigenvectors())};
  out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + h.dim());
  return out;
}

GeneralEigen general_eigen(const ComplexMatrix& a) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(Eigen::MatrixXcd(view(a)));
  if (solver.info() != Eigen::Success) throw NumericError("complex eigensolver did not converge");
  GeneralEigen out{{}, from_eigen(solver.eigenvectors())};
  out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + a.dim());
  return out;
}

cplx determinant(const ComplexMatrix& a) { return Eigen::MatrixXcd(view(a)).partialPivLu().determinant(); }

void orthonormalize_columns(ComplexMatrix& m, std::size_t first, std::size_t count) {
  const std::size_t dim = m.dim();
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = first; j < first + count; ++j) {
      for (std::size_t k = first; k < j; ++k) {
        cplx overlap{};
        for (std::size_t r = 0; r < dim; ++r) overlap += std::conj(m(r, k)) * m(r, j);
        for (std::size_t r = 0; r < dim; ++r) m(r, j) -= overlap * m(r, k);
      }
      double norm = 0.0;
      for (std::size_t r = 0; r < dim; ++r) norm += std::norm(m(r, j));
      norm = std::sqrt(norm);
      if (norm < 1e-300) throw NumericError("orthonormalization hit a null column");
      for (std::size_t r = 0; r < dim; ++r) m(r, j) /= norm;
    }
  }
}

}  // namespace linalg

// ---------------------------------------------------------------------------
// Unitary eigendecomposition

namespace {

constexpr double kPi = std::numbers::pi;
// Pencil eigenvalues closer than this are re-solved jointly on their subspace.
constexpr double kPencilGroupGap = 1e-5;
constexpr double kPencilMix = 0.6180339887498949;

double principal_angle(cplx z) {
  double t = std::arg(z);
  if (t <= -kPi) t += 2 * kPi;
  return t;
}

struct Candidate {
  ComplexMatrix vectors;
  std::vector<cplx> eigenvalues;
};

// Rayleigh quotients v†Av per column.
std::vector<cplx> rayleigh(const ComplexMatrix& a, const ComplexMatrix& v) {
  const ComplexMatrix av = a * v;
  std::vector<cplx> out(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    cplx acc{};
    for (std::size_t r = 0; r < a.dim(); ++r) acc += std::conj(v(r, j)) * av(r, j);
    out[j] = acc;
  }
  return out;
}

// Joint diagonalization of (A + A†)/2 and (A − A†)/2i through one Hermitian
// combination; near-coincident pencil values are split by diagonalizing A
// restricted to their span.
Candidate pencil_candidate(const ComplexMatrix& a) {
  const std::size_t dim = a.dim();
  const ComplexMatrix ad = a.adjoint();
  ComplexMatrix k(dim);
  const cplx c_re = 0.5;
  const cplx c_im = cplx(0.0, -0.5) * kPencilMix;  // kPencilMix · (A − A†)/2i
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      const cplx sum = a(r, c) + ad(r, c);
      const cplx diff = a(r, c) - ad(r, c);
      k(r, c) = c_re * sum + c_im * diff;
    }
  // Exact Hermitian symmetry for the solver.
  for (std::size_t r = 0; r < dim; ++r) {
    k(r, r) = k(r, r).real();
    for (std::size_t c = r + 1; c < dim; ++c) k(c, r) = std::conj(k(r, c));
  }
  linalg::HermitianEigen he = linalg::hermitian_eigen(k);
  ComplexMatrix v = std::move(he.vectors);

  std::size_t start = 0;
  while (start < dim) {
    std::size_t end = start + 1;
    while (end < dim && he.values[end] - he.values[end - 1] < kPencilGroupGap) ++end;
    const std::size_t count = end - start;
    if (count > 1) {
      // B = Q† A Q on the group's span, then rotate Q by B's eigenvectors.
      std::vector<cplx> b(count * count);
      const ComplexMatrix av = a * v;
      for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) {
          cplx acc{};
          for (std::size_t r = 0; r < dim; ++r) acc += std::conj(v(r, start + i)) * av(r, start + j);
          b[i * count + j] = acc;
        }
      Eigen::MatrixXcd eb(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(count));
      for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) eb(i, j) = b[i * count + j];
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> sub(eb);
      if (sub.info() != Eigen::Success) throw NumericError("sub-block eigensolver did not converge");
      const Eigen::MatrixXcd w = sub.eigenvectors();
      std::vector<cplx> block(dim * count);
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t j = 0; j < count; ++j) {
          cplx acc{};
          for (std::size_t i = 0; i < count; ++i) acc += v(r, start + i) * w(i, j);
          block[r * count + j] = acc;
        }
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t j = 0; j < count; ++j) v(r, start + j) = block[r * count + j];
    }
    start = end;
  }
  std::vector<cplx> mu = rayleigh(a, v);
  return {std::move(v), std::move(mu)};
}

Candidate general_candidate(const ComplexMatrix& a) {
  linalg::GeneralEigen ge = linalg::general_eigen(a);
  return {std::move(ge.vectors), std::move(ge.values)};
}

// Groups eigenvalues on the unit circle, orders columns by cluster angle,
// re-orthonormalizes inside each cluster and fixes a single θ per cluster.
EigDecomposition assemble(const ComplexMatrix& a, const Candidate& cand) {
  const std::size_t dim = a.dim();
  std::vector<double> angle(dim);
  for (std::size_t j = 0; j < dim; ++j) angle[j] = principal_angle(cand.eigenvalues[j]);
  std::vector<std::size_t> order(dim);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return angle[x] < angle[y]; });

  auto close = [&](std::size_t x, std::size_t y) {
    return std::abs(std::polar(1.0, angle[x]) - std::polar(1.0, angle[y])) < kEigenClusterTol;
  };
  std::vector<std::vector<std::size_t>> clusters;
  for (std::size_t idx : order) {
    if (!clusters.empty() && close(clusters.back().back(), idx))
      clusters.back().push_back(idx);
    else
      clusters.push_back({idx});
  }
  // θ = π and θ ≈ −π are the same point.
  if (clusters.size() > 1 && close(clusters.back().back(), clusters.front().front())) {
    clusters.back().insert(clusters.back().end(), clusters.front().begin(), clusters.front().end());
    clusters.erase(clusters.begin());
  }

  struct Cluster {
    std::vector<std::size_t> cols;
    double theta;
  };
  std::vector<Cluster> ordered;
  for (auto& cols : clusters) {
    cplx mean{};
    for (std::size_t j : cols) mean += std::polar(1.0, angle[j]);
    ordered.push_back({cols, principal_angle(mean)});
  }
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Cluster& x, const Cluster& y) { return x.theta < y.theta; });

  EigDecomposition out{ComplexMatrix(dim), {}, {}, 0.0, 0.0, false};
  std::size_t col = 0;
  for (const Cluster& cl : ordered) {
    out.cluster_starts.push_back(col);
    for (std::size_t j : cl.cols) {
      for (std::size_t r = 0; r < dim; ++r) out.vectors(r, col) = cand.vectors(r, j);
      out.thetas.push_back(cl.theta);
      ++col;
    }
    linalg::orthonormalize_columns(out.vectors, out.cluster_starts.back(), cl.cols.size());
  }

  ComplexMatrix pd = out.vectors;
  std::vector<cplx> phases(dim);
  for (std::size_t j = 0; j < dim; ++j) phases[j] = std::polar(1.0, out.thetas[j]);
  kernels::active().scale_columns(pd.data(), phases, dim);
  out.reconstruction_residual = distance(multiply_adjoint(pd, out.vectors), a);
  const ComplexMatrix pa = out.vectors.adjoint();
  out.orthonormality_residual = distance(pa * out.vectors, ComplexMatrix::identity(dim));
  return out;
}

bool acceptable(const EigDecomposition& d) {
  return d.reconstruction_residual < kUnitaryTol && d.orthonormality_residual < kUnitaryTol;
}

}  // namespace

std::size_t EigDecomposition::cluster_size(std::size_t k) const {
  const std::size_t end = k + 1 < cluster_starts.size() ? cluster_starts[k + 1] : thetas.size();
  return end - cluster_starts[k];
}

EigDecomposition eig_unitary(const Unitary& a) {
  const ComplexMatrix& m = a.matrix();
  EigDecomposition primary = assemble(m, pencil_candidate(m));
  if (acceptable(primary)) return primary;
  EigDecomposition fallback = assemble(m, general_candidate(m));
  fallback.used_fallback = true;
  if (acceptable(fallback)) return fallback;
  throw NumericError("eig_unitary failed to converge: reconstruction residual " +
                     format_real(std::min(primary.reconstruction_residual, fallback.reconstruction_residual)) +
                     ", orthonormality residual " +
                     format_real(std::min(primary.orthonormality_residual, fallback.orthonormality_residual)));
}

}  // namespace symlie
