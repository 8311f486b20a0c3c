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

#include "symlie/matrix.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "symlie/error.hpp"
#include "symlie/kernels.hpp"

namespace symlie {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (dim == 0 || !std::has_single_bit(dim)) {
    throw DimensionError("matrix dimension must be a power of two, got " + std::to_string(dim));
  }
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> row_major) : ComplexMatrix(dim) {
  if (row_major.size() != dim * dim) {
    throw DimensionError("matrix data has " + std::to_string(row_major.size()) +
                         " entries, expected " + std::to_string(dim * dim));
  }
  data_ = std::move(row_major);
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<cplx>>& rows) {
  ComplexMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) {
      throw DimensionError("matrix is not square: row " + std::to_string(r) + " has " +
                           std::to_string(rows[r].size()) + " entries");
    }
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

int ComplexMatrix::qubits() const { return std::countr_zero(dim_); }

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

cplx ComplexMatrix::trace() const {
  cplx t{};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double acc = 0.0;
  for (const cplx& v : data_) acc += std::norm(v);
  return std::sqrt(acc);
}

double ComplexMatrix::unitarity_residual() const {
  return distance(multiply_adjoint(*this, *this), identity(dim_));
}

bool ComplexMatrix::is_hermitian(double tol) const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "matrix addition");
  kernels::active().axpy(1.0, other.data_, data_);
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "matrix subtraction");
  kernels::active().axpy(-1.0, other.data_, data_);
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (cplx& v : data_) v *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "matrix product");
  ComplexMatrix out(a.dim());
  kernels::active().matmul(a.data(), b.data(), out.data(), a.dim());
  return out;
}

ComplexMatrix multiply_adjoint(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "matrix product");
  ComplexMatrix out(a.dim());
  kernels::active().matmul_adjoint(a.data(), b.data(), out.data(), a.dim());
  return out;
}

double distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "matrix distance");
  return std::sqrt(kernels::active().diff_norm_sq(a.data(), b.data()));
}

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
  return distance(a * b, b * a);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t ra = 0; ra < da; ++ra)
    for (std::size_t ca = 0; ca < da; ++ca) {
      const cplx s = a(ra, ca);
      if (s == cplx{}) continue;
      for (std::size_t rb = 0; rb < db; ++rb)
        for (std::size_t cb = 0; cb < db; ++cb) out(ra * db + rb, ca * db + cb) = s * b(rb, cb);
    }
  return out;
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace symlie
