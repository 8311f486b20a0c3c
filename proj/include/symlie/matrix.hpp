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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace symlie {

using cplx = std::complex<double>;

/// Largest qubit count for which dense 2^n x 2^n matrices are built.
inline constexpr int kDefaultMatrixQubitCap = 10;

/// Dense square complex matrix of power-of-two dimension, row-major.
///
/// Basis-state index b has qubit 0 as its least-significant bit.
class ComplexMatrix {
 public:
  /// Zero matrix. Throws DimensionError unless dim is a power of two.
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<cplx> row_major);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix from_rows(const std::vector<std::vector<cplx>>& rows);
  static ComplexMatrix diagonal(std::span<const cplx> diag);

  std::size_t dim() const { return dim_; }
  int qubits() const;

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  std::span<cplx> data() { return data_; }
  std::span<const cplx> data() const { return data_; }

  ComplexMatrix adjoint() const;
  cplx trace() const;
  double frobenius_norm() const;
  /// ‖this · this† − 𝟙‖_F
  double unitarity_residual() const;
  bool is_hermitian(double tol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx s);

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

/// a · b†
ComplexMatrix multiply_adjoint(const ComplexMatrix& a, const ComplexMatrix& b);

/// ‖a − b‖_F
double distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// ‖ab − ba‖_F
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product a ⊗ b; a acts on the more significant qubits.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Throws DimensionError when the dimensions differ.
void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what);

}  // namespace symlie
