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

#include "symlie/kernels.hpp"

#include <algorithm>

namespace symlie::kernels {
namespace {

void matmul_scalar(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out,
                   std::size_t dim) {
  std::fill(out.begin(), out.end(), cplx{});
  // i-k-j order keeps the inner loop streaming over rows of b and out.
  for (std::size_t i = 0; i < dim; ++i) {
    cplx* orow = out.data() + i * dim;
    for (std::size_t k = 0; k < dim; ++k) {
      const cplx aik = a[i * dim + k];
      if (aik == cplx{}) continue;
      const cplx* brow = b.data() + k * dim;
      for (std::size_t j = 0; j < dim; ++j) orow[j] += aik * brow[j];
    }
  }
}

void matmul_adjoint_scalar(std::span<const cplx> a, std::span<const cplx> b,
                           std::span<cplx> out, std::size_t dim) {
  for (std::size_t i = 0; i < dim; ++i) {
    const cplx* arow = a.data() + i * dim;
    for (std::size_t j = 0; j < dim; ++j) {
      const cplx* brow = b.data() + j * dim;
      cplx acc{};
      for (std::size_t k = 0; k < dim; ++k) acc += arow[k] * std::conj(brow[k]);
      out[i * dim + j] = acc;
    }
  }
}

double diff_norm_sq_scalar(std::span<const cplx> a, std::span<const cplx> b) {
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) acc += std::norm(a[k] - b[k]);
  return acc;
}

void axpy_scalar(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
  for (std::size_t k = 0; k < x.size(); ++k) y[k] += alpha * x[k];
}

void scale_columns_scalar(std::span<cplx> m, std::span<const cplx> scale, std::size_t dim) {
  for (std::size_t r = 0; r < dim; ++r) {
    cplx* row = m.data() + r * dim;
    for (std::size_t c = 0; c < dim; ++c) row[c] *= scale[c];
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{
      "scalar",           matmul_scalar, matmul_adjoint_scalar, diff_norm_sq_scalar,
      axpy_scalar,        scale_columns_scalar,
  };
  return table;
}

}  // namespace symlie::kernels
