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

// Dense complex inner loops used by every matrix-level check.
//
// Each kernel has a scalar reference implementation and, on x86-64, an AVX2+FMA
// variant. The active table is chosen once, on first use, from the CPU feature
// bits. Setting SYMLIE_KERNELS=scalar in the environment forces the reference
// path. All matrices are square, row-major, interleaved (re, im) doubles.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace symlie::kernels {

using cplx = std::complex<double>;

struct KernelTable {
  std::string_view name;
  /// out = a * b for dim x dim matrices. out must not alias a or b.
  void (*matmul)(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out,
                 std::size_t dim);
  /// out = a * b^dagger. out must not alias a or b.
  void (*matmul_adjoint)(std::span<const cplx> a, std::span<const cplx> b,
                         std::span<cplx> out, std::size_t dim);
  /// sum_k |a_k - b_k|^2
  double (*diff_norm_sq)(std::span<const cplx> a, std::span<const cplx> b);
  /// y += alpha * x
  void (*axpy)(cplx alpha, std::span<const cplx> x, std::span<cplx> y);
  /// m[r][c] *= scale[c]
  void (*scale_columns)(std::span<cplx> m, std::span<const cplx> scale, std::size_t dim);
};

const KernelTable& scalar_table();

/// nullptr when the CPU (or the build) lacks AVX2+FMA.
const KernelTable* avx2_table();

/// The table every library routine calls through.
const KernelTable& active();

}  // namespace symlie::kernels
