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

// AVX2 + FMA variants. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after the dispatcher has checked the CPU.
//
// One __m256d holds two interleaved complex doubles [re0, im0, re1, im1].

#include <immintrin.h>

#include <algorithm>

#include "symlie/kernels.hpp"

namespace symlie::kernels {
namespace {

inline const double* dp(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* dp(cplx* p) { return reinterpret_cast<double*>(p); }

// (ar + i ai) * v for two packed complex values in v.
inline __m256d cmul_bcast(__m256d ar, __m256d ai, __m256d v) {
  const __m256d swapped = _mm256_permute_pd(v, 0x5);
  return _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, swapped));
}

// Elementwise x * s.
inline __m256d cmul(__m256d x, __m256d s) {
  const __m256d xr = _mm256_movedup_pd(x);
  const __m256d xi = _mm256_permute_pd(x, 0xF);
  return cmul_bcast(xr, xi, s);
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void axpy_avx2(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
  const std::size_t n = x.size();
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d xv = _mm256_loadu_pd(dp(x.data() + k));
    const __m256d yv = _mm256_loadu_pd(dp(y.data() + k));
    _mm256_storeu_pd(dp(y.data() + k), _mm256_add_pd(yv, cmul_bcast(ar, ai, xv)));
  }
  for (; k < n; ++k) y[k] += alpha * x[k];
}

void matmul_avx2(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out,
                 std::size_t dim) {
  std::fill(out.begin(), out.end(), cplx{});
  for (std::size_t i = 0; i < dim; ++i) {
    std::span<cplx> orow = out.subspan(i * dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
      const cplx aik = a[i * dim + k];
      if (aik == cplx{}) continue;
      axpy_avx2(aik, b.subspan(k * dim, dim), orow);
    }
  }
}

void matmul_adjoint_avx2(std::span<const cplx> a, std::span<const cplx> b,
                         std::span<cplx> out, std::size_t dim) {
  // a * conj(b): re = ar br + ai bi, im = ai br - ar bi.
  for (std::size_t i = 0; i < dim; ++i) {
    const cplx* arow = a.data() + i * dim;
    for (std::size_t j = 0; j < dim; ++j) {
      const cplx* brow = b.data() + j * dim;
      __m256d acc_re = _mm256_setzero_pd();
      __m256d acc_im = _mm256_setzero_pd();
      std::size_t k = 0;
      for (; k + 2 <= dim; k += 2) {
        const __m256d av = _mm256_loadu_pd(dp(arow + k));
        const __m256d bv = _mm256_loadu_pd(dp(brow + k));
        acc_re = _mm256_fmadd_pd(av, bv, acc_re);
        acc_im = _mm256_fmadd_pd(av, _mm256_permute_pd(bv, 0x5), acc_im);
      }
      alignas(32) double im_lanes[4];
      _mm256_store_pd(im_lanes, acc_im);
      cplx acc{hsum(acc_re), (im_lanes[1] + im_lanes[3]) - (im_lanes[0] + im_lanes[2])};
      for (; k < dim; ++k) acc += arow[k] * std::conj(brow[k]);
      out[i * dim + j] = acc;
    }
  }
}

double diff_norm_sq_avx2(std::span<const cplx> a, std::span<const cplx> b) {
  const std::size_t n = a.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d d =
        _mm256_sub_pd(_mm256_loadu_pd(dp(a.data() + k)), _mm256_loadu_pd(dp(b.data() + k)));
    acc = _mm256_fmadd_pd(d, d, acc);
  }
  double total = hsum(acc);
  for (; k < n; ++k) total += std::norm(a[k] - b[k]);
  return total;
}

void scale_columns_avx2(std::span<cplx> m, std::span<const cplx> scale, std::size_t dim) {
  for (std::size_t r = 0; r < dim; ++r) {
    cplx* row = m.data() + r * dim;
    std::size_t c = 0;
    for (; c + 2 <= dim; c += 2) {
      const __m256d x = _mm256_loadu_pd(dp(row + c));
      const __m256d s = _mm256_loadu_pd(dp(scale.data() + c));
      _mm256_storeu_pd(dp(row + c), cmul(x, s));
    }
    for (; c < dim; ++c) row[c] *= scale[c];
  }
}

}  // namespace

const KernelTable& avx2_table_impl() {
  static const KernelTable table{
      "avx2",          matmul_avx2, matmul_adjoint_avx2, diff_norm_sq_avx2,
      axpy_avx2,       scale_columns_avx2,
  };
  return table;
}

}  // namespace symlie::kernels
