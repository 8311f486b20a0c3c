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

#include <cstdlib>
#include <string_view>

#include "symlie/kernels.hpp"

namespace symlie::kernels {

#if defined(SYMLIE_HAVE_AVX2)
const KernelTable& avx2_table_impl();
#endif

const KernelTable* avx2_table() {
#if defined(SYMLIE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  return supported ? &avx2_table_impl() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable* chosen = [] {
    const char* forced = std::getenv("SYMLIE_KERNELS");
    if (forced != nullptr && std::string_view(forced) == "scalar") return &scalar_table();
    if (const KernelTable* t = avx2_table()) return t;
    return &scalar_table();
  }();
  return *chosen;
}

}  // namespace symlie::kernels
