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

// Thin wrappers over the Eigen solvers so the rest of the library stays on
// ComplexMatrix.

#pragma once

#include <cstddef>
#include <vector>

#include "symlie/matrix.hpp"

namespace symlie::linalg {

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column j pairs with values[j]
};

struct GeneralEigen {
  std::vector<cplx> values;
  ComplexMatrix vectors;
};

/// Throws NumericError if the solver does not converge.
HermitianEigen hermitian_eigen(const ComplexMatrix& h);
GeneralEigen general_eigen(const ComplexMatrix& a);

cplx determinant(const ComplexMatrix& a);

/// Modified Gram-Schmidt (two passes) over columns [first, first + count).
void orthonormalize_columns(ComplexMatrix& m, std::size_t first, std::size_t count);

}  // namespace symlie::linalg
