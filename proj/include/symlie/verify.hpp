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

// Numerical checks of the structural properties of an invariant algebra/group:
// composition, Lie closure, exp landing in the invariant group, and the
// eigenphase path staying invariant.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symlie/algebra.hpp"
#include "symlie/symmetry.hpp"

namespace symlie {

inline constexpr double kPathInvarianceTol = 1e-8;
inline constexpr double kPathEndpointTol = 1e-9;
inline constexpr double kDeterminantTol = 1e-10;

struct VerifyConfig {
  double tol = 1e-10;  // component tolerance; products are checked at 3·tol
  std::uint64_t seed = 1;
  int composition_pairs = 20;
  int path_unitaries = 5;
  int path_grid = 11;
  int depth = 8;
  std::vector<double> diagram_angles = {0.37, 1.9, 4.4};
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::size_t checks = 0;
  double worst = 0.0;  // largest residual seen
  std::string detail;
};

SuiteResult composition_suite(const InvariantBasis& basis, const VerifyConfig& cfg);
SuiteResult closure_suite(const InvariantBasis& basis, const VerifyConfig& cfg);
SuiteResult commuting_diagram_suite(const InvariantBasis& basis, const VerifyConfig& cfg);
SuiteResult path_suite(const InvariantBasis& basis, const VerifyConfig& cfg);

/// All four suites in the order above.
std::vector<SuiteResult> run_verify(const InvariantBasis& basis, const VerifyConfig& cfg);

}  // namespace symlie
