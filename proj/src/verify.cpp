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

#include "symlie/verify.hpp"

#include <algorithm>
#include <cmath>

#include "symlie/group_ops.hpp"
#include "symlie/io.hpp"
#include "symlie/linalg.hpp"

namespace symlie {
namespace {

void fail(SuiteResult& r, const std::string& why) {
  if (r.passed) r.detail = why;
  r.passed = false;
}

}  // namespace

SuiteResult composition_suite(const InvariantBasis& basis, const VerifyConfig& cfg) {
  SuiteResult r{"composition", true, 0, 0.0, {}};
  for (int k = 0; k < cfg.composition_pairs; ++k) {
    const Unitary u1 = random_invariant(basis, cfg.seed + 2 * k, cfg.depth);
    const Unitary u2 = random_invariant(basis, cfg.seed + 2 * k + 1, cfg.depth);
    const auto in1 = is_invariant(u1.matrix(), basis.group, cfg.tol);
    const auto in2 = is_invariant(u2.matrix(), basis.group, cfg.tol);
    const auto prod = is_invariant(compose(u1, u2).matrix(), basis.group, 3 * cfg.tol);
    r.worst = std::max({r.worst, in1.max_residual, in2.max_residual, prod.max_residual});
    ++r.checks;
    if (!in1.invariant || !in2.invariant) fail(r, "sampled factor not invariant at pair " + std::to_string(k));
    if (!prod.invariant) fail(r, "product not invariant at pair " + std::to_string(k));
  }
  if (r.passed) r.detail = std::to_string(r.checks) + " products invariant at 3·tol";
  return r;
}

SuiteResult closure_suite(const InvariantBasis& basis, const VerifyConfig& cfg) {
  const ClosureReport rep = closure_report(basis, cfg.tol);
  SuiteResult r{"closure", rep.passed, rep.pair_count, rep.max_residual, {}};
  r.detail = std::to_string(rep.pair_count) + " commutator pairs";
  if (!rep.passed)
    r.detail += ", worst pair (" + std::to_string(rep.worst_i) + "," + std::to_string(rep.worst_j) + ")";
  return r;
}

SuiteResult commuting_diagram_suite(const InvariantBasis& basis, const VerifyConfig& cfg) {
  SuiteResult r{"commuting_diagram", true, 0, 0.0, {}};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const double sym = is_invariant(sum_to_matrix(basis.elements[i]), basis.group, cfg.tol).max_residual;
    r.worst = std::max(r.worst, sym);
    if (!(sym < cfg.tol)) fail(r, "basis element " + std::to_string(i) + " not invariant");
    for (double alpha : cfg.diagram_angles) {
      const Unitary u = exp_generator(basis.elements[i], alpha);
      const auto inv = is_invariant(u.matrix(), basis.group, cfg.tol);
      const double det_err = std::abs(linalg::determinant(u.matrix()) - 1.0);
      r.worst = std::max(r.worst, inv.max_residual);
      ++r.checks;
      if (!inv.invariant) fail(r, "exp of element " + std::to_string(i) + " not invariant");
      if (!(det_err < kDeterminantTol)) fail(r, "exp of element " + std::to_string(i) + " has det != 1");
    }
  }
  if (r.passed) r.detail = std::to_string(r.checks) + " exponentials invariant with det 1";
  return r;
}

SuiteResult path_suite(const InvariantBasis& basis, const VerifyConfig& cfg) {
  SuiteResult r{"path", true, 0, 0.0, {}};
  const std::size_t dim = std::size_t{1} << basis.n;
  for (int k = 0; k < cfg.path_unitaries; ++k) {
    const Unitary a = random_invariant(basis, cfg.seed + 7919 + k, cfg.depth);
    const ConnectednessPath path(a);
    const double e0 = distance(path.at(0.0).matrix(), ComplexMatrix::identity(dim));
    const double e1 = distance(path.at(1.0).matrix(), a.matrix());
    if (!(e0 < kPathEndpointTol) || !(e1 < kPathEndpointTol))
      fail(r, "endpoint residual too large for sample " + std::to_string(k));
    for (int g = 0; g < cfg.path_grid; ++g) {
      const double t = cfg.path_grid == 1 ? 0.0 : static_cast<double>(g) / (cfg.path_grid - 1);
      const auto inv = is_invariant(path.at(t).matrix(), basis.group, kPathInvarianceTol);
      r.worst = std::max(r.worst, inv.max_residual);
      ++r.checks;
      if (!inv.invariant) fail(r, "A(t) not invariant at t=" + format_real(t));
    }
    const Unitary su = project_to_su(a);
    const double det_err = std::abs(linalg::determinant(su.matrix()) - 1.0);
    const double before = is_invariant(a.matrix(), basis.group, 1.0).max_residual;
    const double after = is_invariant(su.matrix(), basis.group, 1.0).max_residual;
    if (!(det_err < kDeterminantTol)) fail(r, "SU projection det error " + format_real(det_err));
    if (!(std::abs(after - before) < 1e-12)) fail(r, "SU projection changed the defect");
  }
  if (r.passed) r.detail = std::to_string(r.checks) + " path points invariant; endpoints exact";
  return r;
}

std::vector<SuiteResult> run_verify(const InvariantBasis& basis, const VerifyConfig& cfg) {
  return {composition_suite(basis, cfg), closure_suite(basis, cfg), commuting_diagram_suite(basis, cfg),
          path_suite(basis, cfg)};
}

}  // namespace symlie
