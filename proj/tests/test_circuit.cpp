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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "symlie/algebra.hpp"
#include "symlie/circuit.hpp"
#include "symlie/error.hpp"
#include "symlie/group_ops.hpp"
#include "symlie/symmetry.hpp"

namespace symlie {
namespace {

using std::numbers::pi;

PauliString P(const char* s) { return PauliString::from_letters(s); }

InvariantBasis full_swap(int n) { return build_basis(n, build_group(preset_spec("full_swap", n))); }

bool all_terms_commute(const PauliSum& s) {
  const auto t = s.terms();
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (!pauli_commutator(t[i].pauli, t[j].pauli).empty()) return false;
  return true;
}

class CircuitEnvironment : public ::testing::Environment {
 public:
  // The Y-axis basis change V = H·S† must satisfy V·Y·V† = Z before anything else is trusted.
  void SetUp() override {
    const Circuit v{1, {Gate::sdg(0), Gate::h(0)}};
    const ComplexMatrix vm = circuit_to_matrix(v).matrix();
    const ComplexMatrix h = ComplexMatrix::from_rows({{M_SQRT1_2, M_SQRT1_2}, {M_SQRT1_2, -M_SQRT1_2}});
    const ComplexMatrix sdg = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, cplx(0.0, -1.0)}});
    ASSERT_LT(distance(vm, h * sdg), 1e-15);
    ASSERT_LT(distance(vm * oracle::single_qubit('Y') * vm.adjoint(), oracle::single_qubit('Z')), 1e-15);
  }
};

const auto* const kEnv = ::testing::AddGlobalTestEnvironment(new CircuitEnvironment);

TEST(TwoPauliCondition, Examples) {
  EXPECT_TRUE(two_pauli_condition(PauliSum(2, {{P("XX"), 1.0}, {P("YY"), 1.0}})));
  EXPECT_TRUE(two_pauli_condition(PauliSum(2, {{P("XY"), 1.0}, {P("YX"), 1.0}})));
  const SymmetryGroup s3 = build_group(preset_spec("full_swap", 3));
  EXPECT_FALSE(two_pauli_condition(symmetrize(P("XYZ"), s3)));
  EXPECT_TRUE(two_pauli_condition(PauliSum(2)));
}

TEST(SynthesizePauli, SingleZIsOneRz) {
  const Circuit c = synthesize_pauli_exponential(P("Z"), 0.9);
  ASSERT_EQ(c.gates.size(), 1u);
  EXPECT_EQ(c.gates[0], Gate::rz(0, 0.9));
}

TEST(SynthesizePauli, ZZLadder) {
  const Circuit c = synthesize_pauli_exponential(P("ZZ"), 0.4);
  EXPECT_EQ(c.gates, (std::vector<Gate>{Gate::cnot(0, 1), Gate::rz(1, 0.4), Gate::cnot(0, 1)}));
  EXPECT_LT(distance(circuit_to_matrix(c).matrix(), oracle::exp_half(oracle::letters_matrix("ZZ"), 0.4)), 1e-13);
}

TEST(SynthesizePauli, XConjugatedByH) {
  const Circuit c = synthesize_pauli_exponential(P("X"), 1.2);
  EXPECT_EQ(c.gates, (std::vector<Gate>{Gate::h(0), Gate::rz(0, 1.2), Gate::h(0)}));
  EXPECT_LT(distance(circuit_to_matrix(c).matrix(), oracle::rx(1.2)), 1e-12);
}

TEST(SynthesizePauli, Rejections) {
  EXPECT_THROW(synthesize_pauli_exponential(PauliString(2), 0.3), ConventionError);
  EXPECT_THROW(synthesize_pauli_exponential(PauliString(1, 1, 0, 1), 0.3), ConventionError);
}

TEST(Property, PauliRoundTrip) {
  std::mt19937_64 rng(71);
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t idx = 1; idx < (std::uint64_t{1} << (2 * n)); ++idx) {
      const PauliString p(n, idx & ((1u << n) - 1), idx >> n);
      for (int k = 0; k < 20; ++k) {
        const double alpha = 2 * pi * std::ldexp(static_cast<double>(rng() >> 11), -53) - pi;
        const ComplexMatrix got = circuit_to_matrix(synthesize_pauli_exponential(p, alpha)).matrix();
        EXPECT_LT(distance(got, exp_generator(PauliSum(p), alpha).matrix()), 1e-10) << p.letters();
      }
    }
}

TEST(Property, GateCountsExact) {
  for (int n = 1; n <= 5; ++n)
    for (std::uint64_t idx = 1; idx < (std::uint64_t{1} << (2 * n)); ++idx) {
      const PauliString p(n, idx & ((1u << n) - 1), idx >> n);
      int xs = 0, ys = 0;
      for (int q = 0; q < n; ++q) {
        xs += p.letter(q) == 'X';
        ys += p.letter(q) == 'Y';
      }
      const GateCounts g = count_gates(synthesize_pauli_exponential(p, 0.5));
      const int w = p.weight();
      EXPECT_EQ(g.cnot, 2 * (w - 1));
      EXPECT_EQ(g.rz, 1);
      EXPECT_EQ(g.basis_change, 2 * xs + 4 * ys);
      if (ys == 0) {
        EXPECT_LE(g.basis_change, 2 * w);
      }
    }
}

TEST(SynthesizeSum, SymmetricXSum) {
  const Circuit c = synthesize_sum_exponential(PauliSum(2, {{P("XI"), 1.0}, {P("IX"), 1.0}}), 0.8);
  EXPECT_EQ(count_gates(c).cnot, 0);
  EXPECT_EQ(count_gates(c).rz, 2);
  EXPECT_LT(distance(circuit_to_matrix(c).matrix(), kron(oracle::rx(0.8), oracle::rx(0.8))), 1e-12);
}

TEST(SynthesizeSum, XXPlusYY) {
  const PauliSum s(2, {{P("XX"), 1.0}, {P("YY"), 1.0}});
  const Circuit c = synthesize_sum_exponential(s, 1.1);
  EXPECT_EQ(count_gates(c).cnot, 4);
  EXPECT_EQ(count_gates(c).rz, 2);
  EXPECT_LT(distance(circuit_to_matrix(c).matrix(), oracle::exp_half(sum_to_matrix(s), 1.1)), 1e-9);
}

TEST(SynthesizeSum, CoefficientsScaleAngles) {
  const PauliSum s(2, {{P("ZZ"), 0.5}, {P("ZI"), -2.0}});
  EXPECT_LT(distance(circuit_to_matrix(synthesize_sum_exponential(s, 0.7)).matrix(),
                     oracle::exp_half(sum_to_matrix(s), 0.7)),
            1e-12);
}

TEST(SynthesizeSum, RefusesThreeLetterOrbit) {
  const SymmetryGroup s3 = build_group(preset_spec("full_swap", 3));
  try {
    synthesize_sum_exponential(symmetrize(P("XYZ"), s3), 0.3);
    FAIL() << "expected refusal";
  } catch (const ConditionError& e) {
    EXPECT_NE(std::string(e.what()).find("terms may not commute; product formula inapplicable"), std::string::npos);
  }
}

TEST(SynthesizeSum, RefusesTwoLetterSumWithAnticommutingTerms) {
  const SymmetryGroup s3 = build_group(preset_spec("full_swap", 3));
  const PauliSum xyi = symmetrize(P("XYI"), s3);
  ASSERT_TRUE(two_pauli_condition(xyi));
  EXPECT_FALSE(pauli_commutator(P("XYI"), P("YIX")).empty());
  EXPECT_THROW(synthesize_sum_exponential(xyi, 0.7), ConditionError);
  EXPECT_THROW(synthesize_sum_exponential(PauliSum(1, {{P("X"), 1.0}, {P("Y"), 1.0}}), 0.7), ConditionError);
}

TEST(SynthesizeSum, ConventionErrors) {
  EXPECT_THROW(synthesize_sum_exponential(PauliSum(P("XX"), cplx(0.0, 1.0)), 0.2), ConventionError);
  EXPECT_THROW(synthesize_sum_exponential(PauliSum(2, {{PauliString(2), 1.0}, {P("ZZ"), 1.0}}), 0.2),
               ConventionError);
}

TEST(Property, CompiledBasisElementsRoundTripAndInvariant) {
  // Every element that synthesis accepts must match the dense exponential and stay invariant.
  std::size_t accepted = 0;
  for (int n = 1; n <= 4; ++n) {
    const InvariantBasis b = full_swap(n);
    for (const PauliSum& e : b.elements) {
      if (!two_pauli_condition(e) || !all_terms_commute(e)) {
        EXPECT_THROW(synthesize_sum_exponential(e, 0.6), ConditionError) << e.to_line();
        continue;
      }
      ++accepted;
      for (double alpha : {0.6, 2.9}) {
        const ComplexMatrix got = circuit_to_matrix(synthesize_sum_exponential(e, alpha)).matrix();
        EXPECT_LT(distance(got, exp_generator(e, alpha).matrix()), 1e-9) << e.to_line();
        EXPECT_TRUE(is_invariant(got, b.group, 1e-9).invariant) << e.to_line();
      }
    }
  }
  EXPECT_GT(accepted, 0u);
}

TEST(Property, TwoLetterOrbitsCommuteForUpToTwoQubits) {
  for (int n = 1; n <= 2; ++n)
    for (const PauliSum& e : full_swap(n).elements)
      if (two_pauli_condition(e)) {
        EXPECT_TRUE(all_terms_commute(e)) << e.to_line();
      }
}

TEST(Property, TwoLetterOrbitCommutationMatchesDenseOracle) {
  // From three qubits on, some two-letter orbits contain anticommuting pairs (XYI and YIX).
  std::size_t anticommuting = 0;
  for (int n = 3; n <= 4; ++n)
    for (const PauliSum& e : full_swap(n).elements) {
      if (!two_pauli_condition(e)) continue;
      bool dense_commute = true;
      const auto t = e.terms();
      for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) {
          const ComplexMatrix a = oracle::letters_matrix(t[i].pauli.letters());
          const ComplexMatrix b = oracle::letters_matrix(t[j].pauli.letters());
          if ((a * b - b * a).frobenius_norm() > 0) dense_commute = false;
        }
      EXPECT_EQ(all_terms_commute(e), dense_commute) << e.to_line();
      anticommuting += !dense_commute;
    }
  EXPECT_GT(anticommuting, 0u);
}

TEST(CircuitToMatrix, Examples) {
  EXPECT_EQ(circuit_to_matrix(Circuit{2, {}}).matrix(), ComplexMatrix::identity(4));
  const ComplexMatrix cnot = ComplexMatrix::from_rows(
      {{1.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, 1.0, 0.0}, {0.0, 1.0, 0.0, 0.0}});
  EXPECT_EQ(circuit_to_matrix(Circuit{2, {Gate::cnot(0, 1)}}).matrix(), cnot);
  const Circuit hrh{1, {Gate::h(0), Gate::rz(0, 0.77), Gate::h(0)}};
  EXPECT_LT(distance(circuit_to_matrix(hrh).matrix(), oracle::rx(0.77)), 1e-12);
  const std::vector<cplx> rz = {std::polar(1.0, -0.25), std::polar(1.0, 0.25)};
  EXPECT_LT(distance(circuit_to_matrix(Circuit{1, {Gate::rz(0, 0.5)}}).matrix(), ComplexMatrix::diagonal(rz)), 1e-15);
}

TEST(CircuitToMatrix, IndexErrors) {
  EXPECT_THROW(circuit_to_matrix(Circuit{2, {Gate::h(2)}}), DimensionError);
  EXPECT_THROW(circuit_to_matrix(Circuit{2, {Gate::cnot(1, 1)}}), DimensionError);
  EXPECT_THROW(circuit_to_matrix(Circuit{2, {Gate::cnot(0, 5)}}), DimensionError);
}

TEST(CircuitText, RoundTrip) {
  const Circuit c = synthesize_pauli_exponential(P("YXZI"), 0.7853981633974483);
  const std::string text = c.to_text();
  EXPECT_EQ(text.substr(0, 9), "QUBITS 4\n");
  EXPECT_NE(text.find("RZ 3 0.78539816339744828\n"), std::string::npos);
  const Circuit back = Circuit::from_text(text);
  EXPECT_EQ(back.n, c.n);
  EXPECT_EQ(back.gates, c.gates);
  EXPECT_EQ(Circuit::from_text("QUBITS 1\nRZ 0 0.7853981633974483\n").gates[0].theta, 0.7853981633974483);
}

TEST(CircuitText, ParsesSampleAndRejectsGarbage) {
  const Circuit c = Circuit::from_text("QUBITS 3\nH 0\nSDG 2\nRZ 1 0.5\nCNOT 0 1\nS 2\n");
  EXPECT_EQ(c.gates, (std::vector<Gate>{Gate::h(0), Gate::sdg(2), Gate::rz(1, 0.5), Gate::cnot(0, 1), Gate::s(2)}));
  EXPECT_THROW(Circuit::from_text("H 0\n"), ParseError);
  EXPECT_THROW(Circuit::from_text("QUBITS 2\nT 0\n"), ParseError);
  EXPECT_THROW(Circuit::from_text("QUBITS 2\nCNOT 0\n"), ParseError);
  EXPECT_THROW(Circuit::from_text("QUBITS 2\nH 0 1\n"), ParseError);
}

}  // namespace
}  // namespace symlie
