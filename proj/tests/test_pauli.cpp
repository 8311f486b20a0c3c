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

#include <random>

#include "oracles.hpp"
#include "symlie/error.hpp"
#include "symlie/pauli.hpp"

namespace symlie {
namespace {

const cplx kI{0.0, 1.0};

PauliString P(const char* s) { return PauliString::from_letters(s); }

TEST(PauliString, LettersRoundTripMostSignificantFirst) {
  const PauliString p = P("XIZ");
  EXPECT_EQ(p.n(), 3);
  EXPECT_EQ(p.x_mask(), 0b100u);
  EXPECT_EQ(p.z_mask(), 0b001u);
  EXPECT_EQ(p.letters(), "XIZ");
  EXPECT_EQ(p.letter(2), 'X');
  EXPECT_EQ(p.weight(), 2);
  EXPECT_EQ(P("Y").x_mask(), 1u);
  EXPECT_EQ(P("Y").z_mask(), 1u);
}

TEST(PauliString, RejectsBadInput) {
  EXPECT_THROW(P("XQ"), ParseError);
  EXPECT_THROW(PauliString(0), DimensionError);
  EXPECT_THROW(PauliString(65), DimensionError);
  EXPECT_THROW(PauliString(2, 0b100, 0), DimensionError);
}

TEST(PauliMultiply, XTimesYIsIZ) {
  const PauliString r = pauli_multiply(P("X"), P("Y"));
  EXPECT_EQ(r.phase_exp(), 1);
  EXPECT_EQ(r.x_mask(), 0u);
  EXPECT_EQ(r.z_mask(), 1u);
}

TEST(PauliMultiply, XTimesXIsIdentity) {
  const PauliString r = pauli_multiply(P("X"), P("X"));
  EXPECT_TRUE(r.is_identity());
  EXPECT_EQ(r.phase_exp(), 0);
}

TEST(PauliMultiply, DisjointSupports) {
  const PauliString r = pauli_multiply(P("XI"), P("IZ"));
  EXPECT_EQ(r, P("XZ"));
}

TEST(PauliMultiply, DimensionMismatch) { EXPECT_THROW(pauli_multiply(P("X"), P("XX")), DimensionError); }

TEST(PauliCommutator, XY) {
  const PauliSum c = pauli_commutator(P("X"), P("Y"));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.terms()[0].pauli, P("Z"));
  EXPECT_EQ(c.terms()[0].coeff, 2.0 * kI);
}

TEST(PauliCommutator, CommutingPairsGiveEmptySum) {
  EXPECT_TRUE(pauli_commutator(P("X"), P("X")).empty());
  EXPECT_TRUE(pauli_commutator(P("XX"), P("YY")).empty());
  EXPECT_THROW(pauli_commutator(P("X"), P("XX")), DimensionError);
}

TEST(Canonicalize, Examples) {
  const PauliString x = P("X");
  EXPECT_EQ(PauliSum(1, {{x, 1.0}, {x, 1.0}}), PauliSum(x, 2.0));
  EXPECT_TRUE(PauliSum(1, {{x, 1.0}, {x, -1.0}}).empty());
  const PauliSum folded(1, {{PauliString(1, 0, 1, 2), 1.0}});
  ASSERT_EQ(folded.size(), 1u);
  EXPECT_EQ(folded.terms()[0].pauli, P("Z"));
  EXPECT_EQ(folded.terms()[0].coeff, cplx(-1.0));
}

TEST(Canonicalize, SortedByZThenX) {
  const PauliSum s(2, {{P("ZI"), 1.0}, {P("XX"), 1.0}, {P("IZ"), 1.0}, {P("XI"), 1.0}, {P("YY"), 1.0}});
  std::vector<std::string> order;
  for (const PauliTerm& t : s.terms()) order.push_back(t.pauli.letters());
  EXPECT_EQ(order, (std::vector<std::string>{"XI", "XX", "IZ", "ZI", "YY"}));
}

TEST(Canonicalize, IdempotentAndOrderIndependent) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<PauliTerm> terms;
    for (int k = 0; k < 8; ++k)
      terms.push_back({PauliString(3, rng() % 8, rng() % 8, static_cast<int>(rng() % 4)),
                       cplx(static_cast<double>(rng() % 5) - 2.0, static_cast<double>(rng() % 3) - 1.0)});
    const PauliSum a = canonicalize(3, terms);
    EXPECT_EQ(canonicalize(a), a);
    std::shuffle(terms.begin(), terms.end(), rng);
    EXPECT_EQ(canonicalize(3, terms), a);
    for (const PauliTerm& t : a.terms()) {
      EXPECT_EQ(t.pauli.phase_exp(), 0);
      EXPECT_GE(std::abs(t.coeff), kZeroCoefficient);
    }
  }
}

TEST(SumCommutator, SymmetricSinglesGiveMinusTwoIY) {
  const PauliSum a(2, {{P("XI"), 1.0}, {P("IX"), 1.0}});
  const PauliSum b(2, {{P("ZI"), 1.0}, {P("IZ"), 1.0}});
  const PauliSum expected(2, {{P("YI"), -2.0 * kI}, {P("IY"), -2.0 * kI}});
  EXPECT_EQ(sum_commutator(a, b), expected);
  const ComplexMatrix am = oracle::sum_matrix(2, {{1.0, "XI"}, {1.0, "IX"}});
  const ComplexMatrix bm = oracle::sum_matrix(2, {{1.0, "ZI"}, {1.0, "IZ"}});
  EXPECT_LT(distance(am * bm - bm * am, oracle::sum_matrix(2, {{-2.0 * kI, "YI"}, {-2.0 * kI, "IY"}})), 1e-14);
}

TEST(SumCommutator, SelfAndCommutingPairsVanish) {
  const PauliSum s(2, {{P("XY"), 0.5}, {P("ZI"), -1.5}, {P("YY"), 2.0}});
  EXPECT_TRUE(sum_commutator(s, s).empty());
  EXPECT_TRUE(sum_commutator(PauliSum(P("XX")), PauliSum(P("ZZ"))).empty());
  const ComplexMatrix xx = oracle::letters_matrix("XX"), zz = oracle::letters_matrix("ZZ");
  EXPECT_EQ((xx * zz - zz * xx).frobenius_norm(), 0.0);
}

TEST(SumCommutator, Antisymmetric) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    PauliSum a(3), b(3);
    for (int k = 0; k < 4; ++k) {
      a += PauliSum(PauliString(3, rng() % 8, rng() % 8), static_cast<double>(rng() % 7) - 3.0);
      b += PauliSum(PauliString(3, rng() % 8, rng() % 8), static_cast<double>(rng() % 7) - 3.0);
    }
    EXPECT_EQ(sum_commutator(a, b), -1.0 * sum_commutator(b, a));
  }
}

TEST(Realization, SingleQubitMatrices) {
  EXPECT_EQ(pauli_to_matrix(P("X")), ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
  EXPECT_EQ(pauli_to_matrix(P("Y")), ComplexMatrix::from_rows({{0.0, -kI}, {kI, 0.0}}));
  EXPECT_EQ(pauli_to_matrix(P("Z")), ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}));
}

TEST(Realization, SymmetricXSum) {
  const ComplexMatrix m = sum_to_matrix(PauliSum(2, {{P("XI"), 1.0}, {P("IX"), 1.0}}));
  const std::vector<std::pair<int, int>> ones = {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {0, 2}, {2, 0}, {1, 3}, {3, 1}};
  ComplexMatrix expected(4);
  for (auto [r, c] : ones) expected(r, c) = 1.0;
  EXPECT_EQ(m, expected);
}

TEST(Realization, CapacityCap) {
  EXPECT_THROW(pauli_to_matrix(PauliString(11)), CapacityError);
  EXPECT_NO_THROW(pauli_to_matrix(PauliString(3), 3));
  EXPECT_THROW(pauli_to_matrix(PauliString(4), 3), CapacityError);
}

TEST(Realization, MatchesKroneckerOracle) {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const std::string s = oracle::random_letters(rng, n);
      EXPECT_EQ(pauli_to_matrix(P(s.c_str())), oracle::letters_matrix(s)) << s;
    }
}

TEST(Property, RealizationIsHomomorphism) {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      const PauliString a(n, rng() % (1u << n), rng() % (1u << n), static_cast<int>(rng() % 4));
      const PauliString b(n, rng() % (1u << n), rng() % (1u << n), static_cast<int>(rng() % 4));
      const ComplexMatrix lhs = pauli_to_matrix(pauli_multiply(a, b));
      const ComplexMatrix rhs = pauli_to_matrix(a) * pauli_to_matrix(b);
      EXPECT_LT(oracle::max_abs_diff(lhs, rhs), 1e-14);
    }
}

TEST(Property, MultiplyIsAssociative) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const PauliString a(4, rng() % 16, rng() % 16, static_cast<int>(rng() % 4));
    const PauliString b(4, rng() % 16, rng() % 16, static_cast<int>(rng() % 4));
    const PauliString c(4, rng() % 16, rng() % 16, static_cast<int>(rng() % 4));
    EXPECT_EQ(pauli_multiply(pauli_multiply(a, b), c), pauli_multiply(a, pauli_multiply(b, c)));
  }
}

TEST(Property, CommutatorFaithful) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    PauliSum a(n), b(n);
    for (int k = 0; k < 4; ++k) {
      a += PauliSum(PauliString(n, rng() % (1u << n), rng() % (1u << n)), cplx(0.3 * (rng() % 5), -0.2 * (rng() % 3)));
      b += PauliSum(PauliString(n, rng() % (1u << n), rng() % (1u << n)), cplx(-0.7 * (rng() % 4), 0.1 * (rng() % 6)));
    }
    const ComplexMatrix am = sum_to_matrix(a), bm = sum_to_matrix(b);
    EXPECT_LT(distance(sum_to_matrix(sum_commutator(a, b)), am * bm - bm * am), 1e-12);
  }
}

TEST(Property, RealCoefficientsRealizeHermitianTraceless) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    PauliSum s(3);
    for (int k = 0; k < 6; ++k) {
      const PauliString p(3, rng() % 8, rng() % 8);
      if (!p.is_identity()) s += PauliSum(p, 0.25 * static_cast<double>(rng() % 9) - 1.0);
    }
    ASSERT_TRUE(s.is_hermitian());
    const ComplexMatrix m = sum_to_matrix(s);
    EXPECT_TRUE(m.is_hermitian(0.0));
    EXPECT_EQ(m.trace(), cplx(0.0));
  }
}

TEST(PauliSumText, RoundTrip) {
  const PauliSum s(3, {{P("XYZ"), cplx(0.1, -2.5)}, {P("IIZ"), 1.0 / 3.0}});
  EXPECT_EQ(PauliSum::from_text(s.to_text()), s);
  EXPECT_EQ(PauliSum::from_text("# comment\n\n(1,0) XX\n(2,0) ZZ\n"),
            PauliSum(2, {{P("XX"), 1.0}, {P("ZZ"), 2.0}}));
  EXPECT_THROW(PauliSum::from_text("(1,0) XX\n(1,0) X\n"), ParseError);
  EXPECT_THROW(PauliSum::from_text("1 XX\n"), ParseError);
}

}  // namespace
}  // namespace symlie
