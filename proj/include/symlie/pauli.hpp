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

// Pauli strings in symplectic form and canonical complex-weighted sums of them.
//
// A PauliString on n qubits is i^phase ⊗_q σ_q, where qubit q carries
//   X  if only bit q of x_mask is set,
//   Z  if only bit q of z_mask is set,
//   Y  if both are set,
//   I  otherwise.
// Letters are written most-significant qubit first: "XIZ" is X on qubit 2 and
// Z on qubit 0.

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symlie/matrix.hpp"

namespace symlie {

/// Coefficients with |c| below this are dropped by canonicalization.
inline constexpr double kZeroCoefficient = 1e-12;

class PauliString {
 public:
  static constexpr int kMaxQubits = 64;

  /// All-identity string on n qubits.
  explicit PauliString(int n);
  PauliString(int n, std::uint64_t x_mask, std::uint64_t z_mask, int phase_exp = 0);

  /// Parses letters over {I,X,Y,Z}, most-significant qubit first.
  static PauliString from_letters(std::string_view letters);
  /// Single non-identity letter on one qubit.
  static PauliString single(int n, int qubit, char letter);

  int n() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  int phase_exp() const { return phase_; }

  char letter(int qubit) const;
  std::string letters() const;
  /// Number of non-identity sites.
  int weight() const;
  bool is_identity() const { return (x_ | z_) == 0; }
  /// Same masks, phase_exp forced to 0.
  PauliString without_phase() const { return PauliString(n_, x_, z_, 0); }
  bool commutes_with(const PauliString& other) const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  /// Orders by (z_mask, x_mask, phase_exp).
  friend std::strong_ordering operator<=>(const PauliString& a, const PauliString& b);

 private:
  int n_;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int phase_ = 0;
};

struct PauliTerm {
  PauliString pauli;
  cplx coeff;
};

/// Canonical sum: phase-free keys, sorted by (z_mask, x_mask), no |c| < 1e-12 entries.
class PauliSum {
 public:
  explicit PauliSum(int n) : n_(n) {}
  /// Canonicalizes the given terms.
  PauliSum(int n, std::span<const PauliTerm> terms);
  PauliSum(int n, std::initializer_list<PauliTerm> terms)
      : PauliSum(n, std::span<const PauliTerm>(terms.begin(), terms.size())) {}
  explicit PauliSum(const PauliString& p, cplx coeff = 1.0);

  int n() const { return n_; }
  std::span<const PauliTerm> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Coefficient of the phase-free string p (0 when absent).
  cplx coefficient(const PauliString& p) const;
  /// All coefficients real within tol.
  bool is_hermitian(double tol = kZeroCoefficient) const;
  bool has_identity_term() const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator*=(cplx s);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) {
    PauliSum nb = b;
    nb *= -1.0;
    return a += nb;
  }
  friend PauliSum operator*(cplx s, PauliSum a) { return a *= s; }

  /// One "(<re>,<im>) <letters>" line per term, 17 significant digits.
  std::string to_text() const;
  /// Terms on one line joined by " + ".
  std::string to_line() const;
  /// Parses to_text() output; blank lines and '#' comments are skipped.
  static PauliSum from_text(std::string_view text);

  friend bool operator==(const PauliSum& a, const PauliSum& b);

 private:
  int n_;
  std::vector<PauliTerm> terms_;
};

/// Folds phases into coefficients, merges duplicates, drops near-zero terms, sorts.
PauliSum canonicalize(int n, std::span<const PauliTerm> terms);
/// Identity on already-canonical sums; provided so canonicalization composes.
PauliSum canonicalize(const PauliSum& s);

/// a · b with accumulated phase. Throws DimensionError on mismatched n.
PauliString pauli_multiply(const PauliString& a, const PauliString& b);

/// ab − ba: empty when a, b commute, else one term 2 · (ab).
PauliSum pauli_commutator(const PauliString& a, const PauliString& b);

/// Bilinear extension of pauli_commutator.
PauliSum sum_commutator(const PauliSum& a, const PauliSum& b);

/// Dense realization. Throws CapacityError when n > max_qubits.
ComplexMatrix pauli_to_matrix(const PauliString& p, int max_qubits = kDefaultMatrixQubitCap);
ComplexMatrix sum_to_matrix(const PauliSum& s, int max_qubits = kDefaultMatrixQubitCap);

/// Distinct non-identity letters appearing anywhere in s, sorted.
std::string letters_used(const PauliSum& s);

}  // namespace symlie
