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

#include "symlie/pauli.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "symlie/error.hpp"
#include "symlie/io.hpp"

namespace symlie {
namespace {

std::uint64_t low_bits(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

cplx i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void require_same_n(int a, int b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": qubit count mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

void require_matrix_cap(int n, int max_qubits) {
  if (n > max_qubits) {
    throw CapacityError("dense realization of " + std::to_string(n) +
                        " qubits exceeds the cap of " + std::to_string(max_qubits));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// PauliString

PauliString::PauliString(int n) : PauliString(n, 0, 0, 0) {}

PauliString::PauliString(int n, std::uint64_t x_mask, std::uint64_t z_mask, int phase_exp)
    : n_(n), x_(x_mask), z_(z_mask), phase_(((phase_exp % 4) + 4) % 4) {
  if (n < 1 || n > kMaxQubits) {
    throw DimensionError("Pauli string qubit count must be in [1, 64], got " + std::to_string(n));
  }
  if (((x_ | z_) & ~low_bits(n)) != 0) {
    throw DimensionError("Pauli string masks use bits beyond qubit " + std::to_string(n - 1));
  }
}

PauliString PauliString::from_letters(std::string_view letters) {
  const int n = static_cast<int>(letters.size());
  if (n == 0) throw ParseError("empty Pauli string");
  std::uint64_t x = 0, z = 0;
  for (int k = 0; k < n; ++k) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - k);
    switch (letters[k]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      case 'Z': z |= bit; break;
      default:
        throw ParseError("invalid Pauli letter '" + std::string(1, letters[k]) + "' in \"" +
                         std::string(letters) + "\"");
    }
  }
  return PauliString(n, x, z, 0);
}

PauliString PauliString::single(int n, int qubit, char letter) {
  if (qubit < 0 || qubit >= n) throw DimensionError("qubit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (letter) {
    case 'I': return PauliString(n);
    case 'X': return PauliString(n, bit, 0);
    case 'Y': return PauliString(n, bit, bit);
    case 'Z': return PauliString(n, 0, bit);
    default: throw ParseError("invalid Pauli letter");
  }
}

char PauliString::letter(int qubit) const {
  const bool xb = (x_ >> qubit) & 1u;
  const bool zb = (z_ >> qubit) & 1u;
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

std::string PauliString::letters() const {
  std::string out(n_, 'I');
  for (int q = 0; q < n_; ++q) out[n_ - 1 - q] = letter(q);
  return out;
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

bool PauliString::commutes_with(const PauliString& other) const {
  require_same_n(n_, other.n_, "commutation test");
  return std::popcount((x_ & other.z_) ^ (z_ & other.x_)) % 2 == 0;
}

std::strong_ordering operator<=>(const PauliString& a, const PauliString& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.z_ <=> b.z_; c != 0) return c;
  if (auto c = a.x_ <=> b.x_; c != 0) return c;
  return a.phase_ <=> b.phase_;
}

PauliString pauli_multiply(const PauliString& a, const PauliString& b) {
  require_same_n(a.n(), b.n(), "pauli_multiply");
  const std::uint64_t ax = a.x_mask() & ~a.z_mask(), ay = a.x_mask() & a.z_mask(),
                      az = ~a.x_mask() & a.z_mask();
  const std::uint64_t bx = b.x_mask() & ~b.z_mask(), by = b.x_mask() & b.z_mask(),
                      bz = ~b.x_mask() & b.z_mask();
  // XY = iZ, YZ = iX, ZX = iY; reversed order picks up -i.
  const int plus = std::popcount((ax & by) | (ay & bz) | (az & bx));
  const int minus = std::popcount((ay & bx) | (az & by) | (ax & bz));
  return PauliString(a.n(), a.x_mask() ^ b.x_mask(), a.z_mask() ^ b.z_mask(),
                     a.phase_exp() + b.phase_exp() + plus - minus);
}

PauliSum pauli_commutator(const PauliString& a, const PauliString& b) {
  require_same_n(a.n(), b.n(), "pauli_commutator");
  if (a.commutes_with(b)) return PauliSum(a.n());
  return PauliSum(pauli_multiply(a, b), 2.0);
}

// ---------------------------------------------------------------------------
// PauliSum

PauliSum::PauliSum(int n, std::span<const PauliTerm> terms) : n_(n) {
  std::map<PauliString, cplx> merged;
  for (const PauliTerm& t : terms) {
    require_same_n(n, t.pauli.n(), "canonicalize");
    merged[t.pauli.without_phase()] += t.coeff * i_pow(t.pauli.phase_exp());
  }
  terms_.reserve(merged.size());
  for (const auto& [p, c] : merged)
    if (std::abs(c) >= kZeroCoefficient) terms_.push_back({p, c});
}

PauliSum::PauliSum(const PauliString& p, cplx coeff) : n_(p.n()) {
  const cplx folded = coeff * i_pow(p.phase_exp());
  if (std::abs(folded) >= kZeroCoefficient) terms_.push_back({p.without_phase(), folded});
}

cplx PauliSum::coefficient(const PauliString& p) const {
  const PauliString key = p.without_phase();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const PauliTerm& t, const PauliString& k) { return t.pauli < k; });
  if (it == terms_.end() || it->pauli != key) return 0.0;
  return it->coeff;
}

bool PauliSum::is_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [tol](const PauliTerm& t) { return std::abs(t.coeff.imag()) < tol; });
}

bool PauliSum::has_identity_term() const {
  return !terms_.empty() && terms_.front().pauli.is_identity();
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  require_same_n(n_, other.n_, "PauliSum addition");
  std::vector<PauliTerm> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  *this = PauliSum(n_, all);
  return *this;
}

PauliSum& PauliSum::operator*=(cplx s) {
  std::vector<PauliTerm> scaled = terms_;
  for (PauliTerm& t : scaled) t.coeff *= s;
  *this = PauliSum(n_, scaled);
  return *this;
}

bool operator==(const PauliSum& a, const PauliSum& b) {
  if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].pauli != b.terms_[k].pauli || a.terms_[k].coeff != b.terms_[k].coeff)
      return false;
  return true;
}

namespace {
std::string term_text(const PauliTerm& t) {
  return "(" + format_real(t.coeff.real()) + "," + format_real(t.coeff.imag()) + ") " +
         t.pauli.letters();
}
}  // namespace

std::string PauliSum::to_text() const {
  std::string out;
  for (const PauliTerm& t : terms_) out += term_text(t) + "\n";
  return out;
}

std::string PauliSum::to_line() const {
  std::string out;
  for (const PauliTerm& t : terms_) {
    if (!out.empty()) out += " + ";
    out += term_text(t);
  }
  return out;
}

PauliSum PauliSum::from_text(std::string_view text) {
  std::vector<PauliTerm> terms;
  int n = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line.substr(first));
    char open = 0, comma = 0, close = 0;
    double re = 0, im = 0;
    std::string letters;
    if (!(ls >> open >> re >> comma >> im >> close >> letters) || open != '(' || comma != ',' ||
        close != ')') {
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected \"(<re>,<im>) <letters>\", got \"" + line + "\"");
    }
    PauliString p = PauliString::from_letters(letters);
    if (n == 0) n = p.n();
    if (p.n() != n) throw ParseError("line " + std::to_string(lineno) + ": qubit count changes");
    terms.push_back({p, {re, im}});
  }
  if (n == 0) throw ParseError("Pauli sum text contains no terms");
  return PauliSum(n, terms);
}

PauliSum canonicalize(int n, std::span<const PauliTerm> terms) { return PauliSum(n, terms); }

PauliSum canonicalize(const PauliSum& s) { return PauliSum(s.n(), s.terms()); }

PauliSum sum_commutator(const PauliSum& a, const PauliSum& b) {
  require_same_n(a.n(), b.n(), "sum_commutator");
  std::vector<PauliTerm> raw;
  for (const PauliTerm& ta : a.terms())
    for (const PauliTerm& tb : b.terms()) {
      if (ta.pauli.commutes_with(tb.pauli)) continue;
      raw.push_back({pauli_multiply(ta.pauli, tb.pauli), 2.0 * ta.coeff * tb.coeff});
    }
  return PauliSum(a.n(), raw);
}

// ---------------------------------------------------------------------------
// Dense realization: X^x Z^z |c> = (-1)^{|c & z|} |c ^ x>, and each Y site
// contributes a factor i since Y = iXZ.

ComplexMatrix pauli_to_matrix(const PauliString& p, int max_qubits) {
  require_matrix_cap(p.n(), max_qubits);
  const std::size_t dim = std::size_t{1} << p.n();
  ComplexMatrix m(dim);
  const cplx base = i_pow(p.phase_exp() + std::popcount(p.x_mask() & p.z_mask()));
  for (std::size_t c = 0; c < dim; ++c) {
    const bool odd = std::popcount(c & p.z_mask()) % 2 == 1;
    m(c ^ p.x_mask(), c) = odd ? -base : base;
  }
  return m;
}

ComplexMatrix sum_to_matrix(const PauliSum& s, int max_qubits) {
  require_matrix_cap(s.n(), max_qubits);
  const std::size_t dim = std::size_t{1} << s.n();
  ComplexMatrix m(dim);
  for (const PauliTerm& t : s.terms()) {
    const PauliString& p = t.pauli;
    const cplx base = t.coeff * i_pow(p.phase_exp() + std::popcount(p.x_mask() & p.z_mask()));
    for (std::size_t c = 0; c < dim; ++c) {
      const bool odd = std::popcount(c & p.z_mask()) % 2 == 1;
      m(c ^ p.x_mask(), c) += odd ? -base : base;
    }
  }
  return m;
}

std::string letters_used(const PauliSum& s) {
  bool seen[3] = {false, false, false};
  for (const PauliTerm& t : s.terms())
    for (int q = 0; q < s.n(); ++q) {
      switch (t.pauli.letter(q)) {
        case 'X': seen[0] = true; break;
        case 'Y': seen[1] = true; break;
        case 'Z': seen[2] = true; break;
        default: break;
      }
    }
  std::string out;
  if (seen[0]) out += 'X';
  if (seen[1]) out += 'Y';
  if (seen[2]) out += 'Z';
  return out;
}

}  // namespace symlie
