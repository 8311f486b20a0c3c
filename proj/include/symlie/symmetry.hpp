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

// Finite symmetry groups acting on n qubits and the invariance test S U S† = U.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "symlie/matrix.hpp"
#include "symlie/pauli.hpp"

namespace symlie {

/// Wire permutation: qubit i is moved to wire image[i].
class QubitPermutation {
 public:
  /// Throws DomainError unless image is a bijection on {0..n-1}.
  explicit QubitPermutation(std::vector<int> image);

  static QubitPermutation identity(int n);
  static QubitPermutation transposition(int n, int a, int b);

  int n() const { return static_cast<int>(image_.size()); }
  const std::vector<int>& image() const { return image_; }
  int operator[](int q) const { return image_[q]; }

  bool is_identity() const;
  QubitPermutation inverse() const;
  int cycle_count() const;
  /// Basis index with bit q moved to bit image[q].
  std::size_t map_index(std::size_t b) const;
  std::string to_string() const;

  friend bool operator==(const QubitPermutation&, const QubitPermutation&) = default;
  friend auto operator<=>(const QubitPermutation&, const QubitPermutation&) = default;

 private:
  std::vector<int> image_;
};

/// after ∘ before: apply `before` first.
QubitPermutation compose(const QubitPermutation& after, const QubitPermutation& before);

/// Either a qubit permutation or a raw unitary (e.g. CNOT).
class SymmetryElement {
 public:
  SymmetryElement(QubitPermutation p) : value_(std::move(p)) {}  // NOLINT(implicit)
  /// Throws DomainError unless ‖SS† − 𝟙‖_F < 1e-10.
  SymmetryElement(ComplexMatrix unitary);  // NOLINT(implicit)

  int n() const;
  bool is_permutation() const { return std::holds_alternative<QubitPermutation>(value_); }
  const QubitPermutation& permutation() const { return std::get<QubitPermutation>(value_); }
  const ComplexMatrix& raw_matrix() const { return std::get<ComplexMatrix>(value_); }
  /// Dense realization (permutations are converted).
  ComplexMatrix matrix() const;
  std::string describe() const;

 private:
  std::variant<QubitPermutation, ComplexMatrix> value_;
};

inline constexpr std::size_t kDefaultGroupCap = 10000;

class SymmetryGroup {
 public:
  int n() const { return n_; }
  const std::vector<SymmetryElement>& generators() const { return generators_; }
  /// Element 0 is the identity.
  const std::vector<SymmetryElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool is_permutation_group() const;
  /// Throws UnsupportedSymmetryError if any element is a raw unitary.
  std::vector<QubitPermutation> permutations() const;

 private:
  friend SymmetryGroup generate_group(int n, const std::vector<SymmetryElement>& generators,
                                      std::size_t cap);
  int n_ = 0;
  std::vector<SymmetryElement> generators_;
  std::vector<SymmetryElement> elements_;
};

/// Breadth-first closure under composition. Permutations are deduplicated
/// exactly; raw unitaries up to global phase at 1e-9. Throws GroupNotFiniteError
/// past `cap` elements.
SymmetryGroup generate_group(int n, const std::vector<SymmetryElement>& generators,
                             std::size_t cap = kDefaultGroupCap);

ComplexMatrix permutation_to_matrix(const QubitPermutation& p);

/// Pauli string with mask bit q moved to bit image[q]; realizes P s P†.
PauliString conjugate_pauli(const QubitPermutation& p, const PauliString& s);
PauliSum conjugate_sum(const QubitPermutation& p, const PauliSum& s);

/// ‖SU − US‖_F
double symmetry_defect(const ComplexMatrix& u, const SymmetryElement& s);

enum class InvarianceMode { kFullGroup, kGeneratorsOnly };

struct InvarianceResult {
  bool invariant = false;
  double max_residual = 0.0;
};

InvarianceResult is_invariant(const ComplexMatrix& u, const SymmetryGroup& g, double tol,
                              InvarianceMode mode = InvarianceMode::kFullGroup);

/// symmetry_defect against every group element, in element order.
std::vector<double> element_defects(const ComplexMatrix& u, const SymmetryGroup& g);

// ---------------------------------------------------------------------------
// Symmetry specs: presets and the JSON file format
//   {"n": 3, "generators": [{"perm": [1,0,2]}, {"unitary": [[[re,im],...],...]}]}
// "generators" may instead be a preset name string.

struct SymmetrySpec {
  int n = 0;
  std::string label;
  std::vector<SymmetryElement> generators;
};

/// "trivial", "full_swap", "cyclic", "dihedral".
bool is_preset_name(std::string_view name);
SymmetrySpec preset_spec(std::string_view name, int n);
SymmetrySpec parse_symmetry_json(std::string_view text);
SymmetryGroup build_group(const SymmetrySpec& spec, std::size_t cap = kDefaultGroupCap);

}  // namespace symlie
