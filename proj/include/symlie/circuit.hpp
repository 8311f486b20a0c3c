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

// Lowering of Pauli exponentials to {H, S, SDG, RZ, CNOT} circuits.
//
// exp(−iα/2 · P) for a Pauli string P of weight w is emitted as
//   basis change on each active qubit (X: H, Y: SDG then H),
//   CNOT ladder over the active qubits in ascending order onto the highest one,
//   RZ(α) on that qubit,
//   the ladder and basis change undone in reverse.
// RZ(θ) = diag(e^{−iθ/2}, e^{iθ/2}), so the circuit equals the exponential
// exactly, global phase included.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symlie/group_ops.hpp"
#include "symlie/pauli.hpp"

namespace symlie {

enum class GateKind { kH, kS, kSdg, kRz, kCnot };

struct Gate {
  GateKind kind;
  int qubit;           // target for single-qubit gates, control for CNOT
  int target = -1;     // CNOT only
  double theta = 0.0;  // RZ only

  static Gate h(int q) { return {GateKind::kH, q}; }
  static Gate s(int q) { return {GateKind::kS, q}; }
  static Gate sdg(int q) { return {GateKind::kSdg, q}; }
  static Gate rz(int q, double theta) { return {GateKind::kRz, q, -1, theta}; }
  static Gate cnot(int control, int target) { return {GateKind::kCnot, control, target}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

struct Circuit {
  int n = 0;
  std::vector<Gate> gates;  // gates[0] is applied first

  void append(const Circuit& other);
  /// "QUBITS n" header, then one gate per line: "H 0", "SDG 2", "RZ 1 <θ>", "CNOT 0 1".
  std::string to_text() const;
  static Circuit from_text(std::string_view text);
};

struct GateCounts {
  int cnot = 0;
  int rz = 0;
  int basis_change = 0;  // H, S, SDG
};

GateCounts count_gates(const Circuit& c);

/// At most two distinct non-identity letters across all terms.
bool two_pauli_condition(const PauliSum& s);

/// Throws ConventionError for the all-identity string or a non-zero phase_exp.
Circuit synthesize_pauli_exponential(const PauliString& p, double alpha);

/// Concatenated per-term circuits with angles alpha·coeff. Throws ConditionError
/// when the two-Pauli condition fails or two terms anticommute.
Circuit synthesize_sum_exponential(const PauliSum& s, double alpha);

/// Ordered product of the gate matrices. Throws DimensionError on bad indices.
Unitary circuit_to_matrix(const Circuit& c, int max_qubits = kDefaultMatrixQubitCap);

}  // namespace symlie
