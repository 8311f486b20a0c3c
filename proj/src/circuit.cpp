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

#include "symlie/circuit.hpp"

#include <cmath>
#include <sstream>

#include "symlie/error.hpp"
#include "symlie/io.hpp"

namespace symlie {

void Circuit::append(const Circuit& other) {
  if (other.n != n) throw DimensionError("circuit append: qubit count mismatch");
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

std::string Circuit::to_text() const {
  std::string out = "QUBITS " + std::to_string(n) + "\n";
  for (const Gate& g : gates) {
    switch (g.kind) {
      case GateKind::kH: out += "H " + std::to_string(g.qubit); break;
      case GateKind::kS: out += "S " + std::to_string(g.qubit); break;
      case GateKind::kSdg: out += "SDG " + std::to_string(g.qubit); break;
      case GateKind::kRz: out += "RZ " + std::to_string(g.qubit) + " " + format_real(g.theta); break;
      case GateKind::kCnot: out += "CNOT " + std::to_string(g.qubit) + " " + std::to_string(g.target); break;
    }
    out += "\n";
  }
  return out;
}

Circuit Circuit::from_text(std::string_view text) {
  Circuit c;
  bool have_header = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op) || op[0] == '#') continue;
    auto fail = [&](const std::string& why) {
      return ParseError("circuit line " + std::to_string(lineno) + ": " + why + " (\"" + line + "\")");
    };
    if (op == "QUBITS") {
      if (have_header) throw fail("duplicate QUBITS header");
      if (!(ls >> c.n) || c.n < 1) throw fail("bad qubit count");
      have_header = true;
      continue;
    }
    if (!have_header) throw fail("gate before QUBITS header");
    int q = -1, t = -1;
    double theta = 0.0;
    if (op == "H" || op == "S" || op == "SDG") {
      if (!(ls >> q)) throw fail("missing qubit");
      c.gates.push_back(op == "H" ? Gate::h(q) : op == "S" ? Gate::s(q) : Gate::sdg(q));
    } else if (op == "RZ") {
      if (!(ls >> q >> theta)) throw fail("expected RZ <qubit> <angle>");
      c.gates.push_back(Gate::rz(q, theta));
    } else if (op == "CNOT") {
      if (!(ls >> q >> t)) throw fail("expected CNOT <control> <target>");
      c.gates.push_back(Gate::cnot(q, t));
    } else {
      throw fail("unknown gate");
    }
    std::string extra;
    if (ls >> extra) throw fail("trailing tokens");
  }
  if (!have_header) throw ParseError("circuit text has no QUBITS header");
  return c;
}

GateCounts count_gates(const Circuit& c) {
  GateCounts counts;
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::kCnot) ++counts.cnot;
    else if (g.kind == GateKind::kRz) ++counts.rz;
    else ++counts.basis_change;
  }
  return counts;
}

bool two_pauli_condition(const PauliSum& s) { return letters_used(s).size() <= 2; }

Circuit synthesize_pauli_exponential(const PauliString& p, double alpha) {
  if (p.phase_exp() != 0) throw ConventionError("Pauli exponential needs phase_exp = 0 (Hermitian string)");
  if (p.is_identity()) {
    throw ConventionError("all-identity string is a global phase; no gate realizes it");
  }
  Circuit c;
  c.n = p.n();
  std::vector<int> active;
  for (int q = 0; q < p.n(); ++q)
    if (p.letter(q) != 'I') active.push_back(q);

  // W maps P to a Z-string: H for X (HXH = Z), H·S† for Y.
  for (int q : active) {
    if (p.letter(q) == 'X') {
      c.gates.push_back(Gate::h(q));
    } else if (p.letter(q) == 'Y') {
      c.gates.push_back(Gate::sdg(q));
      c.gates.push_back(Gate::h(q));
    }
  }
  for (std::size_t k = 0; k + 1 < active.size(); ++k) c.gates.push_back(Gate::cnot(active[k], active[k + 1]));
  c.gates.push_back(Gate::rz(active.back(), alpha));
  for (std::size_t k = active.size() - 1; k-- > 0;) c.gates.push_back(Gate::cnot(active[k], active[k + 1]));
  for (auto it = active.rbegin(); it != active.rend(); ++it) {
    const int q = *it;
    if (p.letter(q) == 'X') {
      c.gates.push_back(Gate::h(q));
    } else if (p.letter(q) == 'Y') {
      c.gates.push_back(Gate::h(q));
      c.gates.push_back(Gate::s(q));
    }
  }
  return c;
}

Circuit synthesize_sum_exponential(const PauliSum& s, double alpha) {
  if (!two_pauli_condition(s)) {
    throw ConditionError("terms may not commute; product formula inapplicable (letters used: " +
                         letters_used(s) + ")");
  }
  if (!s.is_hermitian()) throw ConventionError("sum exponential needs real coefficients");
  if (s.has_identity_term()) throw ConventionError("all-identity term is a global phase; no gate realizes it");
  const auto terms = s.terms();
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j)
      if (!terms[i].pauli.commutes_with(terms[j].pauli)) {
        throw ConditionError("terms may not commute; product formula inapplicable (" +
                             terms[i].pauli.letters() + " and " + terms[j].pauli.letters() +
                             " anticommute)");
      }
  Circuit c;
  c.n = s.n();
  for (const PauliTerm& t : terms) c.append(synthesize_pauli_exponential(t.pauli, alpha * t.coeff.real()));
  return c;
}

// ---------------------------------------------------------------------------
// Evaluation: each gate left-multiplies the accumulated matrix by acting on rows.

namespace {

void apply_single(ComplexMatrix& u, int q, const cplx g[2][2]) {
  const std::size_t dim = u.dim();
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t r0 = 0; r0 < dim; ++r0) {
    if (r0 & bit) continue;
    const std::size_t r1 = r0 | bit;
    for (std::size_t c = 0; c < dim; ++c) {
      const cplx a = u(r0, c), b = u(r1, c);
      u(r0, c) = g[0][0] * a + g[0][1] * b;
      u(r1, c) = g[1][0] * a + g[1][1] * b;
    }
  }
}

void apply_cnot(ComplexMatrix& u, int control, int target) {
  const std::size_t dim = u.dim();
  const std::size_t cbit = std::size_t{1} << control, tbit = std::size_t{1} << target;
  for (std::size_t r = 0; r < dim; ++r) {
    if (!(r & cbit) || (r & tbit)) continue;
    for (std::size_t c = 0; c < dim; ++c) std::swap(u(r, c), u(r | tbit, c));
  }
}

}  // namespace

Unitary circuit_to_matrix(const Circuit& c, int max_qubits) {
  if (c.n < 1) throw DimensionError("circuit needs at least one qubit");
  if (c.n > max_qubits) throw CapacityError("circuit exceeds the dense matrix cap");
  ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << c.n);
  const double r = 1.0 / std::sqrt(2.0);
  const cplx h[2][2] = {{r, r}, {r, -r}};
  const cplx s[2][2] = {{1.0, 0.0}, {0.0, cplx(0.0, 1.0)}};
  const cplx sdg[2][2] = {{1.0, 0.0}, {0.0, cplx(0.0, -1.0)}};
  for (const Gate& g : c.gates) {
    if (g.qubit < 0 || g.qubit >= c.n) throw DimensionError("gate qubit index out of range");
    switch (g.kind) {
      case GateKind::kH: apply_single(u, g.qubit, h); break;
      case GateKind::kS: apply_single(u, g.qubit, s); break;
      case GateKind::kSdg: apply_single(u, g.qubit, sdg); break;
      case GateKind::kRz: {
        const cplx rz[2][2] = {{std::polar(1.0, -0.5 * g.theta), 0.0}, {0.0, std::polar(1.0, 0.5 * g.theta)}};
        apply_single(u, g.qubit, rz);
        break;
      }
      case GateKind::kCnot:
        if (g.target < 0 || g.target >= c.n) throw DimensionError("CNOT target out of range");
        if (g.target == g.qubit) throw DimensionError("CNOT control equals target");
        apply_cnot(u, g.qubit, g.target);
        break;
    }
  }
  return Unitary(std::move(u), 1e-10);
}

}  // namespace symlie
