// Copyright 2026 The qcmp authors
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

#include "qcmp/circuit.hpp"

#include <stdexcept>
#include <string>

namespace qcmp {

std::string_view pauli_name(Pauli p) {
  switch (p) {
    case Pauli::X: return "x";
    case Pauli::Y: return "y";
    case Pauli::Z: return "z";
  }
  return "?";
}

std::string_view gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::X: return "x";
    case GateKind::H: return "h";
    case GateKind::Cnot: return "cx";
    case GateKind::Toffoli: return "ccx";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::PauliError: return "pauli_error";
  }
  return "?";
}

int Gate::arity() const {
  switch (kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::PauliError:
      return 1;
    case GateKind::Cnot:
      return 2;
    case GateKind::Toffoli:
      return 3;
  }
  return 0;
}

Gate Gate::inverted() const {
  Gate g = *this;
  if (kind == GateKind::T) {
    g.kind = GateKind::Tdg;
  } else if (kind == GateKind::Tdg) {
    g.kind = GateKind::T;
  }
  return g;
}

bool Gate::operator==(const Gate& other) const {
  if (kind != other.kind) return false;
  const int a = arity();
  for (int i = 0; i < a; ++i) {
    if (operands[static_cast<std::size_t>(i)] != other.operands[static_cast<std::size_t>(i)]) return false;
  }
  if (kind == GateKind::PauliError && error != other.error) return false;
  return true;
}

RegisterLayout RegisterLayout::canonical(std::uint32_t n) {
  if (n == 0) {
    throw std::invalid_argument("register layout requires bit width n >= 1");
  }
  RegisterLayout layout;
  layout.n = n;
  layout.a_qubits.reserve(n);
  layout.b_qubits.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) layout.a_qubits.push_back({i});
  for (std::uint32_t i = 0; i < n; ++i) layout.b_qubits.push_back({n + i});
  layout.ancilla = {2 * n};
  layout.output = {2 * n + 1};
  return layout;
}

namespace {

void check_gate(const Gate& gate, std::uint32_t qubit_count) {
  const auto ops = gate.qubits();
  for (const QubitId q : ops) {
    if (q.index >= qubit_count) {
      throw std::invalid_argument("gate operand q[" + std::to_string(q.index) +
                                  "] out of range for " + std::to_string(qubit_count) +
                                  "-qubit circuit");
    }
  }
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      if (ops[i] == ops[j]) {
        throw std::invalid_argument("repeated operand q[" + std::to_string(ops[i].index) +
                                    "] within one gate");
      }
    }
  }
}

}  // namespace

void Circuit::append(const Gate& gate) {
  check_gate(gate, qubit_count());
  gates.push_back(gate);
}

Circuit new_circuit(std::uint32_t n) {
  if (n == 0) {
    throw std::invalid_argument("bit width n must be >= 1");
  }
  Circuit c;
  c.layout = RegisterLayout::canonical(n);
  return c;
}

Circuit inverse(const Circuit& circuit) {
  Circuit inv;
  inv.layout = circuit.layout;
  inv.measure_all = circuit.measure_all;
  inv.gates.reserve(circuit.gates.size());
  for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
    if (it->kind == GateKind::PauliError) {
      throw std::invalid_argument("cannot invert a circuit containing injected Pauli errors");
    }
    inv.gates.push_back(it->inverted());
  }
  return inv;
}

void validate_circuit(const Circuit& circuit) {
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    try {
      check_gate(circuit.gates[i], circuit.qubit_count());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("gate " + std::to_string(i) + ": " + e.what());
    }
  }
}

}  // namespace qcmp
