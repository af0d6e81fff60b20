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

#include "qcmp/comparator.hpp"

#include <stdexcept>

namespace qcmp {

namespace {

// MAJ(carry, b, x): two CNOTs and a Toffoli that leave the majority of the
// three inputs on the x wire. Chaining these from the LSB propagates the
// carry of (complemented a) + b, whose carry-out equals [a < b].
void emit_maj(Circuit& c, QubitId carry, QubitId b, QubitId x) {
  c.append(Gate::cnot(x, b));
  c.append(Gate::cnot(x, carry));
  c.append(Gate::toffoli(carry, b, x));
}

void emit_maj_inverse(Circuit& c, QubitId carry, QubitId b, QubitId x) {
  c.append(Gate::toffoli(carry, b, x));
  c.append(Gate::cnot(x, carry));
  c.append(Gate::cnot(x, b));
}

}  // namespace

Circuit build_comparator(const ComparatorSpec& spec) {
  if (spec.n == 0) {
    throw std::invalid_argument("comparator bit width n must be >= 1");
  }
  Circuit c = new_circuit(spec.n);
  const RegisterLayout& lay = c.layout;
  const std::uint32_t n = spec.n;

  for (std::uint32_t i = 0; i < n; ++i) {
    c.append(Gate::x(lay.a_qubits[i]));
  }

  // Borrow chain: the carry of cell i rides out on the a_i wire.
  QubitId carry = lay.ancilla;
  for (std::uint32_t i = 0; i < n; ++i) {
    emit_maj(c, carry, lay.b_qubits[i], lay.a_qubits[i]);
    carry = lay.a_qubits[i];
  }

  c.append(Gate::cnot(carry, lay.output));

  if (spec.uncompute) {
    for (std::uint32_t i = n; i-- > 0;) {
      carry = i > 0 ? lay.a_qubits[i - 1] : lay.ancilla;
      emit_maj_inverse(c, carry, lay.b_qubits[i], lay.a_qubits[i]);
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      c.append(Gate::x(lay.a_qubits[i]));
    }
  }
  return c;
}

Circuit build_experiment(std::uint32_t n) {
  Circuit c = new_circuit(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    c.append(Gate::h(c.layout.a_qubits[i]));
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    c.append(Gate::h(c.layout.b_qubits[i]));
  }
  const Circuit comparator = build_comparator({.n = n, .uncompute = true});
  for (const Gate& g : comparator.gates) {
    c.append(g);
  }
  c.measure_all = true;
  return c;
}

Circuit lower_toffoli(const Circuit& circuit) {
  Circuit out;
  out.layout = circuit.layout;
  out.measure_all = circuit.measure_all;
  for (const Gate& g : circuit.gates) {
    if (g.kind == GateKind::PauliError) {
      throw std::invalid_argument("cannot lower a circuit containing injected Pauli errors");
    }
    if (g.kind != GateKind::Toffoli) {
      out.append(g);
      continue;
    }
    const QubitId a = g.operands[0];
    const QubitId b = g.operands[1];
    const QubitId t = g.operands[2];
    out.append(Gate::h(t));
    out.append(Gate::cnot(b, t));
    out.append(Gate::tdg(t));
    out.append(Gate::cnot(a, t));
    out.append(Gate::t(t));
    out.append(Gate::cnot(b, t));
    out.append(Gate::tdg(t));
    out.append(Gate::cnot(a, t));
    out.append(Gate::t(b));
    out.append(Gate::t(t));
    out.append(Gate::h(t));
    out.append(Gate::cnot(a, b));
    out.append(Gate::t(a));
    out.append(Gate::tdg(b));
    out.append(Gate::cnot(a, b));
  }
  return out;
}

}  // namespace qcmp
