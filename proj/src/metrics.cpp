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

#include "qcmp/metrics.hpp"

#include <algorithm>
#include <vector>

namespace qcmp {

Metrics metrics(const Circuit& circuit) {
  Metrics m;
  m.qubits = circuit.qubit_count();
  m.total_gates = circuit.gates.size();

  std::vector<std::size_t> busy_until(m.qubits, 0);
  for (const Gate& gate : circuit.gates) {
    switch (gate.kind) {
      case GateKind::X: ++m.x; break;
      case GateKind::H: ++m.h; break;
      case GateKind::Cnot: ++m.cnot; break;
      case GateKind::Toffoli: ++m.toffoli; break;
      case GateKind::T: ++m.t; break;
      case GateKind::Tdg: ++m.tdg; break;
      case GateKind::PauliError: ++m.pauli_error; break;
    }
    std::size_t layer = 0;
    for (const QubitId q : gate.qubits()) {
      layer = std::max(layer, busy_until[q.index]);
    }
    ++layer;
    for (const QubitId q : gate.qubits()) {
      busy_until[q.index] = layer;
    }
    m.depth = std::max(m.depth, layer);
  }
  return m;
}

}  // namespace qcmp
