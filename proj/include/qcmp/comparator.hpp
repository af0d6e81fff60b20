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

#ifndef QCMP_COMPARATOR_HPP
#define QCMP_COMPARATOR_HPP

#include <cstdint>

#include "qcmp/circuit.hpp"

namespace qcmp {

struct ComparatorSpec {
  std::uint32_t n = 0;
  bool uncompute = true;  // reverse the borrow chain to restore a, b and the ancilla
};

/// Ripple-borrow comparator over 2n+2 qubits.
///
/// On a computational basis input |a>|b>|0>|c> the circuit produces
/// |a>|b>|0>|c XOR [a < b]> (registers restored when uncompute is set).
/// The construction complements the a-register, runs a majority-cell borrow
/// chain seeded by the clean ancilla from the least significant bit upward,
/// copies the final borrow onto the output qubit, then reverses the chain
/// and the complement. Emits exactly 2n Toffoli, 4n+1 CNOT and 2n X gates;
/// depth grows linearly in n.
Circuit build_comparator(const ComparatorSpec& spec);

/// Full experiment circuit: Hadamard on every a- and b-register qubit
/// (uniform superposition over all 2^n x 2^n input pairs), the comparator,
/// then terminal measurement of all qubits.
Circuit build_experiment(std::uint32_t n);

/// Replaces every Toffoli with the standard 6-CNOT decomposition.
///
/// The decomposition's T/Tdg phases are carried as lowering-artifact gates:
/// the statevector backend applies them exactly and the text exporter writes
/// them as annotation comments rather than executable statements. Circuits
/// without Toffolis pass through unchanged. Throws std::invalid_argument if
/// the circuit contains injected Pauli errors.
Circuit lower_toffoli(const Circuit& circuit);

}  // namespace qcmp

#endif  // QCMP_COMPARATOR_HPP
