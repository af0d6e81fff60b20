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

#ifndef QCMP_METRICS_HPP
#define QCMP_METRICS_HPP

#include <cstddef>
#include <cstdint>

#include "qcmp/circuit.hpp"

namespace qcmp {

struct Metrics {
  std::uint32_t qubits = 0;
  std::size_t total_gates = 0;
  std::size_t depth = 0;  // ASAP layering, one time step per gate
  std::size_t x = 0;
  std::size_t h = 0;
  std::size_t cnot = 0;
  std::size_t toffoli = 0;
  std::size_t t = 0;
  std::size_t tdg = 0;
  std::size_t pauli_error = 0;
};

/// Exact gate counts by kind plus circuit depth.
///
/// Depth is computed by greedy as-soon-as-possible layering: each gate is
/// scheduled one step after the latest prior gate sharing any of its qubits,
/// and every gate occupies one time step regardless of arity.
Metrics metrics(const Circuit& circuit);

}  // namespace qcmp

#endif  // QCMP_METRICS_HPP
