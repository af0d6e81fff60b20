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

#ifndef QCMP_CIRCUIT_HPP
#define QCMP_CIRCUIT_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace qcmp {

enum class Pauli : std::uint8_t { X, Y, Z };

std::string_view pauli_name(Pauli p);

/// Gate vocabulary of the gate-level IR.
///
/// X, H, Cnot and Toffoli are the core set every synthesis routine emits.
/// PauliError is an injected error marker so that noisy circuit instances
/// are serializable and replayable. T/Tdg appear only as artifacts of the
/// Toffoli lowering pass; they are applied exactly by the statevector
/// backend and serialized as annotation comments in the text format.
enum class GateKind : std::uint8_t { X, H, Cnot, Toffoli, T, Tdg, PauliError };

std::string_view gate_kind_name(GateKind k);

/// Position within a circuit's flat qubit array.
struct QubitId {
  std::uint32_t index = 0;
  friend constexpr auto operator<=>(QubitId, QubitId) = default;
};

struct Gate {
  GateKind kind = GateKind::X;
  std::array<QubitId, 3> operands{};  // only the first arity() entries are live
  Pauli error = Pauli::X;             // meaningful for PauliError only

  static Gate x(QubitId target) { return {GateKind::X, {target}}; }
  static Gate h(QubitId target) { return {GateKind::H, {target}}; }
  static Gate cnot(QubitId control, QubitId target) {
    return {GateKind::Cnot, {control, target}};
  }
  static Gate toffoli(QubitId control_a, QubitId control_b, QubitId target) {
    return {GateKind::Toffoli, {control_a, control_b, target}};
  }
  static Gate t(QubitId target) { return {GateKind::T, {target}}; }
  static Gate tdg(QubitId target) { return {GateKind::Tdg, {target}}; }
  static Gate pauli_error(QubitId target, Pauli p) {
    return {GateKind::PauliError, {target}, p};
  }

  int arity() const;
  std::span<const QubitId> qubits() const { return {operands.data(), static_cast<std::size_t>(arity())}; }

  /// Self-inverse for everything except T/Tdg, which swap.
  Gate inverted() const;

  bool operator==(const Gate& other) const;
};

/// Named roles inside the flat 2n+2 qubit array.
///
/// Canonical order: a-register LSB first, then b-register LSB first, then
/// the clean ancilla, then the output qubit.
struct RegisterLayout {
  std::uint32_t n = 0;
  std::vector<QubitId> a_qubits;  // LSB first
  std::vector<QubitId> b_qubits;  // LSB first
  QubitId ancilla;
  QubitId output;

  static RegisterLayout canonical(std::uint32_t n);

  std::uint32_t qubit_count() const { return 2 * n + 2; }

  bool operator==(const RegisterLayout&) const = default;
};

/// Ordered gate list over a typed register layout.
///
/// Circuits are immutable once built: construction is single-threaded and
/// any number of readers may inspect or simulate them concurrently.
struct Circuit {
  RegisterLayout layout;
  std::vector<Gate> gates;
  bool measure_all = false;

  std::uint32_t qubit_count() const { return layout.qubit_count(); }

  /// Appends a gate after validating operand range and distinctness.
  /// Throws std::invalid_argument on an out-of-range or repeated operand.
  void append(const Gate& gate);

  bool operator==(const Circuit&) const = default;
};

/// Fresh circuit over 2n+2 qubits with an empty gate list.
/// Throws std::invalid_argument for n = 0.
Circuit new_circuit(std::uint32_t n);

/// Reversed gate list with each gate inverted.
/// Throws std::invalid_argument if the circuit contains PauliError gates.
Circuit inverse(const Circuit& circuit);

/// Validator pass: re-checks every gate against the layout.
/// Throws std::invalid_argument naming the first offending gate index.
void validate_circuit(const Circuit& circuit);

}  // namespace qcmp

#endif  // QCMP_CIRCUIT_HPP
