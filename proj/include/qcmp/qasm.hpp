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

#ifndef QCMP_QASM_HPP
#define QCMP_QASM_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qcmp/circuit.hpp"

namespace qcmp {

/// Parse failure in the text dialect; line numbers are 1-based.
class QasmParseError : public std::runtime_error {
 public:
  QasmParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Deterministic text serialization of a circuit.
///
/// Dialect: UTF-8, LF line endings, one statement per line, `#` comments.
///   qubits <N>                      header (N = 2n+2)
///   x q[i] / h q[i]                 one-qubit gates
///   cx q[i], q[j]                   controlled-NOT (control first)
///   ccx q[i], q[j], q[k]            Toffoli (controls first)
///   measure                         terminal measurement of all qubits
/// Injected Pauli errors and lowering phases are serialized as annotation
/// comments (`# inject x q[i]`, `# phase t q[i]`), never as executable
/// statements. Identical circuits yield byte-identical output.
std::string export_qasm(const Circuit& circuit);

/// Inverse of export_qasm on its image. Unknown mnemonics, out-of-range
/// indices and malformed lines raise QasmParseError with the line number.
Circuit parse_qasm(std::string_view text);

}  // namespace qcmp

#endif  // QCMP_QASM_HPP
