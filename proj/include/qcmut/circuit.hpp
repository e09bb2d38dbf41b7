// Copyright 2026 The qcmut authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qcmut {

enum class InstructionKind { Gate, Placeholder };

std::string_view to_string(InstructionKind kind);

// One element of a circuit's instruction list. A Gate names an operation
// (usually from the catalog; imported circuits may carry opaque names such
// as "barrier"). A Placeholder is a named hole over a fixed qubit tuple that
// must survive every transformation until it is substituted.
struct CircuitInstruction {
  InstructionKind kind = InstructionKind::Gate;
  std::string name;
  std::vector<int> qubits;
  std::vector<int> clbits;
  std::vector<double> params;
  std::string label;

  static CircuitInstruction gate(std::string name, std::vector<int> qubits,
                                 std::vector<double> params = {});
  static CircuitInstruction placeholder(std::string name,
                                        std::vector<int> qubits);

  bool is_placeholder() const { return kind == InstructionKind::Placeholder; }
};

// Field-wise equality over kind, name, qubits, clbits and params. Labels are
// annotations and never participate in equality.
bool instructions_equal(const CircuitInstruction& a,
                        const CircuitInstruction& b);

// An ordered instruction list over a fixed register of qubits and classical
// bits. Circuits are immutable values: every editing operation returns a new
// circuit and never modifies its input.
class QuantumCircuit {
 public:
  // Empty circuit. Throws InvalidCircuit unless num_qubits >= 1 and
  // num_clbits >= 0.
  QuantumCircuit(std::string name, int num_qubits, int num_clbits);

  // Circuit with a pre-built instruction list. Register bounds are checked;
  // the instructions are stored as given, so ill-formed lists can be
  // represented and then reported by validate().
  QuantumCircuit(std::string name, int num_qubits, int num_clbits,
                 std::vector<CircuitInstruction> instructions);

  const std::string& name() const { return name_; }
  int num_qubits() const { return num_qubits_; }
  int num_clbits() const { return num_clbits_; }
  const std::vector<CircuitInstruction>& instructions() const {
    return instructions_;
  }
  std::size_t size() const { return instructions_.size(); }

 private:
  std::string name_;
  int num_qubits_;
  int num_clbits_;
  std::vector<CircuitInstruction> instructions_;
};

// Returns a copy of `circuit` with `instr` appended. The instruction is
// checked strictly: the gate must exist in the catalog with matching qubit
// and parameter arity, indices must be in range and pairwise distinct.
// Throws InvalidInstruction on any violation.
QuantumCircuit append(const QuantumCircuit& circuit,
                      const CircuitInstruction& instr);

// Returns a copy with a placeholder inserted before position `pos`
// (pos == size() appends). Throws InvalidPosition or InvalidInstruction.
QuantumCircuit insert_placeholder(const QuantumCircuit& circuit,
                                  std::size_t pos, const std::string& name,
                                  const std::vector<int>& qubits);

// Replaces the unique placeholder called `name` with the body circuit,
// remapping body qubit i onto the placeholder's i-th qubit. Throws
// PlaceholderNotFound, AmbiguousPlaceholder or InvalidSubstitution.
QuantumCircuit substitute_placeholder(const QuantumCircuit& circuit,
                                      const std::string& name,
                                      const QuantumCircuit& body);

// Indexes of instructions the mutation operators may touch: catalog gates
// only. Placeholders and non-catalog gates are immutable.
std::vector<std::size_t> mutable_gate_indexes(const QuantumCircuit& circuit);

// True when dimensions match and the instruction lists are element-wise
// equal under instructions_equal. Circuit names and labels are ignored.
bool circuits_equal(const QuantumCircuit& a, const QuantumCircuit& b);

// Structural checks, reported as data rather than thrown: index bounds,
// duplicate operands, catalog arity, placeholder shape. An empty result
// means the circuit is well-formed.
std::vector<std::string> validate(const QuantumCircuit& circuit);

}  // namespace qcmut
