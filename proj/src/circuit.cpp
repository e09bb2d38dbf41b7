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

#include "qcmut/circuit.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <sstream>
#include <utility>

#include "qcmut/errors.hpp"
#include "qcmut/gate_catalog.hpp"

namespace qcmut {

namespace {

bool has_duplicates(const std::vector<int>& v) {
  return std::set<int>(v.begin(), v.end()).size() != v.size();
}

// Shared range/distinctness checks for operand lists; returns a violation
// message or an empty string.
std::string operand_violation(const CircuitInstruction& instr, int num_qubits,
                              int num_clbits) {
  for (int q : instr.qubits) {
    if (q < 0 || q >= num_qubits) {
      std::ostringstream os;
      os << "qubit index " << q << " out of range [0," << num_qubits << ")";
      return os.str();
    }
  }
  if (has_duplicates(instr.qubits)) return "duplicate qubit operand";
  for (int c : instr.clbits) {
    if (c < 0 || c >= num_clbits) {
      std::ostringstream os;
      os << "clbit index " << c << " out of range [0," << num_clbits << ")";
      return os.str();
    }
  }
  if (has_duplicates(instr.clbits)) return "duplicate clbit operand";
  return {};
}

}  // namespace

std::string_view to_string(InstructionKind kind) {
  return kind == InstructionKind::Gate ? "gate" : "placeholder";
}

CircuitInstruction CircuitInstruction::gate(std::string name,
                                            std::vector<int> qubits,
                                            std::vector<double> params) {
  CircuitInstruction instr;
  instr.kind = InstructionKind::Gate;
  instr.name = std::move(name);
  instr.qubits = std::move(qubits);
  instr.params = std::move(params);
  return instr;
}

CircuitInstruction CircuitInstruction::placeholder(std::string name,
                                                   std::vector<int> qubits) {
  CircuitInstruction instr;
  instr.kind = InstructionKind::Placeholder;
  instr.name = std::move(name);
  instr.qubits = std::move(qubits);
  // the name doubles as the display label so exports keep the hole visible
  instr.label = instr.name;
  return instr;
}

bool instructions_equal(const CircuitInstruction& a,
                        const CircuitInstruction& b) {
  return a.kind == b.kind && a.name == b.name && a.qubits == b.qubits &&
         a.clbits == b.clbits && a.params == b.params;
}

QuantumCircuit::QuantumCircuit(std::string name, int num_qubits,
                               int num_clbits)
    : QuantumCircuit(std::move(name), num_qubits, num_clbits, {}) {}

QuantumCircuit::QuantumCircuit(std::string name, int num_qubits,
                               int num_clbits,
                               std::vector<CircuitInstruction> instructions)
    : name_(std::move(name)),
      num_qubits_(num_qubits),
      num_clbits_(num_clbits),
      instructions_(std::move(instructions)) {
  if (num_qubits_ < 1) {
    throw InvalidCircuit("circuit must have at least one qubit, got " +
                         std::to_string(num_qubits_));
  }
  if (num_clbits_ < 0) {
    throw InvalidCircuit("negative classical register size " +
                         std::to_string(num_clbits_));
  }
}

QuantumCircuit append(const QuantumCircuit& circuit,
                      const CircuitInstruction& instr) {
  if (instr.kind == InstructionKind::Gate) {
    const auto& catalog = GateCatalog::instance();
    if (!catalog.contains(instr.name)) {
      throw InvalidInstruction("unknown gate name '" + instr.name + "'");
    }
    const EquivClassKey cls = catalog.equivalence_class_of(instr.name);
    if (static_cast<std::size_t>(cls.num_qubits) != instr.qubits.size()) {
      throw InvalidInstruction(
          instr.name + " expects " + std::to_string(cls.num_qubits) +
          " qubit operand(s), got " + std::to_string(instr.qubits.size()));
    }
    if (static_cast<std::size_t>(cls.num_params) != instr.params.size()) {
      throw InvalidInstruction(
          instr.name + " expects " + std::to_string(cls.num_params) +
          " parameter(s), got " + std::to_string(instr.params.size()));
    }
  } else {
    if (instr.qubits.empty()) {
      throw InvalidInstruction("placeholder '" + instr.name +
                               "' has no qubit operands");
    }
    if (!instr.params.empty()) {
      throw InvalidInstruction("placeholder '" + instr.name +
                               "' must not carry parameters");
    }
  }
  const std::string operand_msg =
      operand_violation(instr, circuit.num_qubits(), circuit.num_clbits());
  if (!operand_msg.empty()) {
    throw InvalidInstruction(instr.name + ": " + operand_msg);
  }

  std::vector<CircuitInstruction> instrs = circuit.instructions();
  instrs.push_back(instr);
  return QuantumCircuit(circuit.name(), circuit.num_qubits(),
                        circuit.num_clbits(), std::move(instrs));
}

QuantumCircuit insert_placeholder(const QuantumCircuit& circuit,
                                  std::size_t pos, const std::string& name,
                                  const std::vector<int>& qubits) {
  if (pos > circuit.size()) {
    throw InvalidPosition("placeholder position " + std::to_string(pos) +
                          " out of range [0," +
                          std::to_string(circuit.size()) + "]");
  }
  CircuitInstruction instr = CircuitInstruction::placeholder(name, qubits);
  if (instr.qubits.empty()) {
    throw InvalidInstruction("placeholder '" + name +
                             "' has no qubit operands");
  }
  const std::string operand_msg =
      operand_violation(instr, circuit.num_qubits(), circuit.num_clbits());
  if (!operand_msg.empty()) {
    throw InvalidInstruction(name + ": " + operand_msg);
  }

  std::vector<CircuitInstruction> instrs = circuit.instructions();
  instrs.insert(instrs.begin() + static_cast<std::ptrdiff_t>(pos),
                std::move(instr));
  return QuantumCircuit(circuit.name(), circuit.num_qubits(),
                        circuit.num_clbits(), std::move(instrs));
}

QuantumCircuit substitute_placeholder(const QuantumCircuit& circuit,
                                      const std::string& name,
                                      const QuantumCircuit& body) {
  std::size_t found = circuit.size();
  std::size_t count = 0;
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    const auto& instr = circuit.instructions()[i];
    if (instr.is_placeholder() && instr.name == name) {
      found = i;
      ++count;
    }
  }
  if (count == 0) {
    throw PlaceholderNotFound("no placeholder named '" + name + "'");
  }
  if (count > 1) {
    throw AmbiguousPlaceholder(std::to_string(count) +
                               " placeholders named '" + name + "'");
  }

  const CircuitInstruction& hole = circuit.instructions()[found];
  if (static_cast<std::size_t>(body.num_qubits()) != hole.qubits.size()) {
    throw InvalidSubstitution(
        "body acts on " + std::to_string(body.num_qubits()) +
        " qubit(s) but placeholder '" + name + "' spans " +
        std::to_string(hole.qubits.size()));
  }
  if (body.num_clbits() > circuit.num_clbits()) {
    throw InvalidSubstitution("body uses " + std::to_string(body.num_clbits()) +
                              " clbit(s) but the host circuit has " +
                              std::to_string(circuit.num_clbits()));
  }

  std::vector<CircuitInstruction> instrs;
  instrs.reserve(circuit.size() - 1 + body.size());
  instrs.insert(instrs.end(), circuit.instructions().begin(),
                circuit.instructions().begin() +
                    static_cast<std::ptrdiff_t>(found));
  for (CircuitInstruction instr : body.instructions()) {
    for (int& q : instr.qubits) {
      q = hole.qubits[static_cast<std::size_t>(q)];
    }
    instrs.push_back(std::move(instr));
  }
  instrs.insert(instrs.end(),
                circuit.instructions().begin() +
                    static_cast<std::ptrdiff_t>(found + 1),
                circuit.instructions().end());
  return QuantumCircuit(circuit.name(), circuit.num_qubits(),
                        circuit.num_clbits(), std::move(instrs));
}

std::vector<std::size_t> mutable_gate_indexes(const QuantumCircuit& circuit) {
  const auto& catalog = GateCatalog::instance();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    const auto& instr = circuit.instructions()[i];
    if (instr.kind == InstructionKind::Gate && catalog.contains(instr.name)) {
      out.push_back(i);
    }
  }
  return out;
}

bool circuits_equal(const QuantumCircuit& a, const QuantumCircuit& b) {
  if (a.num_qubits() != b.num_qubits() || a.num_clbits() != b.num_clbits() ||
      a.size() != b.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!instructions_equal(a.instructions()[i], b.instructions()[i])) {
      return false;
    }
  }
  return true;
}

std::vector<std::string> validate(const QuantumCircuit& circuit) {
  const auto& catalog = GateCatalog::instance();
  std::vector<std::string> violations;
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    const auto& instr = circuit.instructions()[i];
    std::ostringstream head;
    head << "instruction " << i << " (" << instr.name << "): ";

    const std::string operand_msg =
        operand_violation(instr, circuit.num_qubits(), circuit.num_clbits());
    if (!operand_msg.empty()) {
      violations.push_back(head.str() + operand_msg);
    }

    if (instr.kind == InstructionKind::Gate && catalog.contains(instr.name)) {
      const EquivClassKey cls = catalog.equivalence_class_of(instr.name);
      if (cls.num_qubits > circuit.num_qubits()) {
        std::ostringstream os;
        os << head.str() << "arity " << cls.num_qubits
           << " exceeds circuit width " << circuit.num_qubits();
        violations.push_back(os.str());
      } else if (static_cast<std::size_t>(cls.num_qubits) !=
                 instr.qubits.size()) {
        std::ostringstream os;
        os << head.str() << "expected " << cls.num_qubits
           << " qubit operand(s), got " << instr.qubits.size();
        violations.push_back(os.str());
      }
      if (static_cast<std::size_t>(cls.num_params) != instr.params.size()) {
        std::ostringstream os;
        os << head.str() << "expected " << cls.num_params
           << " parameter(s), got " << instr.params.size();
        violations.push_back(os.str());
      }
    } else if (instr.kind == InstructionKind::Placeholder) {
      if (instr.qubits.empty()) {
        violations.push_back(head.str() + "placeholder has no qubit operands");
      }
      if (!instr.params.empty()) {
        violations.push_back(head.str() +
                             "placeholder must not carry parameters");
      }
    }
  }
  return violations;
}

}  // namespace qcmut
