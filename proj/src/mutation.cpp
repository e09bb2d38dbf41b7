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

#include "qcmut/mutation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qcmut/errors.hpp"
#include "qcmut/gate_catalog.hpp"
#include "qcmut/version.hpp"

namespace qcmut {

namespace {

constexpr int kMaxDrawAttempts = 100;

std::vector<double> draw_params(Rng& rng, int count) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out.push_back(rng.uniform_real(-std::numbers::pi, std::numbers::pi));
  }
  return out;
}

// The instruction at `index` must exist and be a catalog gate; placeholders
// and opaque gates are immutable.
const CircuitInstruction& checked_target(const QuantumCircuit& circuit,
                                         std::size_t index) {
  if (index >= circuit.size()) {
    throw IllegalTarget("instruction index " + std::to_string(index) +
                        " out of range [0," + std::to_string(circuit.size()) +
                        ")");
  }
  const CircuitInstruction& instr = circuit.instructions()[index];
  if (instr.is_placeholder()) {
    throw IllegalTarget("instruction " + std::to_string(index) +
                        " is a placeholder and cannot be mutated");
  }
  if (!GateCatalog::instance().contains(instr.name)) {
    throw IllegalTarget("instruction " + std::to_string(index) + " ('" +
                        instr.name + "') is not a catalog gate");
  }
  return instr;
}

QuantumCircuit with_instruction_replaced(const QuantumCircuit& circuit,
                                         std::size_t index,
                                         CircuitInstruction instr) {
  std::vector<CircuitInstruction> instrs = circuit.instructions();
  instrs[index] = std::move(instr);
  return QuantumCircuit(circuit.name(), circuit.num_qubits(),
                        circuit.num_clbits(), std::move(instrs));
}

}  // namespace

std::string_view to_string(MutationOperator op) {
  switch (op) {
    case MutationOperator::Insert:
      return "insert";
    case MutationOperator::Delete:
      return "delete";
    case MutationOperator::Rename:
      return "rename";
    case MutationOperator::Retarget:
      return "retarget";
  }
  return "?";
}

MutationOperator mutation_operator_from_string(std::string_view s) {
  if (s == "insert") return MutationOperator::Insert;
  if (s == "delete") return MutationOperator::Delete;
  if (s == "rename") return MutationOperator::Rename;
  if (s == "retarget") return MutationOperator::Retarget;
  throw InvalidArgument("unknown mutation operator '" + std::string(s) + "'");
}

std::pair<QuantumCircuit, MutationRecord> op_insert(
    const QuantumCircuit& circuit, std::size_t gap, Rng& rng) {
  if (gap > circuit.size()) {
    throw InvalidPosition("gap index " + std::to_string(gap) +
                          " out of range [0," + std::to_string(circuit.size()) +
                          "]");
  }
  const auto& catalog = GateCatalog::instance();
  const auto eligible = catalog.eligible_for_insertion(circuit.num_qubits());
  const auto name =
      eligible[static_cast<std::size_t>(rng.uniform_index(eligible.size()))];
  const EquivClassKey cls = catalog.equivalence_class_of(name);

  CircuitInstruction instr = CircuitInstruction::gate(
      std::string(name),
      rng.sample_distinct_ordered(circuit.num_qubits(), cls.num_qubits),
      draw_params(rng, cls.num_params));

  std::vector<CircuitInstruction> instrs = circuit.instructions();
  instrs.insert(instrs.begin() + static_cast<std::ptrdiff_t>(gap), instr);
  QuantumCircuit mutant(circuit.name(), circuit.num_qubits(),
                        circuit.num_clbits(), std::move(instrs));

  MutationRecord rec;
  rec.op = MutationOperator::Insert;
  rec.index = static_cast<long long>(gap);
  rec.after = std::move(instr);
  return {std::move(mutant), std::move(rec)};
}

std::pair<QuantumCircuit, MutationRecord> op_delete(
    const QuantumCircuit& circuit, std::size_t index) {
  const CircuitInstruction target = checked_target(circuit, index);

  std::vector<CircuitInstruction> instrs = circuit.instructions();
  instrs.erase(instrs.begin() + static_cast<std::ptrdiff_t>(index));
  QuantumCircuit mutant(circuit.name(), circuit.num_qubits(),
                        circuit.num_clbits(), std::move(instrs));

  MutationRecord rec;
  rec.op = MutationOperator::Delete;
  rec.index = static_cast<long long>(index);
  rec.before = std::move(target);
  return {std::move(mutant), std::move(rec)};
}

std::pair<QuantumCircuit, MutationRecord> op_rename(
    const QuantumCircuit& circuit, std::size_t index, Rng& rng) {
  const CircuitInstruction target = checked_target(circuit, index);
  const auto& catalog = GateCatalog::instance();
  const auto members =
      catalog.class_members(catalog.equivalence_class_of(target.name));

  std::vector<std::string_view> others;
  for (const auto member : members) {
    if (member != target.name) others.push_back(member);
  }
  if (others.empty()) {
    throw SingletonClass("gate '" + target.name +
                         "' is alone in its equivalence class");
  }

  CircuitInstruction renamed = target;
  renamed.name = others[static_cast<std::size_t>(
      rng.uniform_index(others.size()))];

  MutationRecord rec;
  rec.op = MutationOperator::Rename;
  rec.index = static_cast<long long>(index);
  rec.before = std::move(target);
  rec.after = renamed;
  return {with_instruction_replaced(circuit, index, std::move(renamed)),
          std::move(rec)};
}

std::pair<QuantumCircuit, MutationRecord> op_retarget(
    const QuantumCircuit& circuit, std::size_t index, Rng& rng) {
  const CircuitInstruction target = checked_target(circuit, index);
  const EquivClassKey cls =
      GateCatalog::instance().equivalence_class_of(target.name);

  // A parameterless 1-qubit gate on a 1-qubit circuit has exactly one
  // possible operand tuple: nothing can change.
  if (cls.num_params == 0 && circuit.num_qubits() == 1 &&
      cls.num_qubits == 1) {
    throw NoAttributeFreedom("'" + target.name +
                             "' has no alternative operands or parameters");
  }

  for (int attempt = 0; attempt < kMaxDrawAttempts; ++attempt) {
    CircuitInstruction fresh = target;
    fresh.qubits =
        rng.sample_distinct_ordered(circuit.num_qubits(), cls.num_qubits);
    fresh.params = draw_params(rng, cls.num_params);
    if (fresh.qubits == target.qubits && fresh.params == target.params) {
      continue;
    }

    MutationRecord rec;
    rec.op = MutationOperator::Retarget;
    rec.index = static_cast<long long>(index);
    rec.before = std::move(target);
    rec.after = fresh;
    return {with_instruction_replaced(circuit, index, std::move(fresh)),
            std::move(rec)};
  }
  throw NoAttributeFreedom("no distinct operand/parameter draw for '" +
                           target.name + "' after " +
                           std::to_string(kMaxDrawAttempts) + " attempts");
}

std::pair<QuantumCircuit, MutationRecord> mutate_once(
    const QuantumCircuit& circuit, Rng& rng) {
  const std::vector<std::size_t> targets = mutable_gate_indexes(circuit);

  for (int attempt = 0; attempt < kMaxDrawAttempts; ++attempt) {
    const MutationOperator op =
        targets.empty() ? MutationOperator::Insert
                        : static_cast<MutationOperator>(rng.uniform_index(4));
    try {
      std::pair<QuantumCircuit, MutationRecord> result = [&] {
        switch (op) {
          case MutationOperator::Insert:
            return op_insert(
                circuit,
                static_cast<std::size_t>(rng.uniform_index(circuit.size() + 1)),
                rng);
          case MutationOperator::Delete:
            return op_delete(circuit, targets[static_cast<std::size_t>(
                                          rng.uniform_index(targets.size()))]);
          case MutationOperator::Rename:
            return op_rename(circuit,
                             targets[static_cast<std::size_t>(
                                 rng.uniform_index(targets.size()))],
                             rng);
          case MutationOperator::Retarget:
          default:
            return op_retarget(circuit,
                               targets[static_cast<std::size_t>(
                                   rng.uniform_index(targets.size()))],
                               rng);
        }
      }();
      // A mutant indistinguishable from the original is not a mutant.
      if (circuits_equal(result.first, circuit)) continue;
      return result;
    } catch (const SingletonClass&) {
    } catch (const NoAttributeFreedom&) {
    }
  }
  throw RetryExhausted("no applicable mutation after " +
                       std::to_string(kMaxDrawAttempts) + " draws");
}

GenerationReport generate_mutants(const QuantumCircuit& circuit,
                                  long long count, std::uint64_t seed,
                                  const MutantSink& sink) {
  const std::vector<std::string> violations = validate(circuit);
  if (!violations.empty()) {
    throw InvalidCircuit("subject circuit is ill-formed: " + violations[0]);
  }
  if (count < 1) {
    throw InvalidArgument("mutant count must be >= 1, got " +
                          std::to_string(count));
  }

  const auto start = std::chrono::steady_clock::now();
  Rng rng(seed);
  GenerationReport report;
  report.circuit_name = circuit.name();
  report.num_mutants = count;
  report.seed = seed;
  report.tool_version =
      std::string(kToolName) + " " + std::string(kVersion);
  report.operator_histogram = {{MutationOperator::Insert, 0},
                               {MutationOperator::Delete, 0},
                               {MutationOperator::Rename, 0},
                               {MutationOperator::Retarget, 0}};

  for (long long id = 1; id <= count; ++id) {
    auto [mutant, rec] = mutate_once(circuit, rng);
    rec.mutant_id = id;
    rec.seed_used = seed;
    ++report.operator_histogram[rec.op];
    sink(mutant, rec);
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace qcmut
