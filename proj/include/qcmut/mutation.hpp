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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "qcmut/circuit.hpp"
#include "qcmut/rng.hpp"

namespace qcmut {

enum class MutationOperator { Insert, Delete, Rename, Retarget };

std::string_view to_string(MutationOperator op);
MutationOperator mutation_operator_from_string(std::string_view s);

// Provenance of a single mutant. `index` is the gap position for Insert
// (0 .. size, counted between instructions) and the instruction index for
// the other operators. `before`/`after` are absent when the operator did
// not consume/produce an instruction.
struct MutationRecord {
  MutationOperator op = MutationOperator::Insert;
  long long index = 0;
  std::optional<CircuitInstruction> before;
  std::optional<CircuitInstruction> after;
  long long mutant_id = 0;
  std::uint64_t seed_used = 0;
};

struct GenerationReport {
  std::string circuit_name;
  long long num_mutants = 0;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0.0;
  std::map<MutationOperator, long long> operator_histogram;
  std::string tool_version;
};

// Mutants are streamed to the sink as they are produced so arbitrarily
// large batches never have to be held in memory.
using MutantSink =
    std::function<void(const QuantumCircuit&, const MutationRecord&)>;

// The four primitive operators. Each returns a new circuit plus its record;
// none of them ever moves, removes or edits a placeholder. Gate parameters
// are drawn uniformly from [-pi, pi).
//
// op_insert: random eligible catalog gate before gap `gap` (0 .. size).
//   Throws InvalidPosition.
// op_delete: removes the instruction at `index`. Throws IllegalTarget when
//   the index is out of range or not a mutable gate.
// op_rename: same attributes, different name from the gate's equivalence
//   class. Throws IllegalTarget or SingletonClass.
// op_retarget: same name, fresh operands and parameters, guaranteed to
//   differ from the original. Throws IllegalTarget or NoAttributeFreedom.
std::pair<QuantumCircuit, MutationRecord> op_insert(
    const QuantumCircuit& circuit, std::size_t gap, Rng& rng);
std::pair<QuantumCircuit, MutationRecord> op_delete(
    const QuantumCircuit& circuit, std::size_t index);
std::pair<QuantumCircuit, MutationRecord> op_rename(
    const QuantumCircuit& circuit, std::size_t index, Rng& rng);
std::pair<QuantumCircuit, MutationRecord> op_retarget(
    const QuantumCircuit& circuit, std::size_t index, Rng& rng);

// One random mutant: draw an operator uniformly, then a position uniformly,
// retrying (at most 100 times) when the draw is inapplicable or reproduces
// the original circuit. Circuits with no mutable gates always insert.
// Throws RetryExhausted when no draw succeeds.
std::pair<QuantumCircuit, MutationRecord> mutate_once(
    const QuantumCircuit& circuit, Rng& rng);

// `count` seeded mutants streamed to `sink` with ids 1 .. count. Throws
// InvalidCircuit when the subject fails validate() and InvalidArgument for
// count < 1.
GenerationReport generate_mutants(const QuantumCircuit& circuit,
                                  long long count, std::uint64_t seed,
                                  const MutantSink& sink);

}  // namespace qcmut
