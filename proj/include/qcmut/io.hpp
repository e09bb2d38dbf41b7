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
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qcmut/circuit.hpp"
#include "qcmut/mutation.hpp"
#include "qcmut/oracle.hpp"
#include "qcmut/statevector.hpp"

namespace qcmut {

// --- gzip helpers (fixed level, zeroed header fields, so identical input
// --- bytes always produce identical output bytes) ---

std::vector<std::uint8_t> gzip_compress(std::string_view data);
std::string gzip_decompress(const std::vector<std::uint8_t>& data);

// --- canonical JSON forms ---

nlohmann::ordered_json instruction_to_json(const CircuitInstruction& instr);
CircuitInstruction instruction_from_json(const nlohmann::json& j);

nlohmann::ordered_json circuit_to_json(const QuantumCircuit& circuit);
QuantumCircuit circuit_from_json(const nlohmann::json& j);

nlohmann::ordered_json record_to_json(const MutationRecord& record);
MutationRecord record_from_json(const nlohmann::json& j);

// --- .qcz container: gzip over one canonical JSON document holding the
// --- circuit and, for mutants, its mutation record ---

inline constexpr int kQczFormatVersion = 1;

// Returns the number of bytes written. `record` may be null (original
// circuits carry no provenance).
std::size_t save_mutant(const QuantumCircuit& circuit,
                        const MutationRecord* record,
                        const std::filesystem::path& path);

// Throws LoadError; the message names the failing stage (read, decompress,
// parse, schema).
std::pair<QuantumCircuit, std::optional<MutationRecord>> load_mutant(
    const std::filesystem::path& path);

std::string mutant_filename(long long mutant_id);

// --- OpenQASM 2.0 subset ---

// Emits the catalog-gate subset plus barriers. Placeholders become pragma
// comments ("// QCRMUT-PLACEHOLDER name=<name> qubits=<i,j,...>") at their
// exact position so a round trip preserves them. Parameters print as %.17g.
// Throws UnsupportedQasm for circuits outside the subset.
std::string export_qasm(const QuantumCircuit& circuit);

// Parses the same subset (one qreg, optional creg, catalog gates, barrier,
// placeholder pragmas). Parameter expressions are numeric literals or
// [+-] [k*] pi [/m]. Throws UnsupportedQasm naming the offending line.
QuantumCircuit import_qasm(std::string_view text,
                           std::string_view name = "imported");

// Dispatches on extension: .qasm or .qcz. The circuit name of a .qasm file
// is its stem. Throws LoadError / UnsupportedQasm.
QuantumCircuit load_circuit(const std::filesystem::path& path);

// --- batch generation report ---

nlohmann::ordered_json generation_report_to_json(
    const GenerationReport& report);
std::filesystem::path write_generation_report(
    const GenerationReport& report, const std::filesystem::path& dir);

// --- oracle file ---
//
// {"<input bits>": {"valid_outputs": [...],
//                   "expected_distribution": {"<bits>": p, ...}}, ...}
// expected_distribution is optional per input. Structural violations raise
// LoadError.

OracleSpec oracle_from_json(const nlohmann::json& j);
OracleSpec load_oracle(const std::filesystem::path& path);

// --- simulation results file ---

struct RunResults {
  std::string circuit_name;
  std::string mutants_dir;
  int num_qubits = 0;
  long long shots = 0;
  std::uint64_t seed = 0;
  std::string simulator_version;
  // mutant id -> input bitstring -> counts
  std::map<long long, std::map<std::string, CountsDistribution>> per_mutant;
};

nlohmann::ordered_json run_results_to_json(const RunResults& results);
RunResults run_results_from_json(const nlohmann::json& j);
RunResults load_run_results(const std::filesystem::path& path);

// Reads a whole file / writes text with a trailing newline.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view data);

}  // namespace qcmut
