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

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcmut/circuit.hpp"
#include "qcmut/gate_catalog.hpp"

namespace qcmut {

// Kernel selection. Auto picks the parallel path once the state is large
// enough that the fork/join overhead pays off; Serial and Parallel force a
// path (the serial path is also the comparison baseline in tests).
enum class ExecPolicy { Auto, Serial, Parallel };

inline constexpr int kMaxSimQubits = 16;
inline constexpr int kParallelThresholdQubits = 12;

// Measurement outcomes for one (circuit, input) pair. Keys are bitstrings
// with qubit 0 as the rightmost character; only observed outcomes appear.
struct CountsDistribution {
  long long shots = 0;
  std::map<std::string, long long> counts;
};

std::string bitstring_of(std::uint64_t index, int num_qubits);
// Throws InvalidArgument on characters outside {0,1}.
std::uint64_t index_of_bitstring(std::string_view bits);

// Dense statevector over up to kMaxSimQubits qubits, little-endian: basis
// index bit q is qubit q. Starts in |0...0>.
class Statevector {
 public:
  explicit Statevector(int num_qubits);  // throws TooManyQubits, InvalidCircuit

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const std::complex<double>> amplitudes() const { return amps_; }
  double norm_sq() const;

  void set_basis_state(std::uint64_t index);

  // Applies a 1-, 2- or 3-qubit unitary to the listed qubits, where matrix
  // basis bit j corresponds to qubits[j]. Throws InvalidArgument on operand
  // mismatch.
  void apply_unitary(const UMatrix& u, std::span<const int> qubits,
                     ExecPolicy policy = ExecPolicy::Auto);

  // Catalog gates apply their unitary; "barrier" is a no-op; placeholders
  // throw PlaceholderPresent and other names UnknownGate.
  void apply_instruction(const CircuitInstruction& instr,
                         ExecPolicy policy = ExecPolicy::Auto);

 private:
  int num_qubits_;
  std::vector<std::complex<double>> amps_;
};

// Full run: prepare |input> by applying x to every qubit whose bit is 1,
// then apply all instructions in order. Throws PlaceholderPresent if any
// placeholder remains, InvalidArgument on a malformed input string.
Statevector run_statevector(const QuantumCircuit& circuit,
                            std::string_view input,
                            ExecPolicy policy = ExecPolicy::Auto);

// Draws `shots` outcomes from |amplitude|^2 by inverse-CDF sampling with a
// dedicated generator seeded by `seed`. Identical (state, shots, seed)
// triples give identical counts on every platform.
CountsDistribution sample_counts(const Statevector& state, long long shots,
                                 std::uint64_t seed);

// Runs every computational-basis input 00..0 through 11..1 and samples each
// result. The per-input seed is derive_seed(base_seed, stream, input_index),
// so results never depend on scheduling or iteration order.
std::map<std::string, CountsDistribution> run_all_inputs(
    const QuantumCircuit& circuit, long long shots, std::uint64_t base_seed,
    std::uint64_t stream = 0, ExecPolicy policy = ExecPolicy::Auto);

// Same, restricted to the listed inputs. Each input keeps the seed of its
// basis index, so a subset run reproduces the matching slice of a full run.
// Throws InvalidArgument on malformed or duplicate inputs.
std::map<std::string, CountsDistribution> run_inputs(
    const QuantumCircuit& circuit, std::span<const std::string> inputs,
    long long shots, std::uint64_t base_seed, std::uint64_t stream = 0,
    ExecPolicy policy = ExecPolicy::Auto);

}  // namespace qcmut
