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

#include "qcmut/statevector.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>

#include "qcmut/errors.hpp"
#include "qcmut/rng.hpp"

namespace qcmut {

namespace {

void check_operands(int num_qubits, int k, std::span<const int> qubits) {
  if (static_cast<int>(qubits.size()) != k) {
    throw InvalidArgument("unitary spans " + std::to_string(k) +
                          " qubit(s) but " + std::to_string(qubits.size()) +
                          " operand(s) given");
  }
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] < 0 || qubits[i] >= num_qubits) {
      throw InvalidArgument("qubit operand " + std::to_string(qubits[i]) +
                            " out of range");
    }
    for (std::size_t j = i + 1; j < qubits.size(); ++j) {
      if (qubits[i] == qubits[j]) {
        throw InvalidArgument("duplicate qubit operand " +
                              std::to_string(qubits[i]));
      }
    }
  }
}

}  // namespace

std::string bitstring_of(std::uint64_t index, int num_qubits) {
  std::string bits(static_cast<std::size_t>(num_qubits), '0');
  for (int q = 0; q < num_qubits; ++q) {
    if (index >> q & 1) {
      bits[static_cast<std::size_t>(num_qubits - 1 - q)] = '1';
    }
  }
  return bits;
}

std::uint64_t index_of_bitstring(std::string_view bits) {
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const char c = bits[i];
    if (c != '0' && c != '1') {
      throw InvalidArgument("bitstring character '" + std::string(1, c) +
                            "' is not 0 or 1");
    }
    if (c == '1') index |= std::uint64_t{1} << (bits.size() - 1 - i);
  }
  return index;
}

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1) {
    throw InvalidCircuit("statevector needs at least one qubit");
  }
  if (num_qubits > kMaxSimQubits) {
    throw TooManyQubits("dense simulation capped at " +
                        std::to_string(kMaxSimQubits) + " qubits, got " +
                        std::to_string(num_qubits));
  }
  amps_.assign(std::size_t{1} << num_qubits, {0.0, 0.0});
  amps_[0] = {1.0, 0.0};
}

double Statevector::norm_sq() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return total;
}

void Statevector::set_basis_state(std::uint64_t index) {
  if (index >= amps_.size()) {
    throw InvalidArgument("basis index " + std::to_string(index) +
                          " out of range");
  }
  std::fill(amps_.begin(), amps_.end(), std::complex<double>{0.0, 0.0});
  amps_[index] = {1.0, 0.0};
}

void Statevector::apply_unitary(const UMatrix& u, std::span<const int> qubits,
                                ExecPolicy policy) {
  const int k = u.num_qubits();
  check_operands(num_qubits_, k, qubits);

  const int block = 1 << k;
  std::array<int, 3> sorted_pos{};
  for (int j = 0; j < k; ++j) sorted_pos[static_cast<std::size_t>(j)] = qubits[static_cast<std::size_t>(j)];
  std::sort(sorted_pos.begin(), sorted_pos.begin() + k);

  // One group per assignment of the non-operand qubits. Groups touch
  // disjoint amplitude sets, so they can be processed in any order or in
  // parallel without synchronization.
  const std::size_t groups = amps_.size() >> k;
  auto process_group = [&](std::size_t g) {
    std::size_t base = g;
    for (int j = 0; j < k; ++j) {
      const std::size_t low =
          (std::size_t{1} << sorted_pos[static_cast<std::size_t>(j)]) - 1;
      base = ((base & ~low) << 1) | (base & low);
    }
    std::array<std::size_t, 8> idx{};
    std::array<std::complex<double>, 8> in{};
    for (int s = 0; s < block; ++s) {
      std::size_t t = base;
      for (int j = 0; j < k; ++j) {
        if (s >> j & 1) t |= std::size_t{1} << qubits[static_cast<std::size_t>(j)];
      }
      idx[static_cast<std::size_t>(s)] = t;
      in[static_cast<std::size_t>(s)] = amps_[t];
    }
    for (int r = 0; r < block; ++r) {
      std::complex<double> acc{0.0, 0.0};
      for (int s = 0; s < block; ++s) {
        acc += u(r, s) * in[static_cast<std::size_t>(s)];
      }
      amps_[idx[static_cast<std::size_t>(r)]] = acc;
    }
  };

  const bool parallel =
      policy == ExecPolicy::Parallel ||
      (policy == ExecPolicy::Auto && num_qubits_ >= kParallelThresholdQubits);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t g = 0; g < static_cast<std::ptrdiff_t>(groups); ++g) {
      process_group(static_cast<std::size_t>(g));
    }
  } else {
    for (std::size_t g = 0; g < groups; ++g) process_group(g);
  }
}

void Statevector::apply_instruction(const CircuitInstruction& instr,
                                    ExecPolicy policy) {
  if (instr.is_placeholder()) {
    throw PlaceholderPresent("placeholder '" + instr.name +
                             "' cannot be simulated");
  }
  if (instr.name == "barrier") return;
  const UMatrix u = unitary_of(instr.name, instr.params);
  apply_unitary(u, instr.qubits, policy);
}

Statevector run_statevector(const QuantumCircuit& circuit,
                            std::string_view input, ExecPolicy policy) {
  if (input.size() != static_cast<std::size_t>(circuit.num_qubits())) {
    throw InvalidArgument("input bitstring length " +
                          std::to_string(input.size()) + " does not match " +
                          std::to_string(circuit.num_qubits()) + " qubits");
  }
  for (const auto& instr : circuit.instructions()) {
    if (instr.is_placeholder()) {
      throw PlaceholderPresent("placeholder '" + instr.name +
                               "' cannot be simulated");
    }
  }

  Statevector state(circuit.num_qubits());
  const std::uint64_t index = index_of_bitstring(input);
  const UMatrix x = unitary_of("x", {});
  for (int q = 0; q < circuit.num_qubits(); ++q) {
    if (index >> q & 1) {
      const int operand[1] = {q};
      state.apply_unitary(x, operand, policy);
    }
  }
  for (const auto& instr : circuit.instructions()) {
    state.apply_instruction(instr, policy);
  }
  return state;
}

CountsDistribution sample_counts(const Statevector& state, long long shots,
                                 std::uint64_t seed) {
  if (shots < 0) {
    throw InvalidArgument("shot count must be >= 0, got " +
                          std::to_string(shots));
  }
  const auto amps = state.amplitudes();
  std::vector<double> cdf(amps.size());
  double total = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    total += std::norm(amps[i]);
    cdf[i] = total;
  }

  Rng rng(seed);
  std::map<std::uint64_t, long long> hits;
  for (long long s = 0; s < shots; ++s) {
    const double u = rng.uniform_real(0.0, 1.0) * total;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto index = static_cast<std::uint64_t>(
        std::min<std::ptrdiff_t>(it - cdf.begin(),
                                 static_cast<std::ptrdiff_t>(cdf.size()) - 1));
    ++hits[index];
  }

  CountsDistribution out;
  out.shots = shots;
  for (const auto& [index, count] : hits) {
    out.counts[bitstring_of(index, state.num_qubits())] = count;
  }
  return out;
}

std::map<std::string, CountsDistribution> run_all_inputs(
    const QuantumCircuit& circuit, long long shots, std::uint64_t base_seed,
    std::uint64_t stream, ExecPolicy policy) {
  std::map<std::string, CountsDistribution> out;
  const std::uint64_t dim = std::uint64_t{1} << circuit.num_qubits();
  for (std::uint64_t b = 0; b < dim; ++b) {
    const std::string input = bitstring_of(b, circuit.num_qubits());
    const Statevector state = run_statevector(circuit, input, policy);
    out[input] = sample_counts(state, shots, derive_seed(base_seed, stream, b));
  }
  return out;
}

std::map<std::string, CountsDistribution> run_inputs(
    const QuantumCircuit& circuit, std::span<const std::string> inputs,
    long long shots, std::uint64_t base_seed, std::uint64_t stream,
    ExecPolicy policy) {
  std::map<std::string, CountsDistribution> out;
  for (const auto& input : inputs) {
    if (input.size() != static_cast<std::size_t>(circuit.num_qubits())) {
      throw InvalidArgument("input bitstring '" + input +
                            "' does not match " +
                            std::to_string(circuit.num_qubits()) + " qubits");
    }
    const std::uint64_t b = index_of_bitstring(input);
    if (out.contains(input)) {
      throw InvalidArgument("duplicate input '" + input + "'");
    }
    const Statevector state = run_statevector(circuit, input, policy);
    out[input] = sample_counts(state, shots, derive_seed(base_seed, stream, b));
  }
  return out;
}

}  // namespace qcmut
