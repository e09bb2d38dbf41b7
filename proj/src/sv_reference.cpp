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

#include "qcmut/sv_reference.hpp"

#include <string>

#include "qcmut/errors.hpp"
#include "qcmut/statevector.hpp"

namespace qcmut::reference {

std::vector<std::complex<double>> apply_unitary(
    std::span<const std::complex<double>> amps, int num_qubits,
    const UMatrix& u, std::span<const int> qubits) {
  const int k = u.num_qubits();
  if (static_cast<int>(qubits.size()) != k) {
    throw InvalidArgument("unitary spans " + std::to_string(k) +
                          " qubit(s) but " + std::to_string(qubits.size()) +
                          " operand(s) given");
  }
  if (amps.size() != std::size_t{1} << num_qubits) {
    throw InvalidArgument("amplitude vector length " +
                          std::to_string(amps.size()) + " does not match " +
                          std::to_string(num_qubits) + " qubits");
  }
  for (const int q : qubits) {
    if (q < 0 || q >= num_qubits) {
      throw InvalidArgument("qubit operand " + std::to_string(q) +
                            " out of range");
    }
  }

  const int block = 1 << k;
  std::vector<std::complex<double>> out(amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i) {
    int row = 0;
    std::size_t base = i;
    for (int j = 0; j < k; ++j) {
      const std::size_t bit = std::size_t{1}
                              << qubits[static_cast<std::size_t>(j)];
      if (i & bit) {
        row |= 1 << j;
        base &= ~bit;
      }
    }
    std::complex<double> acc{0.0, 0.0};
    for (int s = 0; s < block; ++s) {
      std::size_t src = base;
      for (int j = 0; j < k; ++j) {
        if (s >> j & 1) {
          src |= std::size_t{1} << qubits[static_cast<std::size_t>(j)];
        }
      }
      acc += u(row, s) * amps[src];
    }
    out[i] = acc;
  }
  return out;
}

std::vector<std::complex<double>> run_statevector(
    const QuantumCircuit& circuit, std::string_view input) {
  if (input.size() != static_cast<std::size_t>(circuit.num_qubits())) {
    throw InvalidArgument("input bitstring length " +
                          std::to_string(input.size()) + " does not match " +
                          std::to_string(circuit.num_qubits()) + " qubits");
  }
  const std::uint64_t index = index_of_bitstring(input);
  std::vector<std::complex<double>> amps(
      std::size_t{1} << circuit.num_qubits(), {0.0, 0.0});
  amps[0] = {1.0, 0.0};

  // same preparation path as the main engine: X on every set input bit
  const UMatrix x = unitary_of("x", {});
  for (int q = 0; q < circuit.num_qubits(); ++q) {
    if (index >> q & 1) {
      const int operand[1] = {q};
      amps = apply_unitary(amps, circuit.num_qubits(), x, operand);
    }
  }
  for (const auto& instr : circuit.instructions()) {
    if (instr.is_placeholder()) {
      throw PlaceholderPresent("placeholder '" + instr.name +
                               "' cannot be simulated");
    }
    if (instr.name == "barrier") continue;
    amps = apply_unitary(amps, circuit.num_qubits(),
                         unitary_of(instr.name, instr.params), instr.qubits);
  }
  return amps;
}

}  // namespace qcmut::reference
