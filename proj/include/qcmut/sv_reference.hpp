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
#include <span>
#include <vector>

#include "qcmut/circuit.hpp"
#include "qcmut/gate_catalog.hpp"

namespace qcmut::reference {

// Textbook out-of-place statevector update: for every global basis index,
// read the operand-qubit bits, then sum the matching unitary row against the
// untouched input vector. Deliberately simple and serial; the in-place
// OpenMP kernels are checked against this in tests and benchmarks.
std::vector<std::complex<double>> apply_unitary(
    std::span<const std::complex<double>> amps, int num_qubits,
    const UMatrix& u, std::span<const int> qubits);

// Runs a placeholder-free circuit on |input> using only the reference
// update.
std::vector<std::complex<double>> run_statevector(
    const QuantumCircuit& circuit, std::string_view input);

}  // namespace qcmut::reference
