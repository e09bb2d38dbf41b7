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

#include <array>
#include <compare>
#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcmut {

// Dense unitary over 1, 2 or 3 qubits, row-major. Basis index bit j is the
// j-th operand qubit, so for a two-qubit gate the basis order is
// |q1 q0> = 00, 01, 10, 11 with q0 the first operand.
class UMatrix {
 public:
  explicit UMatrix(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  int dim() const { return 1 << num_qubits_; }

  std::complex<double>& operator()(int row, int col) {
    return a_[static_cast<std::size_t>(row * dim() + col)];
  }
  const std::complex<double>& operator()(int row, int col) const {
    return a_[static_cast<std::size_t>(row * dim() + col)];
  }

 private:
  int num_qubits_;
  std::array<std::complex<double>, 64> a_{};
};

// Gates are grouped by (operand count, parameter count); a mutation may
// rename a gate only within its group.
struct EquivClassKey {
  int num_qubits = 0;
  int num_params = 0;

  auto operator<=>(const EquivClassKey&) const = default;
  std::string str() const;  // e.g. "2q1p"
};

struct GateSpec {
  std::string_view name;
  EquivClassKey cls;
};

// The fixed set of 38 named gates the mutation operators draw from,
// partitioned into 7 equivalence classes. Iteration orders are fixed so
// seeded runs are reproducible.
class GateCatalog {
 public:
  static const GateCatalog& instance();

  std::size_t size() const;
  bool contains(std::string_view name) const;

  // Throws UnknownGate.
  const GateSpec& spec(std::string_view name) const;
  EquivClassKey equivalence_class_of(std::string_view name) const;

  std::span<const EquivClassKey> classes() const;
  // Members of a class, in catalog order. Throws UnknownGate for a key that
  // is not one of the 7 classes.
  std::span<const std::string_view> class_members(EquivClassKey cls) const;

  // Names insertable into a circuit of the given width (gate arity must fit),
  // in catalog order.
  std::vector<std::string_view> eligible_for_insertion(int num_qubits) const;

 private:
  GateCatalog();

  struct ClassEntry {
    EquivClassKey key;
    std::vector<std::string_view> members;
  };

  std::vector<GateSpec> specs_;
  std::vector<EquivClassKey> class_keys_;
  std::vector<ClassEntry> class_entries_;
};

// Concrete matrix for a catalog gate. Throws UnknownGate for names outside
// the catalog and ArityMismatch when params.size() differs from the gate's
// parameter count.
UMatrix unitary_of(std::string_view name, std::span<const double> params);

}  // namespace qcmut
