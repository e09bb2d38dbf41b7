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

#include "qcmut/coverage.hpp"

#include <cmath>
#include <string>

#include "qcmut/errors.hpp"

namespace qcmut {

double harmonic(long long n) {
  if (n < 1) {
    throw InvalidArgument("harmonic number undefined for n = " +
                          std::to_string(n));
  }
  double sum = 0.0;
  for (long long i = n; i >= 1; --i) {
    sum += 1.0 / static_cast<double>(i);
  }
  return sum;
}

double expected_insertions(long long n) {
  if (n < 1) {
    throw InvalidArgument("expected insertions undefined for n = " +
                          std::to_string(n));
  }
  return static_cast<double>(n) * harmonic(n);
}

long long insertion_budget(long long n) {
  if (n < 0) {
    throw InvalidArgument("circuit size must be >= 0, got " +
                          std::to_string(n));
  }
  const double slots = static_cast<double>(n + 1);
  const auto rounds =
      static_cast<long long>(std::ceil(std::log(slots) + 1.0));
  return (n + 1) * rounds;
}

long long min_mutants(long long n) { return 4 * insertion_budget(n); }

CoverageBudget budget_for(const QuantumCircuit& circuit) {
  CoverageBudget budget;
  budget.circuit_size = static_cast<long long>(circuit.size());
  budget.insertion_budget = insertion_budget(budget.circuit_size);
  budget.min_mutants = min_mutants(budget.circuit_size);
  return budget;
}

CoverageReport audit_coverage(const QuantumCircuit& circuit,
                              std::span<const MutationRecord> records) {
  const auto size = static_cast<long long>(circuit.size());
  const std::vector<std::size_t> targets = mutable_gate_indexes(circuit);
  const std::set<long long> target_set(targets.begin(), targets.end());

  CoverageReport report;
  report.circuit_size = size;
  report.mutable_count = targets.size();

  for (const MutationRecord& rec : records) {
    if (rec.op == MutationOperator::Insert) {
      if (rec.index < 0 || rec.index > size) {
        throw InconsistentRecords(
            "insert gap " + std::to_string(rec.index) +
            " out of range [0," + std::to_string(size) + "] (mutant " +
            std::to_string(rec.mutant_id) + ")");
      }
      report.covered_gaps.insert(rec.index);
    } else {
      if (rec.index < 0 || rec.index >= size ||
          !target_set.contains(rec.index)) {
        throw InconsistentRecords(
            std::string(to_string(rec.op)) + " index " +
            std::to_string(rec.index) +
            " does not name a mutable gate of this circuit (mutant " +
            std::to_string(rec.mutant_id) + ")");
      }
      report.covered_indexes.insert(rec.index);
    }
    ++report.position_counts[{rec.op, rec.index}];
  }

  report.all_gaps_covered =
      static_cast<long long>(report.covered_gaps.size()) == size + 1;
  report.all_indexes_covered =
      report.covered_indexes.size() == target_set.size();
  report.fully_covered =
      report.all_gaps_covered && report.all_indexes_covered;
  return report;
}

}  // namespace qcmut
