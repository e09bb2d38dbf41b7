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

#include <map>
#include <set>
#include <span>
#include <utility>

#include "qcmut/circuit.hpp"
#include "qcmut/mutation.hpp"

namespace qcmut {

// Partial harmonic sum H_n = 1 + 1/2 + ... + 1/n, accumulated from the
// smallest term upward (i = n down to 1) to limit rounding loss. Throws
// InvalidArgument for n < 1.
double harmonic(long long n);

// Expected draws to see every one of n equally likely positions at least
// once (coupon collector): n * H_n. Throws InvalidArgument for n < 1.
double expected_insertions(long long n);

// Deterministic upper bound on the draws needed to cover all n+1 insertion
// gaps of an n-instruction circuit: (n+1) * ceil(ln(n+1) + 1). Throws
// InvalidArgument for n < 0.
long long insertion_budget(long long n);

// Recommended batch size: 4 * insertion_budget(n), one slice per operator.
long long min_mutants(long long n);

struct CoverageBudget {
  long long circuit_size = 0;
  long long insertion_budget = 0;
  long long min_mutants = 0;
};

CoverageBudget budget_for(const QuantumCircuit& circuit);

// Which positions a batch of mutation records actually exercised.
struct CoverageReport {
  long long circuit_size = 0;
  std::size_t mutable_count = 0;
  std::set<long long> covered_gaps;     // insert gaps, out of size + 1
  std::set<long long> covered_indexes;  // touched mutable instruction indexes
  std::map<std::pair<MutationOperator, long long>, long long>
      position_counts;
  bool all_gaps_covered = false;
  bool all_indexes_covered = false;
  bool fully_covered = false;

  double gap_fraction() const {
    return static_cast<double>(covered_gaps.size()) /
           static_cast<double>(circuit_size + 1);
  }
};

// Audits `records` against the circuit they were generated from. Throws
// InconsistentRecords when a record references a position that cannot have
// come from this circuit (gap out of range, index out of range, or index
// not a mutable gate).
CoverageReport audit_coverage(const QuantumCircuit& circuit,
                              std::span<const MutationRecord> records);

}  // namespace qcmut
