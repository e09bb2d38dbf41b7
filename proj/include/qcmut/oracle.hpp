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
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcmut/circuit.hpp"
#include "qcmut/mutation.hpp"
#include "qcmut/statevector.hpp"

namespace qcmut {

inline constexpr double kDefaultAlpha = 0.05;

// What the unmutated program is supposed to do on one input: the set of
// acceptable output bitstrings, plus (optionally) their exact probabilities.
struct OracleEntry {
  std::set<std::string> valid_outputs;
  std::optional<std::map<std::string, double>> expected_distribution;
};

struct OracleSpec {
  std::map<std::string, OracleEntry> inputs;
};

// Structural problems (negative probability, distribution not summing to 1
// within 1e-9, support outside valid_outputs), reported as data.
std::vector<std::string> validate_oracle(const OracleSpec& oracle);

struct ChiSquareResult {
  double statistic = 0.0;
  int df = 0;
  double p_value = 1.0;
  double min_expected = 0.0;
};

// Pearson goodness-of-fit of observed counts against the expected
// distribution. Cells are the outcomes with expected probability > 0;
// every observed outcome must lie in that support (the wrong-output check
// runs first and guarantees this). With a single cell df is 0 and the
// p-value is defined as 1: counts match the only possible outcome exactly.
ChiSquareResult chi_square_expected(
    const CountsDistribution& observed,
    const std::map<std::string, double>& expected);

// A mutant survives an input unless it produced an invalid output
// (WrongOutput) or its counts failed the distribution test
// (DistributionMismatch).
enum class InputVerdict { Survived, WrongOutput, DistributionMismatch };

std::string_view to_string(InputVerdict verdict);

struct InputJudgement {
  InputVerdict verdict = InputVerdict::Survived;
  std::optional<double> p_value;     // set when the chi-square test ran
  double min_expected_count = 0.0;   // smallest expected cell count, if any
};

InputJudgement judge_input(const CountsDistribution& observed,
                           const OracleEntry& entry,
                           double alpha = kDefaultAlpha);

// Wrong-output evidence is checked before the distribution test, so a
// mutant emitting an impossible bitstring is killed even when its counts
// would pass the chi-square.
struct KillVerdict {
  long long mutant_id = 0;
  int killing_inputs = 0;
  int total_inputs = 0;
  bool killed = false;
  std::map<std::string, InputJudgement> per_input;
};

// Judges one mutant across all inputs it was run on. Throws
// OracleIncomplete when some input has no oracle entry.
KillVerdict judge_mutant(
    long long mutant_id,
    const std::map<std::string, CountsDistribution>& results,
    const OracleSpec& oracle, double alpha = kDefaultAlpha);

// Percentage of killed mutants. Throws InvalidArgument on an empty span.
double mutation_score(std::span<const KillVerdict> verdicts);

// Reverse engineering of a surviving mutant without its record: the single
// edit that turns `original` into `mutant`.
enum class DiffKind { Insert, Delete, Rename, Retarget, Unknown };

std::string_view to_string(DiffKind kind);

struct MutationDiff {
  DiffKind kind = DiffKind::Unknown;
  long long position = 0;
  std::string detail;
};

// Compares instruction lists and reports the smallest consistent edit
// position. Multi-instruction differences degrade to Unknown; identical
// circuits throw NoDifference.
MutationDiff classify_survivor(const QuantumCircuit& original,
                               const QuantumCircuit& mutant);

}  // namespace qcmut
