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

#include "qcmut/oracle.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "qcmut/errors.hpp"
#include "qcmut/stats.hpp"

namespace qcmut {

namespace {

constexpr double kDistributionSumTolerance = 1e-9;

std::string format_param(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string format_tuple_int(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

std::string format_tuple_params(const std::vector<double>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) os << ",";
    os << format_param(v[i]);
  }
  os << ")";
  return os.str();
}

}  // namespace

std::vector<std::string> validate_oracle(const OracleSpec& oracle) {
  std::vector<std::string> violations;
  for (const auto& [input, entry] : oracle.inputs) {
    if (entry.valid_outputs.empty()) {
      violations.push_back("input '" + input + "': no valid outputs");
    }
    if (!entry.expected_distribution) continue;
    double sum = 0.0;
    for (const auto& [output, prob] : *entry.expected_distribution) {
      if (prob < 0.0) {
        violations.push_back("input '" + input + "': negative probability for '" +
                             output + "'");
      }
      if (prob > 0.0 && !entry.valid_outputs.contains(output)) {
        violations.push_back("input '" + input + "': distribution support '" +
                             output + "' missing from valid_outputs");
      }
      sum += prob;
    }
    if (std::fabs(sum - 1.0) > kDistributionSumTolerance) {
      std::ostringstream os;
      os << "input '" << input << "': distribution sums to " << sum;
      violations.push_back(os.str());
    }
  }
  return violations;
}

ChiSquareResult chi_square_expected(
    const CountsDistribution& observed,
    const std::map<std::string, double>& expected) {
  ChiSquareResult result;
  result.min_expected = static_cast<double>(observed.shots);

  long long seen = 0;
  for (const auto& [output, count] : observed.counts) {
    if (count == 0) continue;
    const auto it = expected.find(output);
    if (it == expected.end() || it->second <= 0.0) {
      throw InvalidArgument("observed outcome '" + output +
                            "' outside the expected support");
    }
    seen += count;
  }
  if (seen != observed.shots) {
    throw InvalidArgument("observed counts sum to " + std::to_string(seen) +
                          ", expected " + std::to_string(observed.shots) +
                          " shots");
  }

  int cells = 0;
  for (const auto& [output, prob] : expected) {
    if (prob <= 0.0) continue;
    ++cells;
    const double e = prob * static_cast<double>(observed.shots);
    const auto it = observed.counts.find(output);
    const double o =
        it == observed.counts.end() ? 0.0 : static_cast<double>(it->second);
    const double d = o - e;
    result.statistic += d * d / e;
    result.min_expected = std::min(result.min_expected, e);
  }

  result.df = cells - 1;
  result.p_value =
      result.df == 0 ? 1.0 : stats::chi_square_sf(result.statistic, result.df);
  return result;
}

std::string_view to_string(InputVerdict verdict) {
  switch (verdict) {
    case InputVerdict::Survived:
      return "survived";
    case InputVerdict::WrongOutput:
      return "wrong_output";
    case InputVerdict::DistributionMismatch:
      return "distribution_mismatch";
  }
  return "?";
}

InputJudgement judge_input(const CountsDistribution& observed,
                           const OracleEntry& entry, double alpha) {
  InputJudgement judgement;
  for (const auto& [output, count] : observed.counts) {
    if (count > 0 && !entry.valid_outputs.contains(output)) {
      judgement.verdict = InputVerdict::WrongOutput;
      return judgement;
    }
  }
  if (!entry.expected_distribution) return judgement;

  // An outcome the oracle gives probability zero can never be produced by
  // the correct program, so observing it is wrong-output evidence, not a
  // distribution question.
  for (const auto& [output, count] : observed.counts) {
    if (count == 0) continue;
    const auto it = entry.expected_distribution->find(output);
    if (it == entry.expected_distribution->end() || it->second <= 0.0) {
      judgement.verdict = InputVerdict::WrongOutput;
      return judgement;
    }
  }

  const ChiSquareResult chi =
      chi_square_expected(observed, *entry.expected_distribution);
  judgement.p_value = chi.p_value;
  judgement.min_expected_count = chi.min_expected;
  if (chi.p_value < alpha) {
    judgement.verdict = InputVerdict::DistributionMismatch;
  }
  return judgement;
}

KillVerdict judge_mutant(
    long long mutant_id,
    const std::map<std::string, CountsDistribution>& results,
    const OracleSpec& oracle, double alpha) {
  KillVerdict verdict;
  verdict.mutant_id = mutant_id;
  verdict.total_inputs = static_cast<int>(results.size());
  for (const auto& [input, counts] : results) {
    const auto it = oracle.inputs.find(input);
    if (it == oracle.inputs.end()) {
      throw OracleIncomplete("no oracle entry for input '" + input + "'");
    }
    const InputJudgement judgement = judge_input(counts, it->second, alpha);
    if (judgement.verdict != InputVerdict::Survived) {
      ++verdict.killing_inputs;
    }
    verdict.per_input.emplace(input, judgement);
  }
  verdict.killed = verdict.killing_inputs > 0;
  return verdict;
}

double mutation_score(std::span<const KillVerdict> verdicts) {
  if (verdicts.empty()) {
    throw InvalidArgument("mutation score undefined for zero mutants");
  }
  long long killed = 0;
  for (const auto& verdict : verdicts) {
    if (verdict.killed) ++killed;
  }
  return 100.0 * static_cast<double>(killed) /
         static_cast<double>(verdicts.size());
}

std::string_view to_string(DiffKind kind) {
  switch (kind) {
    case DiffKind::Insert:
      return "insert";
    case DiffKind::Delete:
      return "delete";
    case DiffKind::Rename:
      return "rename";
    case DiffKind::Retarget:
      return "retarget";
    case DiffKind::Unknown:
      return "unknown";
  }
  return "?";
}

namespace {

// True when `longer` equals `shorter` with one extra instruction at `pos`.
bool is_insertion_at(const std::vector<CircuitInstruction>& shorter,
                     const std::vector<CircuitInstruction>& longer,
                     std::size_t pos) {
  for (std::size_t i = 0; i < pos; ++i) {
    if (!instructions_equal(shorter[i], longer[i])) return false;
  }
  for (std::size_t i = pos; i < shorter.size(); ++i) {
    if (!instructions_equal(shorter[i], longer[i + 1])) return false;
  }
  return true;
}

std::size_t first_divergence(const std::vector<CircuitInstruction>& a,
                             const std::vector<CircuitInstruction>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!instructions_equal(a[i], b[i])) return i;
  }
  return n;
}

}  // namespace

MutationDiff classify_survivor(const QuantumCircuit& original,
                               const QuantumCircuit& mutant) {
  const auto& o = original.instructions();
  const auto& m = mutant.instructions();
  MutationDiff diff;

  if (m.size() == o.size() + 1) {
    for (std::size_t g = 0; g <= o.size(); ++g) {
      if (is_insertion_at(o, m, g)) {
        diff.kind = DiffKind::Insert;
        diff.position = static_cast<long long>(g);
        diff.detail = m[g].name;
        return diff;
      }
    }
  } else if (m.size() + 1 == o.size()) {
    for (std::size_t i = 0; i < o.size(); ++i) {
      if (is_insertion_at(m, o, i)) {
        diff.kind = DiffKind::Delete;
        diff.position = static_cast<long long>(i);
        diff.detail = o[i].name;
        return diff;
      }
    }
  } else if (m.size() == o.size()) {
    std::vector<std::size_t> changed;
    for (std::size_t i = 0; i < o.size(); ++i) {
      if (!instructions_equal(o[i], m[i])) changed.push_back(i);
    }
    if (changed.empty()) {
      throw NoDifference("mutant is identical to the original circuit");
    }
    if (changed.size() == 1) {
      const std::size_t i = changed[0];
      const CircuitInstruction& a = o[i];
      const CircuitInstruction& b = m[i];
      diff.position = static_cast<long long>(i);
      if (a.kind == b.kind && a.name != b.name && a.qubits == b.qubits &&
          a.clbits == b.clbits && a.params == b.params) {
        diff.kind = DiffKind::Rename;
        diff.detail = a.name + " -> " + b.name;
        return diff;
      }
      if (a.kind == b.kind && a.name == b.name && a.clbits == b.clbits) {
        diff.kind = DiffKind::Retarget;
        std::ostringstream os;
        os << "(" << a.name << ")";
        if (a.qubits != b.qubits) {
          os << " Qubits : " << format_tuple_int(a.qubits) << " -> "
             << format_tuple_int(b.qubits);
        }
        if (a.params != b.params) {
          if (a.qubits != b.qubits) os << ";";
          os << " Params : " << format_tuple_params(a.params) << " -> "
             << format_tuple_params(b.params);
        }
        diff.detail = os.str();
        return diff;
      }
      diff.kind = DiffKind::Unknown;
      diff.detail = "instruction replaced";
      return diff;
    }
    diff.kind = DiffKind::Unknown;
    diff.position = static_cast<long long>(changed[0]);
    diff.detail = "multiple instructions differ";
    return diff;
  }

  diff.kind = DiffKind::Unknown;
  diff.position = static_cast<long long>(first_divergence(o, m));
  std::ostringstream os;
  os << "instruction count " << o.size() << " -> " << m.size();
  diff.detail = os.str();
  return diff;
}

}  // namespace qcmut
