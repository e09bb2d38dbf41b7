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

#include <unistd.h>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcmut/coverage.hpp"
#include "qcmut/errors.hpp"
#include "qcmut/io.hpp"
#include "qcmut/mutation.hpp"
#include "qcmut/oracle.hpp"
#include "qcmut/statevector.hpp"
#include "qcmut/version.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

// Exit codes: 0 success, 2 bad input (parse/validation), 3 bad analysis
// input (malformed results, incomplete oracle), 4 internal error.
constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitAnalysis = 3;
constexpr int kExitInternal = 4;

std::string tool_version() {
  return std::string(qcmut::kToolName) + " " + std::string(qcmut::kVersion);
}

// Seeds must be explicit in scripts so every run is reproducible; an
// interactive session gets a fresh one, echoed to stderr.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  if (isatty(STDIN_FILENO)) {
    std::random_device rd;
    const std::uint64_t fresh =
        (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    std::cerr << "seed: " << fresh << "\n";
    return fresh;
  }
  throw qcmut::InvalidArgument(
      "--seed is required when stdin is not a terminal");
}

qcmut::ExecPolicy parse_policy(const std::string& name) {
  if (name == "auto") return qcmut::ExecPolicy::Auto;
  if (name == "serial") return qcmut::ExecPolicy::Serial;
  if (name == "parallel") return qcmut::ExecPolicy::Parallel;
  throw qcmut::InvalidArgument("unknown execution policy '" + name + "'");
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_bound(const std::string& circuit_path) {
  const qcmut::QuantumCircuit circuit = qcmut::load_circuit(circuit_path);
  const qcmut::CoverageBudget budget = qcmut::budget_for(circuit);
  ordered_json out;
  out["circuit"] = circuit.name();
  out["size"] = budget.circuit_size;
  out["insertion_budget"] = budget.insertion_budget;
  out["min_mutants"] = budget.min_mutants;
  emit(out);
  return kExitOk;
}

int cmd_mutate(const std::string& circuit_path, long long num,
               const std::optional<std::uint64_t>& seed_opt,
               const std::string& out_root) {
  const qcmut::QuantumCircuit circuit = qcmut::load_circuit(circuit_path);
  const std::uint64_t seed = resolve_seed(seed_opt);
  const long long count =
      num > 0 ? num : qcmut::min_mutants(static_cast<long long>(circuit.size()));

  const fs::path dir = fs::path(out_root) / circuit.name();
  fs::create_directories(dir);
  qcmut::save_mutant(circuit, nullptr, dir / "original.qcz");

  const qcmut::GenerationReport report = qcmut::generate_mutants(
      circuit, count, seed,
      [&](const qcmut::QuantumCircuit& mutant,
          const qcmut::MutationRecord& rec) {
        qcmut::save_mutant(mutant, &rec,
                           dir / qcmut::mutant_filename(rec.mutant_id));
      });
  const fs::path report_path = qcmut::write_generation_report(report, dir);

  ordered_json out = qcmut::generation_report_to_json(report);
  out["output_dir"] = dir.string();
  out["report"] = report_path.string();
  emit(out);
  return kExitOk;
}

// "all", or a file with one input bitstring per line.
std::optional<std::vector<std::string>> parse_inputs_spec(
    const std::string& spec) {
  if (spec == "all") return std::nullopt;
  std::istringstream in(qcmut::read_file(spec));
  std::vector<std::string> inputs;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (!line.empty()) inputs.push_back(line);
  }
  if (inputs.empty()) {
    throw qcmut::InvalidArgument("inputs file '" + spec +
                                 "' contains no bitstrings");
  }
  return inputs;
}

int cmd_run(const std::string& mutants_dir, long long shots,
            const std::optional<std::uint64_t>& seed_opt,
            std::string out_path, const std::string& exec_policy,
            const std::string& inputs_spec) {
  const qcmut::ExecPolicy policy = parse_policy(exec_policy);
  const std::uint64_t seed = resolve_seed(seed_opt);
  if (shots < 1) {
    throw qcmut::InvalidArgument("--shots must be >= 1");
  }
  const std::optional<std::vector<std::string>> input_list =
      parse_inputs_spec(inputs_spec);

  const fs::path dir(mutants_dir);
  const qcmut::QuantumCircuit original =
      qcmut::load_circuit(dir / "original.qcz");

  std::vector<std::pair<long long, qcmut::QuantumCircuit>> mutants;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.starts_with("mutant_") && name.ends_with(".qcz")) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    auto [mutant, record] = qcmut::load_mutant(file);
    const long long id =
        record ? record->mutant_id
               : std::stoll(file.stem().string().substr(7));
    for (const auto& instr : mutant.instructions()) {
      if (instr.is_placeholder()) {
        throw qcmut::PlaceholderPresent(
            file.filename().string() + " still contains placeholder '" +
            instr.name + "'; substitute it before running");
      }
    }
    mutants.emplace_back(id, std::move(mutant));
  }
  if (mutants.empty()) {
    throw qcmut::LoadError("read: no mutant_*.qcz files in '" + mutants_dir +
                           "'");
  }

  qcmut::RunResults results;
  results.circuit_name = original.name();
  results.mutants_dir = mutants_dir;
  results.num_qubits = original.num_qubits();
  results.shots = shots;
  results.seed = seed;
  results.simulator_version = tool_version();

  // The per-mutant seed stream is keyed by mutant id, so the counts are
  // identical no matter how the loop is scheduled.
  std::vector<std::map<std::string, qcmut::CountsDistribution>> all(
      mutants.size());
  std::string failure;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(mutants.size());
       ++i) {
    const auto& [id, mutant] = mutants[static_cast<std::size_t>(i)];
    try {
      all[static_cast<std::size_t>(i)] =
          input_list ? qcmut::run_inputs(mutant, *input_list, shots, seed,
                                         static_cast<std::uint64_t>(id),
                                         policy)
                     : qcmut::run_all_inputs(mutant, shots, seed,
                                             static_cast<std::uint64_t>(id),
                                             policy);
    } catch (const std::exception& e) {
#pragma omp critical
      failure = e.what();
    }
  }
  if (!failure.empty()) {
    throw qcmut::Error(failure);
  }
  for (std::size_t i = 0; i < mutants.size(); ++i) {
    results.per_mutant.emplace(mutants[i].first, std::move(all[i]));
  }

  if (out_path.empty()) {
    out_path = (dir / "results.json").string();
  }
  qcmut::write_file(out_path, qcmut::run_results_to_json(results).dump(2) + "\n");

  ordered_json out;
  out["circuit"] = results.circuit_name;
  out["mutants"] = static_cast<long long>(mutants.size());
  out["inputs_per_mutant"] =
      input_list ? static_cast<long long>(input_list->size())
                 : 1LL << original.num_qubits();
  out["shots"] = shots;
  out["seed"] = seed;
  out["results"] = out_path;
  emit(out);
  return kExitOk;
}

int cmd_analyze(const std::string& results_path, const std::string& oracle_path,
                double alpha, std::string out_path) {
  const qcmut::RunResults results = qcmut::load_run_results(results_path);
  const qcmut::OracleSpec oracle = qcmut::load_oracle(oracle_path);
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw qcmut::InvalidArgument("--alpha must lie in (0,1)");
  }

  std::vector<qcmut::KillVerdict> verdicts;
  verdicts.reserve(results.per_mutant.size());
  for (const auto& [mutant_id, per_input] : results.per_mutant) {
    verdicts.push_back(
        qcmut::judge_mutant(mutant_id, per_input, oracle, alpha));
  }
  const double score = qcmut::mutation_score(verdicts);

  // Survivors are reverse engineered from the circuits themselves; the
  // stored mutation records are intentionally not consulted.
  std::optional<qcmut::QuantumCircuit> original;
  const fs::path dir(results.mutants_dir);
  if (!results.mutants_dir.empty() && fs::exists(dir / "original.qcz")) {
    original = qcmut::load_circuit(dir / "original.qcz");
  }

  ordered_json survivors = ordered_json::array();
  for (const auto& verdict : verdicts) {
    if (verdict.killed) continue;
    ordered_json row;
    row["mutant_id"] = verdict.mutant_id;
    if (original) {
      const fs::path file = dir / qcmut::mutant_filename(verdict.mutant_id);
      if (fs::exists(file)) {
        const qcmut::MutationDiff diff = qcmut::classify_survivor(
            *original, qcmut::load_mutant(file).first);
        row["kind"] = std::string(qcmut::to_string(diff.kind));
        row["position"] = diff.position;
        row["detail"] = diff.detail;
      } else {
        row["detail"] = "mutant file unavailable";
      }
    } else {
      row["detail"] = "mutants_dir unavailable";
    }
    survivors.push_back(std::move(row));
  }

  // Low expected counts degrade the chi-square approximation; surface the
  // affected inputs instead of silently trusting the p-values.
  std::set<std::string> low_expected;
  for (const auto& verdict : verdicts) {
    for (const auto& [input, judgement] : verdict.per_input) {
      if (judgement.p_value && judgement.min_expected_count < 5.0) {
        low_expected.insert(input);
      }
    }
  }

  ordered_json report;
  report["circuit"] = results.circuit_name;
  report["shots"] = results.shots;
  report["seed"] = results.seed;
  report["alpha"] = alpha;
  // pin the statistical convention so reports are self-describing
  report["chi_square_convention"] =
      "Pearson over all expected outcomes with probability > 0; "
      "expected count = probability * shots, no renormalization, "
      "df = support size - 1";
  report["mutants_total"] = static_cast<long long>(verdicts.size());
  long long killed = 0;
  for (const auto& verdict : verdicts) {
    if (verdict.killed) ++killed;
  }
  report["mutants_killed"] = killed;
  report["score_percent"] = score;
  report["survivors"] = std::move(survivors);
  report["low_expected_count_warnings"] =
      std::vector<std::string>(low_expected.begin(), low_expected.end());
  ordered_json verdict_rows = ordered_json::array();
  for (const auto& verdict : verdicts) {
    ordered_json row;
    row["mutant_id"] = verdict.mutant_id;
    row["killed"] = verdict.killed;
    row["killing_inputs"] = verdict.killing_inputs;
    row["total_inputs"] = verdict.total_inputs;
    verdict_rows.push_back(std::move(row));
  }
  report["verdicts"] = std::move(verdict_rows);

  if (!out_path.empty()) {
    qcmut::write_file(out_path, report.dump(2) + "\n");
  }
  emit(report);
  return kExitOk;
}

int cmd_diff(const std::string& original_path,
             const std::vector<std::string>& mutant_paths, bool pretty) {
  const qcmut::QuantumCircuit original = qcmut::load_circuit(original_path);
  ordered_json rows = ordered_json::array();
  for (const auto& path : mutant_paths) {
    const qcmut::QuantumCircuit mutant = qcmut::load_circuit(path);
    ordered_json row;
    row["mutant"] = path;
    try {
      const qcmut::MutationDiff diff = qcmut::classify_survivor(original, mutant);
      row["kind"] = std::string(qcmut::to_string(diff.kind));
      row["position"] = diff.position;
      row["detail"] = diff.detail;
    } catch (const qcmut::NoDifference&) {
      row["kind"] = "none";
      row["detail"] = "no difference";
    }
    rows.push_back(std::move(row));
  }

  if (pretty) {
    for (const auto& row : rows) {
      std::cout << row["mutant"].get<std::string>() << "  "
                << row["kind"].get<std::string>();
      if (row.contains("position")) {
        std::cout << "  @" << row["position"].get<long long>();
      }
      std::cout << "  " << row["detail"].get<std::string>() << "\n";
    }
  } else {
    emit(rows);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mutation testing for quantum circuits"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  std::string circuit_path;
  std::string mutants_dir;
  std::string results_path;
  std::string oracle_path;
  std::string out_path;
  std::string out_root = ".";
  std::string exec_policy = "auto";
  std::string inputs_spec = "all";
  std::vector<std::string> mutant_paths;
  long long num = 0;
  long long shots = 1024;
  double alpha = qcmut::kDefaultAlpha;
  bool pretty = false;
  std::optional<std::uint64_t> seed;

  auto* bound = app.add_subcommand(
      "bound", "Print the coverage-motivated mutant budget for a circuit");
  bound->add_option("circuit", circuit_path, "circuit file (.qasm or .qcz)")
      ->required();

  auto* mutate =
      app.add_subcommand("mutate", "Generate seeded mutants of a circuit");
  mutate->add_option("circuit", circuit_path, "circuit file (.qasm or .qcz)")
      ->required();
  mutate->add_option("--num", num,
                     "number of mutants (default: recommended budget)");
  mutate->add_option("--seed", seed, "generator seed");
  mutate->add_option("--out", out_root, "output root directory");

  auto* run = app.add_subcommand(
      "run", "Simulate every mutant on every basis input and sample counts");
  run->add_option("mutants_dir", mutants_dir, "directory written by mutate")
      ->required();
  run->add_option("--shots", shots, "shots per (mutant, input) pair");
  run->add_option("--seed", seed, "sampling seed");
  run->add_option("--out", out_path, "results file (default: <dir>/results.json)");
  run->add_option("--exec", exec_policy, "kernel policy: auto|serial|parallel");
  run->add_option("--inputs", inputs_spec,
                  "'all' or a file with one input bitstring per line");

  auto* analyze = app.add_subcommand(
      "analyze", "Judge mutants against an oracle and report the score");
  analyze->add_option("results", results_path, "results file from run")
      ->required();
  analyze->add_option("oracle", oracle_path, "oracle JSON file")->required();
  analyze->add_option("--alpha", alpha, "chi-square significance level");
  analyze->add_option("--out", out_path, "also write the report here");

  auto* diff = app.add_subcommand(
      "diff", "Reverse engineer the edit between an original and mutants");
  diff->add_option("original", circuit_path, "original circuit file")
      ->required();
  diff->add_option("mutants", mutant_paths, "mutant files")->required();
  diff->add_flag("--pretty", pretty, "human-readable table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (bound->parsed()) return cmd_bound(circuit_path);
    if (mutate->parsed()) return cmd_mutate(circuit_path, num, seed, out_root);
    if (run->parsed()) {
      return cmd_run(mutants_dir, shots, seed, out_path, exec_policy,
                     inputs_spec);
    }
    if (analyze->parsed()) {
      try {
        return cmd_analyze(results_path, oracle_path, alpha, out_path);
      } catch (const qcmut::LoadError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAnalysis;
      } catch (const qcmut::OracleIncomplete& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAnalysis;
      } catch (const qcmut::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAnalysis;
      }
    }
    if (diff->parsed()) return cmd_diff(circuit_path, mutant_paths, pretty);
  } catch (const qcmut::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
