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

#include "qcmut/mutation.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include "qcmut/errors.hpp"
#include "qcmut/gate_catalog.hpp"
#include "testutil.hpp"

using qcmut::CircuitInstruction;
using qcmut::MutationOperator;
using qcmut::MutationRecord;
using qcmut::QuantumCircuit;

namespace {

// Placeholders must be bit-identical and in the same relative order before
// and after any mutation.
void check_placeholders_preserved(const QuantumCircuit& before,
                                  const QuantumCircuit& after) {
  std::vector<CircuitInstruction> pre;
  std::vector<CircuitInstruction> post;
  for (const auto& instr : before.instructions()) {
    if (instr.is_placeholder()) pre.push_back(instr);
  }
  for (const auto& instr : after.instructions()) {
    if (instr.is_placeholder()) post.push_back(instr);
  }
  REQUIRE(pre.size() == post.size());
  for (std::size_t i = 0; i < pre.size(); ++i) {
    CHECK(qcmut::instructions_equal(pre[i], post[i]));
  }
}

QuantumCircuit make_placeholder_subject() {
  QuantumCircuit c = testutil::make_bv_like();
  c = qcmut::insert_placeholder(c, 4, "OracleA", {0, 2});
  c = qcmut::insert_placeholder(c, 7, "OracleB", {1});
  return c;
}

}  // namespace

TEST_CASE("op_insert adds one eligible gate at the gap") {
  const QuantumCircuit circuit = testutil::make_bv_like();
  qcmut::Rng rng(3);
  for (std::size_t gap = 0; gap <= circuit.size(); ++gap) {
    const auto [mutant, rec] = qcmut::op_insert(circuit, gap, rng);
    CHECK(mutant.size() == circuit.size() + 1);
    CHECK(rec.op == MutationOperator::Insert);
    CHECK(rec.index == static_cast<long long>(gap));
    CHECK_FALSE(rec.before.has_value());
    REQUIRE(rec.after.has_value());
    CHECK(qcmut::instructions_equal(*rec.after, mutant.instructions()[gap]));
    // inserted gate is a catalog gate with parameters in [-pi, pi)
    const auto& catalog = qcmut::GateCatalog::instance();
    CHECK(catalog.contains(rec.after->name));
    for (const double p : rec.after->params) {
      CHECK(p >= -std::numbers::pi);
      CHECK(p < std::numbers::pi);
    }
    CHECK(qcmut::validate(mutant).empty());
  }
  CHECK_THROWS_AS(qcmut::op_insert(circuit, circuit.size() + 1, rng),
                  qcmut::InvalidPosition);
}

TEST_CASE("op_delete removes exactly the targeted instruction") {
  const QuantumCircuit circuit = testutil::make_bv_like();
  const auto [mutant, rec] = qcmut::op_delete(circuit, 4);
  CHECK(mutant.size() == circuit.size() - 1);
  CHECK(rec.op == MutationOperator::Delete);
  REQUIRE(rec.before.has_value());
  CHECK(rec.before->name == "cx");
  CHECK_FALSE(rec.after.has_value());

  CHECK_THROWS_AS(qcmut::op_delete(circuit, 9), qcmut::IllegalTarget);

  const QuantumCircuit with_ph = make_placeholder_subject();
  CHECK_THROWS_AS(qcmut::op_delete(with_ph, 4), qcmut::IllegalTarget);

  const QuantumCircuit ce = testutil::make_ce_like();
  CHECK_THROWS_AS(qcmut::op_delete(ce, 0), qcmut::IllegalTarget);  // barrier
}

TEST_CASE("op_rename stays inside the equivalence class") {
  const QuantumCircuit circuit = testutil::make_iqft_like();
  qcmut::Rng rng(5);
  const auto& catalog = qcmut::GateCatalog::instance();
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t index =
        static_cast<std::size_t>(rng.uniform_index(circuit.size()));
    const auto [mutant, rec] = qcmut::op_rename(circuit, index, rng);
    REQUIRE(rec.before.has_value());
    REQUIRE(rec.after.has_value());
    CHECK(rec.before->name != rec.after->name);
    CHECK(catalog.equivalence_class_of(rec.before->name) ==
          catalog.equivalence_class_of(rec.after->name));
    CHECK(rec.after->qubits == rec.before->qubits);
    CHECK(rec.after->params == rec.before->params);
    CHECK(mutant.size() == circuit.size());
  }

  // u2 is alone in its class
  const QuantumCircuit lonely(
      "c", 1, 0, {CircuitInstruction::gate("u2", {0}, {0.1, 0.2})});
  CHECK_THROWS_AS(qcmut::op_rename(lonely, 0, rng), qcmut::SingletonClass);
}

TEST_CASE("op_retarget redraws operands and parameters but never the name") {
  const QuantumCircuit circuit = testutil::make_iqft_like();
  qcmut::Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t index =
        static_cast<std::size_t>(rng.uniform_index(circuit.size()));
    const auto [mutant, rec] = qcmut::op_retarget(circuit, index, rng);
    REQUIRE(rec.before.has_value());
    REQUIRE(rec.after.has_value());
    CHECK(rec.after->name == rec.before->name);
    const bool changed = rec.after->qubits != rec.before->qubits ||
                         rec.after->params != rec.before->params;
    CHECK(changed);
    CHECK(qcmut::validate(mutant).empty());
  }

  // a parameterless 1-qubit gate on a 1-qubit register has nothing to vary
  const QuantumCircuit stuck("c", 1, 0, {CircuitInstruction::gate("x", {0})});
  CHECK_THROWS_AS(qcmut::op_retarget(stuck, 0, rng),
                  qcmut::NoAttributeFreedom);
}

TEST_CASE("mutate_once never returns the original circuit") {
  const QuantumCircuit circuit = testutil::make_bv_like();
  qcmut::Rng rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const auto [mutant, rec] = qcmut::mutate_once(circuit, rng);
    CHECK_FALSE(qcmut::circuits_equal(mutant, circuit));
    CHECK(qcmut::validate(mutant).empty());
  }
}

TEST_CASE("mutate_once preserves placeholders under every operator") {
  const QuantumCircuit circuit = make_placeholder_subject();
  qcmut::Rng rng(10);
  std::set<MutationOperator> seen;
  for (int trial = 0; trial < 500; ++trial) {
    const auto [mutant, rec] = qcmut::mutate_once(circuit, rng);
    check_placeholders_preserved(circuit, mutant);
    seen.insert(rec.op);
  }
  CHECK(seen.size() == 4);
}

TEST_CASE("circuits with no mutable gates always insert") {
  QuantumCircuit empty("empty", 2, 0);
  qcmut::Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const auto [mutant, rec] = qcmut::mutate_once(empty, rng);
    CHECK(rec.op == MutationOperator::Insert);
    CHECK(mutant.size() == 1);
  }

  QuantumCircuit only_ph("ph", 2, 0);
  only_ph = qcmut::insert_placeholder(only_ph, 0, "O", {0, 1});
  for (int trial = 0; trial < 50; ++trial) {
    const auto [mutant, rec] = qcmut::mutate_once(only_ph, rng);
    CHECK(rec.op == MutationOperator::Insert);
    check_placeholders_preserved(only_ph, mutant);
  }
}

TEST_CASE("generate_mutants streams ids, histogram and determinism") {
  const QuantumCircuit circuit = testutil::make_bv_like();

  std::vector<QuantumCircuit> first;
  std::vector<MutationRecord> first_recs;
  const qcmut::GenerationReport report = qcmut::generate_mutants(
      circuit, 200, 42,
      [&](const QuantumCircuit& mutant, const MutationRecord& rec) {
        first.push_back(mutant);
        first_recs.push_back(rec);
      });

  CHECK(report.num_mutants == 200);
  CHECK(report.seed == 42);
  CHECK(report.circuit_name == "bv");
  long long histogram_total = 0;
  for (const auto& [op, count] : report.operator_histogram) {
    histogram_total += count;
  }
  CHECK(histogram_total == 200);
  for (std::size_t i = 0; i < first_recs.size(); ++i) {
    CHECK(first_recs[i].mutant_id == static_cast<long long>(i) + 1);
    CHECK(first_recs[i].seed_used == 42);
  }

  // same seed, same stream
  std::vector<QuantumCircuit> second;
  qcmut::generate_mutants(
      circuit, 200, 42,
      [&](const QuantumCircuit& mutant, const MutationRecord&) {
        second.push_back(mutant);
      });
  REQUIRE(second.size() == first.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(qcmut::circuits_equal(first[i], second[i]));
  }

  // a different seed diverges somewhere
  std::vector<QuantumCircuit> other;
  qcmut::generate_mutants(
      circuit, 200, 43,
      [&](const QuantumCircuit& mutant, const MutationRecord&) {
        other.push_back(mutant);
      });
  bool any_different = false;
  for (std::size_t i = 0; i < first.size(); ++i) {
    if (!qcmut::circuits_equal(first[i], other[i])) any_different = true;
  }
  CHECK(any_different);
}

TEST_CASE("generate_mutants rejects bad inputs") {
  const QuantumCircuit circuit = testutil::make_bv_like();
  const auto sink = [](const QuantumCircuit&, const MutationRecord&) {};
  CHECK_THROWS_AS(qcmut::generate_mutants(circuit, 0, 1, sink),
                  qcmut::InvalidArgument);

  const QuantumCircuit broken(
      "bad", 2, 0, {CircuitInstruction::gate("h", {7})});
  CHECK_THROWS_AS(qcmut::generate_mutants(broken, 5, 1, sink),
                  qcmut::InvalidCircuit);
}

TEST_CASE("operator name round trip") {
  for (const auto op : {MutationOperator::Insert, MutationOperator::Delete,
                        MutationOperator::Rename, MutationOperator::Retarget}) {
    CHECK(qcmut::mutation_operator_from_string(qcmut::to_string(op)) == op);
  }
  CHECK_THROWS_AS(qcmut::mutation_operator_from_string("shuffle"),
                  qcmut::InvalidArgument);
}
