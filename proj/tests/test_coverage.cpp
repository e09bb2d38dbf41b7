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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "qcmut/errors.hpp"
#include "qcmut/mutation.hpp"
#include "testutil.hpp"

TEST_CASE("harmonic numbers") {
  CHECK(qcmut::harmonic(1) == 1.0);
  CHECK(qcmut::harmonic(2) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(qcmut::harmonic(4) ==
        doctest::Approx(25.0 / 12.0).epsilon(1e-15));
  CHECK_THROWS_AS(qcmut::harmonic(0), qcmut::InvalidArgument);
  CHECK_THROWS_AS(qcmut::harmonic(-3), qcmut::InvalidArgument);
}

TEST_CASE("harmonic sum is bracketed by its logarithmic bounds") {
  for (const long long n : {1LL, 2LL, 5LL, 17LL, 100LL, 4096LL, 100000LL}) {
    const double h = qcmut::harmonic(n);
    const double nd = static_cast<double>(n);
    CHECK(h >= std::log(nd) + 1.0 / nd);
    CHECK(h <= std::log(nd) + 1.0);
  }
}

TEST_CASE("expected insertions follow the coupon collector mean") {
  CHECK(qcmut::expected_insertions(1) == 1.0);
  CHECK(qcmut::expected_insertions(3) ==
        doctest::Approx(5.5).epsilon(1e-15));
  CHECK(qcmut::expected_insertions(10) ==
        doctest::Approx(10.0 * qcmut::harmonic(10)).epsilon(1e-15));
  CHECK_THROWS_AS(qcmut::expected_insertions(0), qcmut::InvalidArgument);
}

TEST_CASE("insertion budget and recommended batch size") {
  // size 0: one gap, one round
  CHECK(qcmut::insertion_budget(0) == 1);
  CHECK(qcmut::min_mutants(0) == 4);
  // documented anchors
  CHECK(qcmut::insertion_budget(9) == 40);
  CHECK(qcmut::min_mutants(9) == 160);
  CHECK(qcmut::insertion_budget(17) == 72);
  CHECK(qcmut::min_mutants(17) == 288);
  CHECK(qcmut::insertion_budget(24) == 125);
  CHECK(qcmut::min_mutants(24) == 500);
  CHECK_THROWS_AS(qcmut::insertion_budget(-1), qcmut::InvalidArgument);
}

TEST_CASE("insertion budget always covers the coupon collector expectation") {
  for (long long n = 0; n <= 2000; ++n) {
    const double expectation =
        static_cast<double>(n + 1) * qcmut::harmonic(n + 1);
    CHECK(static_cast<double>(qcmut::insertion_budget(n)) >= expectation);
  }
}

TEST_CASE("budget_for reads the circuit size") {
  const auto budget = qcmut::budget_for(testutil::make_bv_like());
  CHECK(budget.circuit_size == 9);
  CHECK(budget.insertion_budget == 40);
  CHECK(budget.min_mutants == 160);
}

TEST_CASE("audit_coverage tracks gaps and indexes") {
  const qcmut::QuantumCircuit circuit = testutil::make_bv_like();

  std::vector<qcmut::MutationRecord> records;
  qcmut::Rng rng(11);
  qcmut::generate_mutants(
      circuit, 400, 11,
      [&](const qcmut::QuantumCircuit&, const qcmut::MutationRecord& rec) {
        records.push_back(rec);
      });

  const qcmut::CoverageReport report =
      qcmut::audit_coverage(circuit, records);
  CHECK(report.circuit_size == 9);
  CHECK(report.mutable_count == 9);
  // 400 draws over 10 gaps and 9 indexes: full coverage is essentially
  // certain, and this specific seed was checked once and frozen.
  CHECK(report.all_gaps_covered);
  CHECK(report.all_indexes_covered);
  CHECK(report.fully_covered);
  CHECK(report.gap_fraction() == 1.0);

  long long total = 0;
  for (const auto& [key, count] : report.position_counts) {
    total += count;
  }
  CHECK(total == 400);
}

TEST_CASE("audit_coverage rejects records from a different circuit") {
  const qcmut::QuantumCircuit circuit = testutil::make_bv_like();

  qcmut::MutationRecord bad_gap;
  bad_gap.op = qcmut::MutationOperator::Insert;
  bad_gap.index = 10;  // gaps run 0..9
  const std::vector<qcmut::MutationRecord> gap_records{bad_gap};
  CHECK_THROWS_AS(qcmut::audit_coverage(circuit, gap_records),
                  qcmut::InconsistentRecords);

  qcmut::MutationRecord bad_index;
  bad_index.op = qcmut::MutationOperator::Delete;
  bad_index.index = 9;  // instruction indexes run 0..8
  const std::vector<qcmut::MutationRecord> index_records{bad_index};
  CHECK_THROWS_AS(qcmut::audit_coverage(circuit, index_records),
                  qcmut::InconsistentRecords);

  // a record naming an immutable instruction is just as inconsistent
  const qcmut::QuantumCircuit ce = testutil::make_ce_like();
  qcmut::MutationRecord barrier_target;
  barrier_target.op = qcmut::MutationOperator::Rename;
  barrier_target.index = 0;  // barrier
  const std::vector<qcmut::MutationRecord> barrier_records{barrier_target};
  CHECK_THROWS_AS(qcmut::audit_coverage(ce, barrier_records),
                  qcmut::InconsistentRecords);
}

TEST_CASE("partial batches are reported as not fully covered") {
  const qcmut::QuantumCircuit circuit = testutil::make_bv_like();
  std::vector<qcmut::MutationRecord> records;
  qcmut::MutationRecord rec;
  rec.op = qcmut::MutationOperator::Insert;
  rec.index = 4;
  records.push_back(rec);
  rec.op = qcmut::MutationOperator::Rename;
  rec.index = 2;
  records.push_back(rec);

  const auto report = qcmut::audit_coverage(circuit, records);
  CHECK_FALSE(report.fully_covered);
  CHECK(report.covered_gaps.size() == 1);
  CHECK(report.covered_indexes.size() == 1);
  CHECK(report.gap_fraction() == doctest::Approx(0.1));
}
