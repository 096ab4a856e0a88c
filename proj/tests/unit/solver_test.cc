// Copyright 2026 The rfx Authors
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

#include "rfx/sat/solver.h"

#include <gtest/gtest.h>

#include "fixtures.h"
#include "rfx/sat/cnf.h"

namespace rfx::sat {
namespace {

using rfx::testing::clause;

TEST(SolverTest, Trivial) {
  CnfInstance unit(1, {clause({1})});
  const SolveOutcome a = solve(unit);
  ASSERT_EQ(a.status, SolveStatus::kSat);
  EXPECT_EQ(a.model, std::vector<std::uint8_t>{1});

  CnfInstance contradiction(1, {clause({1}), clause({-1})});
  EXPECT_EQ(solve(contradiction).status, SolveStatus::kUnsat);

  CnfInstance binary(2, {clause({1, 2})});
  const std::vector<Literal> assume = {Literal::neg(1), Literal::neg(2)};
  EXPECT_EQ(solve(binary, assume).status, SolveStatus::kUnsat);
}

TEST(SolverTest, EmptyClauseIsUnsat) {
  Solver s;
  s.ensure_vars(2);
  EXPECT_FALSE(s.add_clause(Clause{}));
  EXPECT_EQ(s.solve(), SolveStatus::kUnsat);
}

TEST(SolverTest, FailedAssumptionsAreASubset) {
  Solver s;
  s.ensure_vars(4);
  s.add_clause({Literal::neg(1), Literal::neg(2)});
  const std::vector<Literal> assume = {Literal::pos(3), Literal::pos(1),
                                       Literal::pos(4), Literal::pos(2)};
  ASSERT_EQ(s.solve(assume), SolveStatus::kUnsat);
  std::vector<Literal> failed = s.failed_assumptions();
  std::sort(failed.begin(), failed.end());
  EXPECT_EQ(failed, (std::vector<Literal>{Literal::pos(1), Literal::pos(2)}));
  // The session stays usable.
  EXPECT_EQ(s.solve(), SolveStatus::kSat);
}

TEST(SolverTest, ContradictoryAssumptions) {
  Solver s;
  s.ensure_vars(1);
  const std::vector<Literal> assume = {Literal::pos(1), Literal::neg(1)};
  ASSERT_EQ(s.solve(assume), SolveStatus::kUnsat);
  EXPECT_FALSE(s.failed_assumptions().empty());
}

TEST(SolverTest, Pigeonhole) {
  // 5 pigeons, 4 holes.
  const int p = 5, h = 4;
  auto var = [&](int i, int j) { return i * h + j + 1; };
  CnfInstance cnf(p * h);
  for (int i = 0; i < p; ++i) {
    std::vector<Literal> some;
    for (int j = 0; j < h; ++j) some.push_back(Literal::pos(var(i, j)));
    cnf.add(Clause(some));
  }
  for (int j = 0; j < h; ++j) {
    for (int a = 0; a < p; ++a) {
      for (int b = a + 1; b < p; ++b) {
        cnf.add({Literal::neg(var(a, j)), Literal::neg(var(b, j))});
      }
    }
  }
  EXPECT_EQ(solve(cnf).status, SolveStatus::kUnsat);
}

TEST(SolverTest, ExpiredDeadlineTimesOut) {
  testing::Rng rng(3);
  const CnfInstance cnf = testing::random_kcnf(rng, 30, 128, 3);
  EXPECT_EQ(solve(cnf, {}, Deadline::after_seconds(0.0)).status,
            SolveStatus::kTimeout);
}

TEST(SolverTest, AgreesWithBruteForceOnRandom3Cnf) {
  testing::Rng rng(11);
  for (int round = 0; round < 300; ++round) {
    const int n = rng.uniform(3, 14);
    const int m = static_cast<int>(n * (3.5 + rng.uniform(0, 20) / 10.0));
    const CnfInstance cnf = testing::random_kcnf(rng, n, m, 3);
    const SolveOutcome out = solve(cnf);
    const auto brute = testing::brute_model(cnf);
    ASSERT_EQ(out.status == SolveStatus::kSat, brute.has_value()) << round;
    if (out.status == SolveStatus::kSat) {
      EXPECT_TRUE(cnf.satisfied_by(out.model));
    }
  }
}

TEST(SolverTest, AssumptionsBehaveLikeUnits) {
  testing::Rng rng(12);
  for (int round = 0; round < 200; ++round) {
    const int n = rng.uniform(4, 12);
    const CnfInstance cnf = testing::random_kcnf(rng, n, 3 * n, 3);
    std::vector<Literal> assume;
    for (int v = 1; v <= n; ++v) {
      if (rng.coin(0.3)) assume.emplace_back(v, rng.coin());
    }
    CnfInstance with_units = cnf;
    for (Literal l : assume) with_units.add({l});
    const SolveOutcome a = solve(cnf, assume);
    const SolveOutcome b = solve(with_units);
    ASSERT_EQ(a.status, b.status) << round;
    if (a.status == SolveStatus::kSat) {
      EXPECT_TRUE(cnf.satisfied_by(a.model));
      for (Literal l : assume) EXPECT_TRUE(l.satisfied_by(a.model[l.var() - 1]));
    }
  }
}

TEST(SolverTest, IncrementalSessionMatchesFreshSolves) {
  testing::Rng rng(13);
  for (int round = 0; round < 40; ++round) {
    const int n = 10;
    Solver s;
    s.ensure_vars(n);
    CnfInstance cnf(n);
    for (int step = 0; step < 40; ++step) {
      const CnfInstance extra = testing::random_kcnf(rng, n, 1, 3);
      for (const Clause& c : extra.clauses()) {
        cnf.add(c);
        s.add_clause(c);
      }
      std::vector<Literal> assume;
      for (int v = 1; v <= n; ++v) {
        if (rng.coin(0.2)) assume.emplace_back(v, rng.coin());
      }
      const SolveStatus got = s.solve(assume);
      const bool brute = testing::brute_model(cnf, assume).has_value();
      ASSERT_EQ(got == SolveStatus::kSat, brute) << round << "/" << step;
      if (got == SolveStatus::kUnsat && !assume.empty() &&
          testing::brute_model(cnf).has_value()) {
        // The failed assumptions alone are inconsistent with the clauses.
        EXPECT_FALSE(testing::brute_model(cnf, s.failed_assumptions()).has_value());
      }
    }
  }
}

TEST(SolverTest, DeterministicForAFixedSeed) {
  testing::Rng rng(14);
  const CnfInstance cnf = testing::random_kcnf(rng, 40, 150, 3);
  const SolveOutcome a = solve(cnf);
  const SolveOutcome b = solve(cnf);
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.model, b.model);
}

}  // namespace
}  // namespace rfx::sat
