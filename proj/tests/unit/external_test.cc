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

#include "rfx/sat/external.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "fixtures.h"

namespace rfx::sat {
namespace {

using rfx::testing::clause;

std::string cli_solver(bool wcnf) {
  return std::string("'") + RFX_CLI_PATH + "' solve -" + (wcnf ? " --wcnf" : "");
}

TEST(ExternalSolverTest, ParsesCompetitionOutput) {
  std::istringstream in("c hello\ns SATISFIABLE\nv 1 -2\nv 3 0\n");
  const SolverReport r = parse_solver_output(in, 3);
  EXPECT_EQ(r.status_line, "SATISFIABLE");
  EXPECT_EQ(r.model, (std::vector<std::uint8_t>{1, 0, 1}));
  EXPECT_FALSE(r.cost.has_value());

  std::istringstream maxsat("o 7\no 4\ns OPTIMUM FOUND\nv 0110\n");
  const SolverReport m = parse_solver_output(maxsat, 4);
  EXPECT_EQ(m.status_line, "OPTIMUM FOUND");
  EXPECT_EQ(m.cost, 4);
  EXPECT_EQ(m.model, (std::vector<std::uint8_t>{0, 1, 1, 0}));
}

TEST(ExternalSolverTest, RejectsGarbage) {
  std::istringstream in("s SATISFIABLE\nv 1 banana 0\n");
  EXPECT_THROW(parse_solver_output(in, 2), ExternalSolverError);
}

TEST(ExternalSolverTest, RoundTripsThroughTheCli) {
  CnfInstance sat(3, {clause({1, 2}), clause({-1}), clause({-2, 3})});
  const SolveOutcome a = solve_external(cli_solver(false), sat);
  ASSERT_EQ(a.status, SolveStatus::kSat);
  EXPECT_TRUE(sat.satisfied_by(a.model));

  CnfInstance unsat(1, {clause({1}), clause({-1})});
  EXPECT_EQ(solve_external(cli_solver(false), unsat).status,
            SolveStatus::kUnsat);

  WeightedCnf p;
  p.hard = CnfInstance(2, {clause({1, 2})});
  p.soft = {{clause({-1}), 1}, {clause({-2}), 2}};
  const MaxSatResult r = maxsat_external(cli_solver(true), p);
  EXPECT_TRUE(r.optimal());
  EXPECT_EQ(r.cost, 1);
  EXPECT_EQ(r.model, (std::vector<std::uint8_t>{1, 0}));
}

TEST(ExternalSolverTest, FailingCommandIsAnError) {
  CnfInstance cnf(1, {clause({1})});
  EXPECT_THROW(solve_external("exit 3", cnf), ExternalSolverError);
  EXPECT_THROW(solve_external("echo 's SATISFIABLE'; echo 'v -1 0'", cnf),
               ExternalSolverError);
}

TEST(ExternalSolverTest, EnvironmentVariable) {
  ::setenv(kExternalSolverEnv, "my-solver --fast", 1);
  EXPECT_EQ(external_solver_from_env(), "my-solver --fast");
  ::unsetenv(kExternalSolverEnv);
  EXPECT_FALSE(external_solver_from_env().has_value());
}

}  // namespace
}  // namespace rfx::sat
