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

#include "rfx/sat/dimacs.h"

#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.h"
#include "rfx/sat/implicant_encoding.h"

namespace rfx::sat {
namespace {

using rfx::testing::clause;

CnfInstance parse(const std::string& text) {
  std::istringstream in(text);
  return read_dimacs(in);
}

TEST(DimacsTest, ParsesSimpleCnf) {
  const CnfInstance cnf = parse("c comment\np cnf 2 1\n1 2 0\n");
  EXPECT_EQ(cnf.var_count(), 2);
  ASSERT_EQ(cnf.clauses().size(), 1u);
  EXPECT_EQ(cnf.clauses()[0], clause({1, 2}));
}

TEST(DimacsTest, ClausesMaySpanLines) {
  const CnfInstance cnf = parse("p cnf 3 2\n1 -2\n3 0 -1\n0\n");
  ASSERT_EQ(cnf.clauses().size(), 2u);
  EXPECT_EQ(cnf.clauses()[0], clause({1, -2, 3}));
  EXPECT_EQ(cnf.clauses()[1], clause({-1}));
}

TEST(DimacsTest, RoundTripsImplicantEncoding) {
  const CnfInstance cnf = build_implicant_cnf(testing::orchid_forest()).cnf;
  std::stringstream buf;
  write_dimacs(buf, cnf);
  EXPECT_EQ(read_dimacs(buf), cnf);
}

TEST(DimacsTest, ErrorsCarryLineNumbers) {
  const std::vector<std::pair<std::string, int>> cases = {
      {"1 2 0\n", 1},                      // clause before header
      {"p cnf 2 1\n1 3 0\n", 2},           // variable out of range
      {"p cnf 2 1\n1 x 0\n", 2},           // junk token
      {"c\np cnf 2 2\n1 0\n", 3},          // too few clauses
      {"p cnf 2 1\n1 2\n", 2},             // unterminated clause
      {"p sat 2 1\n", 1},                  // unknown format
      {"p cnf 2 1\np cnf 2 1\n1 0\n", 2},  // duplicate header
  };
  for (const auto& [text, line] : cases) {
    try {
      parse(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const DimacsParseError& e) {
      EXPECT_EQ(e.line(), line) << text << " -> " << e.what();
    }
  }
}

TEST(DimacsTest, WcnfTopWeightMarksHardClauses) {
  std::istringstream in("p wcnf 2 3 10\n10 1 2 0\n3 -1 0\n5 -2 0\n");
  const WeightedCnf p = read_wcnf(in);
  ASSERT_EQ(p.hard.clauses().size(), 1u);
  EXPECT_EQ(p.hard.clauses()[0], clause({1, 2}));
  ASSERT_EQ(p.soft.size(), 2u);
  EXPECT_EQ(p.soft[0].weight, 3);
  EXPECT_EQ(p.soft[1].clause, clause({-2}));

  std::stringstream out;
  write_wcnf(out, p);
  EXPECT_NE(out.str().find("p wcnf 2 3 9"), std::string::npos) << out.str();
  EXPECT_NE(out.str().find("9 1 2 0"), std::string::npos) << out.str();
  EXPECT_EQ(read_wcnf(out), p);
}

TEST(DimacsTest, WcnfWithoutTopIsAllSoft) {
  std::istringstream in("p wcnf 1 2\n2 1 0\n1 -1 0\n");
  const WeightedCnf p = read_wcnf(in);
  EXPECT_TRUE(p.hard.clauses().empty());
  EXPECT_EQ(p.soft.size(), 2u);
}

TEST(DimacsTest, RandomRoundTrips) {
  testing::Rng rng(41);
  for (int round = 0; round < 50; ++round) {
    WeightedCnf p;
    const int n = rng.uniform(1, 20);
    p.hard = testing::random_kcnf(rng, n, rng.uniform(0, 30), 3);
    for (int i = rng.uniform(0, 10); i > 0; --i) {
      p.soft.push_back({testing::random_clause(rng, n, 3), rng.uniform(1, 100)});
    }
    std::stringstream buf;
    write_wcnf(buf, p);
    EXPECT_EQ(read_wcnf(buf), p) << round;
    std::stringstream cbuf;
    write_dimacs(cbuf, p.hard);
    EXPECT_EQ(read_dimacs(cbuf), p.hard) << round;
  }
}

}  // namespace
}  // namespace rfx::sat
