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

#include "rfx/sat/implicant_encoding.h"

#include <gtest/gtest.h>

#include <array>

#include "fixtures.h"
#include "rfx/explain/brute_force.h"

namespace rfx::sat {
namespace {

using rfx::testing::orchid_forest;
using rfx::testing::term;

std::vector<Literal> lits(const Term& t) { return t.literals(); }

TEST(ImplicantEncodingTest, SelectorsFollowFeatures) {
  const ImplicantEncoding enc = build_implicant_cnf(orchid_forest());
  EXPECT_EQ(enc.feature_count, 4);
  ASSERT_EQ(enc.selectors.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(enc.selectors[i].var(), 5 + i);
}

TEST(ImplicantEncodingTest, OrchidQueries) {
  const ImplicantEncoding enc = build_implicant_cnf(orchid_forest());
  const Term full = Term::of_instance(testing::x_plus());
  EXPECT_EQ(solve(enc.cnf, lits(full)).status, SolveStatus::kUnsat);
  const SolveOutcome witness = solve(enc.cnf, lits(term({2, 4})));
  ASSERT_EQ(witness.status, SolveStatus::kSat);
  Instance z(std::vector<std::uint8_t>(witness.model.begin(),
                                       witness.model.begin() + 4));
  EXPECT_FALSE(orchid_forest().eval(z));
  EXPECT_TRUE(term({2, 4}).covers(z));
}

TEST(ImplicantEncodingTest, IsImplicantExamples) {
  const RandomForest f = orchid_forest();
  EXPECT_TRUE(is_implicant_rf(f, term({1, 4})));
  EXPECT_FALSE(is_implicant_rf(f, term({2, 4})));
  EXPECT_TRUE(is_implicant_rf(f.negated(),
                              Term::of_instance(testing::x_minus())));
  EXPECT_TRUE(is_implicant_rf(f, term({2, 3, 4})));
  EXPECT_FALSE(is_implicant_rf(f, term({})));
}

TEST(ImplicantEncodingTest, CheckerReportsCoresAndCounterexamples) {
  ForestImplicantChecker checker(orchid_forest());
  ASSERT_FALSE(checker.implies(term({2, 4})));
  const Instance& z = checker.last_counterexample();
  EXPECT_TRUE(term({2, 4}).covers(z));
  EXPECT_FALSE(orchid_forest().eval(z));

  ASSERT_TRUE(checker.implies(term({1, 2, 3, 4})));
  const Term core = checker.last_core();
  EXPECT_TRUE(core.subset_of(term({1, 2, 3, 4})));
  EXPECT_TRUE(brute::is_implicant(orchid_forest(), core));
  EXPECT_EQ(checker.queries(), 2u);
}

TEST(ImplicantEncodingTest, ConstantForests) {
  const RandomForest yes({DecisionTree::constant(3, true)});
  const RandomForest no({DecisionTree::constant(3, false)});
  EXPECT_TRUE(is_implicant_rf(yes, Term{}));
  EXPECT_FALSE(is_implicant_rf(no, term({1, 2, 3})));
}

TEST(ImplicantEncodingTest, EvenTreeCountTieIsNegative) {
  // Two trees that disagree on x1 produce a 1-1 tie, which classifies 0.
  TreeBuilder b(1);
  const DecisionTree::NodeId root = b.split(1, b.leaf(false), b.leaf(true));
  const RandomForest f({b.build(root), DecisionTree::constant(1, false)});
  for (int v : {0, 1}) {
    const Term t = v ? term({1}) : term({-1});
    EXPECT_EQ(is_implicant_rf(f, t), brute::is_implicant(f, t)) << v;
  }
}

TEST(ImplicantEncodingTest, AgreesWithBruteForce) {
  testing::Rng rng(21);
  for (int round = 0; round < 150; ++round) {
    const int n = rng.uniform(1, 10);
    const int m = std::array{1, 2, 3, 4, 5}[rng.uniform(0, 4)];
    const RandomForest f = testing::random_forest(rng, n, m);
    ForestImplicantChecker checker(f);
    for (int q = 0; q < 8; ++q) {
      const Term t = testing::random_term(rng, n, 0.5);
      ASSERT_EQ(checker.implies(t), brute::is_implicant(f, t))
          << "round " << round << " term " << to_string(t);
      if (brute::is_implicant(f, t)) {
        EXPECT_TRUE(brute::is_implicant(f, checker.last_core()));
      }
    }
  }
}

}  // namespace
}  // namespace rfx::sat
