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

#include "rfx/sat/cardinality.h"

#include <gtest/gtest.h>

#include <bit>

#include "fixtures.h"
#include "rfx/sat/cnf.h"

namespace rfx::sat {
namespace {

std::vector<Literal> fresh(CnfInstance& cnf, int m) {
  std::vector<Literal> out;
  for (int i = 0; i < m; ++i) out.push_back(Literal::pos(cnf.new_var()));
  return out;
}

// Number of selector assignments the encoding admits.
int projected_count(const CnfInstance& cnf, const std::vector<Literal>& sel) {
  int count = 0;
  for (std::uint32_t mask = 0; mask < (1u << sel.size()); ++mask) {
    std::vector<Literal> assume;
    for (std::size_t i = 0; i < sel.size(); ++i) {
      assume.push_back((mask >> i) & 1u ? sel[i] : ~sel[i]);
    }
    if (solve(cnf, assume).status == SolveStatus::kSat) ++count;
  }
  return count;
}

TEST(CardinalityTest, MajorityProjectedCounts) {
  for (auto [m, expected] : {std::pair{1, 1}, {3, 4}, {5, 16}}) {
    CnfInstance cnf;
    const auto sel = fresh(cnf, m);
    const CardEncoding enc = encode_card_majority(sel, cnf);
    cnf.append(enc.clauses);
    EXPECT_EQ(enc.bound, m / 2 + 1);
    EXPECT_EQ(projected_count(cnf, sel), expected) << m;
  }
}

TEST(CardinalityTest, SingleSelectorIsForced) {
  CnfInstance cnf;
  const auto sel = fresh(cnf, 1);
  cnf.append(encode_card_majority(sel, cnf).clauses);
  const std::vector<Literal> assume = {~sel[0]};
  EXPECT_EQ(solve(cnf, assume).status, SolveStatus::kUnsat);
}

TEST(CardinalityTest, AtLeastIsExactForSmallM) {
  for (int m = 1; m <= 6; ++m) {
    for (int k = 0; k <= m + 1; ++k) {
      CnfInstance cnf;
      const auto sel = fresh(cnf, m);
      const CardEncoding enc = encode_at_least(sel, k, cnf);
      cnf.append(enc.clauses);
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<Literal> assume;
        for (int i = 0; i < m; ++i) {
          assume.push_back((mask >> i) & 1u ? sel[i] : ~sel[i]);
        }
        const bool sat = solve(cnf, assume).status == SolveStatus::kSat;
        EXPECT_EQ(sat, std::popcount(mask) >= k) << m << " " << k << " " << mask;
      }
    }
  }
}

TEST(CardinalityTest, AtMostIsExactForSmallM) {
  for (int m = 1; m <= 6; ++m) {
    for (int k = -1; k <= m; ++k) {
      CnfInstance cnf;
      const auto sel = fresh(cnf, m);
      std::vector<Clause> clauses;
      encode_at_most(sel, k, cnf, clauses);
      cnf.append(clauses);
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<Literal> assume;
        for (int i = 0; i < m; ++i) {
          assume.push_back((mask >> i) & 1u ? sel[i] : ~sel[i]);
        }
        const bool sat = solve(cnf, assume).status == SolveStatus::kSat;
        EXPECT_EQ(sat, std::popcount(mask) <= k) << m << " " << k << " " << mask;
      }
    }
  }
}

TEST(CardinalityTest, WeightedCounterBounds) {
  testing::Rng rng(5);
  for (int round = 0; round < 30; ++round) {
    const int m = rng.uniform(1, 5);
    CnfInstance cnf;
    const auto sel = fresh(cnf, m);
    std::vector<std::pair<Literal, std::int64_t>> inputs;
    std::int64_t total = 0;
    for (int i = 0; i < m; ++i) {
      inputs.emplace_back(sel[i], rng.uniform(1, 4));
      total += inputs.back().second;
    }
    const std::int64_t cap = rng.uniform(1, static_cast<int>(total) + 1);
    WeightedCounter counter(inputs, cap, cnf);
    const std::int64_t bound = rng.uniform(0, static_cast<int>(cap) - 1);
    CnfInstance bounded = cnf;
    bounded.append(counter.at_most(bound));
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<Literal> assume;
      std::int64_t sum = 0;
      for (int i = 0; i < m; ++i) {
        const bool on = (mask >> i) & 1u;
        assume.push_back(on ? sel[i] : ~sel[i]);
        if (on) sum += inputs[i].second;
      }
      const bool sat = solve(bounded, assume).status == SolveStatus::kSat;
      EXPECT_EQ(sat, sum <= bound) << round << " mask " << mask;
    }
  }
}

}  // namespace
}  // namespace rfx::sat
