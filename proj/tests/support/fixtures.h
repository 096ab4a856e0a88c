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

#ifndef RFX_TESTS_SUPPORT_FIXTURES_H_
#define RFX_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "rfx/forest.h"
#include "rfx/logic.h"
#include "rfx/sat/cnf.h"
#include "rfx/tree.h"

namespace rfx::testing {

// The three-tree orchid forest over x1 fragrant, x2 one or two leaves,
// x3 large flowers, x4 sympodial.
DecisionTree orchid_t1();
DecisionTree orchid_t2();
DecisionTree orchid_t3();
RandomForest orchid_forest();
inline Instance x_plus() { return Instance{1, 1, 1, 1}; }
inline Instance x_minus() { return Instance{0, 1, 0, 0}; }

Term term(std::initializer_list<int> dimacs);
Clause clause(std::initializer_list<int> dimacs);

// splitmix64 with a portable bounded draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [lo, hi].
  int uniform(int lo, int hi);
  bool coin(double p_true = 0.5);

 private:
  std::uint64_t state_;
};

struct TreeShape {
  int max_depth = 5;
  double leaf_probability = 0.2;  // below the root
};

DecisionTree random_tree(Rng& rng, int var_count, TreeShape shape = {});
RandomForest random_forest(Rng& rng, int var_count, int tree_count,
                           TreeShape shape = {});
Instance random_instance(Rng& rng, int var_count);
Term random_subterm(Rng& rng, const Instance& x, double keep = 0.5);
Term random_term(Rng& rng, int var_count, double keep = 0.4);
Clause random_clause(Rng& rng, int var_count, int max_size);
sat::CnfInstance random_kcnf(Rng& rng, int var_count, int clause_count, int k);

// Exhaustive references over CNF formulas.
std::optional<std::vector<std::uint8_t>> brute_model(
    const sat::CnfInstance& cnf, const std::vector<Literal>& assumptions = {});
// Minimum cost over models of the hard part; nullopt when it has none.
std::optional<std::int64_t> brute_maxsat(const sat::WeightedCnf& problem);

}  // namespace rfx::testing

#endif  // RFX_TESTS_SUPPORT_FIXTURES_H_
