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

#include "fixtures.h"

#include <algorithm>
#include <limits>

namespace rfx::testing {

DecisionTree orchid_t1() {
  TreeBuilder b(4);
  const auto x1 = b.split(1, b.leaf(false), b.leaf(true));
  const auto x3 = b.split(3, b.leaf(false), x1);
  const auto x2 = b.split(2, b.leaf(true), x3);
  return b.build(b.split(4, b.leaf(false), x2));
}

DecisionTree orchid_t2() {
  TreeBuilder b(4);
  const auto x4 = b.split(4, b.leaf(false), b.leaf(true));
  const auto x1 = b.split(1, b.leaf(false), x4);
  return b.build(b.split(2, x1, b.leaf(true)));
}

DecisionTree orchid_t3() {
  TreeBuilder b(4);
  // x3 = 0 branch
  const auto a_x1 = b.split(1, b.leaf(false), b.leaf(true));
  const auto a_inner_x1 = b.split(1, b.leaf(false), b.leaf(true));
  const auto a_x4 = b.split(4, b.leaf(false), a_inner_x1);
  const auto a_x2 = b.split(2, a_x1, a_x4);
  // x3 = 1 branch
  const auto c_x4 = b.split(4, b.leaf(false), b.leaf(true));
  const auto c_x2 = b.split(2, b.leaf(false), c_x4);
  return b.build(b.split(3, a_x2, c_x2));
}

RandomForest orchid_forest() {
  return RandomForest({orchid_t1(), orchid_t2(), orchid_t3()});
}

Term term(std::initializer_list<int> dimacs) {
  std::vector<Literal> lits;
  for (int d : dimacs) lits.push_back(Literal::from_dimacs(d));
  return Term(std::move(lits));
}

Clause clause(std::initializer_list<int> dimacs) {
  std::vector<Literal> lits;
  for (int d : dimacs) lits.push_back(Literal::from_dimacs(d));
  return Clause(std::move(lits));
}

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::uniform(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return lo + static_cast<int>(r % span);
}

bool Rng::coin(double p_true) {
  return static_cast<double>(next() >> 11) * 0x1.0p-53 < p_true;
}

namespace {

DecisionTree::NodeId grow(Rng& rng, TreeBuilder& b, std::vector<int>& free,
                          int depth, const TreeShape& shape) {
  if (depth >= shape.max_depth || free.empty() ||
      (depth > 0 && rng.coin(shape.leaf_probability))) {
    return b.leaf(rng.coin());
  }
  const int pick = rng.uniform(0, static_cast<int>(free.size()) - 1);
  const int var = free[pick];
  free.erase(free.begin() + pick);
  const auto low = grow(rng, b, free, depth + 1, shape);
  const auto high = grow(rng, b, free, depth + 1, shape);
  free.insert(free.begin() + pick, var);
  return b.split(var, low, high);
}

}  // namespace

DecisionTree random_tree(Rng& rng, int var_count, TreeShape shape) {
  TreeBuilder b(var_count);
  std::vector<int> free;
  for (int v = 1; v <= var_count; ++v) free.push_back(v);
  return b.build(grow(rng, b, free, 0, shape));
}

RandomForest random_forest(Rng& rng, int var_count, int tree_count,
                           TreeShape shape) {
  std::vector<DecisionTree> trees;
  for (int i = 0; i < tree_count; ++i) {
    trees.push_back(random_tree(rng, var_count, shape));
  }
  return RandomForest(std::move(trees));
}

Instance random_instance(Rng& rng, int var_count) {
  std::vector<std::uint8_t> bits(var_count);
  for (auto& b : bits) b = rng.coin() ? 1 : 0;
  return Instance(std::move(bits));
}

Term random_subterm(Rng& rng, const Instance& x, double keep) {
  std::vector<Literal> lits;
  for (int v = 1; v <= x.size(); ++v) {
    if (rng.coin(keep)) lits.emplace_back(v, x.value(v));
  }
  return Term(std::move(lits));
}

Term random_term(Rng& rng, int var_count, double keep) {
  return random_subterm(rng, random_instance(rng, var_count), keep);
}

Clause random_clause(Rng& rng, int var_count, int max_size) {
  const int size = rng.uniform(0, max_size);
  std::vector<Literal> lits;
  for (int i = 0; i < size; ++i) {
    lits.emplace_back(rng.uniform(1, var_count), rng.coin());
  }
  return Clause(std::move(lits));
}

sat::CnfInstance random_kcnf(Rng& rng, int var_count, int clause_count, int k) {
  sat::CnfInstance cnf(var_count);
  for (int i = 0; i < clause_count; ++i) {
    std::vector<Literal> lits;
    for (int j = 0; j < k; ++j) {
      lits.emplace_back(rng.uniform(1, var_count), rng.coin());
    }
    cnf.add(Clause(std::move(lits)));
  }
  return cnf;
}

std::optional<std::vector<std::uint8_t>> brute_model(
    const sat::CnfInstance& cnf, const std::vector<Literal>& assumptions) {
  const int n = cnf.var_count();
  std::vector<std::uint8_t> model(n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    for (int v = 0; v < n; ++v) model[v] = (m >> v) & 1u;
    const bool ok = std::all_of(
        assumptions.begin(), assumptions.end(),
        [&](Literal l) { return l.satisfied_by(model[l.var() - 1] != 0); });
    if (ok && cnf.satisfied_by(model)) return model;
  }
  return std::nullopt;
}

std::optional<std::int64_t> brute_maxsat(const sat::WeightedCnf& problem) {
  const int n = problem.var_count();
  std::optional<std::int64_t> best;
  std::vector<std::uint8_t> model(n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    for (int v = 0; v < n; ++v) model[v] = (m >> v) & 1u;
    if (!problem.hard.satisfied_by(model)) continue;
    const std::int64_t c = problem.cost(model);
    if (!best || c < *best) best = c;
  }
  return best;
}

}  // namespace rfx::testing
