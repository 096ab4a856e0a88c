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

#include "rfx/forest.h"

#include <string>
#include <utility>

namespace rfx {

RandomForest::RandomForest(std::vector<DecisionTree> trees,
                           std::vector<std::string> feature_names)
    : trees_(std::move(trees)), feature_names_(std::move(feature_names)) {
  if (trees_.empty()) throw LogicError("a forest needs at least one tree");
  var_count_ = trees_.front().var_count();
  for (const DecisionTree& t : trees_) {
    if (t.var_count() != var_count_) {
      throw LogicError("trees of a forest must share the feature count");
    }
  }
  if (!feature_names_.empty() &&
      static_cast<int>(feature_names_.size()) != var_count_) {
    throw LogicError("expected " + std::to_string(var_count_) +
                     " feature names, got " +
                     std::to_string(feature_names_.size()));
  }
}

int RandomForest::size() const {
  int total = 0;
  for (const DecisionTree& t : trees_) total += t.size();
  return total;
}

int RandomForest::votes(const Instance& x) const {
  int ones = 0;
  for (const DecisionTree& t : trees_) ones += t.eval(x) ? 1 : 0;
  return ones;
}

bool RandomForest::eval(const Instance& x) const {
  return 2 * votes(x) > tree_count();
}

RandomForest RandomForest::negated() const {
  std::vector<DecisionTree> out;
  out.reserve(trees_.size() + 1);
  for (const DecisionTree& t : trees_) out.push_back(t.negated());
  // With k positive votes out of even m, F = 0 iff k <= m/2 iff the m - k
  // negated votes plus one constant vote form a strict majority of m + 1.
  if (tree_count() % 2 == 0) {
    out.push_back(DecisionTree::constant(var_count_, true));
  }
  return RandomForest(std::move(out), feature_names_);
}

RandomForest RandomForest::with_feature_names(
    std::vector<std::string> names) const {
  return RandomForest(trees_, std::move(names));
}

DecisionTree clause_to_tree(const Clause& clause, int var_count) {
  if (clause.max_var() > var_count) {
    throw LogicError("clause mentions x" + std::to_string(clause.max_var()) +
                     " beyond " + std::to_string(var_count) + " features");
  }
  if (clause.tautological()) return DecisionTree::constant(var_count, true);
  TreeBuilder b(var_count);
  // Built bottom-up: the last literal sits deepest, above the 0-leaf.
  DecisionTree::NodeId rest = b.leaf(false);
  const auto& lits = clause.literals();
  for (auto it = lits.rbegin(); it != lits.rend(); ++it) {
    const DecisionTree::NodeId one = b.leaf(true);
    rest = it->positive() ? b.split(it->var(), rest, one)
                          : b.split(it->var(), one, rest);
  }
  return b.build(rest);
}

RandomForest cnf_to_forest(std::span<const Clause> clauses, int var_count) {
  std::vector<DecisionTree> trees;
  if (clauses.empty()) {
    trees.push_back(DecisionTree::constant(var_count, true));
    return RandomForest(std::move(trees));
  }
  const std::size_t p = clauses.size();
  trees.reserve(2 * p - 1);
  for (const Clause& c : clauses) trees.push_back(clause_to_tree(c, var_count));
  for (std::size_t i = 0; i + 1 < p; ++i) {
    trees.push_back(DecisionTree::constant(var_count, false));
  }
  return RandomForest(std::move(trees));
}

RandomForest dnf_to_forest(std::span<const Term> terms, int var_count) {
  std::vector<Clause> negated;
  negated.reserve(terms.size());
  for (const Term& t : terms) negated.push_back(t.negation());
  return cnf_to_forest(negated, var_count).negated();
}

}  // namespace rfx
