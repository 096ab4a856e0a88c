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

#ifndef RFX_FOREST_H_
#define RFX_FOREST_H_

#include <span>
#include <string>
#include <vector>

#include "rfx/logic.h"
#include "rfx/tree.h"

namespace rfx {

// A majority-vote ensemble of decision trees over a shared feature space.
// F(x) = 1 iff strictly more than m/2 trees output 1.
class RandomForest {
 public:
  explicit RandomForest(std::vector<DecisionTree> trees,
                        std::vector<std::string> feature_names = {});

  int var_count() const { return var_count_; }
  int tree_count() const { return static_cast<int>(trees_.size()); }
  const std::vector<DecisionTree>& trees() const { return trees_; }
  const DecisionTree& tree(int i) const { return trees_[i]; }
  const std::vector<std::string>& feature_names() const {
    return feature_names_;
  }
  // |F| = sum of tree sizes.
  int size() const;
  // ⌊m/2⌋ + 1 trees must vote 1.
  int majority_threshold() const { return tree_count() / 2 + 1; }

  int votes(const Instance& x) const;
  bool eval(const Instance& x) const;

  // A forest computing 1 - F(x). Trees are negated one by one; for an even
  // number of trees a constant-1 tree is appended to the result so that
  // "at most m/2 positive votes" maps exactly onto the new strict majority.
  RandomForest negated() const;

  RandomForest with_feature_names(std::vector<std::string> names) const;

  friend bool operator==(const RandomForest&, const RandomForest&) = default;

 private:
  std::vector<DecisionTree> trees_;
  std::vector<std::string> feature_names_;
  int var_count_ = 0;
};

// Linear-size tree equivalent to a clause: a comb testing each literal in
// variable order. Empty clause -> leaf 0, tautology -> leaf 1.
DecisionTree clause_to_tree(const Clause& clause, int var_count);

// p clause trees plus p-1 constant-0 trees (2p-1 in total): the majority is
// reached iff every clause holds. An empty clause set yields the constant-1
// forest.
RandomForest cnf_to_forest(std::span<const Clause> clauses, int var_count);

// Negate each term into a clause, build the CNF forest, negate the forest.
RandomForest dnf_to_forest(std::span<const Term> terms, int var_count);

}  // namespace rfx

#endif  // RFX_FOREST_H_
