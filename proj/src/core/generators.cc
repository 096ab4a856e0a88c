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

#include "rfx/generators.h"

#include <string>
#include <vector>

namespace rfx {

namespace {

DecisionTree::NodeId build_parity(TreeBuilder& b, int var, int n, bool odd) {
  if (var > n) return b.leaf(odd);
  const auto low = build_parity(b, var + 1, n, odd);
  const auto high = build_parity(b, var + 1, n, !odd);
  return b.split(var, low, high);
}

}  // namespace

DecisionTree parity_tree(int var_count) {
  if (var_count < 1 || var_count > 20) {
    throw LogicError("parity trees need 1 to 20 features, got " +
                     std::to_string(var_count));
  }
  TreeBuilder b(var_count);
  return b.build(build_parity(b, 1, var_count, false));
}

RandomForest parity_forest(int var_count, int copies) {
  if (copies < 1) throw LogicError("copies must be at least 1");
  const DecisionTree t = parity_tree(var_count);
  const DecisionTree not_t = t.negated();
  std::vector<DecisionTree> trees;
  for (int i = 0; i < copies; ++i) trees.push_back(t);
  for (int i = 0; i < copies; ++i) trees.push_back(not_t);
  trees.push_back(DecisionTree::constant(var_count, true));
  return RandomForest(std::move(trees));
}

}  // namespace rfx
