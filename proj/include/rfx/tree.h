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

#ifndef RFX_TREE_H_
#define RFX_TREE_H_

#include <vector>

#include "rfx/logic.h"
#include "rfx/numeric.h"

namespace rfx {

// A Boolean decision tree stored as a node arena. Internal nodes test one
// variable and branch to `low` on 0 and `high` on 1; leaves carry a class bit.
//
// Construction validates the structure once: every node is reachable from the
// root exactly once, child indices are in range, tested variables lie in
// [1, var_count] and no variable repeats on a root-to-leaf path (read-once).
// Instances are immutable afterwards.
class DecisionTree {
 public:
  using NodeId = int;

  struct Node {
    int var = 0;  // 0 for leaves
    NodeId low = -1;
    NodeId high = -1;
    bool label = false;  // leaves only

    bool is_leaf() const { return var == 0; }
    static Node leaf(bool label) { return Node{0, -1, -1, label}; }
    static Node split(int var, NodeId low, NodeId high) {
      return Node{var, low, high, false};
    }
    friend bool operator==(const Node&, const Node&) = default;
  };

  DecisionTree() : DecisionTree(0, {Node::leaf(false)}, 0) {}
  DecisionTree(int var_count, std::vector<Node> nodes, NodeId root);

  static DecisionTree constant(int var_count, bool label) {
    return DecisionTree(var_count, {Node::leaf(label)}, 0);
  }

  int var_count() const { return var_count_; }
  NodeId root() const { return root_; }
  const Node& node(NodeId id) const { return nodes_[id]; }
  const std::vector<Node>& nodes() const { return nodes_; }
  // |T|: number of nodes.
  int size() const { return static_cast<int>(nodes_.size()); }
  int depth() const;
  bool is_constant() const { return nodes_[root_].is_leaf(); }

  bool eval(const Instance& x) const;
  // The term of the unique root-to-leaf path compatible with x.
  Term path_term(const Instance& x) const;

  // Same structure with leaf labels flipped.
  DecisionTree negated() const;

  // One clause per 0-path (the negated path term). Their conjunction is
  // equivalent to the tree.
  std::vector<Clause> to_cnf() const;
  // One term per 1-path. Their disjunction is equivalent to the tree.
  std::vector<Term> to_dnf() const;

  // True iff every assignment covered by t reaches a 1-leaf. Single traversal
  // under the partial assignment t.
  bool implied_by(const Term& t) const;

  // |{z : T(z) = 1 and t covers z}|, by one traversal weighting each
  // reachable 1-leaf with 2^(free variables).
  BigInt count_models(const Term& t = {}) const;

  // Same tree over a larger feature space.
  DecisionTree widened(int var_count) const;

  // Same feature count and same shape from the root down; the arena layout
  // is ignored.
  friend bool operator==(const DecisionTree& a, const DecisionTree& b);

 private:
  void check_instance(const Instance& x) const;
  void check_term(const Term& t) const;

  int var_count_ = 0;
  std::vector<Node> nodes_;
  NodeId root_ = 0;
};

// Incremental construction helper: children are created before parents.
class TreeBuilder {
 public:
  explicit TreeBuilder(int var_count) : var_count_(var_count) {}

  DecisionTree::NodeId leaf(bool label);
  DecisionTree::NodeId split(int var, DecisionTree::NodeId low,
                             DecisionTree::NodeId high);
  DecisionTree build(DecisionTree::NodeId root) const;

 private:
  int var_count_;
  std::vector<DecisionTree::Node> nodes_;
};

}  // namespace rfx

#endif  // RFX_TREE_H_
