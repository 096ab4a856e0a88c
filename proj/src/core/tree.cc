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

#include "rfx/tree.h"

#include <algorithm>
#include <string>
#include <utility>

namespace rfx {

DecisionTree::DecisionTree(int var_count, std::vector<Node> nodes, NodeId root)
    : var_count_(var_count), nodes_(std::move(nodes)), root_(root) {
  if (var_count_ < 0) throw LogicError("negative variable count");
  const int count = static_cast<int>(nodes_.size());
  if (root_ < 0 || root_ >= count) throw LogicError("tree root out of range");

  // Iterative DFS carrying the set of variables tested on the current path.
  std::vector<char> visited(count, 0);
  std::vector<char> on_path(var_count_ + 1, 0);
  struct Frame {
    NodeId id;
    bool expanded;
  };
  std::vector<Frame> stack{{root_, false}};
  int seen = 0;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const Node& n = nodes_[f.id];
    if (f.expanded) {
      on_path[n.var] = 0;
      stack.pop_back();
      continue;
    }
    if (visited[f.id]) {
      throw LogicError("node " + std::to_string(f.id) +
                       " is reachable twice; the node graph is not a tree");
    }
    visited[f.id] = 1;
    ++seen;
    if (n.is_leaf()) {
      stack.pop_back();
      continue;
    }
    if (n.var < 0 || n.var > var_count_) {
      throw LogicError("node " + std::to_string(f.id) + " tests x" +
                       std::to_string(n.var) + " outside [1, " +
                       std::to_string(var_count_) + "]");
    }
    if (on_path[n.var]) {
      throw LogicError("x" + std::to_string(n.var) +
                       " is tested twice on one path (tree is not read-once)");
    }
    if (n.low < 0 || n.low >= count || n.high < 0 || n.high >= count) {
      throw LogicError("node " + std::to_string(f.id) +
                       " has a child index out of range");
    }
    on_path[n.var] = 1;
    f.expanded = true;
    const NodeId low = n.low, high = n.high;
    stack.push_back({high, false});
    stack.push_back({low, false});
  }
  if (seen != count) {
    throw LogicError(std::to_string(count - seen) +
                     " tree node(s) unreachable from the root");
  }
}

void DecisionTree::check_instance(const Instance& x) const {
  if (x.size() != var_count_) {
    throw LogicError("instance has " + std::to_string(x.size()) +
                     " features, model expects " + std::to_string(var_count_));
  }
}

void DecisionTree::check_term(const Term& t) const {
  if (t.max_var() > var_count_) {
    throw LogicError("term mentions x" + std::to_string(t.max_var()) +
                     " beyond the model's " + std::to_string(var_count_) +
                     " features");
  }
}

bool operator==(const DecisionTree& a, const DecisionTree& b) {
  if (a.var_count_ != b.var_count_) return false;
  using NodeId = DecisionTree::NodeId;
  std::vector<std::pair<NodeId, NodeId>> stack{{a.root_, b.root_}};
  while (!stack.empty()) {
    auto [i, j] = stack.back();
    stack.pop_back();
    const DecisionTree::Node& u = a.nodes_[i];
    const DecisionTree::Node& v = b.nodes_[j];
    if (u.var != v.var) return false;
    if (u.is_leaf()) {
      if (u.label != v.label) return false;
      continue;
    }
    stack.emplace_back(u.low, v.low);
    stack.emplace_back(u.high, v.high);
  }
  return true;
}

int DecisionTree::depth() const {
  int best = 0;
  std::vector<std::pair<NodeId, int>> stack{{root_, 0}};
  while (!stack.empty()) {
    auto [id, d] = stack.back();
    stack.pop_back();
    const Node& n = nodes_[id];
    if (n.is_leaf()) {
      best = std::max(best, d);
    } else {
      stack.emplace_back(n.low, d + 1);
      stack.emplace_back(n.high, d + 1);
    }
  }
  return best;
}

bool DecisionTree::eval(const Instance& x) const {
  check_instance(x);
  NodeId id = root_;
  while (!nodes_[id].is_leaf()) {
    const Node& n = nodes_[id];
    id = x.value(n.var) ? n.high : n.low;
  }
  return nodes_[id].label;
}

Term DecisionTree::path_term(const Instance& x) const {
  check_instance(x);
  std::vector<Literal> lits;
  NodeId id = root_;
  while (!nodes_[id].is_leaf()) {
    const Node& n = nodes_[id];
    const bool v = x.value(n.var);
    lits.emplace_back(n.var, v);
    id = v ? n.high : n.low;
  }
  return Term(std::move(lits));
}

DecisionTree DecisionTree::negated() const {
  DecisionTree out = *this;
  for (Node& n : out.nodes_) {
    if (n.is_leaf()) n.label = !n.label;
  }
  return out;
}

namespace {

// Visits every root-to-leaf path whose leaf has the given label, handing the
// path literals to `emit`.
template <typename Emit>
void for_each_path(const DecisionTree& tree, bool label, Emit&& emit) {
  using NodeId = DecisionTree::NodeId;
  std::vector<Literal> path;
  struct Frame {
    NodeId id;
    int stage;  // 0: enter, 1: low done, 2: high done
  };
  std::vector<Frame> stack{{tree.root(), 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& n = tree.node(f.id);
    if (n.is_leaf()) {
      if (n.label == label) emit(path);
      stack.pop_back();
      continue;
    }
    if (f.stage == 0) {
      f.stage = 1;
      path.emplace_back(n.var, false);
      stack.push_back({n.low, 0});
    } else if (f.stage == 1) {
      f.stage = 2;
      path.back() = Literal(n.var, true);
      stack.push_back({n.high, 0});
    } else {
      path.pop_back();
      stack.pop_back();
    }
  }
}

}  // namespace

std::vector<Clause> DecisionTree::to_cnf() const {
  std::vector<Clause> clauses;
  for_each_path(*this, false, [&](const std::vector<Literal>& path) {
    std::vector<Literal> lits;
    lits.reserve(path.size());
    for (Literal l : path) lits.push_back(~l);
    Clause c(std::move(lits));
    // Impossible for a read-once tree, kept as a guard.
    if (!c.tautological()) clauses.push_back(std::move(c));
  });
  return clauses;
}

std::vector<Term> DecisionTree::to_dnf() const {
  std::vector<Term> terms;
  for_each_path(*this, true, [&](const std::vector<Literal>& path) {
    terms.emplace_back(path);
  });
  return terms;
}

bool DecisionTree::implied_by(const Term& t) const {
  check_term(t);
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    const Node& n = nodes_[stack.back()];
    stack.pop_back();
    if (n.is_leaf()) {
      if (!n.label) return false;
      continue;
    }
    if (const Literal* l = t.find(n.var)) {
      stack.push_back(l->positive() ? n.high : n.low);
    } else {
      stack.push_back(n.low);
      stack.push_back(n.high);
    }
  }
  return true;
}

BigInt DecisionTree::count_models(const Term& t) const {
  check_term(t);
  const int free_at_root = var_count_ - t.size();
  BigInt total = 0;
  // (node, number of variables still free below this node)
  std::vector<std::pair<NodeId, int>> stack{{root_, free_at_root}};
  while (!stack.empty()) {
    auto [id, free] = stack.back();
    stack.pop_back();
    const Node& n = nodes_[id];
    if (n.is_leaf()) {
      if (n.label) total += pow2(free);
      continue;
    }
    if (const Literal* l = t.find(n.var)) {
      stack.emplace_back(l->positive() ? n.high : n.low, free);
    } else {
      stack.emplace_back(n.low, free - 1);
      stack.emplace_back(n.high, free - 1);
    }
  }
  return total;
}

DecisionTree DecisionTree::widened(int var_count) const {
  if (var_count < var_count_) {
    throw LogicError("cannot shrink a tree's feature space");
  }
  DecisionTree out = *this;
  out.var_count_ = var_count;
  return out;
}

DecisionTree::NodeId TreeBuilder::leaf(bool label) {
  nodes_.push_back(DecisionTree::Node::leaf(label));
  return static_cast<DecisionTree::NodeId>(nodes_.size() - 1);
}

DecisionTree::NodeId TreeBuilder::split(int var, DecisionTree::NodeId low,
                                        DecisionTree::NodeId high) {
  nodes_.push_back(DecisionTree::Node::split(var, low, high));
  return static_cast<DecisionTree::NodeId>(nodes_.size() - 1);
}

DecisionTree TreeBuilder::build(DecisionTree::NodeId root) const {
  return DecisionTree(var_count_, nodes_, root);
}

}  // namespace rfx
