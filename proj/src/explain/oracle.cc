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

#include "rfx/explain/oracle.h"

#include <array>
#include <utility>

namespace rfx {

bool TreeOracle::accepts(const Term& t) {
  ++queries_;
  return tree_.implied_by(t);
}

int MajorityOracle::implied_trees(const Term& t) const {
  int count = 0;
  for (const DecisionTree& tree : forest_.trees()) {
    if (tree.implied_by(t)) ++count;
  }
  return count;
}

bool MajorityOracle::accepts(const Term& t) {
  ++queries_;
  const int need = forest_.majority_threshold();
  int count = 0;
  int left = forest_.tree_count();
  for (const DecisionTree& tree : forest_.trees()) {
    if (tree.implied_by(t) && ++count >= need) return true;
    if (count + --left < need) return false;
  }
  return false;
}

bool ForestSatOracle::accepts(const Term& t) {
  ++queries_;
  const bool ok = checker_.implies(t, deadline_);
  if (ok) {
    last_accepted_ = t;
  } else {
    last_accepted_.reset();
  }
  return ok;
}

Term ForestSatOracle::refine(const Term& t) {
  if (last_accepted_ && *last_accepted_ == t) return checker_.last_core();
  return t;
}

DeltaProbableOracle::DeltaProbableOracle(DecisionTree tree, Rational delta)
    : tree_(std::move(tree)), delta_(std::move(delta)) {
  if (delta_ < 0 || delta_ > 1) {
    throw LogicError("delta must lie in [0, 1], got " + rfx::to_string(delta_));
  }
}

bool DeltaProbableOracle::accepts(const Term& t) {
  ++queries_;
  const BigInt lhs = tree_.count_models(t) * pow2(t.size());
  return Rational(lhs) >= delta_ * Rational(pow2(tree_.var_count()));
}

Rational conditional_probability(const DecisionTree& tree, const Term& t) {
  return Rational(tree.count_models(t)) /
         Rational(pow2(tree.var_count() - t.size()));
}

namespace {

constexpr std::array<std::pair<OracleMode, std::string_view>, 4> kModes = {{
    {OracleMode::kSingleTree, "single-tree"},
    {OracleMode::kMajority, "majority"},
    {OracleMode::kForestSat, "forest-sat"},
    {OracleMode::kDeltaProbable, "delta-probable"},
}};

const DecisionTree& single_tree(const RandomForest& forest) {
  if (forest.tree_count() != 1) {
    throw LogicError("this oracle needs a single decision tree, the model has " +
                     std::to_string(forest.tree_count()) + " trees");
  }
  return forest.tree(0);
}

}  // namespace

std::string_view to_string(OracleMode mode) {
  for (const auto& [m, name] : kModes) {
    if (m == mode) return name;
  }
  return "unknown";
}

std::optional<OracleMode> parse_oracle_mode(std::string_view name) {
  for (const auto& [m, n] : kModes) {
    if (n == name) return m;
  }
  return std::nullopt;
}

PreparedOracle prepare_oracle(OracleMode mode, const RandomForest& forest,
                              const Instance& x,
                              std::optional<Rational> delta) {
  PreparedOracle out;
  out.prediction = forest.eval(x);
  switch (mode) {
    case OracleMode::kSingleTree: {
      const DecisionTree& tree = single_tree(forest);
      out.oracle = std::make_unique<TreeOracle>(
          out.prediction ? tree : tree.negated());
      break;
    }
    case OracleMode::kMajority:
      out.oracle = std::make_unique<MajorityOracle>(
          out.prediction ? forest : forest.negated());
      break;
    case OracleMode::kForestSat:
      out.oracle = std::make_unique<ForestSatOracle>(
          out.prediction ? forest : forest.negated());
      break;
    case OracleMode::kDeltaProbable: {
      if (!delta) throw LogicError("the delta-probable oracle needs delta");
      const DecisionTree& tree = single_tree(forest);
      out.oracle = std::make_unique<DeltaProbableOracle>(
          out.prediction ? tree : tree.negated(), *delta);
      break;
    }
  }
  return out;
}

}  // namespace rfx
