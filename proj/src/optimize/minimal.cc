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

#include "rfx/optimize/minimal.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "rfx/explain/greedy.h"
#include "rfx/explain/oracle.h"
#include "rfx/sat/cardinality.h"
#include "rfx/sat/maxsat.h"

namespace rfx {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::int64_t kMaxTotalWeight = std::numeric_limits<std::int32_t>::max();

void check_dimension(int expected, const Instance& x) {
  if (x.size() != expected) {
    throw LogicError("instance has " + std::to_string(x.size()) +
                     " features, the model expects " + std::to_string(expected));
  }
}

Term term_of_model(const Instance& x, const std::vector<std::uint8_t>& model) {
  std::vector<Literal> lits;
  for (int v = 1; v <= x.size(); ++v) {
    if ((model[v - 1] != 0) == x.value(v)) lits.emplace_back(v, x.value(v));
  }
  return Term(std::move(lits));
}

MinimalResult solve_minimal(const RandomForest& forest, const Instance& x,
                            const WeightMap& weights, ReasonKind kind,
                            const Deadline& deadline,
                            const ReasonCallback& on_improve) {
  const auto started = Clock::now();
  check_dimension(forest.var_count(), x);
  if (weights.var_count() != forest.var_count()) {
    throw LogicError("weight map covers " + std::to_string(weights.var_count()) +
                     " features, the model has " +
                     std::to_string(forest.var_count()));
  }
  const bool prediction = forest.eval(x);
  const RandomForest model = prediction ? forest : forest.negated();
  const sat::WeightedCnf problem =
      build_minimal_reason_wcnf(model, x, weights);
  MajorityOracle oracle(model);

  MinimalResult result;
  auto on_model = [&](const sat::MaxSatImprovement& imp) {
    AnytimeEntry entry;
    entry.elapsed = Clock::now() - started;
    entry.term = term_of_model(x, imp.model);
    entry.cost = weights.weight_of(entry.term);
    if (entry.cost != imp.cost || !oracle.accepts(entry.term)) {
      throw std::logic_error("MaxSAT model yields an invalid reason " +
                             to_string(entry.term));
    }
    result.log.push_back(entry);
    if (on_improve) on_improve(result.log.back());
  };
  const sat::MaxSatResult best = sat::maxsat_anytime(problem, deadline, on_model);

  Reason& r = result.reason;
  r.kind = kind;
  r.instance = x;
  r.prediction = prediction;
  if (best.status == sat::MaxSatStatus::kNoModel) {
    r.term = Term::of_instance(x);
    r.cost = weights.weight_of(r.term);
    r.fallback = true;
    r.elapsed = Clock::now() - started;
    r.notes.push_back("no solution within the budget; returning t_x");
    throw BudgetExhausted(std::move(r));
  }
  r.term = term_of_model(x, best.model);
  r.cost = weights.weight_of(r.term);
  r.optimal = best.optimal();
  if (!oracle.accepts(r.term) || (r.optimal && !is_one_minimal(oracle, r.term))) {
    throw std::logic_error("MaxSAT optimum yields an invalid reason " +
                           to_string(r.term));
  }
  r.elapsed = Clock::now() - started;
  return result;
}

}  // namespace

WeightMap::WeightMap(std::vector<std::int64_t> weights)
    : weights_(std::move(weights)) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 1) {
      throw LogicError("weight of x" + std::to_string(i + 1) +
                       " must be a positive integer");
    }
    total += std::min(weights_[i], kMaxTotalWeight + 1);
    if (total > kMaxTotalWeight) {
      throw LogicError("total feature weight exceeds 2^31 - 1");
    }
  }
}

std::int64_t WeightMap::weight_of(const Term& t) const {
  std::int64_t w = 0;
  for (Literal l : t) w += (*this)[l.var()];
  return w;
}

sat::WeightedCnf build_minimal_reason_wcnf(const RandomForest& forest,
                                           const Instance& x,
                                           const WeightMap& weights) {
  const int n = forest.var_count();
  const int m = forest.tree_count();
  check_dimension(n, x);
  sat::WeightedCnf problem;
  problem.hard = sat::CnfInstance(n);
  for (int v = 1; v <= n; ++v) {
    problem.soft.push_back({Clause{Literal(v, !x.value(v))}, weights[v]});
  }
  std::vector<Literal> selectors;
  for (int i = 0; i < m; ++i) {
    selectors.push_back(Literal::pos(problem.hard.new_var()));
  }
  for (int i = 0; i < m; ++i) {
    const Literal s = selectors[i];
    for (const Clause& c : forest.tree(i).to_cnf()) {
      std::vector<Literal> restricted{~s};
      for (Literal l : c) {
        if (l.satisfied_by(x.value(l.var()))) restricted.push_back(l);
      }
      problem.hard.add(Clause(std::move(restricted)));
    }
  }
  const sat::CardEncoding card =
      sat::encode_card_majority(selectors, problem.hard);
  problem.hard.append(card.clauses);
  return problem;
}

MinimalResult minimal_majoritary_reason(const RandomForest& forest,
                                        const Instance& x,
                                        const Deadline& deadline,
                                        const ReasonCallback& on_improve) {
  return solve_minimal(forest, x, WeightMap::uniform(forest.var_count()),
                       ReasonKind::kMinimalMajoritary, deadline, on_improve);
}

MinimalResult minimal_weight_majoritary_reason(
    const RandomForest& forest, const Instance& x, const WeightMap& weights,
    const Deadline& deadline, const ReasonCallback& on_improve) {
  return solve_minimal(forest, x, weights, ReasonKind::kMinimalWeight,
                       deadline, on_improve);
}

MinimalResult minimal_sufficient_reason_dt(const DecisionTree& tree,
                                           const Instance& x,
                                           const Deadline& deadline) {
  return solve_minimal(RandomForest({tree}), x,
                       WeightMap::uniform(tree.var_count()),
                       ReasonKind::kMinimalSufficient, deadline, {});
}

HittingSetInstance build_hitting_instance(const DecisionTree& tree,
                                          const Instance& x) {
  check_dimension(tree.var_count(), x);
  if (!tree.eval(x)) {
    throw LogicError("build_hitting_instance needs a tree classifying x as 1");
  }
  HittingSetInstance h;
  const Term tx = Term::of_instance(x);
  h.universe = tx.literals();
  // The clause of a 0-path p is the negation of p, so its literals in t_x
  // are exactly those whose complement lies on p.
  for (const Clause& c : tree.to_cnf()) {
    std::vector<Literal> hit;
    for (Literal l : c) {
      if (tx.contains(l)) hit.push_back(l);
    }
    h.sets.emplace_back(std::move(hit));
  }
  return h;
}

Reason approx_minimal_reason_dt(const DecisionTree& tree, const Instance& x) {
  const auto started = Clock::now();
  check_dimension(tree.var_count(), x);
  const bool prediction = tree.eval(x);
  const DecisionTree model = prediction ? tree : tree.negated();
  const HittingSetInstance h = build_hitting_instance(model, x);
  const int n = tree.var_count();

  std::vector<bool> covered(h.sets.size(), false);
  std::size_t remaining = h.sets.size();
  std::vector<Literal> chosen;
  int max_degree = 0;
  bool first_round = true;
  while (remaining > 0) {
    std::vector<int> degree(n + 1, 0);
    for (std::size_t s = 0; s < h.sets.size(); ++s) {
      if (covered[s]) continue;
      for (Literal l : h.sets[s]) ++degree[l.var()];
    }
    int best = 0;
    for (int v = 1; v <= n; ++v) {
      if (degree[v] > degree[best]) best = v;
    }
    if (degree[best] == 0) throw std::logic_error("uncoverable 0-path");
    if (first_round) max_degree = degree[best];
    first_round = false;
    const Literal l(best, x.value(best));
    chosen.push_back(l);
    for (std::size_t s = 0; s < h.sets.size(); ++s) {
      if (!covered[s] && h.sets[s].contains(l)) {
        covered[s] = true;
        --remaining;
      }
    }
  }
  TreeOracle oracle(model);
  Term t = greedy_reduce(oracle, Term(std::move(chosen)), default_order(n));

  Reason r;
  r.term = std::move(t);
  r.kind = ReasonKind::kApproxMinimal;
  r.instance = x;
  r.prediction = prediction;
  r.cost = r.term.size();
  r.elapsed = Clock::now() - started;
  r.notes.push_back("edges " + std::to_string(h.sets.size()) +
                    ", max degree A = " + std::to_string(max_degree));
  return r;
}

}  // namespace rfx
