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

#include "rfx/explain/explainers.h"

#include <algorithm>
#include <chrono>
#include <string>

#include "rfx/sat/cnf.h"

namespace rfx {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<int> order_or_default(std::span<const int> order, int n) {
  return order.empty() ? default_order(n) : complete_order(order, n);
}

Reason make_reason(ReasonKind kind, Term term, const Instance& x,
                   bool prediction, Clock::time_point started) {
  Reason r;
  r.term = std::move(term);
  r.kind = kind;
  r.instance = x;
  r.prediction = prediction;
  r.elapsed = Clock::now() - started;
  return r;
}

void check_dimension(int expected, const Instance& x) {
  if (x.size() != expected) {
    throw LogicError("instance has " + std::to_string(x.size()) +
                     " features, the model expects " + std::to_string(expected));
  }
}

}  // namespace

Reason direct_reason(const RandomForest& forest, const Instance& x) {
  const auto started = Clock::now();
  const bool prediction = forest.eval(x);
  std::vector<Literal> lits;
  for (const DecisionTree& tree : forest.trees()) {
    if (tree.eval(x) != prediction) continue;
    const Term path = tree.path_term(x);
    lits.insert(lits.end(), path.begin(), path.end());
  }
  return make_reason(ReasonKind::kDirect, Term(std::move(lits)), x, prediction,
                     started);
}

Reason sufficient_reason_dt(const DecisionTree& tree, const Instance& x,
                            std::span<const int> order) {
  const auto started = Clock::now();
  check_dimension(tree.var_count(), x);
  const bool prediction = tree.eval(x);
  TreeOracle oracle(prediction ? tree : tree.negated());
  Term t = greedy_reduce(oracle, Term::of_instance(x),
                         order_or_default(order, tree.var_count()));
  return make_reason(ReasonKind::kSufficient, std::move(t), x, prediction,
                     started);
}

Reason majoritary_reason(const RandomForest& forest, const Instance& x,
                         std::span<const int> order) {
  const auto started = Clock::now();
  check_dimension(forest.var_count(), x);
  const bool prediction = forest.eval(x);
  MajorityOracle oracle(prediction ? forest : forest.negated());
  Term t = greedy_reduce(oracle, Term::of_instance(x),
                         order_or_default(order, forest.var_count()));
  return make_reason(ReasonKind::kMajoritary, std::move(t), x, prediction,
                     started);
}

Reason majoritary_reason_multi(const RandomForest& forest, const Instance& x,
                               int permutations, std::uint64_t seed) {
  if (permutations < 1) throw LogicError("permutations must be at least 1");
  const auto started = Clock::now();
  check_dimension(forest.var_count(), x);
  const bool prediction = forest.eval(x);
  MajorityOracle oracle(prediction ? forest : forest.negated());
  const Term full = Term::of_instance(x);
  std::uint64_t state = seed;
  std::optional<Term> best;
  for (int k = 0; k < permutations; ++k) {
    const std::vector<int> order = random_order(forest.var_count(), state);
    Term t = greedy_reduce(oracle, full, order);
    if (!best || t.size() < best->size()) best = std::move(t);
  }
  Reason r = make_reason(ReasonKind::kMajoritary, std::move(*best), x,
                         prediction, started);
  r.notes.push_back("best of " + std::to_string(permutations) +
                    " permutations, seed " + std::to_string(seed));
  return r;
}

Reason sufficient_reason_rf(const RandomForest& forest, const Instance& x,
                            const SufficientOptions& options) {
  const auto started = Clock::now();
  check_dimension(forest.var_count(), x);
  const bool prediction = forest.eval(x);
  const RandomForest model = prediction ? forest : forest.negated();
  const Term full = Term::of_instance(x);
  Term start = options.start.value_or(full);
  if (!start.subset_of(full)) {
    throw LogicError("the starting term " + to_string(start) +
                     " does not cover the instance");
  }
  const std::vector<int> order =
      order_or_default(options.order, forest.var_count());

  ForestSatOracle oracle(model);
  oracle.set_deadline(options.deadline);
  // Deletion loop written out so that a timeout can report the current term.
  Term t = start;
  try {
    if (!oracle.accepts(t)) {
      throw NotAnImplicant("the starting term " + to_string(t) +
                           " is not an implicant of the forest");
    }
    if (options.use_cores) t = oracle.refine(t);
    for (int v : order) {
      if (!t.mentions(v)) continue;
      Term candidate = t.without(v);
      if (oracle.accepts(candidate)) {
        t = options.use_cores ? oracle.refine(candidate) : std::move(candidate);
      }
    }
  } catch (const sat::SolverTimeout&) {
    Reason partial = make_reason(ReasonKind::kSufficient, t, x, prediction,
                                 started);
    partial.notes.push_back("timeout: implicant, not necessarily prime");
    throw ExplanationTimeout(std::move(partial));
  }
  Reason r = make_reason(ReasonKind::kSufficient, std::move(t), x, prediction,
                         started);
  r.notes.push_back(std::to_string(oracle.queries()) + " SAT calls");
  return r;
}

Reason delta_probable_reason_dt(const DecisionTree& tree, const Instance& x,
                                const Rational& delta,
                                std::span<const int> order) {
  const auto started = Clock::now();
  check_dimension(tree.var_count(), x);
  const bool prediction = tree.eval(x);
  const DecisionTree model = prediction ? tree : tree.negated();
  DeltaProbableOracle oracle(model, delta);
  Term t = greedy_reduce(oracle, Term::of_instance(x),
                         order_or_default(order, tree.var_count()));
  Reason r = make_reason(ReasonKind::kDeltaProbable, t, x, prediction,
                         started);
  r.probability = conditional_probability(model, t);
  return r;
}

std::optional<Reason> comprehensible_reason(PreparedOracle& prepared,
                                            const Instance& x,
                                            std::span<const int> intelligible,
                                            std::span<const int> order) {
  const auto started = Clock::now();
  ImplicantOracle& oracle = *prepared.oracle;
  const int n = oracle.var_count();
  check_dimension(n, x);
  std::vector<bool> mask(n + 1, false);
  for (int v : intelligible) {
    if (v < 1 || v > n) {
      throw LogicError("intelligible feature x" + std::to_string(v) +
                       " outside 1.." + std::to_string(n));
    }
    mask[v] = true;
  }
  const Term restricted = Term::of_instance(x).restricted_to(mask);
  if (!oracle.accepts(restricted)) return std::nullopt;
  Term t = greedy_reduce(oracle, restricted, order_or_default(order, n));
  Reason r = make_reason(ReasonKind::kComprehensible, std::move(t), x,
                         prepared.prediction, started);
  r.notes.push_back("oracle: " + oracle.name());
  return r;
}

Prioritization::Prioritization(std::vector<std::vector<int>> strata,
                               int var_count)
    : strata_(std::move(strata)), var_count_(var_count) {
  std::vector<bool> seen(var_count + 1, false);
  for (auto& stratum : strata_) {
    if (stratum.empty()) throw LogicError("empty stratum in prioritization");
    for (int v : stratum) {
      if (v < 1 || v > var_count) {
        throw LogicError("stratum feature x" + std::to_string(v) +
                         " outside 1.." + std::to_string(var_count));
      }
      if (seen[v]) {
        throw LogicError("x" + std::to_string(v) +
                         " appears in more than one stratum");
      }
      seen[v] = true;
    }
    std::sort(stratum.begin(), stratum.end());
  }
}

std::vector<int> Prioritization::elimination_order() const {
  std::vector<int> order;
  std::vector<bool> seen(var_count_ + 1, false);
  for (const auto& stratum : strata_) {
    for (int v : stratum) {
      order.push_back(v);
      seen[v] = true;
    }
  }
  for (int v = 1; v <= var_count_; ++v) {
    if (!seen[v]) order.push_back(v);
  }
  return order;
}

Reason inclusion_preferred_reason(PreparedOracle& prepared, const Instance& x,
                                  const Prioritization& prio) {
  const auto started = Clock::now();
  ImplicantOracle& oracle = *prepared.oracle;
  const int n = oracle.var_count();
  check_dimension(n, x);
  if (prio.var_count() != n) {
    throw LogicError("prioritization covers " +
                     std::to_string(prio.var_count()) +
                     " features, the model has " + std::to_string(n));
  }
  Term t = greedy_reduce(oracle, Term::of_instance(x),
                         prio.elimination_order());
  Reason r = make_reason(ReasonKind::kInclusionPreferred, std::move(t), x,
                         prepared.prediction, started);
  r.notes.push_back("oracle: " + oracle.name());
  return r;
}

Rational LinearModel::score(const Instance& x) const {
  check_dimension(var_count(), x);
  Rational s = 0;
  for (int i = 0; i < var_count(); ++i) {
    if (x.value(i + 1)) s += weights[i];
  }
  return s;
}

bool LinearModel::implied_by(const Term& t, bool positive) const {
  // Extreme completion of t: free features take the value that pushes the
  // score towards the other class.
  Rational s = 0;
  for (int v = 1; v <= var_count(); ++v) {
    const Rational& w = weights[v - 1];
    if (const Literal* l = t.find(v)) {
      if (l->positive()) s += w;
    } else if (positive ? w < 0 : w > 0) {
      s += w;
    }
  }
  return positive ? s > 0 : s <= 0;
}

Reason lime_linear_reason(const LinearModel& model, const Instance& x) {
  const auto started = Clock::now();
  const bool positive = model.eval(x);
  Rational opposing = 0;
  std::vector<int> candidates;
  for (int v = 1; v <= model.var_count(); ++v) {
    const Rational& w = model.weights[v - 1];
    if (positive ? w < 0 : w > 0) opposing += abs(w);
    if (x.value(v) && (positive ? w > 0 : w < 0)) candidates.push_back(v);
  }
  std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
    return abs(model.weights[a - 1]) > abs(model.weights[b - 1]);
  });
  std::vector<Literal> lits;
  Rational sum = 0;
  bool reached = positive ? sum > opposing : sum >= opposing;
  for (int v : candidates) {
    if (reached) break;
    lits.push_back(Literal::pos(v));
    sum += abs(model.weights[v - 1]);
    reached = positive ? sum > opposing : sum >= opposing;
  }
  Reason r;
  if (reached) {
    r = make_reason(ReasonKind::kLime, Term(std::move(lits)), x, positive,
                    started);
  } else {
    r = make_reason(ReasonKind::kLime, Term::of_instance(x), x, positive,
                    started);
    r.fallback = true;
    r.notes.push_back("selected weights never outweigh the opposite mass; "
                      "returning the full instance term");
  }
  return r;
}

}  // namespace rfx
