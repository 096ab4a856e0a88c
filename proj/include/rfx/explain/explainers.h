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

#ifndef RFX_EXPLAIN_EXPLAINERS_H_
#define RFX_EXPLAIN_EXPLAINERS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rfx/deadline.h"
#include "rfx/explain/greedy.h"
#include "rfx/explain/oracle.h"
#include "rfx/explain/reason.h"
#include "rfx/forest.h"
#include "rfx/numeric.h"
#include "rfx/tree.h"

namespace rfx {

inline constexpr std::uint64_t kDefaultSeed = 20190131;

// Conjunction of the path terms of the trees voting like the forest. O(|F|).
Reason direct_reason(const RandomForest& forest, const Instance& x);

// Prime implicant of T (or of ¬T when T(x) = 0) covering x. O(n|T|).
// An empty order means default_order().
Reason sufficient_reason_dt(const DecisionTree& tree, const Instance& x,
                            std::span<const int> order = {});

// Greedy majoritary reason: an implicant of a strict majority of the trees
// (of the negated forest when F(x) = 0), minimal under single-literal
// removal. O(n|F|).
Reason majoritary_reason(const RandomForest& forest, const Instance& x,
                         std::span<const int> order = {});

// Smallest majoritary reason over `permutations` seeded random orders.
Reason majoritary_reason_multi(const RandomForest& forest, const Instance& x,
                               int permutations,
                               std::uint64_t seed = kDefaultSeed);

struct SufficientOptions {
  std::vector<int> order;
  // Start from this term instead of t_x; it must be an implicant covering x
  // (a majoritary reason, for instance).
  std::optional<Term> start;
  Deadline deadline;
  // Shrink with the solver's failed assumptions after each accepted removal.
  bool use_cores = false;
};

// Prime implicant of the forest function covering x, by deletion over the
// SAT implicant encoding: one solver call per candidate removal. Throws
// ExplanationTimeout carrying the current (implicant, not necessarily
// prime) term when the deadline passes.
Reason sufficient_reason_rf(const RandomForest& forest, const Instance& x,
                            const SufficientOptions& options = {});

// Greedy delta-probable reason for a tree: each removal keeps
// P(T(z) = 1 | t) >= delta, computed exactly by model counting.
Reason delta_probable_reason_dt(const DecisionTree& tree, const Instance& x,
                                const Rational& delta,
                                std::span<const int> order = {});

// Reason built only from features in `intelligible`: the restriction of t_x
// to those features, reduced greedily. Empty when the oracle rejects the
// restriction. For monotone oracles that test is exact.
std::optional<Reason> comprehensible_reason(PreparedOracle& oracle,
                                            const Instance& x,
                                            std::span<const int> intelligible,
                                            std::span<const int> order = {});

// Ordered partition of (some of) the features into salience strata, least
// salient first. Features not listed form an implicit last stratum.
class Prioritization {
 public:
  Prioritization() = default;
  // Throws LogicError on empty strata, repeated features or features
  // outside 1..var_count.
  Prioritization(std::vector<std::vector<int>> strata, int var_count);

  const std::vector<std::vector<int>>& strata() const { return strata_; }
  int var_count() const { return var_count_; }
  // Strata in order, ascending index inside each, then the unlisted
  // features in ascending index.
  std::vector<int> elimination_order() const;

 private:
  std::vector<std::vector<int>> strata_;
  int var_count_ = 0;
};

// Greedy elimination following the prioritization: less salient features
// are dropped first.
Reason inclusion_preferred_reason(PreparedOracle& oracle, const Instance& x,
                                  const Prioritization& prio);

// Linear threshold classifier: positive iff w.x > 0.
struct LinearModel {
  std::vector<Rational> weights;  // index 0 is x1

  int var_count() const { return static_cast<int>(weights.size()); }
  Rational score(const Instance& x) const;
  bool eval(const Instance& x) const { return score(x) > 0; }
  // True iff every completion of t gets the same class as x.
  bool implied_by(const Term& t, bool positive) const;
};

// Reason for a linear model's decision. Positive case: literals x_i = 1 with
// positive weight, taken by decreasing weight, until their sum exceeds the
// total negative mass. Negative case: literals x_i = 1 with negative weight,
// by increasing weight, until their magnitude covers the positive mass.
// Ties go to the lower index. When the candidates run out before the bound
// is met, t_x is returned with `fallback` set.
Reason lime_linear_reason(const LinearModel& model, const Instance& x);

}  // namespace rfx

#endif  // RFX_EXPLAIN_EXPLAINERS_H_
