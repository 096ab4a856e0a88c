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

#ifndef RFX_OPTIMIZE_MINIMAL_H_
#define RFX_OPTIMIZE_MINIMAL_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "rfx/deadline.h"
#include "rfx/explain/reason.h"
#include "rfx/forest.h"
#include "rfx/sat/cnf.h"
#include "rfx/tree.h"

namespace rfx {

// Positive integer weight per feature (index 0 is x1).
class WeightMap {
 public:
  WeightMap() = default;
  // Throws LogicError on weights below 1 or a total above 2^31 - 1.
  explicit WeightMap(std::vector<std::int64_t> weights);
  static WeightMap uniform(int var_count) {
    return WeightMap(std::vector<std::int64_t>(var_count, 1));
  }

  int var_count() const { return static_cast<int>(weights_.size()); }
  std::int64_t operator[](int var) const { return weights_[var - 1]; }
  const std::vector<std::int64_t>& values() const { return weights_; }
  std::int64_t weight_of(const Term& t) const;

 private:
  std::vector<std::int64_t> weights_;
};

struct AnytimeEntry {
  std::chrono::duration<double> elapsed{};
  std::int64_t cost = 0;
  Term term;
};

// Improvements in discovery order; costs strictly decrease.
using AnytimeLog = std::vector<AnytimeEntry>;

using ReasonCallback = std::function<void(const AnytimeEntry&)>;

struct MinimalResult {
  Reason reason;
  AnytimeLog log;
};

// The deadline passed before the first model. `fallback` is t_x.
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(Reason fallback)
      : std::runtime_error("time budget exhausted before the first solution"),
        fallback_(std::move(fallback)) {}
  const Reason& fallback() const { return fallback_; }

 private:
  Reason fallback_;
};

// Weighted Partial MaxSAT instance whose optima are the minimum-weight
// majoritary reasons for x given `forest`, which must classify x as 1.
// Variables: x1..xn, then one selector s_i per tree.
//   soft: (¬l, w(var l)) for every literal l of t_x
//   hard: (¬s_i ∨ c|x) for every clause c of cnf(T_i), where c|x keeps the
//         literals of c that belong to t_x; an empty c|x becomes (¬s_i)
//         at least floor(m/2) + 1 selectors true
// A model z yields the reason t_x ∩ t_z.
//
// Here c ranges over cnf(T_i), not cnf(¬T_i) as in the implicant encoding:
// this formula looks for a term satisfying the trees, the other refutes one.
sat::WeightedCnf build_minimal_reason_wcnf(const RandomForest& forest,
                                           const Instance& x,
                                           const WeightMap& weights);

// Minimum-size majoritary reason (of the negated forest when F(x) = 0), by
// anytime MaxSAT. Each improvement is validated as a majority implicant and
// reported through `on_improve`. When the deadline passes after at least one
// model, the best one is returned with optimal = false; before any model,
// BudgetExhausted is thrown.
MinimalResult minimal_majoritary_reason(const RandomForest& forest,
                                        const Instance& x,
                                        const Deadline& deadline = {},
                                        const ReasonCallback& on_improve = {});

// Same with feature weights: minimizes the total weight of the reason.
MinimalResult minimal_weight_majoritary_reason(
    const RandomForest& forest, const Instance& x, const WeightMap& weights,
    const Deadline& deadline = {}, const ReasonCallback& on_improve = {});

// Minimum-size sufficient reason for a single tree: the one-tree case of the
// construction above.
MinimalResult minimal_sufficient_reason_dt(const DecisionTree& tree,
                                           const Instance& x,
                                           const Deadline& deadline = {});

// Hypergraph for greedy covering: the literals of t_x, and one edge per
// 0-path p of T holding the literals of t_x whose complement lies on p.
// A subset of t_x implies T iff it meets every edge.
struct HittingSetInstance {
  std::vector<Literal> universe;
  std::vector<Term> sets;
};

// T must classify x as 1.
HittingSetInstance build_hitting_instance(const DecisionTree& tree,
                                          const Instance& x);

// Greedy covering: repeatedly take the literal hitting the most uncovered
// edges (lowest index on ties), then drop redundant literals with a greedy
// pass. The result is a sufficient reason of T (of ¬T when T(x) = 0).
Reason approx_minimal_reason_dt(const DecisionTree& tree, const Instance& x);

}  // namespace rfx

#endif  // RFX_OPTIMIZE_MINIMAL_H_
