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

#ifndef RFX_EXPLAIN_BRUTE_FORCE_H_
#define RFX_EXPLAIN_BRUTE_FORCE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "rfx/forest.h"
#include "rfx/logic.h"
#include "rfx/numeric.h"
#include "rfx/tree.h"

// Exhaustive reference implementations. Every function enumerates all 2^n
// assignments (or all subsets of t_x) and refuses models with more than
// `var_limit` features.
namespace rfx::brute {

inline constexpr int kDefaultVarLimit = 16;

class VarLimitExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Assignment with bit (v - 1) of `mask` as the value of x_v.
Instance instance_of_mask(std::uint32_t mask, int var_count);

bool is_implicant(const RandomForest& forest, const Term& t,
                  int var_limit = kDefaultVarLimit);
bool is_implicant(const DecisionTree& tree, const Term& t,
                  int var_limit = kDefaultVarLimit);
BigInt count_models(const DecisionTree& tree, const Term& t,
                    int var_limit = kDefaultVarLimit);
Rational conditional_probability(const DecisionTree& tree, const Term& t,
                                 int var_limit = kDefaultVarLimit);

// Subsets of t_x, indexed by a mask over positions 0..n-1 (bit v-1 keeps
// the literal on x_v).
Term subterm(const Instance& x, std::uint32_t keep);

// implicant[keep] for every subset of t_x, for a function given by its
// truth table (table[mask] = f(instance_of_mask(mask))). O(n 2^n).
std::vector<bool> implicant_table(const std::vector<bool>& table,
                                  const Instance& x);

// Sufficient reasons: prime implicants of F (of ¬F when F(x) = 0) covering
// x, in canonical order.
std::vector<Term> enumerate_sufficient_reasons(
    const RandomForest& forest, const Instance& x,
    int var_limit = kDefaultVarLimit);

// Majoritary reasons: subset-minimal terms covering x that imply a strict
// majority of the trees (of the negated forest when F(x) = 0).
std::vector<Term> enumerate_majoritary_reasons(
    const RandomForest& forest, const Instance& x,
    int var_limit = kDefaultVarLimit);

// Minimum total weight over terms covering x that imply a strict majority
// of the trees; weights default to 1.
std::int64_t min_majoritary_weight(const RandomForest& forest,
                                   const Instance& x,
                                   std::span<const std::int64_t> weights = {},
                                   int var_limit = kDefaultVarLimit);

// Size of the smallest sufficient reason.
int min_sufficient_size(const RandomForest& forest, const Instance& x,
                        int var_limit = kDefaultVarLimit);

}  // namespace rfx::brute

#endif  // RFX_EXPLAIN_BRUTE_FORCE_H_
