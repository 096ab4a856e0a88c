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

#ifndef RFX_EXPLAIN_GREEDY_H_
#define RFX_EXPLAIN_GREEDY_H_

#include <cstdint>
#include <span>
#include <vector>

#include "rfx/explain/oracle.h"
#include "rfx/logic.h"

namespace rfx {

// Default elimination order: x_n, x_(n-1), ..., x_1.
std::vector<int> default_order(int var_count);

// Validates a user order (distinct variables in [1, n]) and appends the
// missing variables in default order.
std::vector<int> complete_order(std::span<const int> order, int var_count);

// Seeded Fisher-Yates shuffle of 1..n. The bounded draw is implemented
// here so that a seed gives the same permutation on every platform.
std::vector<int> random_order(int var_count, std::uint64_t& state);

struct GreedyOptions {
  // Replace the term by oracle.refine() after each accepted removal.
  bool use_refinement = false;
};

// Starting from `start`, tries to drop the literal on each variable of
// `order` in turn, keeping the removal when the oracle still accepts.
// Non-monotone oracles get repeated passes until no single removal is
// accepted. Throws NotAnImplicant if the oracle rejects `start`.
Term greedy_reduce(ImplicantOracle& oracle, const Term& start,
                   std::span<const int> order, GreedyOptions options = {});

// No single-literal removal from t is accepted.
bool is_one_minimal(ImplicantOracle& oracle, const Term& t);

}  // namespace rfx

#endif  // RFX_EXPLAIN_GREEDY_H_
