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

#ifndef RFX_SAT_CARDINALITY_H_
#define RFX_SAT_CARDINALITY_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rfx/logic.h"
#include "rfx/sat/cnf.h"

namespace rfx::sat {

// Sequential-counter encoding of a cardinality bound over `inputs`.
// Auxiliary variables are the contiguous range [first_aux, last_aux] (empty
// when first_aux > last_aux). For every total assignment of the inputs, the
// auxiliaries extend to a model of `clauses` iff the bound holds.
struct CardEncoding {
  std::vector<Clause> clauses;
  std::vector<Literal> inputs;
  int bound = 0;  // at least `bound` inputs are true
  int first_aux = 1;
  int last_aux = 0;
};

// sum(inputs) >= k, encoded as "at most |inputs| - k of the complements".
CardEncoding encode_at_least(std::span<const Literal> inputs, int k,
                             CnfInstance& allocator);

// sum(selectors) > m/2, i.e. at least floor(m/2) + 1 of them.
CardEncoding encode_card_majority(std::span<const Literal> selectors,
                                  CnfInstance& allocator);

// sum(inputs) <= k.
void encode_at_most(std::span<const Literal> inputs, int k,
                    CnfInstance& allocator, std::vector<Clause>& out);

// Weighted sequential counter over (literal, weight) inputs with registers
// saturating at `cap`. register(j) is forced true whenever the weighted sum
// of true inputs reaches j, so asserting ¬register(B + 1) enforces sum <= B.
// Clauses are appended to the allocator instance.
class WeightedCounter {
 public:
  WeightedCounter(std::span<const std::pair<Literal, std::int64_t>> inputs,
                  std::int64_t cap, CnfInstance& allocator);

  std::int64_t cap() const { return cap_; }
  // Highest register that exists: min(cap, total weight).
  std::int64_t reach() const { return static_cast<std::int64_t>(outputs_.size()); }
  // The literal "sum >= j", for 1 <= j <= reach().
  Literal at_least(std::int64_t j) const;
  // Clauses enforcing sum <= bound (empty when trivially true).
  std::vector<Clause> at_most(std::int64_t bound) const;

 private:
  std::int64_t cap_;
  std::int64_t total_ = 0;
  std::vector<int> outputs_;  // variables of the last register row
};

}  // namespace rfx::sat

#endif  // RFX_SAT_CARDINALITY_H_
