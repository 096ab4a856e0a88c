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

#include "rfx/sat/cardinality.h"

#include <algorithm>
#include <string>

namespace rfx::sat {

void encode_at_most(std::span<const Literal> inputs, int k,
                    CnfInstance& allocator, std::vector<Clause>& out) {
  const int n = static_cast<int>(inputs.size());
  if (k < 0) {
    out.emplace_back();  // unsatisfiable
    return;
  }
  if (k >= n) return;
  if (k == 0) {
    for (Literal x : inputs) out.push_back(Clause{~x});
    return;
  }
  // s[i][j]: among the first i+1 inputs at least j+1 are true (i < n-1).
  std::vector<std::vector<int>> s(n - 1, std::vector<int>(k));
  for (auto& row : s) {
    for (int& v : row) v = allocator.new_var();
  }
  auto reg = [&](int i, int j) { return Literal::pos(s[i][j]); };

  out.push_back(Clause{~inputs[0], reg(0, 0)});
  for (int j = 1; j < k; ++j) out.push_back(Clause{~reg(0, j)});
  for (int i = 1; i < n - 1; ++i) {
    out.push_back(Clause{~inputs[i], reg(i, 0)});
    out.push_back(Clause{~reg(i - 1, 0), reg(i, 0)});
    for (int j = 1; j < k; ++j) {
      out.push_back(Clause{~inputs[i], ~reg(i - 1, j - 1), reg(i, j)});
      out.push_back(Clause{~reg(i - 1, j), reg(i, j)});
    }
    out.push_back(Clause{~inputs[i], ~reg(i - 1, k - 1)});
  }
  out.push_back(Clause{~inputs[n - 1], ~reg(n - 2, k - 1)});
}

CardEncoding encode_at_least(std::span<const Literal> inputs, int k,
                             CnfInstance& allocator) {
  CardEncoding enc;
  enc.inputs.assign(inputs.begin(), inputs.end());
  enc.bound = k;
  enc.first_aux = allocator.var_count() + 1;
  std::vector<Literal> complements;
  complements.reserve(inputs.size());
  for (Literal l : inputs) complements.push_back(~l);
  encode_at_most(complements, static_cast<int>(inputs.size()) - k, allocator,
                 enc.clauses);
  enc.last_aux = allocator.var_count();
  return enc;
}

CardEncoding encode_card_majority(std::span<const Literal> selectors,
                                  CnfInstance& allocator) {
  if (selectors.empty()) throw LogicError("majority over zero selectors");
  const int m = static_cast<int>(selectors.size());
  return encode_at_least(selectors, m / 2 + 1, allocator);
}

WeightedCounter::WeightedCounter(
    std::span<const std::pair<Literal, std::int64_t>> inputs, std::int64_t cap,
    CnfInstance& allocator)
    : cap_(cap) {
  if (cap < 1) throw LogicError("weighted counter cap must be positive");
  std::vector<int> prev;  // register row i-1, prev[j-1] = "sum >= j"
  std::int64_t prefix = 0;
  for (const auto& [lit, weight] : inputs) {
    if (weight < 1) {
      throw LogicError("weights must be positive, got " +
                       std::to_string(weight));
    }
    const std::int64_t w = std::min(weight, cap);
    prefix = std::min(prefix + weight, cap);
    total_ += weight;
    std::vector<int> row(prefix);
    for (int& v : row) v = allocator.new_var();
    auto reg = [&](std::int64_t j) { return Literal::pos(row[j - 1]); };
    for (std::int64_t j = 1; j <= w; ++j) allocator.add({~lit, reg(j)});
    for (std::int64_t j = 1; j <= static_cast<std::int64_t>(prev.size()); ++j) {
      const Literal before = Literal::pos(prev[j - 1]);
      allocator.add({~before, reg(j)});
      allocator.add({~lit, ~before, reg(std::min(j + w, cap))});
    }
    prev = std::move(row);
  }
  outputs_ = std::move(prev);
}

Literal WeightedCounter::at_least(std::int64_t j) const {
  if (j < 1 || j > reach()) {
    throw LogicError("counter register " + std::to_string(j) +
                     " out of range");
  }
  return Literal::pos(outputs_[j - 1]);
}

std::vector<Clause> WeightedCounter::at_most(std::int64_t bound) const {
  if (bound < 0) return {Clause{}};
  if (bound >= total_) return {};
  if (bound + 1 > cap_) throw LogicError("bound exceeds the counter's cap");
  return {Clause{~at_least(bound + 1)}};
}

}  // namespace rfx::sat
