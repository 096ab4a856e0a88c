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

#include "rfx/explain/greedy.h"

#include <limits>
#include <string>

#include "rfx/explain/reason.h"

namespace rfx {

std::vector<int> default_order(int var_count) {
  std::vector<int> order;
  order.reserve(var_count);
  for (int v = var_count; v >= 1; --v) order.push_back(v);
  return order;
}

std::vector<int> complete_order(std::span<const int> order, int var_count) {
  std::vector<bool> seen(var_count + 1, false);
  std::vector<int> out;
  out.reserve(var_count);
  for (int v : order) {
    if (v < 1 || v > var_count) {
      throw LogicError("order mentions x" + std::to_string(v) +
                       " outside 1.." + std::to_string(var_count));
    }
    if (seen[v]) throw LogicError("order repeats x" + std::to_string(v));
    seen[v] = true;
    out.push_back(v);
  }
  for (int v = var_count; v >= 1; --v) {
    if (!seen[v]) out.push_back(v);
  }
  return out;
}

namespace {

// splitmix64
std::uint64_t next_random(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform in [0, bound) by rejection.
std::uint64_t bounded(std::uint64_t& state, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = next_random(state);
  } while (r >= limit);
  return r % bound;
}

}  // namespace

std::vector<int> random_order(int var_count, std::uint64_t& state) {
  std::vector<int> order(var_count);
  for (int i = 0; i < var_count; ++i) order[i] = i + 1;
  for (int i = var_count - 1; i > 0; --i) {
    const auto j = static_cast<int>(bounded(state, static_cast<std::uint64_t>(i) + 1));
    std::swap(order[i], order[j]);
  }
  return order;
}

Term greedy_reduce(ImplicantOracle& oracle, const Term& start,
                   std::span<const int> order, GreedyOptions options) {
  if (!oracle.accepts(start)) {
    throw NotAnImplicant("the " + oracle.name() +
                         " oracle rejects the starting term " +
                         to_string(start));
  }
  Term t = options.use_refinement ? oracle.refine(start) : start;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : order) {
      if (!t.mentions(v)) continue;
      Term candidate = t.without(v);
      if (oracle.accepts(candidate)) {
        t = options.use_refinement ? oracle.refine(candidate)
                                   : std::move(candidate);
        changed = true;
      }
    }
    if (oracle.monotone()) break;
  }
  return t;
}

bool is_one_minimal(ImplicantOracle& oracle, const Term& t) {
  for (Literal l : t) {
    if (oracle.accepts(t.without(l.var()))) return false;
  }
  return true;
}

}  // namespace rfx
