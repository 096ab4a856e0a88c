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

#include "rfx/explain/brute_force.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

namespace rfx::brute {

namespace {

void check_limit(int n, int var_limit) {
  if (n > var_limit || n > 30) {
    throw VarLimitExceeded("brute-force enumeration over " + std::to_string(n) +
                           " features exceeds the limit of " +
                           std::to_string(std::min(var_limit, 30)));
  }
}

std::uint32_t mask_of(const Instance& x) {
  std::uint32_t m = 0;
  for (int v = 1; v <= x.size(); ++v) {
    if (x.value(v)) m |= 1u << (v - 1);
  }
  return m;
}

template <class F>
std::vector<bool> truth_table(int n, F f) {
  std::vector<bool> table(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < table.size(); ++m) {
    table[m] = f(instance_of_mask(m, n));
  }
  return table;
}

// Fixed bits (care) and their values for a term.
std::pair<std::uint32_t, std::uint32_t> term_masks(const Term& t, int n) {
  std::uint32_t care = 0, value = 0;
  for (Literal l : t) {
    if (l.var() > n) {
      throw LogicError("term mentions x" + std::to_string(l.var()) +
                       " beyond " + std::to_string(n) + " features");
    }
    care |= 1u << (l.var() - 1);
    if (l.positive()) value |= 1u << (l.var() - 1);
  }
  return {care, value};
}

template <class F>
void for_each_extension(const Term& t, int n, F f) {
  const auto [care, value] = term_masks(t, n);
  const std::uint32_t free = ((n == 32 ? 0u : (1u << n)) - 1) & ~care;
  // Enumerate the subsets of `free`.
  std::uint32_t sub = 0;
  do {
    if (!f(value | sub)) return;
    sub = (sub - free) & free;
  } while (sub != 0);
}

}  // namespace

Instance instance_of_mask(std::uint32_t mask, int var_count) {
  std::vector<std::uint8_t> bits(var_count);
  for (int v = 0; v < var_count; ++v) bits[v] = (mask >> v) & 1u;
  return Instance(std::move(bits));
}

bool is_implicant(const RandomForest& forest, const Term& t, int var_limit) {
  const int n = forest.var_count();
  check_limit(n, var_limit);
  bool ok = true;
  for_each_extension(t, n, [&](std::uint32_t m) {
    ok = forest.eval(instance_of_mask(m, n));
    return ok;
  });
  return ok;
}

bool is_implicant(const DecisionTree& tree, const Term& t, int var_limit) {
  const int n = tree.var_count();
  check_limit(n, var_limit);
  bool ok = true;
  for_each_extension(t, n, [&](std::uint32_t m) {
    ok = tree.eval(instance_of_mask(m, n));
    return ok;
  });
  return ok;
}

BigInt count_models(const DecisionTree& tree, const Term& t, int var_limit) {
  const int n = tree.var_count();
  check_limit(n, var_limit);
  std::uint64_t count = 0;
  for_each_extension(t, n, [&](std::uint32_t m) {
    if (tree.eval(instance_of_mask(m, n))) ++count;
    return true;
  });
  return BigInt(count);
}

Rational conditional_probability(const DecisionTree& tree, const Term& t,
                                 int var_limit) {
  const BigInt models = count_models(tree, t, var_limit);
  return Rational(models) / Rational(pow2(tree.var_count() - t.size()));
}

Term subterm(const Instance& x, std::uint32_t keep) {
  std::vector<Literal> lits;
  for (int v = 1; v <= x.size(); ++v) {
    if (keep & (1u << (v - 1))) lits.emplace_back(v, x.value(v));
  }
  return Term(std::move(lits));
}

std::vector<bool> implicant_table(const std::vector<bool>& table,
                                  const Instance& x) {
  const int n = x.size();
  const std::uint32_t full = static_cast<std::uint32_t>(table.size() - 1);
  const std::uint32_t xm = mask_of(x);
  // A kept set K fails iff some 0-point z agrees with x on K, i.e. K lies
  // inside the agreement set of z. Mark agreement sets, close downwards.
  std::vector<bool> fails(table.size(), false);
  for (std::uint32_t z = 0; z <= full; ++z) {
    if (!table[z]) fails[~(z ^ xm) & full] = true;
  }
  for (int b = 0; b < n; ++b) {
    const std::uint32_t bit = 1u << b;
    for (std::uint32_t k = 0; k <= full; ++k) {
      if ((k & bit) && fails[k]) fails[k ^ bit] = true;
    }
  }
  std::vector<bool> implicant(table.size());
  for (std::uint32_t k = 0; k <= full; ++k) implicant[k] = !fails[k];
  return implicant;
}

namespace {

std::vector<Term> minimal_sets(const std::vector<bool>& accepted,
                               const Instance& x) {
  const int n = x.size();
  std::vector<Term> out;
  for (std::uint32_t k = 0; k < accepted.size(); ++k) {
    if (!accepted[k]) continue;
    bool minimal = true;
    for (int b = 0; b < n && minimal; ++b) {
      if ((k >> b) & 1u) minimal = !accepted[k ^ (1u << b)];
    }
    if (minimal) out.push_back(subterm(x, k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<bool> majority_table(const RandomForest& forest,
                                 const Instance& x) {
  const bool prediction = forest.eval(x);
  const RandomForest model = prediction ? forest : forest.negated();
  const int n = forest.var_count();
  std::vector<int> count(std::size_t{1} << n, 0);
  for (const DecisionTree& tree : model.trees()) {
    const auto implicant =
        implicant_table(truth_table(n, [&](const Instance& z) {
                          return tree.eval(z);
                        }),
                        x);
    for (std::size_t k = 0; k < count.size(); ++k) count[k] += implicant[k];
  }
  std::vector<bool> accepted(count.size());
  for (std::size_t k = 0; k < count.size(); ++k) {
    accepted[k] = count[k] >= model.majority_threshold();
  }
  return accepted;
}

std::vector<bool> forest_implicants(const RandomForest& forest,
                                    const Instance& x) {
  const bool prediction = forest.eval(x);
  const auto table = truth_table(forest.var_count(), [&](const Instance& z) {
    return forest.eval(z) == prediction;
  });
  return implicant_table(table, x);
}

}  // namespace

std::vector<Term> enumerate_sufficient_reasons(const RandomForest& forest,
                                               const Instance& x,
                                               int var_limit) {
  check_limit(forest.var_count(), var_limit);
  return minimal_sets(forest_implicants(forest, x), x);
}

std::vector<Term> enumerate_majoritary_reasons(const RandomForest& forest,
                                               const Instance& x,
                                               int var_limit) {
  check_limit(forest.var_count(), var_limit);
  return minimal_sets(majority_table(forest, x), x);
}

std::int64_t min_majoritary_weight(const RandomForest& forest,
                                   const Instance& x,
                                   std::span<const std::int64_t> weights,
                                   int var_limit) {
  const int n = forest.var_count();
  check_limit(n, var_limit);
  if (!weights.empty() && static_cast<int>(weights.size()) != n) {
    throw LogicError("expected one weight per feature");
  }
  const auto accepted = majority_table(forest, x);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::uint32_t k = 0; k < accepted.size(); ++k) {
    if (!accepted[k]) continue;
    std::int64_t w = 0;
    for (int b = 0; b < n; ++b) {
      if ((k >> b) & 1u) w += weights.empty() ? 1 : weights[b];
    }
    best = std::min(best, w);
  }
  return best;
}

int min_sufficient_size(const RandomForest& forest, const Instance& x,
                        int var_limit) {
  check_limit(forest.var_count(), var_limit);
  const auto implicant = forest_implicants(forest, x);
  int best = forest.var_count();
  for (std::uint32_t k = 0; k < implicant.size(); ++k) {
    if (implicant[k]) best = std::min(best, std::popcount(k));
  }
  return best;
}

}  // namespace rfx::brute
