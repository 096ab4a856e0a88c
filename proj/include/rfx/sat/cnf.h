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

#ifndef RFX_SAT_CNF_H_
#define RFX_SAT_CNF_H_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "rfx/deadline.h"
#include "rfx/logic.h"
#include "rfx/sat/solver.h"

namespace rfx::sat {

// A CNF formula; doubles as the allocator of auxiliary variables.
class CnfInstance {
 public:
  CnfInstance() = default;
  explicit CnfInstance(int var_count) : var_count_(var_count) {}
  CnfInstance(int var_count, std::vector<Clause> clauses);

  int var_count() const { return var_count_; }
  const std::vector<Clause>& clauses() const { return clauses_; }

  int new_var() { return ++var_count_; }
  void reserve_vars(int count) { var_count_ = std::max(var_count_, count); }
  // Tautologies are dropped. Throws if a literal exceeds var_count().
  void add(Clause clause);
  void add(std::initializer_list<Literal> lits) { add(Clause(lits)); }
  void append(std::span<const Clause> clauses);

  bool satisfied_by(const std::vector<std::uint8_t>& model) const;

  friend bool operator==(const CnfInstance&, const CnfInstance&) = default;

 private:
  int var_count_ = 0;
  std::vector<Clause> clauses_;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::kTimeout;
  // Full assignment (index 0 is x1) when kSat.
  std::vector<std::uint8_t> model;
};

// One-shot solve on a fresh session.
SolveOutcome solve(const CnfInstance& cnf,
                   std::span<const Literal> assumptions = {},
                   const Deadline& deadline = {});

// Loads every clause of `cnf` into `solver`.
void load(Solver& solver, const CnfInstance& cnf);

struct SoftClause {
  Clause clause;
  std::int64_t weight = 1;

  friend bool operator==(const SoftClause&, const SoftClause&) = default;
};

// Hard clauses plus weighted soft clauses. Satisfiability of the hard part
// is not assumed.
struct WeightedCnf {
  CnfInstance hard;
  std::vector<SoftClause> soft;

  std::int64_t total_soft_weight() const;
  // Total weight of soft clauses falsified by the model.
  std::int64_t cost(const std::vector<std::uint8_t>& model) const;
  int var_count() const;

  friend bool operator==(const WeightedCnf&, const WeightedCnf&) = default;
};

class SolverTimeout : public std::runtime_error {
 public:
  SolverTimeout() : std::runtime_error("solver budget exhausted") {}
};

}  // namespace rfx::sat

#endif  // RFX_SAT_CNF_H_
