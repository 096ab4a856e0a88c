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

#ifndef RFX_SAT_SOLVER_H_
#define RFX_SAT_SOLVER_H_

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

#include "rfx/deadline.h"
#include "rfx/logic.h"

namespace rfx::sat {

enum class SolveStatus { kSat, kUnsat, kTimeout };

const char* to_string(SolveStatus s);

struct SolverOptions {
  std::uint64_t seed = 91648253;
  // Probability of a random decision instead of the activity-based one.
  double random_decision_freq = 0.0;
  double var_decay = 0.95;
  double clause_decay = 0.999;
  int restart_base = 100;  // conflicts, scaled by the Luby sequence
};

// Conflict-driven clause-learning solver: two-watched-literal propagation,
// first-UIP learning with recursive minimization, VSIDS branching with phase
// saving, Luby restarts and activity-based learnt-clause reduction.
//
// Sessions are incremental: clauses may be added between calls, and each
// call can carry assumptions which are decided first (trail prefix). After
// an UNSAT answer under assumptions, failed_assumptions() holds a subset of
// the assumptions that is already inconsistent with the clauses.
//
// A session is single-threaded and exclusively owned.
class Solver {
 public:
  explicit Solver(SolverOptions options = {});
  ~Solver();
  Solver(Solver&&) noexcept;
  Solver& operator=(Solver&&) noexcept;
  Solver(const Solver&) = delete;
  Solver& operator=(const Solver&) = delete;

  // Variables are 1-based. new_var() returns the index of a fresh one.
  int new_var();
  void ensure_vars(int count);
  int var_count() const;

  // Returns false once the clause set is known to be unsatisfiable at the
  // root level. Tautologies are dropped.
  bool add_clause(std::span<const Literal> clause);
  bool add_clause(std::initializer_list<Literal> clause) {
    return add_clause(std::span<const Literal>(clause.begin(), clause.size()));
  }
  bool add_clause(const Clause& clause) { return add_clause(clause.literals()); }

  SolveStatus solve(std::span<const Literal> assumptions = {},
                    const Deadline& deadline = {});

  // Valid after kSat.
  bool model_value(int var) const;
  const std::vector<std::uint8_t>& model() const;  // index 0 is x1
  // Valid after kUnsat under assumptions.
  const std::vector<Literal>& failed_assumptions() const;

  struct Stats {
    std::uint64_t solves = 0;
    std::uint64_t conflicts = 0;
    std::uint64_t decisions = 0;
    std::uint64_t propagations = 0;
    std::uint64_t restarts = 0;
  };
  const Stats& stats() const;

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace rfx::sat

#endif  // RFX_SAT_SOLVER_H_
