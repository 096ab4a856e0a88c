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

#include "rfx/sat/maxsat.h"

#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "rfx/sat/cardinality.h"

namespace rfx::sat {

MaxSatResult maxsat_anytime(const WeightedCnf& problem,
                            const Deadline& deadline,
                            const ImprovementCallback& on_improve,
                            SolverOptions options) {
  const auto start = std::chrono::steady_clock::now();
  std::int64_t total = 0;
  for (const SoftClause& s : problem.soft) {
    if (s.weight < 1) {
      throw LogicError("soft clause weights must be positive, got " +
                       std::to_string(s.weight));
    }
    if (s.weight > std::numeric_limits<std::int64_t>::max() - total) {
      throw LogicError("total soft weight overflows");
    }
    total += s.weight;
  }

  // Working copy: hard clauses, relaxation variables and the counter all
  // live in one instance so that variable numbering stays in one place.
  CnfInstance work = problem.hard;
  work.reserve_vars(problem.var_count());
  std::vector<std::pair<Literal, std::int64_t>> violation;
  std::int64_t always_violated = 0;
  for (const SoftClause& s : problem.soft) {
    if (s.clause.tautological()) continue;
    if (s.clause.empty()) {
      always_violated += s.weight;
    } else if (s.clause.size() == 1) {
      violation.emplace_back(~s.clause.literals()[0], s.weight);
    } else {
      const Literal r = Literal::pos(work.new_var());
      std::vector<Literal> lits = s.clause.literals();
      lits.push_back(r);
      work.add(Clause(std::move(lits)));
      violation.emplace_back(r, s.weight);
    }
  }

  Solver solver(options);
  load(solver, work);
  std::size_t loaded = work.clauses().size();
  auto sync = [&] {
    solver.ensure_vars(work.var_count());
    for (; loaded < work.clauses().size(); ++loaded) {
      solver.add_clause(work.clauses()[loaded]);
    }
  };

  MaxSatResult result;
  std::optional<WeightedCounter> counter;
  bool first = true;
  for (;;) {
    const SolveStatus status = solver.solve({}, deadline);
    if (status == SolveStatus::kTimeout) {
      if (!first) result.status = MaxSatStatus::kFeasible;
      return result;
    }
    if (status == SolveStatus::kUnsat) {
      if (first) throw HardClausesUnsat();
      result.status = MaxSatStatus::kOptimal;
      return result;
    }
    first = false;
    std::vector<std::uint8_t> model(solver.model().begin(),
                                    solver.model().end());
    model.resize(problem.var_count(), 0);
    if (!problem.hard.satisfied_by(model)) {
      throw std::logic_error("solver returned a model violating hard clauses");
    }
    const std::int64_t cost = problem.cost(model);
    result.model = model;
    result.cost = cost;
    if (on_improve) {
      on_improve(MaxSatImprovement{
          std::move(model), cost,
          std::chrono::steady_clock::now() - start});
    }
    const std::int64_t relaxable = cost - always_violated;
    if (relaxable <= 0) {
      result.status = MaxSatStatus::kOptimal;
      return result;
    }
    if (!counter) counter.emplace(violation, relaxable, work);
    for (Clause& c : counter->at_most(relaxable - 1)) work.add(std::move(c));
    sync();
  }
}

}  // namespace rfx::sat
