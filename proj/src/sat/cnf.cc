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

#include "rfx/sat/cnf.h"

#include <string>

namespace rfx::sat {

CnfInstance::CnfInstance(int var_count, std::vector<Clause> clauses)
    : var_count_(var_count) {
  for (Clause& c : clauses) add(std::move(c));
}

void CnfInstance::add(Clause clause) {
  if (clause.max_var() > var_count_) {
    throw LogicError("clause mentions x" + std::to_string(clause.max_var()) +
                     " but the instance has " + std::to_string(var_count_) +
                     " variables");
  }
  if (clause.tautological()) return;
  clauses_.push_back(std::move(clause));
}

void CnfInstance::append(std::span<const Clause> clauses) {
  for (const Clause& c : clauses) add(c);
}

bool CnfInstance::satisfied_by(const std::vector<std::uint8_t>& model) const {
  for (const Clause& c : clauses_) {
    if (!c.satisfied_by(model)) return false;
  }
  return true;
}

SolveOutcome solve(const CnfInstance& cnf, std::span<const Literal> assumptions,
                   const Deadline& deadline) {
  for (Literal l : assumptions) {
    if (l.var() < 1 || l.var() > cnf.var_count()) {
      throw LogicError("assumption on x" + std::to_string(l.var()) +
                       " outside the instance");
    }
  }
  Solver solver;
  load(solver, cnf);
  SolveOutcome out;
  out.status = solver.solve(assumptions, deadline);
  if (out.status == SolveStatus::kSat) {
    out.model = solver.model();
    out.model.resize(cnf.var_count(), 0);
  }
  return out;
}

void load(Solver& solver, const CnfInstance& cnf) {
  solver.ensure_vars(cnf.var_count());
  for (const Clause& c : cnf.clauses()) solver.add_clause(c);
}

std::int64_t WeightedCnf::total_soft_weight() const {
  std::int64_t total = 0;
  for (const SoftClause& s : soft) total += s.weight;
  return total;
}

std::int64_t WeightedCnf::cost(const std::vector<std::uint8_t>& model) const {
  std::int64_t total = 0;
  for (const SoftClause& s : soft) {
    if (!s.clause.satisfied_by(model)) total += s.weight;
  }
  return total;
}

int WeightedCnf::var_count() const {
  int n = hard.var_count();
  for (const SoftClause& s : soft) n = std::max(n, s.clause.max_var());
  return n;
}

}  // namespace rfx::sat
