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

#include "rfx/sat/implicant_encoding.h"

#include <string>

namespace rfx::sat {

ImplicantEncoding build_implicant_cnf(const RandomForest& forest) {
  ImplicantEncoding enc;
  const int n = forest.var_count();
  const int m = forest.tree_count();
  enc.feature_count = n;
  enc.cnf = CnfInstance(n);
  for (int i = 0; i < m; ++i) {
    enc.selectors.push_back(Literal::pos(enc.cnf.new_var()));
  }
  for (int i = 0; i < m; ++i) {
    const Literal y = enc.selectors[i];
    for (const Clause& c : forest.tree(i).negated().to_cnf()) {
      std::vector<Literal> lits = c.literals();
      lits.push_back(~y);
      enc.cnf.add(Clause(std::move(lits)));
    }
  }
  const int negative_votes_needed = m - m / 2;
  enc.card = encode_at_least(enc.selectors, negative_votes_needed, enc.cnf);
  enc.cnf.append(enc.card.clauses);
  return enc;
}

namespace {

void check_term(const RandomForest& forest, const Term& t) {
  if (t.max_var() > forest.var_count()) {
    throw LogicError("term mentions x" + std::to_string(t.max_var()) +
                     " beyond the forest's " +
                     std::to_string(forest.var_count()) + " features");
  }
}

}  // namespace

bool is_implicant_rf(const RandomForest& forest, const Term& t,
                     const Deadline& deadline) {
  check_term(forest, t);
  const ImplicantEncoding enc = build_implicant_cnf(forest);
  const SolveOutcome out = solve(enc.cnf, t.literals(), deadline);
  if (out.status == SolveStatus::kTimeout) throw SolverTimeout();
  return out.status == SolveStatus::kUnsat;
}

ForestImplicantChecker::ForestImplicantChecker(const RandomForest& forest,
                                               SolverOptions options)
    : forest_(forest), solver_(options) {
  load(solver_, build_implicant_cnf(forest_).cnf);
}

bool ForestImplicantChecker::implies(const Term& t, const Deadline& deadline) {
  check_term(forest_, t);
  ++queries_;
  const SolveStatus status = solver_.solve(t.literals(), deadline);
  if (status == SolveStatus::kTimeout) throw SolverTimeout();
  if (status == SolveStatus::kUnsat) {
    core_ = Term(solver_.failed_assumptions());
    return true;
  }
  std::vector<std::uint8_t> bits(solver_.model().begin(),
                                 solver_.model().begin() + forest_.var_count());
  counterexample_ = Instance(std::move(bits));
  return false;
}

}  // namespace rfx::sat
