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

#ifndef RFX_SAT_IMPLICANT_ENCODING_H_
#define RFX_SAT_IMPLICANT_ENCODING_H_

#include <vector>

#include "rfx/deadline.h"
#include "rfx/forest.h"
#include "rfx/logic.h"
#include "rfx/sat/cardinality.h"
#include "rfx/sat/cnf.h"
#include "rfx/sat/solver.h"

namespace rfx::sat {

// The refutation formula H of a forest F over x1..xn: selector y_i guards
// every clause of cnf(¬T_i), so y_i forces tree i to vote 0, and a counter
// requires enough selectors to outvote the rest. H ∧ t is satisfiable iff
// some completion of t is classified 0, hence t implies F iff H ∧ t is
// UNSAT.
//
// The counter asks for m - floor(m/2) negative votes: that is
// floor(m/2) + 1 for odd m, and m/2 for even m, where a tie already yields 0.
struct ImplicantEncoding {
  CnfInstance cnf;
  int feature_count = 0;
  std::vector<Literal> selectors;  // y_1..y_m, numbered after the features
  CardEncoding card;
};

ImplicantEncoding build_implicant_cnf(const RandomForest& forest);

// Exact implicant test for the forest function. Throws SolverTimeout.
bool is_implicant_rf(const RandomForest& forest, const Term& t,
                     const Deadline& deadline = {});

// An incremental session over H answering many implicant queries.
class ForestImplicantChecker {
 public:
  explicit ForestImplicantChecker(const RandomForest& forest,
                                  SolverOptions options = {});

  const RandomForest& forest() const { return forest_; }
  // Throws SolverTimeout when the deadline passes mid-query.
  bool implies(const Term& t, const Deadline& deadline = {});
  // After implies() returned true: a subset of the queried term that is
  // itself an implicant (from the failed assumptions).
  const Term& last_core() const { return core_; }
  // After implies() returned false: an assignment covered by the queried
  // term that the forest classifies 0.
  const Instance& last_counterexample() const { return counterexample_; }
  std::uint64_t queries() const { return queries_; }

 private:
  RandomForest forest_;
  Solver solver_;
  Term core_;
  Instance counterexample_;
  std::uint64_t queries_ = 0;
};

}  // namespace rfx::sat

#endif  // RFX_SAT_IMPLICANT_ENCODING_H_
