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

#ifndef RFX_SAT_MAXSAT_H_
#define RFX_SAT_MAXSAT_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "rfx/deadline.h"
#include "rfx/sat/cnf.h"
#include "rfx/sat/solver.h"

namespace rfx::sat {

class HardClausesUnsat : public std::runtime_error {
 public:
  HardClausesUnsat()
      : std::runtime_error("the hard clauses are unsatisfiable") {}
};

struct MaxSatImprovement {
  std::vector<std::uint8_t> model;
  std::int64_t cost = 0;
  std::chrono::duration<double> elapsed{};
};

enum class MaxSatStatus {
  kOptimal,   // model is optimal
  kFeasible,  // budget ran out after at least one model
  kNoModel,   // budget ran out before the first model
};

struct MaxSatResult {
  MaxSatStatus status = MaxSatStatus::kNoModel;
  std::vector<std::uint8_t> model;
  std::int64_t cost = 0;
  bool optimal() const { return status == MaxSatStatus::kOptimal; }
};

using ImprovementCallback = std::function<void(const MaxSatImprovement&)>;

// Model-improving linear search. Each soft clause gets a violation literal
// (the complement of a unit soft clause, a fresh relaxation variable
// otherwise). After every model of cost c, a weighted sequential counter over
// the violation literals is tightened to "total <= c - 1" and the search
// continues until UNSAT (optimal) or the deadline. Every model handed to
// `on_improve` satisfies all hard clauses and costs strictly less than the
// previous one.
//
// Throws HardClausesUnsat when the hard part has no model.
MaxSatResult maxsat_anytime(const WeightedCnf& problem,
                            const Deadline& deadline = {},
                            const ImprovementCallback& on_improve = {},
                            SolverOptions options = {});

}  // namespace rfx::sat

#endif  // RFX_SAT_MAXSAT_H_
