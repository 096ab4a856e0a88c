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

#ifndef RFX_APP_EXPLAIN_REQUEST_H_
#define RFX_APP_EXPLAIN_REQUEST_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rfx/explain/explainers.h"
#include "rfx/explain/oracle.h"
#include "rfx/explain/reason.h"
#include "rfx/forest.h"
#include "rfx/optimize/minimal.h"

namespace rfx::app {

// Everything needed to compute one reason of a given kind.
struct ExplainRequest {
  ReasonKind kind = ReasonKind::kDirect;
  std::vector<int> order;
  int permutations = 1;
  std::uint64_t seed = kDefaultSeed;
  std::optional<Rational> delta;
  std::optional<std::vector<int>> intelligible;
  std::optional<Prioritization> strata;
  std::optional<WeightMap> weights;
  std::optional<LinearModel> linear;
  // Oracle for comprehensible and inclusion-preferred reasons. Unset means
  // the exact implicant test (single-tree for one tree, SAT otherwise).
  std::optional<OracleMode> notion;
  std::optional<double> timeout_seconds;
  bool use_cores = false;
};

// Throws std::invalid_argument when flags do not fit the kind or the model.
void check_request(const ExplainRequest& request, const RandomForest& forest);

struct ExplainOutcome {
  enum class Status { kOk, kNone, kTimeout };
  Status status = Status::kOk;
  std::optional<Reason> reason;  // empty only for kNone
  AnytimeLog log;
};

// Runs the matching explainer and validates its output. Timeouts with a
// usable partial result come back as kTimeout.
ExplainOutcome run_explain(const RandomForest& forest, const Instance& x,
                           const ExplainRequest& request);

// Raised when a computed reason fails its defining check.
class ValidationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Re-checks a reason against the oracle matching its kind. `complete` is
// false for partial results, which only need to be implicants.
void validate_reason(const RandomForest& forest, const Reason& reason,
                     const ExplainRequest& request, bool complete);

}  // namespace rfx::app

#endif  // RFX_APP_EXPLAIN_REQUEST_H_
