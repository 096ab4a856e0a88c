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

#include "rfx/app/explain_request.h"

#include <algorithm>
#include <string>

#include "rfx/deadline.h"
#include "rfx/explain/greedy.h"
#include "rfx/sat/cnf.h"

namespace rfx::app {

namespace {

bool single_tree_kind(ReasonKind kind) {
  return kind == ReasonKind::kMinimalSufficient ||
         kind == ReasonKind::kApproxMinimal ||
         kind == ReasonKind::kDeltaProbable;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::string kind_name(ReasonKind kind) { return std::string(to_string(kind)); }

OracleMode notion_for(const ExplainRequest& request,
                      const RandomForest& forest) {
  if (request.notion) return *request.notion;
  return forest.tree_count() == 1 ? OracleMode::kSingleTree
                                  : OracleMode::kForestSat;
}

PreparedOracle prepared_for(const ExplainRequest& request,
                            const RandomForest& forest, const Instance& x,
                            const Deadline& deadline) {
  PreparedOracle p = prepare_oracle(notion_for(request, forest), forest, x,
                                    request.delta);
  if (auto* sat_oracle = dynamic_cast<ForestSatOracle*>(p.oracle.get())) {
    sat_oracle->set_deadline(deadline);
  }
  return p;
}

}  // namespace

void check_request(const ExplainRequest& r, const RandomForest& forest) {
  const std::string kind = kind_name(r.kind);
  const bool oracle_kind = r.kind == ReasonKind::kComprehensible ||
                           r.kind == ReasonKind::kInclusionPreferred;
  if (single_tree_kind(r.kind)) {
    require(forest.tree_count() == 1,
            kind + " reasons need a single decision tree, the model has " +
                std::to_string(forest.tree_count()) + " trees");
  }
  const bool delta_notion = r.notion == OracleMode::kDeltaProbable;
  require(!r.delta || r.kind == ReasonKind::kDeltaProbable ||
              (oracle_kind && delta_notion),
          "--delta only applies to delta-probable reasons");
  require(r.kind != ReasonKind::kDeltaProbable || r.delta.has_value(),
          "delta-probable reasons need --delta");
  require(!delta_notion || r.delta.has_value(),
          "the delta-probable notion needs --delta");
  require(!r.notion || oracle_kind,
          "--notion only applies to comprehensible and inclusion-preferred "
          "reasons");
  require(!r.intelligible || r.kind == ReasonKind::kComprehensible,
          "--intelligible only applies to comprehensible reasons");
  require(r.kind != ReasonKind::kComprehensible || r.intelligible.has_value(),
          "comprehensible reasons need --intelligible");
  require(!r.strata || r.kind == ReasonKind::kInclusionPreferred,
          "--strata only applies to inclusion-preferred reasons");
  require(r.kind != ReasonKind::kInclusionPreferred || r.strata.has_value(),
          "inclusion-preferred reasons need --strata");
  require(!r.weights || r.kind == ReasonKind::kMinimalWeight,
          "--weights only applies to minimal-weight reasons");
  require(!r.linear || r.kind == ReasonKind::kLime,
          "--linear only applies to lime reasons");
  require(r.kind != ReasonKind::kLime || r.linear.has_value(),
          "lime reasons need --linear");
  require(r.permutations >= 1, "--permutations must be at least 1");
  require(r.permutations == 1 || r.kind == ReasonKind::kMajoritary,
          "--permutations only applies to majoritary reasons");
  require(!r.delta || (*r.delta >= 0 && *r.delta <= 1),
          "--delta must lie in [0, 1]");
  require(!r.timeout_seconds || *r.timeout_seconds >= 0,
          "--timeout must be non-negative");
  require(!r.linear || r.linear->var_count() == forest.var_count(),
          "--linear needs one weight per feature");
  require(!r.weights || r.weights->var_count() == forest.var_count(),
          "--weights needs one weight per feature");
  require(!r.strata || r.strata->var_count() == forest.var_count(),
          "--strata does not match the model's features");
  if (r.notion == OracleMode::kSingleTree) {
    require(forest.tree_count() == 1,
            "the single-tree notion needs a one-tree model");
  }
  complete_order(r.order, forest.var_count());
}

ExplainOutcome run_explain(const RandomForest& forest, const Instance& x,
                           const ExplainRequest& request) {
  check_request(request, forest);
  if (x.size() != forest.var_count()) {
    throw LogicError("instance has " + std::to_string(x.size()) +
                     " features, the model expects " +
                     std::to_string(forest.var_count()));
  }
  const Deadline deadline = Deadline::after_seconds(request.timeout_seconds);
  ExplainOutcome out;
  auto from_minimal = [&](auto&& compute) {
    try {
      MinimalResult res = compute();
      out.status = res.reason.optimal ? ExplainOutcome::Status::kOk
                                      : ExplainOutcome::Status::kTimeout;
      out.reason = std::move(res.reason);
      out.log = std::move(res.log);
    } catch (const BudgetExhausted& e) {
      out.status = ExplainOutcome::Status::kTimeout;
      out.reason = e.fallback();
    }
  };

  switch (request.kind) {
    case ReasonKind::kDirect:
      out.reason = direct_reason(forest, x);
      break;
    case ReasonKind::kSufficient:
      if (forest.tree_count() == 1) {
        out.reason = sufficient_reason_dt(forest.tree(0), x, request.order);
      } else {
        SufficientOptions opts;
        opts.order = request.order;
        opts.deadline = deadline;
        opts.use_cores = request.use_cores;
        try {
          out.reason = sufficient_reason_rf(forest, x, opts);
        } catch (const ExplanationTimeout& e) {
          out.status = ExplainOutcome::Status::kTimeout;
          out.reason = e.partial();
        }
      }
      break;
    case ReasonKind::kMajoritary:
      out.reason = request.permutations > 1
                       ? majoritary_reason_multi(forest, x,
                                                 request.permutations,
                                                 request.seed)
                       : majoritary_reason(forest, x, request.order);
      break;
    case ReasonKind::kMinimalMajoritary:
      from_minimal([&] { return minimal_majoritary_reason(forest, x, deadline); });
      break;
    case ReasonKind::kMinimalWeight:
      from_minimal([&] {
        return minimal_weight_majoritary_reason(
            forest, x,
            request.weights.value_or(WeightMap::uniform(forest.var_count())),
            deadline);
      });
      break;
    case ReasonKind::kMinimalSufficient:
      from_minimal(
          [&] { return minimal_sufficient_reason_dt(forest.tree(0), x, deadline); });
      break;
    case ReasonKind::kApproxMinimal:
      out.reason = approx_minimal_reason_dt(forest.tree(0), x);
      break;
    case ReasonKind::kDeltaProbable:
      out.reason = delta_probable_reason_dt(forest.tree(0), x, *request.delta,
                                            request.order);
      break;
    case ReasonKind::kComprehensible: {
      PreparedOracle p = prepared_for(request, forest, x, deadline);
      try {
        out.reason = comprehensible_reason(p, x, *request.intelligible,
                                           request.order);
      } catch (const sat::SolverTimeout&) {
        throw std::runtime_error("time budget exhausted without a result");
      }
      if (!out.reason) out.status = ExplainOutcome::Status::kNone;
      break;
    }
    case ReasonKind::kInclusionPreferred: {
      PreparedOracle p = prepared_for(request, forest, x, deadline);
      try {
        out.reason = inclusion_preferred_reason(p, x, *request.strata);
      } catch (const sat::SolverTimeout&) {
        throw std::runtime_error("time budget exhausted without a result");
      }
      break;
    }
    case ReasonKind::kLime:
      out.reason = lime_linear_reason(*request.linear, x);
      break;
  }
  if (out.reason) {
    validate_reason(forest, *out.reason, request,
                    out.status == ExplainOutcome::Status::kOk);
    if (request.kind == ReasonKind::kComprehensible) {
      out.reason->notes.push_back(
          notion_for(request, forest) == OracleMode::kForestSat
              ? "exact SAT test, not polynomial-time"
              : "polynomial-time test");
    }
  }
  return out;
}

void validate_reason(const RandomForest& forest, const Reason& reason,
                     const ExplainRequest& request, bool complete) {
  const Term tx = Term::of_instance(reason.instance);
  auto fail = [&](const std::string& what) {
    throw ValidationError(std::string(to_string(reason.kind)) + " reason " +
                          to_string(reason.term) + " " + what);
  };
  if (!reason.term.subset_of(tx)) fail("does not cover the instance");

  auto check_oracle = [&](ImplicantOracle& oracle, bool minimal) {
    if (!oracle.accepts(reason.term)) fail("is rejected by the " + oracle.name() + " oracle");
    if (minimal && !is_one_minimal(oracle, reason.term)) {
      fail("is not minimal for the " + oracle.name() + " oracle");
    }
  };
  auto oracle_of = [&](OracleMode mode) {
    PreparedOracle p = prepare_oracle(mode, forest, reason.instance, request.delta);
    if (p.prediction != reason.prediction) fail("records the wrong prediction");
    return std::move(p.oracle);
  };
  const OracleMode exact =
      forest.tree_count() == 1 ? OracleMode::kSingleTree : OracleMode::kForestSat;

  switch (reason.kind) {
    case ReasonKind::kDirect:
      check_oracle(*oracle_of(OracleMode::kMajority), false);
      break;
    case ReasonKind::kSufficient:
      check_oracle(*oracle_of(exact), complete);
      break;
    case ReasonKind::kMajoritary:
      check_oracle(*oracle_of(OracleMode::kMajority), complete);
      break;
    case ReasonKind::kMinimalMajoritary:
    case ReasonKind::kMinimalWeight:
    case ReasonKind::kMinimalSufficient:
      check_oracle(*oracle_of(OracleMode::kMajority),
                   complete && reason.optimal && !reason.fallback);
      break;
    case ReasonKind::kApproxMinimal:
      check_oracle(*oracle_of(OracleMode::kSingleTree), complete);
      break;
    case ReasonKind::kDeltaProbable: {
      auto oracle = oracle_of(OracleMode::kDeltaProbable);
      check_oracle(*oracle, complete);
      const DecisionTree& t = forest.tree(0);
      const Rational p = conditional_probability(
          reason.prediction ? t : t.negated(), reason.term);
      if (!reason.probability || *reason.probability != p) {
        fail("reports the wrong conditional probability");
      }
      break;
    }
    case ReasonKind::kComprehensible: {
      for (Literal l : reason.term) {
        if (std::find(request.intelligible->begin(), request.intelligible->end(),
                      l.var()) == request.intelligible->end()) {
          fail("uses a feature outside the intelligible set");
        }
      }
      check_oracle(*oracle_of(notion_for(request, forest)), complete);
      break;
    }
    case ReasonKind::kInclusionPreferred:
      check_oracle(*oracle_of(notion_for(request, forest)), complete);
      break;
    case ReasonKind::kLime:
      if (!request.linear->implied_by(reason.term, reason.prediction)) {
        fail("does not imply the linear model's decision");
      }
      break;
  }
}

}  // namespace rfx::app
