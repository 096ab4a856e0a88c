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

#ifndef RFX_EXPLAIN_ORACLE_H_
#define RFX_EXPLAIN_ORACLE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "rfx/deadline.h"
#include "rfx/forest.h"
#include "rfx/logic.h"
#include "rfx/numeric.h"
#include "rfx/sat/implicant_encoding.h"
#include "rfx/tree.h"

namespace rfx {

// "Is t an implicant of the model", in one of several senses. Models are
// taken as given: callers explaining a negative prediction pass the negated
// model.
class ImplicantOracle {
 public:
  virtual ~ImplicantOracle() = default;

  virtual int var_count() const = 0;
  virtual bool accepts(const Term& t) = 0;
  // Monotone oracles accept every superset of an accepted term.
  virtual bool monotone() const { return true; }
  // After accepts(t) returned true: a subset of t the oracle also accepts.
  virtual Term refine(const Term& t) { return t; }
  virtual std::string name() const = 0;

  std::uint64_t queries() const { return queries_; }

 protected:
  std::uint64_t queries_ = 0;
};

// t implies the tree. O(|T|) per query.
class TreeOracle : public ImplicantOracle {
 public:
  explicit TreeOracle(DecisionTree tree) : tree_(std::move(tree)) {}
  int var_count() const override { return tree_.var_count(); }
  bool accepts(const Term& t) override;
  std::string name() const override { return "single-tree"; }
  const DecisionTree& tree() const { return tree_; }

 private:
  DecisionTree tree_;
};

// t implies at least floor(m/2)+1 of the trees. O(|F|) per query.
class MajorityOracle : public ImplicantOracle {
 public:
  explicit MajorityOracle(RandomForest forest) : forest_(std::move(forest)) {}
  int var_count() const override { return forest_.var_count(); }
  bool accepts(const Term& t) override;
  std::string name() const override { return "majority"; }
  const RandomForest& forest() const { return forest_; }
  // Number of trees implied by t.
  int implied_trees(const Term& t) const;

 private:
  RandomForest forest_;
};

// t implies the forest function; one SAT call per query on an incremental
// session. Exact, not polynomial-time.
class ForestSatOracle : public ImplicantOracle {
 public:
  explicit ForestSatOracle(const RandomForest& forest,
                           sat::SolverOptions options = {})
      : checker_(forest, options) {}
  int var_count() const override { return checker_.forest().var_count(); }
  // Throws sat::SolverTimeout once the deadline has passed.
  bool accepts(const Term& t) override;
  Term refine(const Term& t) override;
  std::string name() const override { return "forest-sat"; }
  void set_deadline(const Deadline& deadline) { deadline_ = deadline; }
  const RandomForest& forest() const { return checker_.forest(); }

 private:
  sat::ForestImplicantChecker checker_;
  Deadline deadline_;
  std::optional<Term> last_accepted_;
};

// P(T(z) = 1 | z covered by t) >= delta, decided exactly:
// count_models(T, t) * 2^|t| >= delta * 2^n. Not monotone.
class DeltaProbableOracle : public ImplicantOracle {
 public:
  // Throws LogicError unless 0 <= delta <= 1.
  DeltaProbableOracle(DecisionTree tree, Rational delta);
  int var_count() const override { return tree_.var_count(); }
  bool accepts(const Term& t) override;
  bool monotone() const override { return false; }
  std::string name() const override { return "delta-probable"; }
  const Rational& delta() const { return delta_; }

 private:
  DecisionTree tree_;
  Rational delta_;
};

// P(T(z) = 1 | z covered by t), exactly.
Rational conditional_probability(const DecisionTree& tree, const Term& t);

enum class OracleMode { kSingleTree, kMajority, kForestSat, kDeltaProbable };

std::string_view to_string(OracleMode mode);
std::optional<OracleMode> parse_oracle_mode(std::string_view name);

// An oracle for explaining `x`: the model is negated first when it
// classifies x as 0. Single-tree modes require a one-tree forest; the
// delta-probable mode requires `delta`.
struct PreparedOracle {
  std::unique_ptr<ImplicantOracle> oracle;
  bool prediction = true;
};

PreparedOracle prepare_oracle(OracleMode mode, const RandomForest& forest,
                              const Instance& x,
                              std::optional<Rational> delta = std::nullopt);

}  // namespace rfx

#endif  // RFX_EXPLAIN_ORACLE_H_
