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

#ifndef RFX_EXPLAIN_REASON_H_
#define RFX_EXPLAIN_REASON_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rfx/logic.h"
#include "rfx/numeric.h"

namespace rfx {

enum class ReasonKind {
  kDirect,
  kSufficient,
  kMajoritary,
  kMinimalMajoritary,
  kMinimalWeight,
  kMinimalSufficient,
  kApproxMinimal,
  kDeltaProbable,
  kComprehensible,
  kInclusionPreferred,
  kLime,
};

// Kebab-case names used on the command line and in CSV output.
std::string_view to_string(ReasonKind kind);
std::optional<ReasonKind> parse_reason_kind(std::string_view name);

// An abductive explanation: a term covering `instance` that is valid for the
// model in the sense given by `kind`. Negative predictions are explained
// against the negated model; `prediction` keeps the original class.
struct Reason {
  Term term;
  ReasonKind kind = ReasonKind::kDirect;
  Instance instance;
  bool prediction = true;
  std::optional<std::int64_t> cost;  // size or weight, optimization kinds
  bool optimal = false;
  std::chrono::duration<double> elapsed{};
  std::optional<Rational> probability;  // delta-probable
  bool fallback = false;  // the trivial reason t_x was returned instead
  std::vector<std::string> notes;

  int size() const { return term.size(); }
};

// A greedy run was started from a term the oracle rejects.
class NotAnImplicant : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A time budget ran out. `partial` is the best valid (possibly non-minimal)
// reason at that point.
class ExplanationTimeout : public std::runtime_error {
 public:
  explicit ExplanationTimeout(Reason partial)
      : std::runtime_error("time budget exhausted"),
        partial_(std::move(partial)) {}
  const Reason& partial() const { return partial_; }

 private:
  Reason partial_;
};

}  // namespace rfx

#endif  // RFX_EXPLAIN_REASON_H_
