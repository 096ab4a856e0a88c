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

#include "rfx/explain/reason.h"

#include <array>
#include <utility>

namespace rfx {

namespace {

constexpr std::array<std::pair<ReasonKind, std::string_view>, 11> kNames = {{
    {ReasonKind::kDirect, "direct"},
    {ReasonKind::kSufficient, "sufficient"},
    {ReasonKind::kMajoritary, "majoritary"},
    {ReasonKind::kMinimalMajoritary, "minimal-majoritary"},
    {ReasonKind::kMinimalWeight, "minimal-weight"},
    {ReasonKind::kMinimalSufficient, "minimal-sufficient"},
    {ReasonKind::kApproxMinimal, "approx-minimal"},
    {ReasonKind::kDeltaProbable, "delta-probable"},
    {ReasonKind::kComprehensible, "comprehensible"},
    {ReasonKind::kInclusionPreferred, "inclusion-preferred"},
    {ReasonKind::kLime, "lime"},
}};

}  // namespace

std::string_view to_string(ReasonKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<ReasonKind> parse_reason_kind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

}  // namespace rfx
