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

#ifndef RFX_APP_STATS_H_
#define RFX_APP_STATS_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rfx/app/explain_request.h"

namespace rfx::app {

// One row per (instance, kind). Column order in the CSV:
//   instance,kind,status,size,elapsed_s,optimal,probability,reason,error
// status is ok, timeout, none or error.
struct StatsRow {
  int instance = 0;  // 0-based position in the input
  ReasonKind kind = ReasonKind::kDirect;
  std::string status = "ok";
  std::optional<int> size;
  double elapsed_s = 0;
  bool optimal = false;
  std::optional<Rational> probability;
  std::string reason;
  std::string error;
};

struct TrajectoryPoint {
  int instance = 0;
  ReasonKind kind = ReasonKind::kDirect;
  int step = 0;
  double elapsed_s = 0;
  std::int64_t cost = 0;
};

struct StatsReport {
  std::vector<StatsRow> rows;
  std::vector<TrajectoryPoint> trajectory;
};

// `base` carries the kind-specific flags; its kind is replaced by each entry
// of `kinds` in turn. Per-instance failures are recorded in the row. With
// jobs > 1 instances are spread over worker threads; rows keep input order.
StatsReport run_stats(const RandomForest& forest,
                      const std::vector<Instance>& instances,
                      const std::vector<ReasonKind>& kinds,
                      const ExplainRequest& base, int jobs = 1);

// Rows, a blank line, then a summary block with columns
//   kind,rows,ok,mean_size,stddev_size,mean_elapsed_s
// where size statistics cover rows with a size.
void write_stats_csv(std::ostream& out, const StatsReport& report);
// instance,kind,step,elapsed_s,cost
void write_trajectory_csv(std::ostream& out, const StatsReport& report);

}  // namespace rfx::app

#endif  // RFX_APP_STATS_H_
