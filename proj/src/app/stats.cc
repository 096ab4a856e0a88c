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

#include "rfx/app/stats.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace rfx::app {

namespace {

std::string status_name(ExplainOutcome::Status s) {
  switch (s) {
    case ExplainOutcome::Status::kOk:
      return "ok";
    case ExplainOutcome::Status::kNone:
      return "none";
    case ExplainOutcome::Status::kTimeout:
      return "timeout";
  }
  return "error";
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void explain_instance(const RandomForest& forest, const Instance& x, int index,
                      const std::vector<ReasonKind>& kinds,
                      const ExplainRequest& base, std::vector<StatsRow>& rows,
                      std::vector<TrajectoryPoint>& trajectory) {
  for (ReasonKind kind : kinds) {
    StatsRow row;
    row.instance = index;
    row.kind = kind;
    ExplainRequest request = base;
    request.kind = kind;
    const auto started = std::chrono::steady_clock::now();
    try {
      ExplainOutcome out = run_explain(forest, x, request);
      row.status = status_name(out.status);
      if (out.reason) {
        row.size = out.reason->size();
        row.optimal = out.reason->optimal;
        row.probability = out.reason->probability;
        row.reason = to_string(out.reason->term, forest.feature_names());
        row.elapsed_s = out.reason->elapsed.count();
      }
      for (std::size_t s = 0; s < out.log.size(); ++s) {
        trajectory.push_back({index, kind, static_cast<int>(s) + 1,
                              out.log[s].elapsed.count(), out.log[s].cost});
      }
    } catch (const std::exception& e) {
      row.status = "error";
      row.error = e.what();
      row.elapsed_s = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - started)
                          .count();
    }
    rows.push_back(std::move(row));
  }
}

}  // namespace

StatsReport run_stats(const RandomForest& forest,
                      const std::vector<Instance>& instances,
                      const std::vector<ReasonKind>& kinds,
                      const ExplainRequest& base, int jobs) {
  if (kinds.empty()) throw std::invalid_argument("no reason kinds requested");
  for (ReasonKind kind : kinds) {
    ExplainRequest request = base;
    request.kind = kind;
    check_request(request, forest);
  }
  const int count = static_cast<int>(instances.size());
  std::vector<std::vector<StatsRow>> rows(count);
  std::vector<std::vector<TrajectoryPoint>> traj(count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      explain_instance(forest, instances[i], i, kinds, base, rows[i], traj[i]);
    }
  };
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  StatsReport report;
  for (int i = 0; i < count; ++i) {
    for (auto& r : rows[i]) report.rows.push_back(std::move(r));
    for (auto& p : traj[i]) report.trajectory.push_back(p);
  }
  return report;
}

void write_stats_csv(std::ostream& out, const StatsReport& report) {
  out << "instance,kind,status,size,elapsed_s,optimal,probability,reason,error\n";
  std::vector<ReasonKind> order;
  for (const StatsRow& r : report.rows) {
    out << r.instance << ',' << to_string(r.kind) << ',' << r.status << ',';
    if (r.size) out << *r.size;
    out << ',' << std::setprecision(6) << r.elapsed_s << ','
        << (r.optimal ? 1 : 0) << ',';
    if (r.probability) out << to_string(*r.probability);
    out << ',' << csv_escape(r.reason) << ',' << csv_escape(r.error) << '\n';
    if (std::find(order.begin(), order.end(), r.kind) == order.end()) {
      order.push_back(r.kind);
    }
  }
  out << "\nkind,rows,ok,mean_size,stddev_size,mean_elapsed_s\n";
  for (ReasonKind kind : order) {
    int rows = 0, ok = 0, sized = 0;
    double sum = 0, sum_sq = 0, elapsed = 0;
    for (const StatsRow& r : report.rows) {
      if (r.kind != kind) continue;
      ++rows;
      elapsed += r.elapsed_s;
      if (r.status == "ok") ++ok;
      if (r.size) {
        ++sized;
        sum += *r.size;
        sum_sq += static_cast<double>(*r.size) * *r.size;
      }
    }
    out << to_string(kind) << ',' << rows << ',' << ok << ',';
    if (sized > 0) {
      const double mean = sum / sized;
      const double var = std::max(0.0, sum_sq / sized - mean * mean);
      out << std::setprecision(6) << mean << ',' << std::sqrt(var);
    } else {
      out << ',';
    }
    out << ',' << std::setprecision(6) << (rows ? elapsed / rows : 0.0) << '\n';
  }
}

void write_trajectory_csv(std::ostream& out, const StatsReport& report) {
  out << "instance,kind,step,elapsed_s,cost\n";
  for (const TrajectoryPoint& p : report.trajectory) {
    out << p.instance << ',' << to_string(p.kind) << ',' << p.step << ','
        << std::setprecision(6) << p.elapsed_s << ',' << p.cost << '\n';
  }
}

}  // namespace rfx::app
