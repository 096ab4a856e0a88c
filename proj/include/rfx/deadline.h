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

#ifndef RFX_DEADLINE_H_
#define RFX_DEADLINE_H_

#include <chrono>
#include <optional>

namespace rfx {

// A wall-clock budget. A default-constructed deadline never expires.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  static Deadline after(std::chrono::duration<double> budget) {
    Deadline d;
    d.at_ = Clock::now() +
            std::chrono::duration_cast<Clock::duration>(budget);
    return d;
  }
  static Deadline after_seconds(std::optional<double> seconds) {
    if (!seconds) return Deadline();
    return after(std::chrono::duration<double>(*seconds));
  }

  bool unlimited() const { return !at_.has_value(); }
  bool expired() const { return at_ && Clock::now() >= *at_; }

 private:
  std::optional<Clock::time_point> at_;
};

}  // namespace rfx

#endif  // RFX_DEADLINE_H_
