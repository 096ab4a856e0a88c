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

#ifndef RFX_IO_MODEL_FILE_H_
#define RFX_IO_MODEL_FILE_H_

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "rfx/forest.h"

namespace rfx::io {

inline constexpr const char* kModelFormat = "rfx-forest";
inline constexpr int kModelFormatVersion = 1;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSON model file:
//   {"format": "rfx-forest", "format_version": 1, "var_count": n,
//    "feature_names": [...],            (optional)
//    "trees": [node, ...]}
// where node is {"leaf": 0|1} or {"var": i, "low": node, "high": node}.
// Loading validates the trees (read-once included).
RandomForest read_model(std::istream& in);
RandomForest load_model(const std::filesystem::path& path);
RandomForest parse_model(const std::string& text);

void write_model(std::ostream& out, const RandomForest& forest);
void save_model(const std::filesystem::path& path, const RandomForest& forest);
std::string serialize_model(const RandomForest& forest);

}  // namespace rfx::io

#endif  // RFX_IO_MODEL_FILE_H_
