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

#ifndef RFX_IO_TEXT_H_
#define RFX_IO_TEXT_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rfx/explain/explainers.h"
#include "rfx/io/model_file.h"
#include "rfx/logic.h"
#include "rfx/optimize/minimal.h"

namespace rfx::io {

// Instance CSV: one comma-separated 0/1 row per line, optionally preceded
// by a header of feature names. Blank lines and lines starting with '#'
// are skipped.
struct InstanceTable {
  std::vector<std::string> header;
  std::vector<Instance> rows;
};

// With expected_width > 0, rows of another width are rejected. Errors name
// the line and column.
InstanceTable read_instances(std::istream& in, int expected_width = 0);
InstanceTable load_instances(const std::filesystem::path& path,
                             int expected_width = 0);
void write_instances(std::ostream& out, const InstanceTable& table);

// "1,0,1,1" or "1011".
Instance parse_instance(std::string_view text, int expected_width = 0);

// A feature given as "x3", "3" or one of `names`.
int parse_feature(std::string_view token, std::span<const std::string> names,
                  int var_count);
// Comma-separated features.
std::vector<int> parse_feature_list(std::string_view text,
                                    std::span<const std::string> names,
                                    int var_count);
// Semicolon-separated strata of comma-separated features, least salient
// first: "x4;x2,x3;x1".
Prioritization parse_strata(std::string_view text,
                            std::span<const std::string> names, int var_count);
// Either n comma-separated integers, or "feature:weight" pairs with the
// unlisted features weighing 1.
WeightMap parse_weights(std::string_view text,
                        std::span<const std::string> names, int var_count);
// Comma-separated rationals ("3", "-0.5", "2/3"), one per feature.
LinearModel parse_linear_model(std::string_view text);

std::vector<std::string> split(std::string_view text, char sep);
std::string_view trim(std::string_view text);

}  // namespace rfx::io

#endif  // RFX_IO_TEXT_H_
