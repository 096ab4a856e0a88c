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

#include "rfx/io/model_file.h"

#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace rfx::io {

namespace {

using nlohmann::json;

DecisionTree::NodeId parse_node(const json& j, const std::string& where,
                                int depth, int var_count,
                                std::vector<DecisionTree::Node>& nodes) {
  if (depth > var_count + 1) {
    throw FormatError(where + ": tree deeper than the number of features");
  }
  if (!j.is_object()) throw FormatError(where + ": expected an object");
  if (j.contains("leaf")) {
    const json& leaf = j.at("leaf");
    int label = -1;
    if (leaf.is_boolean()) {
      label = leaf.get<bool>() ? 1 : 0;
    } else if (leaf.is_number_integer()) {
      label = leaf.get<int>();
    }
    if (label != 0 && label != 1) {
      throw FormatError(where + ".leaf: expected 0 or 1");
    }
    if (j.size() != 1) throw FormatError(where + ": leaf with extra fields");
    nodes.push_back(DecisionTree::Node::leaf(label == 1));
    return static_cast<DecisionTree::NodeId>(nodes.size() - 1);
  }
  if (!j.contains("var") || !j.contains("low") || !j.contains("high")) {
    throw FormatError(where + ": expected {\"leaf\"} or {\"var\", \"low\", \"high\"}");
  }
  if (!j.at("var").is_number_integer()) {
    throw FormatError(where + ".var: expected an integer");
  }
  const int var = j.at("var").get<int>();
  if (var < 1 || var > var_count) {
    throw FormatError(where + ".var: " + std::to_string(var) + " outside 1.." +
                      std::to_string(var_count));
  }
  const auto low = parse_node(j.at("low"), where + ".low", depth + 1, var_count,
                              nodes);
  const auto high = parse_node(j.at("high"), where + ".high", depth + 1,
                               var_count, nodes);
  nodes.push_back(DecisionTree::Node::split(var, low, high));
  return static_cast<DecisionTree::NodeId>(nodes.size() - 1);
}

json node_to_json(const DecisionTree& tree, DecisionTree::NodeId id) {
  const auto& node = tree.node(id);
  if (node.is_leaf()) return json{{"leaf", node.label ? 1 : 0}};
  return json{{"var", node.var},
              {"low", node_to_json(tree, node.low)},
              {"high", node_to_json(tree, node.high)}};
}

RandomForest from_json(const json& j) {
  if (!j.is_object()) throw FormatError("model: expected a JSON object");
  if (j.value("format", std::string()) != kModelFormat) {
    throw FormatError(std::string("model: \"format\" must be \"") +
                      kModelFormat + "\"");
  }
  if (!j.contains("format_version") ||
      !j.at("format_version").is_number_integer()) {
    throw FormatError("model: missing integer \"format_version\"");
  }
  const int version = j.at("format_version").get<int>();
  if (version != kModelFormatVersion) {
    throw FormatError("model: unsupported format_version " +
                      std::to_string(version));
  }
  if (!j.contains("var_count") || !j.at("var_count").is_number_integer() ||
      j.at("var_count").get<int>() < 0) {
    throw FormatError("model: missing non-negative integer \"var_count\"");
  }
  const int n = j.at("var_count").get<int>();
  std::vector<std::string> names;
  if (j.contains("feature_names")) {
    const json& fn = j.at("feature_names");
    if (!fn.is_array()) throw FormatError("feature_names: expected an array");
    for (std::size_t i = 0; i < fn.size(); ++i) {
      if (!fn[i].is_string()) {
        throw FormatError("feature_names[" + std::to_string(i) +
                          "]: expected a string");
      }
      names.push_back(fn[i].get<std::string>());
    }
  }
  if (!j.contains("trees") || !j.at("trees").is_array() ||
      j.at("trees").empty()) {
    throw FormatError("model: \"trees\" must be a non-empty array");
  }
  std::vector<DecisionTree> trees;
  const json& jt = j.at("trees");
  for (std::size_t i = 0; i < jt.size(); ++i) {
    const std::string where = "trees[" + std::to_string(i) + "]";
    std::vector<DecisionTree::Node> nodes;
    const auto root = parse_node(jt[i], where, 0, n, nodes);
    try {
      trees.emplace_back(n, std::move(nodes), root);
    } catch (const LogicError& e) {
      throw FormatError(where + ": " + e.what());
    }
  }
  try {
    return RandomForest(std::move(trees), std::move(names));
  } catch (const LogicError& e) {
    throw FormatError(std::string("model: ") + e.what());
  }
}

}  // namespace

RandomForest read_model(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("model: invalid JSON: ") + e.what());
  }
  try {
    return from_json(j);
  } catch (const json::exception& e) {
    throw FormatError(std::string("model: ") + e.what());
  }
}

RandomForest parse_model(const std::string& text) {
  std::istringstream in(text);
  return read_model(in);
}

RandomForest load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open model file " + path.string());
  try {
    return read_model(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::string serialize_model(const RandomForest& forest) {
  json j;
  j["format"] = kModelFormat;
  j["format_version"] = kModelFormatVersion;
  j["var_count"] = forest.var_count();
  if (!forest.feature_names().empty()) {
    j["feature_names"] = forest.feature_names();
  }
  json trees = json::array();
  for (const DecisionTree& t : forest.trees()) {
    trees.push_back(node_to_json(t, t.root()));
  }
  j["trees"] = std::move(trees);
  return j.dump(1) + "\n";
}

void write_model(std::ostream& out, const RandomForest& forest) {
  out << serialize_model(forest);
}

void save_model(const std::filesystem::path& path, const RandomForest& forest) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write model file " + path.string());
  write_model(out, forest);
}

}  // namespace rfx::io
