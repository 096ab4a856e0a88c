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

#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.h"
#include "rfx/io/model_file.h"
#include "rfx/io/text.h"

namespace rfx::io {
namespace {

using rfx::testing::orchid_forest;

std::string error_of(const std::string& text) {
  try {
    parse_model(text);
  } catch (const FormatError& e) {
    return e.what();
  }
  return "";
}

TEST(ModelFileTest, RoundTrip) {
  const RandomForest f = orchid_forest().with_feature_names(
      {"fragrant", "one_or_two_leaves", "large_flowers", "sympodial"});
  EXPECT_EQ(parse_model(serialize_model(f)), f);
  EXPECT_EQ(parse_model(serialize_model(orchid_forest())), orchid_forest());

  testing::Rng rng(51);
  for (int i = 0; i < 30; ++i) {
    const RandomForest r = testing::random_forest(rng, rng.uniform(1, 12),
                                                  rng.uniform(1, 6));
    EXPECT_EQ(parse_model(serialize_model(r)), r);
  }
}

TEST(ModelFileTest, ShippedOrchidsFile) {
  const RandomForest f = load_model(std::string(RFX_DATA_DIR) + "/orchids.json");
  EXPECT_EQ(f.trees(), orchid_forest().trees());
  EXPECT_EQ(f.feature_names().at(0), "fragrant");
}

TEST(ModelFileTest, ErrorsNameThePath) {
  EXPECT_NE(error_of("{"), "");
  EXPECT_NE(error_of(R"({"format":"other","format_version":1,"var_count":1,"trees":[]})")
                .find("format"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"format":"rfx-forest","format_version":2,"var_count":1,
                         "trees":[{"leaf":1}]})")
                .find("version"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"format":"rfx-forest","format_version":1,"var_count":2,
                         "trees":[{"var":1,"low":{"leaf":0},"high":{"leaf":2}}]})")
                .find("trees[0].high"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"format":"rfx-forest","format_version":1,"var_count":2,
                         "trees":[{"var":3,"low":{"leaf":0},"high":{"leaf":1}}]})")
                .find("trees[0]"),
            std::string::npos);
  // Repeating a variable on a path breaks read-once.
  EXPECT_NE(error_of(R"({"format":"rfx-forest","format_version":1,"var_count":2,
                         "trees":[{"var":1,"low":{"leaf":0},
                                   "high":{"var":1,"low":{"leaf":0},"high":{"leaf":1}}}]})"),
            "");
  EXPECT_NE(error_of(R"({"format":"rfx-forest","format_version":1,"var_count":2,
                         "trees":[]})"),
            "");
}

TEST(InstancesTest, ReadsHeaderAndRows) {
  std::istringstream in("a,b,c\n1,0,1\n\n0,0,1\n");
  const InstanceTable t = read_instances(in);
  EXPECT_EQ(t.header, (std::vector<std::string>{"a", "b", "c"}));
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0], (Instance{1, 0, 1}));

  std::ostringstream out;
  write_instances(out, t);
  std::istringstream back(out.str());
  EXPECT_EQ(read_instances(back).rows, t.rows);
}

TEST(InstancesTest, ErrorsNameRowAndColumn) {
  std::istringstream bad("1,0,1\n1,2,0\n");
  try {
    read_instances(bad);
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("column 2"), std::string::npos) << e.what();
  }
  std::istringstream ragged("1,0,1\n1,0\n");
  EXPECT_THROW(read_instances(ragged), FormatError);
  std::istringstream wrong_width("1,0,1\n");
  EXPECT_THROW(read_instances(wrong_width, 4), FormatError);
}

TEST(TextTest, InstancesAndFeatures) {
  EXPECT_EQ(parse_instance("1,0,1"), (Instance{1, 0, 1}));
  EXPECT_EQ(parse_instance("101"), (Instance{1, 0, 1}));
  EXPECT_THROW(parse_instance("1,0", 3), FormatError);
  EXPECT_THROW(parse_instance("12"), FormatError);

  const std::vector<std::string> names = {"fragrant", "leaves"};
  EXPECT_EQ(parse_feature("x2", names, 2), 2);
  EXPECT_EQ(parse_feature("1", names, 2), 1);
  EXPECT_EQ(parse_feature("leaves", names, 2), 2);
  EXPECT_THROW(parse_feature("x3", names, 2), FormatError);
  EXPECT_THROW(parse_feature("petals", names, 2), FormatError);
  EXPECT_EQ(parse_feature_list("x1, leaves", names, 2), (std::vector<int>{1, 2}));
}

TEST(TextTest, StrataWeightsAndLinear) {
  const Prioritization p = parse_strata("x4;x2,x3;x1", {}, 4);
  EXPECT_EQ(p.strata(), (std::vector<std::vector<int>>{{4}, {2, 3}, {1}}));

  EXPECT_EQ(parse_weights("5,1,1,1", {}, 4).values(),
            (std::vector<std::int64_t>{5, 1, 1, 1}));
  EXPECT_EQ(parse_weights("x2:10", {}, 4).values(),
            (std::vector<std::int64_t>{1, 10, 1, 1}));
  EXPECT_THROW(parse_weights("1,2", {}, 4), FormatError);

  const LinearModel m = parse_linear_model("3, 2, -4.5");
  ASSERT_EQ(m.var_count(), 3);
  EXPECT_EQ(m.weights[2], Rational(-9, 2));
}

}  // namespace
}  // namespace rfx::io
