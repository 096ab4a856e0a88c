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
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.h"
#include "rfx/io/model_file.h"
#include "rfx/io/text.h"

namespace rfx {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string("'") + RFX_CLI_PATH + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult r;
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rfx-cli-" + std::to_string(::getpid()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    io::save_model(path("plain.json"), testing::orchid_forest());
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
  }
  std::string orchids() const { return std::string(RFX_DATA_DIR) + "/orchids.json"; }
  std::string orchid_rows() const { return std::string(RFX_DATA_DIR) + "/orchids.csv"; }

  fs::path dir_;
};

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

TEST_F(CliTest, Classify) {
  write("rows.csv", "1,1,1,1\n0,1,0,0\n");
  const RunResult r = run("classify " + path("plain.json") + " " + path("rows.csv"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n0\n");
}

TEST_F(CliTest, ExplainDirect) {
  const RunResult r =
      run("explain " + path("plain.json") + " --kind direct --instance 1,1,1,1");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r.out, "reason: x1 ∧ x2 ∧ x3 ∧ x4")) << r.out;
  EXPECT_TRUE(has(r.out, "size: 4"));

  const RunResult named =
      run("explain " + orchids() + " --kind direct --instance 0100");
  EXPECT_TRUE(has(named.out, "one_or_two_leaves ∧ ¬large_flowers ∧ ¬sympodial"))
      << named.out;
}

TEST_F(CliTest, ExplainMinimalMajoritary) {
  const RunResult r = run("explain " + path("plain.json") +
                          " --kind minimal-majoritary --instance 0,1,0,0");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r.out, "size: 2")) << r.out;
  EXPECT_TRUE(has(r.out, "optimal: yes"));
}

TEST_F(CliTest, ComprehensibleAbsenceHasItsOwnExitCode) {
  const RunResult none =
      run("explain " + path("plain.json") +
          " --kind comprehensible --intelligible x1,x4 --notion majority --instance 1111");
  EXPECT_EQ(none.code, 2);
  EXPECT_TRUE(has(none.out, "no comprehensible reason"));

  const RunResult found =
      run("explain " + path("plain.json") +
          " --kind comprehensible --intelligible x1,x4 --notion forest-sat --instance 1111");
  EXPECT_EQ(found.code, 0);
  EXPECT_TRUE(has(found.out, "reason: x1 ∧ x4")) << found.out;
}

TEST_F(CliTest, FlagValidation) {
  EXPECT_EQ(run("explain " + path("plain.json") +
                " --kind direct --delta 0.5 --instance 1111").code,
            1);
  EXPECT_EQ(run("explain " + path("plain.json") +
                " --kind delta-probable --delta 0.5 --instance 1111").code,
            1);
  EXPECT_EQ(run("explain " + path("plain.json") + " --kind bogus --instance 1111").code,
            1);
  EXPECT_EQ(run("explain " + path("plain.json") + " --kind direct --instance 111").code,
            1);
  EXPECT_EQ(run("explain " + path("missing.json") + " --kind direct --instance 1111").code,
            1);
}

TEST_F(CliTest, ExplainRowsAndJson) {
  const RunResult r = run("explain " + orchids() + " --kind sufficient --instances " +
                          orchid_rows() + " --row 2 --json");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r.out, "\"prediction\": 0"));
  EXPECT_TRUE(has(r.out, "\"size\":"));
}

TEST_F(CliTest, TimeoutZeroReportsPartialResult) {
  const RunResult r = run("explain " + path("plain.json") +
                          " --kind minimal-majoritary --timeout 0 --instance 1111");
  EXPECT_EQ(r.code, 3) << r.out;
  EXPECT_TRUE(has(r.out, "status: timeout"));
  EXPECT_TRUE(has(r.out, "size: 4"));
}

TEST_F(CliTest, NegateFlipsEveryPrediction) {
  ASSERT_EQ(run("negate " + path("plain.json") + " -o " + path("neg.json")).code, 0);
  write("rows.csv", "1,1,1,1\n0,1,0,0\n");
  EXPECT_EQ(run("classify " + path("neg.json") + " " + path("rows.csv")).out, "0\n1\n");
}

TEST_F(CliTest, ConvertCnfAndDnf) {
  write("f.cnf", "p cnf 2 1\n1 2 0\n");
  ASSERT_EQ(run("convert --from cnf " + path("f.cnf") + " -o " + path("f.json")).code, 0);
  write("rows.csv", "0,0\n0,1\n1,0\n1,1\n");
  EXPECT_EQ(run("classify " + path("f.json") + " " + path("rows.csv")).out,
            "0\n1\n1\n1\n");

  write("g.dnf", "p dnf 2 1\n1 2 0\n");
  ASSERT_EQ(run("convert --from dnf " + path("g.dnf") + " -o " + path("g.json")).code, 0);
  EXPECT_EQ(run("classify " + path("g.json") + " " + path("rows.csv")).out,
            "0\n0\n0\n1\n");

  write("bad.cnf", "p cnf 2 1\n1 5 0\n");
  const RunResult bad = run("convert --from cnf " + path("bad.cnf"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(has(bad.out, "line 2")) << bad.out;
}

TEST_F(CliTest, Stats) {
  const RunResult r = run("stats " + orchids() + " " + orchid_rows() +
                          " --kinds direct,sufficient,majoritary --trajectory " +
                          path("traj.csv"));
  EXPECT_EQ(r.code, 0) << r.out;
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "instance,kind,status,size,elapsed_s,optimal,probability,reason,error");
  EXPECT_TRUE(has(r.out, "0,direct,ok,4,"));
  EXPECT_TRUE(has(r.out, "0,majoritary,ok,3,"));
  EXPECT_TRUE(has(r.out, "kind,rows,ok,mean_size,stddev_size,mean_elapsed_s"));
  EXPECT_TRUE(fs::exists(path("traj.csv")));
}

TEST_F(CliTest, StatsEdgeCases) {
  EXPECT_EQ(run("stats " + orchids() + " " + orchid_rows() + " --kinds ''").code, 1);

  write("one.csv", "1,1,1,1\n");
  const RunResult r = run("stats " + path("plain.json") + " " + path("one.csv") +
                          " --kinds minimal-majoritary --timeout 0");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r.out, "0,minimal-majoritary,timeout,4,")) << r.out;
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  // optimal is the sixth column.
  EXPECT_EQ(io::split(row, ',').at(5), "0") << row;
}

TEST_F(CliTest, ClassifyEdgeCases) {
  write("empty.csv", "");
  const RunResult empty = run("classify " + path("plain.json") + " " + path("empty.csv"));
  EXPECT_EQ(empty.code, 0);
  EXPECT_EQ(empty.out, "");

  write("bad.csv", "1,1,1,1\n0,1,7,0\n");
  const RunResult bad = run("classify " + path("plain.json") + " " + path("bad.csv"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(has(bad.out, "row 2")) << bad.out;
  EXPECT_TRUE(has(bad.out, "column 3")) << bad.out;
}

TEST_F(CliTest, FixtureGen) {
  ASSERT_EQ(run("fixture-gen --parity 2 --copies 1 -o " + path("p.json")).code, 0);
  const RandomForest f = io::load_model(path("p.json"));
  EXPECT_EQ(f.tree_count(), 3);
  EXPECT_EQ(f.var_count(), 2);
  EXPECT_EQ(run("fixture-gen --parity 0 --copies 1").code, 1);
}

TEST_F(CliTest, SolveAndExport) {
  const RunResult w = run("explain " + path("plain.json") +
                          " --kind minimal-majoritary --instance 1111 --export-wcnf " +
                          path("m.wcnf"));
  ASSERT_EQ(w.code, 0) << w.out;
  const RunResult s = run("solve --wcnf " + path("m.wcnf"));
  EXPECT_EQ(s.code, 0) << s.out;
  EXPECT_TRUE(has(s.out, "s OPTIMUM FOUND")) << s.out;
  EXPECT_TRUE(has(s.out, "o 3")) << s.out;

  write("u.cnf", "p cnf 1 2\n1 0\n-1 0\n");
  EXPECT_TRUE(has(run("solve " + path("u.cnf")).out, "s UNSATISFIABLE"));
}

}  // namespace
}  // namespace rfx
