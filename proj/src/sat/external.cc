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

#include "rfx/sat/external.h"

#include <cstdio>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <sys/wait.h>

#include "rfx/sat/dimacs.h"

namespace rfx::sat {

std::optional<std::string> external_solver_from_env() {
  const char* value = std::getenv(kExternalSolverEnv);
  if (value == nullptr || *value == '\0') return std::nullopt;
  return std::string(value);
}

SolverReport parse_solver_output(std::istream& in, int var_count) {
  SolverReport report;
  report.model.assign(var_count, 0);
  std::string line;
  while (std::getline(in, line)) {
    if (line.size() < 2 || line[1] != ' ') continue;
    const char tag = line[0];
    std::istringstream rest(line.substr(2));
    if (tag == 's') {
      std::getline(rest >> std::ws, report.status_line);
      while (!report.status_line.empty() &&
             std::isspace(static_cast<unsigned char>(report.status_line.back()))) {
        report.status_line.pop_back();
      }
    } else if (tag == 'o') {
      std::int64_t cost = 0;
      if (rest >> cost) report.cost = cost;
    } else if (tag == 'v') {
      std::string tok;
      while (rest >> tok) {
        // Some MaxSAT solvers print the model as one 0/1 string.
        if (tok.find_first_not_of("01") == std::string::npos &&
            tok.size() > 1 && static_cast<int>(tok.size()) >= var_count) {
          for (int v = 0; v < var_count; ++v) report.model[v] = tok[v] == '1';
          continue;
        }
        int lit = 0;
        const auto [end, ec] =
            std::from_chars(tok.data(), tok.data() + tok.size(), lit);
        if (ec != std::errc() || end != tok.data() + tok.size()) {
          throw ExternalSolverError("bad model token '" + tok + "'");
        }
        if (lit == 0) continue;
        const int var = lit > 0 ? lit : -lit;
        if (var <= var_count) report.model[var - 1] = lit > 0 ? 1 : 0;
      }
    }
  }
  return report;
}

namespace {

std::string run_command(const std::string& command, const std::string& input) {
  namespace fs = std::filesystem;
  std::random_device rd;
  const fs::path path = fs::temp_directory_path() /
                        ("rfx-" + std::to_string(rd()) + "-" +
                         std::to_string(rd()) + ".in");
  {
    std::ofstream f(path);
    if (!f) throw ExternalSolverError("cannot write " + path.string());
    f << input;
  }
  const std::string full = command + " < '" + path.string() + "'";
  FILE* pipe = popen(full.c_str(), "r");
  if (pipe == nullptr) {
    fs::remove(path);
    throw ExternalSolverError("cannot start '" + command + "'");
  }
  std::string output;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
  const int rc = pclose(pipe);
  fs::remove(path);
  // SAT competition convention: 10 = SAT, 20 = UNSAT, 30 = optimum.
  if (rc == -1 || !WIFEXITED(rc)) {
    throw ExternalSolverError("'" + command + "' terminated abnormally");
  }
  const int code = WEXITSTATUS(rc);
  if (code != 0 && code != 10 && code != 20 && code != 30) {
    throw ExternalSolverError("'" + command + "' exited with status " +
                              std::to_string(code));
  }
  return output;
}

}  // namespace

SolveOutcome solve_external(const std::string& command,
                            const CnfInstance& cnf) {
  std::ostringstream text;
  write_dimacs(text, cnf);
  std::istringstream output(run_command(command, text.str()));
  SolverReport report = parse_solver_output(output, cnf.var_count());
  SolveOutcome out;
  if (report.status_line == "SATISFIABLE") {
    out.status = SolveStatus::kSat;
    if (!cnf.satisfied_by(report.model)) {
      throw ExternalSolverError("external model violates the instance");
    }
    out.model = std::move(report.model);
  } else if (report.status_line == "UNSATISFIABLE") {
    out.status = SolveStatus::kUnsat;
  } else if (report.status_line == "UNKNOWN") {
    out.status = SolveStatus::kTimeout;
  } else {
    throw ExternalSolverError("unrecognized status line 's " +
                              report.status_line + "'");
  }
  return out;
}

MaxSatResult maxsat_external(const std::string& command,
                             const WeightedCnf& problem) {
  std::ostringstream text;
  write_wcnf(text, problem);
  std::istringstream output(run_command(command, text.str()));
  SolverReport report = parse_solver_output(output, problem.var_count());
  MaxSatResult result;
  if (report.status_line == "UNSATISFIABLE") throw HardClausesUnsat();
  if (report.status_line == "OPTIMUM FOUND") {
    result.status = MaxSatStatus::kOptimal;
  } else if (report.status_line == "SATISFIABLE") {
    result.status = MaxSatStatus::kFeasible;
  } else if (report.status_line == "UNKNOWN") {
    return result;
  } else {
    throw ExternalSolverError("unrecognized status line 's " +
                              report.status_line + "'");
  }
  if (!problem.hard.satisfied_by(report.model)) {
    throw ExternalSolverError("external model violates hard clauses");
  }
  result.cost = problem.cost(report.model);
  result.model = std::move(report.model);
  return result;
}

}  // namespace rfx::sat
