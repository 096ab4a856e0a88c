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

#ifndef RFX_SAT_EXTERNAL_H_
#define RFX_SAT_EXTERNAL_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rfx/sat/cnf.h"
#include "rfx/sat/maxsat.h"

namespace rfx::sat {

// Name of the environment variable holding an external solver command.
inline constexpr const char* kExternalSolverEnv = "RFX_EXTERNAL_SOLVER";

class ExternalSolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The command configured through RFX_EXTERNAL_SOLVER, if any.
std::optional<std::string> external_solver_from_env();

// Parsed competition-style output: "s ..." status line, "v ..." model lines
// (DIMACS literals, 0-terminated) and optional "o <cost>" lines.
struct SolverReport {
  std::string status_line;  // e.g. "SATISFIABLE", "OPTIMUM FOUND"
  std::vector<std::uint8_t> model;
  std::optional<std::int64_t> cost;
};

SolverReport parse_solver_output(std::istream& in, int var_count);

// Writes the instance as DIMACS to the command's stdin and parses its
// stdout. The command runs through /bin/sh.
SolveOutcome solve_external(const std::string& command, const CnfInstance& cnf);
// Same for WCNF; the returned cost is recomputed from the model.
MaxSatResult maxsat_external(const std::string& command,
                             const WeightedCnf& problem);

}  // namespace rfx::sat

#endif  // RFX_SAT_EXTERNAL_H_
