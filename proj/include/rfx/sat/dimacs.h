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

#ifndef RFX_SAT_DIMACS_H_
#define RFX_SAT_DIMACS_H_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "rfx/sat/cnf.h"

namespace rfx::sat {

class DimacsParseError : public std::runtime_error {
 public:
  DimacsParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Raw content of a DIMACS-like file: the format word of the "p" line
// ("cnf", "dnf", "wcnf"), the declared counts, and each 0-terminated
// literal list with its weight (wcnf only).
struct DimacsFile {
  std::string format;
  int var_count = 0;
  int declared_lists = 0;
  std::int64_t top = 0;  // wcnf only; 0 when absent
  std::vector<std::vector<int>> lists;
  std::vector<std::int64_t> weights;
};

// Accepts "p cnf", "p dnf" and "p wcnf" headers, 'c' comment lines, and
// lists spanning several lines. Errors carry 1-based line numbers.
DimacsFile read_dimacs_file(std::istream& in);

CnfInstance read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const CnfInstance& cnf);

// Old-style WCNF: "p wcnf <vars> <clauses> <top>"; clauses weighted >= top
// are hard. Without a top, every clause is soft.
WeightedCnf read_wcnf(std::istream& in);
// Writes top = total soft weight + 1 on every hard clause.
void write_wcnf(std::ostream& out, const WeightedCnf& problem);

}  // namespace rfx::sat

#endif  // RFX_SAT_DIMACS_H_
