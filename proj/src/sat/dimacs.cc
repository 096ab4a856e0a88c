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

#include "rfx/sat/dimacs.h"

#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace rfx::sat {

namespace {

bool parse_int64(std::string_view token, std::int64_t& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

DimacsFile read_dimacs_file(std::istream& in) {
  DimacsFile file;
  bool have_header = false;
  bool expect_weight = true;
  std::vector<int> current;
  int current_start = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string tok;
    if (!(tokens >> tok)) continue;
    if (tok[0] == 'c' || tok[0] == '%') continue;
    if (tok == "p") {
      if (have_header) throw DimacsParseError(line_no, "duplicate 'p' line");
      std::string count_tok;
      if (!(tokens >> file.format)) {
        throw DimacsParseError(line_no, "missing format after 'p'");
      }
      if (file.format != "cnf" && file.format != "dnf" &&
          file.format != "wcnf") {
        throw DimacsParseError(line_no, "unknown format '" + file.format + "'");
      }
      std::int64_t vars = 0, lists = 0;
      std::string a, b;
      if (!(tokens >> a >> b) || !parse_int64(a, vars) ||
          !parse_int64(b, lists) || vars < 0 || lists < 0 ||
          vars > std::numeric_limits<int>::max()) {
        throw DimacsParseError(line_no, "malformed problem line");
      }
      file.var_count = static_cast<int>(vars);
      file.declared_lists = static_cast<int>(lists);
      std::string top_tok;
      if (tokens >> top_tok) {
        if (file.format != "wcnf" || !parse_int64(top_tok, file.top) ||
            file.top < 1) {
          throw DimacsParseError(line_no, "unexpected token '" + top_tok + "'");
        }
      }
      have_header = true;
      continue;
    }
    if (!have_header) {
      throw DimacsParseError(line_no, "clause data before the 'p' line");
    }
    const bool weighted = file.format == "wcnf";
    do {
      std::int64_t value = 0;
      if (!parse_int64(tok, value)) {
        throw DimacsParseError(line_no, "invalid token '" + tok + "'");
      }
      if (weighted && expect_weight) {
        if (value < 1) {
          throw DimacsParseError(line_no, "weights must be positive");
        }
        file.weights.push_back(value);
        expect_weight = false;
        current_start = line_no;
        continue;
      }
      if (current.empty()) current_start = line_no;
      if (value == 0) {
        file.lists.push_back(std::move(current));
        current.clear();
        expect_weight = true;
        continue;
      }
      if (value > file.var_count || -value > file.var_count) {
        throw DimacsParseError(line_no, "literal " + tok + " exceeds " +
                                            std::to_string(file.var_count) +
                                            " variables");
      }
      current.push_back(static_cast<int>(value));
    } while (tokens >> tok);
  }
  if (!have_header) throw DimacsParseError(line_no, "missing 'p' line");
  if (!current.empty() || (file.format == "wcnf" && !expect_weight)) {
    throw DimacsParseError(current_start, "last clause is not terminated by 0");
  }
  if (static_cast<int>(file.lists.size()) != file.declared_lists) {
    throw DimacsParseError(line_no, "header declares " +
                                        std::to_string(file.declared_lists) +
                                        " clauses, found " +
                                        std::to_string(file.lists.size()));
  }
  return file;
}

namespace {

Clause to_clause(const std::vector<int>& list) {
  std::vector<Literal> lits;
  lits.reserve(list.size());
  for (int v : list) lits.push_back(Literal::from_dimacs(v));
  return Clause(std::move(lits));
}

void write_literals(std::ostream& out, const Clause& c) {
  for (Literal l : c) out << l.to_dimacs() << ' ';
  out << "0\n";
}

}  // namespace

CnfInstance read_dimacs(std::istream& in) {
  DimacsFile file = read_dimacs_file(in);
  if (file.format != "cnf") {
    throw DimacsParseError(1, "expected 'p cnf', found 'p " + file.format + "'");
  }
  CnfInstance cnf(file.var_count);
  for (const auto& list : file.lists) cnf.add(to_clause(list));
  return cnf;
}

void write_dimacs(std::ostream& out, const CnfInstance& cnf) {
  out << "p cnf " << cnf.var_count() << ' ' << cnf.clauses().size() << '\n';
  for (const Clause& c : cnf.clauses()) write_literals(out, c);
}

WeightedCnf read_wcnf(std::istream& in) {
  DimacsFile file = read_dimacs_file(in);
  if (file.format != "wcnf") {
    throw DimacsParseError(1, "expected 'p wcnf', found 'p " + file.format + "'");
  }
  WeightedCnf problem;
  problem.hard = CnfInstance(file.var_count);
  for (std::size_t i = 0; i < file.lists.size(); ++i) {
    Clause c = to_clause(file.lists[i]);
    if (file.top > 0 && file.weights[i] >= file.top) {
      problem.hard.add(std::move(c));
    } else {
      problem.soft.push_back({std::move(c), file.weights[i]});
    }
  }
  return problem;
}

void write_wcnf(std::ostream& out, const WeightedCnf& problem) {
  const std::int64_t top = problem.total_soft_weight() + 1;
  out << "p wcnf " << problem.var_count() << ' '
      << problem.hard.clauses().size() + problem.soft.size() << ' ' << top
      << '\n';
  for (const Clause& c : problem.hard.clauses()) {
    out << top << ' ';
    write_literals(out, c);
  }
  for (const SoftClause& s : problem.soft) {
    out << s.weight << ' ';
    write_literals(out, s.clause);
  }
}

}  // namespace rfx::sat
