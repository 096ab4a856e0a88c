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

#include "rfx/logic.h"

#include <algorithm>

namespace rfx {

Literal Literal::from_dimacs(int code) {
  if (code == 0) throw LogicError("literal 0 is not a valid DIMACS literal");
  return code > 0 ? Literal(code, true) : Literal(-code, false);
}

std::string to_string(Literal l, std::span<const std::string> names) {
  std::string base;
  if (l.var() >= 1 && static_cast<std::size_t>(l.var()) <= names.size() &&
      !names[l.var() - 1].empty()) {
    base = names[l.var() - 1];
  } else {
    base = "x" + std::to_string(l.var());
  }
  return l.positive() ? base : "¬" + base;
}

Instance::Instance(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) {
    if (b > 1) throw LogicError("instance values must be 0 or 1");
  }
}

Instance::Instance(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw LogicError("instance values must be 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(b));
  }
}

namespace {

void check_vars(const std::vector<Literal>& lits) {
  for (Literal l : lits) {
    if (l.var() < 1) {
      throw LogicError("variable indices are 1-based, got " +
                       std::to_string(l.var()));
    }
  }
}

void canonicalize(std::vector<Literal>& lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
}

bool has_complementary_pair(const std::vector<Literal>& sorted) {
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].var() == sorted[i - 1].var()) return true;
  }
  return false;
}

}  // namespace

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  check_vars(literals_);
  canonicalize(literals_);
  tautological_ = has_complementary_pair(literals_);
}

int Clause::max_var() const {
  return literals_.empty() ? 0 : literals_.back().var();
}

bool Clause::satisfied_by(const std::vector<std::uint8_t>& assignment) const {
  for (Literal l : literals_) {
    if (static_cast<std::size_t>(l.var()) > assignment.size()) {
      throw LogicError("clause mentions x" + std::to_string(l.var()) +
                       " beyond the assignment length");
    }
    if (l.satisfied_by(assignment[l.var() - 1] != 0)) return true;
  }
  return false;
}

Term Clause::negation() const {
  if (tautological_) {
    throw LogicError("the negation of a tautological clause is inconsistent");
  }
  std::vector<Literal> lits;
  lits.reserve(literals_.size());
  for (Literal l : literals_) lits.push_back(~l);
  return Term(std::move(lits));
}

Term::Term(std::vector<Literal> literals) : literals_(std::move(literals)) {
  check_vars(literals_);
  canonicalize(literals_);
  if (has_complementary_pair(literals_)) {
    throw LogicError("inconsistent term: a variable occurs with both signs");
  }
}

Term Term::of_instance(const Instance& x) {
  Term t;
  t.literals_.reserve(x.size());
  for (int v = 1; v <= x.size(); ++v) t.literals_.emplace_back(v, x.value(v));
  return t;
}

int Term::max_var() const {
  return literals_.empty() ? 0 : literals_.back().var();
}

const Literal* Term::find(int var) const {
  auto it = std::lower_bound(
      literals_.begin(), literals_.end(), var,
      [](Literal l, int v) { return l.var() < v; });
  if (it == literals_.end() || it->var() != var) return nullptr;
  return &*it;
}

bool Term::contains(Literal l) const {
  const Literal* found = find(l.var());
  return found != nullptr && *found == l;
}

bool Term::covers(const Instance& x) const {
  for (Literal l : literals_) {
    if (l.var() > x.size() || !l.satisfied_by(x.value(l.var()))) return false;
  }
  return true;
}

bool Term::subset_of(const Term& other) const {
  return std::includes(other.literals_.begin(), other.literals_.end(),
                       literals_.begin(), literals_.end());
}

Term Term::without(int var) const {
  Term t;
  t.literals_.reserve(literals_.size());
  for (Literal l : literals_) {
    if (l.var() != var) t.literals_.push_back(l);
  }
  return t;
}

Term Term::with(Literal l) const {
  std::vector<Literal> lits = literals_;
  lits.push_back(l);
  return Term(std::move(lits));
}

Term Term::restricted_to(const std::vector<bool>& var_mask) const {
  Term t;
  for (Literal l : literals_) {
    if (static_cast<std::size_t>(l.var()) < var_mask.size() &&
        var_mask[l.var()]) {
      t.literals_.push_back(l);
    }
  }
  return t;
}

Clause Term::negation() const {
  std::vector<Literal> lits;
  lits.reserve(literals_.size());
  for (Literal l : literals_) lits.push_back(~l);
  return Clause(std::move(lits));
}

std::string to_string(const Term& t, std::span<const std::string> names) {
  if (t.empty()) return "⊤";
  std::string out;
  for (Literal l : t) {
    if (!out.empty()) out += " ∧ ";
    out += to_string(l, names);
  }
  return out;
}

std::string to_string(const Clause& c, std::span<const std::string> names) {
  if (c.empty()) return "⊥";
  std::string out = "(";
  for (Literal l : c) {
    if (out.size() > 1) out += " ∨ ";
    out += to_string(l, names);
  }
  return out + ")";
}

}  // namespace rfx
