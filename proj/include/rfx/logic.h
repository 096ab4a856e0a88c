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

#ifndef RFX_LOGIC_H_
#define RFX_LOGIC_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rfx {

// Raised for malformed logical objects: out-of-range variables, inconsistent
// terms, dimension mismatches between models and instances.
class LogicError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A propositional literal over a 1-based variable index.
class Literal {
 public:
  constexpr Literal() = default;
  constexpr Literal(int var, bool positive) : var_(var), positive_(positive) {}

  // DIMACS-style signed integer: +v or -v.
  static Literal from_dimacs(int code);
  static constexpr Literal pos(int var) { return Literal(var, true); }
  static constexpr Literal neg(int var) { return Literal(var, false); }

  constexpr int var() const { return var_; }
  constexpr bool positive() const { return positive_; }
  constexpr Literal complement() const { return Literal(var_, !positive_); }
  constexpr int to_dimacs() const { return positive_ ? var_ : -var_; }

  // True iff the literal holds under the given value of its variable.
  constexpr bool satisfied_by(bool value) const { return value == positive_; }

  friend constexpr bool operator==(Literal a, Literal b) = default;
  // Orders by variable, then negative before positive.
  friend constexpr bool operator<(Literal a, Literal b) {
    return a.var_ != b.var_ ? a.var_ < b.var_ : (!a.positive_ && b.positive_);
  }

 private:
  int var_ = 0;
  bool positive_ = true;
};

constexpr Literal operator~(Literal l) { return l.complement(); }

// Renders "x3" / "¬x3", or the feature name when names are supplied.
std::string to_string(Literal l, std::span<const std::string> names = {});

// A full 0/1 assignment to the features x1..xn.
class Instance {
 public:
  Instance() = default;
  explicit Instance(std::vector<std::uint8_t> bits);
  Instance(std::initializer_list<int> bits);

  int size() const { return static_cast<int>(bits_.size()); }
  // 1-based access, matching variable indices.
  bool value(int var) const { return bits_.at(var - 1) != 0; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

class Term;

// A disjunction of literals kept sorted and duplicate-free. Complementary
// literals are allowed and mark the clause as tautological.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> literals);
  Clause(std::initializer_list<Literal> literals)
      : Clause(std::vector<Literal>(literals)) {}

  const std::vector<Literal>& literals() const { return literals_; }
  int size() const { return static_cast<int>(literals_.size()); }
  bool empty() const { return literals_.empty(); }
  bool tautological() const { return tautological_; }
  int max_var() const;

  bool satisfied_by(const std::vector<std::uint8_t>& assignment) const;
  bool satisfied_by(const Instance& x) const { return satisfied_by(x.bits()); }

  // The term equivalent to the negation of this clause. Throws on tautologies.
  Term negation() const;

  auto begin() const { return literals_.begin(); }
  auto end() const { return literals_.end(); }

  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  std::vector<Literal> literals_;
  bool tautological_ = false;
};

// A consistent conjunction of literals in canonical (variable) order.
// Terms double as instances-as-terms and as explanations.
class Term {
 public:
  Term() = default;
  // Throws LogicError if the literals are inconsistent.
  explicit Term(std::vector<Literal> literals);
  Term(std::initializer_list<Literal> literals)
      : Term(std::vector<Literal>(literals)) {}

  // The full term t_x of an instance.
  static Term of_instance(const Instance& x);

  const std::vector<Literal>& literals() const { return literals_; }
  int size() const { return static_cast<int>(literals_.size()); }
  bool empty() const { return literals_.empty(); }
  int max_var() const;

  bool contains(Literal l) const;
  bool mentions(int var) const { return find(var) != nullptr; }
  // The literal on `var`, or nullptr.
  const Literal* find(int var) const;

  bool covers(const Instance& x) const;
  bool subset_of(const Term& other) const;

  Term without(int var) const;
  Term with(Literal l) const;
  // Literals of this term whose variable lies in `vars` (given as a mask
  // indexed by variable).
  Term restricted_to(const std::vector<bool>& var_mask) const;

  // The clause equivalent to the negation of this term.
  Clause negation() const;

  auto begin() const { return literals_.begin(); }
  auto end() const { return literals_.end(); }

  friend bool operator==(const Term&, const Term&) = default;
  friend bool operator<(const Term& a, const Term& b) {
    return a.literals_ < b.literals_;
  }

 private:
  std::vector<Literal> literals_;
};

// "x1 ∧ ¬x4", or "⊤" for the empty term.
std::string to_string(const Term& t, std::span<const std::string> names = {});
// "(x1 ∨ ¬x4)", or "⊥" for the empty clause.
std::string to_string(const Clause& c, std::span<const std::string> names = {});

}  // namespace rfx

#endif  // RFX_LOGIC_H_
