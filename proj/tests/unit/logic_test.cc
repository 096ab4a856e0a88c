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

#include <gtest/gtest.h>

#include "fixtures.h"
#include "rfx/numeric.h"

namespace rfx {
namespace {

using testing::clause;
using testing::term;

TEST(LiteralTest, ComplementIsAnInvolution) {
  const Literal l = Literal::neg(3);
  EXPECT_EQ(~~l, l);
  EXPECT_EQ((~l).to_dimacs(), 3);
  EXPECT_EQ(Literal::from_dimacs(-7), Literal::neg(7));
  EXPECT_THROW(Literal::from_dimacs(0), LogicError);
}

TEST(LiteralTest, RendersWithNames) {
  const std::vector<std::string> names = {"fragrant", ""};
  EXPECT_EQ(to_string(Literal::pos(1), names), "fragrant");
  EXPECT_EQ(to_string(Literal::neg(2), names), "¬x2");
  EXPECT_EQ(to_string(Literal::neg(4)), "¬x4");
}

TEST(TermTest, CanonicalOrderMakesEqualityStructural) {
  EXPECT_EQ(term({4, -1, 2}), term({-1, 2, 4}));
  EXPECT_EQ(term({2, 2}).size(), 1);
  EXPECT_EQ(to_string(term({4, -1})), "¬x1 ∧ x4");
  EXPECT_EQ(to_string(Term{}), "⊤");
}

TEST(TermTest, RejectsInconsistentLiterals) {
  EXPECT_THROW(term({1, -1}), LogicError);
  EXPECT_THROW(term({1}).with(Literal::neg(1)), LogicError);
  EXPECT_THROW(Term({Literal(0, true)}), LogicError);
}

TEST(TermTest, SubsetsAndCoverage) {
  const Instance x{1, 0, 1};
  const Term tx = Term::of_instance(x);
  EXPECT_EQ(tx, term({1, -2, 3}));
  EXPECT_TRUE(term({1, 3}).subset_of(tx));
  EXPECT_FALSE(term({2}).subset_of(tx));
  EXPECT_TRUE(term({-2}).covers(x));
  EXPECT_FALSE(term({2}).covers(x));
  EXPECT_EQ(tx.without(2), term({1, 3}));
  EXPECT_TRUE(tx.mentions(2));
  EXPECT_FALSE(tx.without(2).mentions(2));
  EXPECT_EQ(tx.negation(), clause({-1, 2, -3}));
}

TEST(ClauseTest, TautologiesAreFlagged) {
  EXPECT_TRUE(clause({1, -1}).tautological());
  EXPECT_FALSE(clause({1, 2}).tautological());
  EXPECT_THROW(clause({1, -1}).negation(), LogicError);
  EXPECT_EQ(clause({2, 1, 2}).size(), 2);
  EXPECT_EQ(to_string(Clause{}), "⊥");
  EXPECT_EQ(to_string(clause({1, -2})), "(x1 ∨ ¬x2)");
}

TEST(ClauseTest, Satisfaction) {
  EXPECT_TRUE(clause({1, -2}).satisfied_by(Instance{0, 0}));
  EXPECT_FALSE(clause({1, -2}).satisfied_by(Instance{0, 1}));
  EXPECT_FALSE(Clause{}.satisfied_by(Instance{1}));
  EXPECT_THROW(clause({3}).satisfied_by(Instance{1}), LogicError);
}

TEST(InstanceTest, RejectsNonBits) {
  EXPECT_THROW((Instance{0, 2}), LogicError);
  EXPECT_THROW(Instance(std::vector<std::uint8_t>{3}), LogicError);
}

TEST(NumericTest, ParsesRationalsExactly) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
  EXPECT_EQ(parse_rational("-2.5"), Rational(-5, 2));
  EXPECT_EQ(parse_rational("1e-2"), Rational(1, 100));
  EXPECT_EQ(parse_rational("2"), Rational(2));
  EXPECT_EQ(to_string(Rational(5, 8)), "5/8");
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_EQ(pow2(70), BigInt(1) << 70);
}

}  // namespace
}  // namespace rfx
