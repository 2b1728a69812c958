// Copyright 2026 The mupir Authors
//
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

#include "mupir/rational.h"

#include <gtest/gtest.h>

#include "mupir/error.h"

namespace mupir {
namespace {

TEST(RationalTest, NormalizesSignAndGcd) {
  const Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.ToString(), "-3/2");
  EXPECT_EQ(Rational(BigInt(0), BigInt(-7)).ToString(), "0/1");
  EXPECT_EQ(Rational(5).ToString(), "5/1");
}

TEST(RationalTest, ArithmeticIsExact) {
  const Rational third(BigInt(1), BigInt(3));
  EXPECT_EQ(third + third + third, Rational(1));
  EXPECT_EQ(Rational(23) / Rational(9) - Rational(2), Rational(BigInt(5), BigInt(9)));
  EXPECT_LT(Rational(BigInt(41), BigInt(15)), Rational(BigInt(701), BigInt(243)));
}

TEST(RationalTest, FloorAndCeilFollowSign) {
  EXPECT_EQ(Rational(BigInt(7), BigInt(2)).Floor(), 3);
  EXPECT_EQ(Rational(BigInt(7), BigInt(2)).Ceil(), 4);
  EXPECT_EQ(Rational(BigInt(-7), BigInt(2)).Floor(), -4);
  EXPECT_EQ(Rational(BigInt(-7), BigInt(2)).Ceil(), -3);
  EXPECT_EQ(Rational(5).Ceil(), 5);
}

TEST(RationalTest, DecimalRoundsHalfAwayFromZero) {
  EXPECT_EQ(Rational(BigInt(23), BigInt(9)).ToDecimal(6), "2.555556");
  EXPECT_EQ(Rational(BigInt(1), BigInt(8)).ToDecimal(2), "0.13");
  EXPECT_EQ(Rational(BigInt(-1), BigInt(8)).ToDecimal(2), "-0.13");
  EXPECT_EQ(Rational(BigInt(4), BigInt(27)).ToDecimal(6), "0.148148");
}

TEST(RationalTest, ParseRoundTrips) {
  for (const char* text : {"23/9", "-5/3", "0/1", "41/15", "12345678901234567890/7"}) {
    EXPECT_EQ(Rational::Parse(text).ToString(), text);
  }
  EXPECT_EQ(Rational::Parse("08"), Rational(8));
  EXPECT_EQ(Rational::Parse("-010/4"), Rational(BigInt(-5), BigInt(2)));
  EXPECT_THROW(Rational::Parse("1/0"), Error);
  EXPECT_THROW(Rational::Parse("x/2"), Error);
  EXPECT_THROW(Rational::Parse(""), Error);
}

}  // namespace
}  // namespace mupir
