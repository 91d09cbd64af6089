// Copyright 2026 The matchgame Authors.
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

#include "matchgame/rational.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <stdexcept>

namespace matchgame {
namespace {

TEST(RationalTest, CanonicalForm) {
  EXPECT_EQ(Rational(6, 4).ToString(), "3/2");
  EXPECT_EQ(Rational(4, -6).ToString(), "-2/3");
  EXPECT_EQ(Rational(10, 5).ToString(), "2");
  EXPECT_EQ(Rational(0, 7).ToString(), "0");
  EXPECT_TRUE(Rational(10, 5).is_integer());
}

TEST(RationalTest, ParseForms) {
  EXPECT_EQ(*Rational::Parse("3/2"), Rational(3, 2));
  EXPECT_EQ(*Rational::Parse("-7"), Rational(-7));
  EXPECT_EQ(*Rational::Parse("-1.25"), Rational(-5, 4));
  EXPECT_EQ(*Rational::Parse("3e-2"), Rational(3, 100));
  EXPECT_EQ(*Rational::Parse("0.1"), Rational(1, 10));
  EXPECT_EQ(*Rational::Parse("12/8"), Rational(3, 2));
  EXPECT_FALSE(Rational::Parse("").has_value());
  EXPECT_FALSE(Rational::Parse("1/0").has_value());
  EXPECT_FALSE(Rational::Parse("abc").has_value());
  EXPECT_FALSE(Rational::Parse("1/2/3").has_value());
}

TEST(RationalTest, ArithmeticIsExact) {
  Rational sum;
  for (int k = 1; k <= 10; ++k) sum += Rational(1, 10);
  EXPECT_EQ(sum, Rational(1));
  EXPECT_EQ(Rational(1, 3) * Rational(3, 7), Rational(1, 7));
  EXPECT_EQ(Rational(2, 5) / Rational(4, 15), Rational(3, 2));
  EXPECT_EQ(-Rational(2, 5), Rational(-2, 5));
  EXPECT_EQ(Abs(Rational(-2, 5)), Rational(2, 5));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(RationalTest, Ordering) {
  EXPECT_LT(Rational(-2, 5), Rational(-1, 3));
  EXPECT_GT(Rational(7, 5), Rational(4, 3));
  EXPECT_EQ(Rational(2, 4) <=> Rational(1, 2), std::strong_ordering::equal);
}

TEST(RationalTest, TextRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
  for (int k = 0; k < 200; ++k) {
    const Rational r(num(rng), den(rng));
    EXPECT_EQ(*Rational::Parse(r.ToString()), r);
    std::ostringstream os;
    os << r;
    EXPECT_EQ(os.str(), r.ToString());
  }
}

}  // namespace
}  // namespace matchgame
