// Copyright 2026 The Persuasion Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "persuasion/rational.h"

#include <limits>
#include <sstream>

#include "doctest.h"

using persuasion::Rational;

TEST_SUITE("rational") {

TEST_CASE("canonical form") {
  CHECK(Rational(6, -8).ToString() == "-3/4");
  CHECK(Rational(4, 2).ToString() == "2");
  CHECK(Rational(0, -5).ToString() == "0");
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(-9, 3).is_integer());
}

TEST_CASE("parse") {
  CHECK(Rational::Parse("3/9") == Rational(1, 3));
  CHECK(Rational::Parse("-2") == Rational(-2));
  CHECK(Rational::Parse("+5/10") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::Parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::Parse("1 /2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::Parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::Parse("0.5"), std::invalid_argument);
}

TEST_CASE("arithmetic and order") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == 2);
  CHECK(b < a);
  CHECK(-a < b);
  CHECK(max(a, b) == a);
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("promotion to big values and back") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  Rational x(big);
  Rational y = x * x;
  CHECK(y.is_big());
  CHECK(y.numerator_string() == "85070591730234615847396907784232501249");
  Rational back = y / x;
  CHECK_FALSE(back.is_big());
  CHECK(back == x);
  Rational tiny(1, big);
  Rational t2 = tiny * tiny;
  CHECK(t2.is_big());
  CHECK(t2 * Rational(big) * Rational(big) == 1);
  CHECK((x + 1) - 1 == x);
  CHECK(x + 1 > x);
}

TEST_CASE("stream output") {
  std::ostringstream os;
  os << Rational(-7, 21);
  CHECK(os.str() == "-1/3");
}

}  // TEST_SUITE
