// Copyright 2026 The t2fuzzy Authors
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

#include "test_util.hpp"

namespace t2fuzzy::testing {
namespace {

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("3/4"), q(3, 4));
  EXPECT_EQ(parse_rational("6/8"), q(3, 4));
  EXPECT_EQ(parse_rational("1"), q(1));
  EXPECT_EQ(parse_rational("0.75"), q(3, 4));
  EXPECT_EQ(parse_rational("010/08"), q(5, 4));
  EXPECT_EQ(parse_rational("007"), q(7));
  EXPECT_EQ(parse_rational("0.0625"), q(1, 16));
  EXPECT_EQ(parse_rational(".5"), q(1, 2));
  EXPECT_EQ(parse_rational("-1/3"), q(-1, 3));
  EXPECT_EQ(parse_rational("+2"), q(2));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "a", "1.2.3", "0x1", "1 /2", "."})
    EXPECT_THROW(parse_rational(bad), ValidationError) << bad;
}

TEST(Rational, RendersExactAndDecimal) {
  EXPECT_EQ(to_string(q(3, 4)), "3/4");
  EXPECT_EQ(to_string(q(2)), "2/1");
  EXPECT_EQ(to_string(q(0)), "0/1");
  EXPECT_EQ(to_decimal(q(1, 3)), "0.333333333333333");
  EXPECT_EQ(to_decimal(q(1, 2)), "0.5");
}

TEST(Rational, FloorAndCeil) {
  EXPECT_EQ(floor_of(q(7, 2)), 3);
  EXPECT_EQ(ceil_of(q(7, 2)), 4);
  EXPECT_EQ(floor_of(q(-7, 2)), -4);
  EXPECT_EQ(ceil_of(q(-7, 2)), -3);
  EXPECT_EQ(floor_of(q(4)), 4);
}

TEST(UnitScalar, EnforcesUnitInterval) {
  EXPECT_NO_THROW(UnitScalar(q(0)));
  EXPECT_NO_THROW(UnitScalar(q(1)));
  EXPECT_THROW(UnitScalar(q(-1, 10)), DomainError);
  EXPECT_THROW(UnitScalar(q(11, 10)), DomainError);
}

TEST(UnitScalar, LatticeAndComplement) {
  EXPECT_EQ(meet(u(3, 10), u(7, 10)), u(3, 10));
  EXPECT_EQ(join(u(3, 10), u(7, 10)), u(7, 10));
  EXPECT_EQ(u(3, 10).complement(), u(7, 10));
  EXPECT_LT(u(1, 3), u(1, 2));
  EXPECT_EQ(to_string(u(2, 4)), "1/2");
}

}  // namespace
}  // namespace t2fuzzy::testing
