// Copyright 2026 The hypafib Authors
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

#include <gtest/gtest.h>

#include "hypafib/decimal.hpp"
#include "hypafib/errors.hpp"

namespace hypafib {
namespace {

TEST(FixedDecimal, SquareRootAndRounding) {
  const FixedDecimal root5 = FixedDecimal::sqrt_of(5, 20);
  EXPECT_EQ(root5.to_string(12), "2.236067977500");
  EXPECT_EQ(root5.to_string(3), "2.236");
  EXPECT_EQ(FixedDecimal::sqrt_of(12, 15).to_string(10), "3.4641016151");
  EXPECT_EQ(FixedDecimal::from_rational(2, 3, 10).to_string(4), "0.6667");
  EXPECT_EQ(FixedDecimal::from_rational(-1, 2, 5).to_string(2), "-0.50");
  EXPECT_EQ(FixedDecimal::from_integer(7, 3).to_string(0), "7");
}

TEST(FixedDecimal, Arithmetic) {
  const int s = 20;
  const FixedDecimal half = FixedDecimal::from_rational(1, 2, s);
  const FixedDecimal third = FixedDecimal::from_rational(1, 3, s);
  EXPECT_TRUE((half + third).within(FixedDecimal::from_rational(5, 6, s), 18));
  EXPECT_TRUE((half * third).within(FixedDecimal::from_rational(1, 6, s), 18));
  EXPECT_TRUE((half / third).within(FixedDecimal::from_rational(3, 2, s), 18));
  EXPECT_TRUE((third - half).abs().within(FixedDecimal::from_rational(1, 6, s), 18));
  EXPECT_TRUE(third < half);
  EXPECT_THROW(half / FixedDecimal::from_integer(0, s), DomainError);
  EXPECT_THROW(half + FixedDecimal::from_integer(1, s + 1), DomainError);
}

}  // namespace
}  // namespace hypafib
