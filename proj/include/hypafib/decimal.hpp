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

#pragma once

#include <string>

#include "hypafib/bigint.hpp"

namespace hypafib {

/// Signed fixed-point decimal: value = mantissa / 10^scale.
///
/// All arithmetic is exact integer arithmetic on the mantissa; only
/// multiplication, division and square roots truncate, and each does so by
/// less than one unit in the last place. Operands must share a scale.
class FixedDecimal {
 public:
  FixedDecimal() = default;

  static FixedDecimal from_integer(const BigInt& v, int scale);
  static FixedDecimal from_rational(const BigInt& num, const BigInt& den, int scale);
  /// floor(sqrt(n) * 10^scale) / 10^scale for n >= 0.
  static FixedDecimal sqrt_of(const BigInt& n, int scale);

  int scale() const { return scale_; }
  const BigInt& mantissa() const { return mantissa_; }

  FixedDecimal operator+(const FixedDecimal& o) const;
  FixedDecimal operator-(const FixedDecimal& o) const;
  FixedDecimal operator*(const FixedDecimal& o) const;
  FixedDecimal operator/(const FixedDecimal& o) const;
  FixedDecimal operator-() const;
  FixedDecimal abs() const;

  bool operator==(const FixedDecimal& o) const;
  bool operator<(const FixedDecimal& o) const;
  bool operator>(const FixedDecimal& o) const { return o < *this; }
  bool operator<=(const FixedDecimal& o) const { return !(o < *this); }

  /// True when |this - o| < 10^-exponent.
  bool within(const FixedDecimal& o, int exponent) const;

  /// Rounded (half away from zero) to `digits` fractional digits.
  std::string to_string(int digits) const;
  double to_double() const;

 private:
  FixedDecimal(BigInt mantissa, int scale) : mantissa_(std::move(mantissa)), scale_(scale) {}
  void check_scale(const FixedDecimal& o) const;

  BigInt mantissa_{0};
  int scale_ = 0;
};

BigInt pow10(int exponent);

}  // namespace hypafib
