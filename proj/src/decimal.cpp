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

#include "hypafib/decimal.hpp"

#include <cstdlib>
#include <string>

#include "hypafib/errors.hpp"

namespace hypafib {

BigInt pow10(int exponent) {
  if (exponent < 0) throw DomainError("negative decimal exponent");
  BigInt r = 1;
  for (int i = 0; i < exponent; ++i) r *= 10;
  return r;
}

FixedDecimal FixedDecimal::from_integer(const BigInt& v, int scale) { return {v * pow10(scale), scale}; }

FixedDecimal FixedDecimal::from_rational(const BigInt& num, const BigInt& den, int scale) {
  if (den == 0) throw DomainError("rational with zero denominator");
  return {num * pow10(scale) / den, scale};
}

FixedDecimal FixedDecimal::sqrt_of(const BigInt& n, int scale) {
  if (n < 0) throw DomainError("square root of a negative integer");
  return {boost::multiprecision::sqrt(BigInt(n * pow10(2 * scale))), scale};
}

void FixedDecimal::check_scale(const FixedDecimal& o) const {
  if (scale_ != o.scale_) throw DomainError("fixed-point scale mismatch");
}

FixedDecimal FixedDecimal::operator+(const FixedDecimal& o) const {
  check_scale(o);
  return {mantissa_ + o.mantissa_, scale_};
}

FixedDecimal FixedDecimal::operator-(const FixedDecimal& o) const {
  check_scale(o);
  return {mantissa_ - o.mantissa_, scale_};
}

FixedDecimal FixedDecimal::operator*(const FixedDecimal& o) const {
  check_scale(o);
  return {mantissa_ * o.mantissa_ / pow10(scale_), scale_};
}

FixedDecimal FixedDecimal::operator/(const FixedDecimal& o) const {
  check_scale(o);
  if (o.mantissa_ == 0) throw DomainError("fixed-point division by zero");
  return {mantissa_ * pow10(scale_) / o.mantissa_, scale_};
}

FixedDecimal FixedDecimal::operator-() const { return {-mantissa_, scale_}; }

FixedDecimal FixedDecimal::abs() const { return {mantissa_ < 0 ? BigInt(-mantissa_) : mantissa_, scale_}; }

bool FixedDecimal::operator==(const FixedDecimal& o) const {
  check_scale(o);
  return mantissa_ == o.mantissa_;
}

bool FixedDecimal::operator<(const FixedDecimal& o) const {
  check_scale(o);
  return mantissa_ < o.mantissa_;
}

bool FixedDecimal::within(const FixedDecimal& o, int exponent) const {
  check_scale(o);
  if (exponent > scale_) throw DomainError("tolerance finer than the working precision");
  BigInt diff = mantissa_ - o.mantissa_;
  if (diff < 0) diff = -diff;
  return diff < pow10(scale_ - exponent);
}

std::string FixedDecimal::to_string(int digits) const {
  if (digits < 0) digits = 0;
  BigInt m = mantissa_ < 0 ? BigInt(-mantissa_) : mantissa_;
  if (digits < scale_) {
    BigInt unit = pow10(scale_ - digits);
    m = (m + unit / 2) / unit;
  } else {
    m *= pow10(digits - scale_);
  }
  std::string s = m.str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) - s.size() + 1, '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (mantissa_ < 0 && m != 0) s.insert(0, "-");
  return s;
}

double FixedDecimal::to_double() const { return std::strtod(to_string(scale_ > 17 ? 17 : scale_).c_str(), nullptr); }

}  // namespace hypafib
