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

#include <boost/multiprecision/cpp_int.hpp>

namespace hypafib {

/// Arbitrary-precision integer. Sequence terms and triangle values are
/// always non-negative; signed storage keeps intermediate differences exact.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Exact non-negative fraction; the denominator may be zero only to mark
/// an undefined ratio (callers check `defined()`).
struct Rational {
  BigInt num;
  BigInt den{1};

  bool defined() const { return den != 0; }
  std::string to_string() const { return num.str() + "/" + den.str(); }
};

}  // namespace hypafib
