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

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypafib/bigint.hpp"
#include "hypafib/binary_word.hpp"
#include "hypafib/decimal.hpp"

namespace hypafib {

/// Letter-wise relabeling 1 -> A, 0 -> B between binary words and row
/// patterns.
std::string phi_map(const BinaryWord& w);
/// Inverse of phi_map; letters other than A/B raise DomainError.
BinaryWord phi_inverse(std::string_view pattern);

struct VerificationFailure {
  std::size_t index = 0;
  std::string detail;
};

/// Outcome of checking one theorem for one q over an index range.
/// `pass` is false exactly when `failure` holds the first failing index.
struct VerificationReport {
  std::string theorem;
  int q = 0;
  std::size_t range_lo = 0;
  std::size_t range_hi = 0;
  bool pass = true;
  std::optional<VerificationFailure> failure;
  /// Observations that do not affect `pass` (e.g. where a length bound
  /// cut the range short).
  std::vector<std::pair<std::string, std::string>> notes;

  void fail(std::size_t index, std::string detail);
};

inline constexpr std::size_t kNoLengthBound = std::numeric_limits<std::size_t>::max();

/// phi(01 f_{2n-3}) = h_n and |f_{2n-3}| = F_{2n-2}^{(1,q-4)} for n in
/// [2, n_max]. The word side comes from the word recurrence, the pattern
/// side from the triangle construction.
VerificationReport verify_row_equivalence(int q, std::size_t n_max);

/// sigma_q(f_{i-2}) = f_i for i in [2, i_max], stopping early once |f_i|
/// exceeds max_length.
VerificationReport verify_morphism_theorem(int q, std::size_t i_max, std::size_t max_length = kNoLengthBound);

/// sigma_q(5) equals sigma composed with itself, and sigma^2(f_i) = f_{i+2}
/// for the classic words, i in [0, i_max] while |f_{i+2}| <= max_length.
VerificationReport verify_sigma_square(std::size_t i_max, std::size_t max_length = kNoLengthBound);

/// For k in [2, k_max]:
///   f_{2k}   = (f_{2k-1})^{q-3} ⊖ f_{2k-3}
///   f_{2k+1} = ((f_{2k-1})^{q-3} ⊖ f_{2k-3}) f_{2k-1}
/// A suffix mismatch is recorded as a failure. For q = 6 the report also
/// notes whether the alternative form (f_3)^3 ⊖ f_5 = f_4 holds.
VerificationReport verify_ominus_theorem(int q, std::size_t k_max);

/// Sequence identities up to `depth`: s_n seeds and ternary law, u_n =
/// s_n - 2 with both u recurrences, u_n = F_{2n-2}^{(1,q-4)}, the
/// every-second-term law of F^{(a,b)} for a, b in [1,5], and F^{(1,1)} = F.
VerificationReport verify_lemmas(int q, std::size_t depth);

/// Word properties for f_i, i in [2, i_max] with |f_i| <= max_length:
/// no "11", no 0^{q-2}, last two symbols alternate 01/10, 01 f_{2n-3} is a
/// palindrome, prefix coherence with the infinite word, and factor
/// complexity n+1 for n <= q-2 (stable under doubling the prefix).
VerificationReport verify_properties(int q, std::size_t i_max, std::size_t max_length = 100000);

/// Prefix length used for factor-complexity checks: max(200, 4(q-2)^2).
std::size_t complexity_prefix_length(int q);

struct BigDigitCounts {
  BigInt total;
  BigInt zeros;
  BigInt ones;

  friend bool operator==(const BigDigitCounts&, const BigDigitCounts&) = default;
};

/// (d_i, d_{i,0}, d_{i,1}) for f_i^{[q]}: direct counts for i <= 5, then
/// d_{2k} = (q-3) d_{2k-1} - d_{2k-3} and d_{2k+1} = d_{2k} + d_{2k-1}.
BigDigitCounts digit_counts_by_recurrence(int q, std::size_t i);

struct ClosedFormDensity {
  int q = 0;
  int precision = 0;
  FixedDecimal r0;
  FixedDecimal r1;
};

/// r0 = (q-4+sqrt(q(q-4))) / (2(q-4)),  r1 = (q-2+sqrt(q(q-4))) / 2.
/// Values carry `precision` + 10 working digits.
ClosedFormDensity density_closed_form(int q, int precision);

struct DensityReport {
  int q = 0;
  std::size_t index = 0;
  int precision = 0;
  FixedDecimal r0_closed;
  FixedDecimal r1_closed;
  Rational r0_empirical;  // d_i / d_{i,0}
  Rational r1_empirical;  // d_i / d_{i,1}; undefined when f_i has no '1'
  FixedDecimal gap0;
  std::optional<FixedDecimal> gap1;
  /// Observation only: whether the zero-density gap at `index` is smaller
  /// than at `index - 2`. Empty for index < 4.
  std::optional<bool> gap0_shrinks;
};

DensityReport density_empirical(int q, std::size_t index, int precision = 30);

struct TriangleDensity {
  int q = 0;
  std::size_t n = 0;
  Rational s_over_b;
  Rational s_over_a;  // undefined for n <= 1
  FixedDecimal gap0;
  std::optional<FixedDecimal> gap1;
};

/// s_n / b_n and s_n / a_n against the closed-form r0 and r1.
TriangleDensity triangle_density(int q, std::size_t n, int precision = 30);

struct DominantCoefficients {
  int q = 0;
  int precision = 0;
  FixedDecimal alpha_s;
  FixedDecimal alpha_a;
  FixedDecimal alpha_b;
};

/// Leading coefficients of s_n, a_n, b_n:
///   alpha_s = -1/2 + (q-2) sqrt(q^2-4q) / (2q(q-4))
///   alpha_a = (2-q)/2 + (q^2-4q+2) sqrt(q^2-4q) / (2q(q-4))
///   alpha_b = (q-3)/2 + (1-q) sqrt(q^2-4q) / (2q)
DominantCoefficients dominant_coefficients(int q, int precision);

}  // namespace hypafib
