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

#include "hypafib/correspondence.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hypafib/errors.hpp"
#include "hypafib/seqcore.hpp"
#include "hypafib/triangle.hpp"
#include "hypafib/wordcore.hpp"

namespace hypafib {
namespace {

constexpr int kGuardDigits = 10;

std::string excerpt(const std::string& s, std::size_t pos) {
  const std::size_t from = pos > 10 ? pos - 10 : 0;
  return s.substr(from, 24);
}

// "mismatch at 7: expected ...X... got ...Y..." or a length note.
std::string diff_excerpt(const std::string& expected, const std::string& actual) {
  const std::size_t common = std::min(expected.size(), actual.size());
  std::size_t pos = 0;
  while (pos < common && expected[pos] == actual[pos]) ++pos;
  return "first difference at symbol " + std::to_string(pos) + ": expected '" + excerpt(expected, pos) + "' (length " +
         std::to_string(expected.size()) + "), got '" + excerpt(actual, pos) + "' (length " +
         std::to_string(actual.size()) + ")";
}

std::string word_diff(const BinaryWord& expected, const BinaryWord& actual) {
  return diff_excerpt(expected.to_string(), actual.to_string());
}

VerificationReport make_report(std::string theorem, int q, std::size_t lo, std::size_t hi) {
  VerificationReport r;
  r.theorem = std::move(theorem);
  r.q = q;
  r.range_lo = lo;
  r.range_hi = hi;
  return r;
}

FixedDecimal ratio_gap(const Rational& ratio, const FixedDecimal& closed) {
  return (FixedDecimal::from_rational(ratio.num, ratio.den, closed.scale()) - closed).abs();
}

}  // namespace

void VerificationReport::fail(std::size_t index, std::string detail) {
  if (!pass) return;
  pass = false;
  failure = VerificationFailure{index, std::move(detail)};
}

std::string phi_map(const BinaryWord& w) {
  std::string out(w.size(), 'B');
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i]) out[i] = 'A';
  }
  return out;
}

BinaryWord phi_inverse(std::string_view pattern) {
  BinaryWord w;
  w.reserve(pattern.size());
  for (char c : pattern) {
    if (c != 'A' && c != 'B') throw DomainError(std::string("pattern contains '") + c + "'");
    w.push_back(c == 'A');
  }
  return w;
}

VerificationReport verify_row_equivalence(int q, std::size_t n_max) {
  require_valid_q(q);
  if (n_max < 2) throw DomainError("row equivalence needs n_max >= 2");
  VerificationReport report = make_report("equivalence", q, 2, n_max);
  const BiperiodicParams params(1, static_cast<unsigned>(q - 4));
  const BinaryWord head = BinaryWord::from_string("01");
  for (std::size_t n = 2; n <= n_max; ++n) {
    const BinaryWord word = fib4q_word(q, 2 * n - 3);
    const std::string lhs = phi_map(head + word);
    const std::string rhs = row_pattern(q, n);
    if (lhs != rhs) {
      report.fail(n, "phi(01 f_" + std::to_string(2 * n - 3) + ") vs h_" + std::to_string(n) + ": " + diff_excerpt(rhs, lhs));
      break;
    }
    const BigInt expected_length = biperiodic_fib(params, 2 * n - 2);
    if (BigInt(word.size()) != expected_length) {
      report.fail(n, "|f_" + std::to_string(2 * n - 3) + "| = " + std::to_string(word.size()) + " but F_" +
                         std::to_string(2 * n - 2) + "^(1,q-4) = " + expected_length.str());
      break;
    }
    if (BigInt(rhs.size()) != row_vertex_count(q, n)) {
      report.fail(n, "|h_" + std::to_string(n) + "| differs from s_" + std::to_string(n));
      break;
    }
  }
  return report;
}

VerificationReport verify_morphism_theorem(int q, std::size_t i_max, std::size_t max_length) {
  require_valid_q(q);
  if (i_max < 2) throw DomainError("morphism theorem needs i_max >= 2");
  VerificationReport report = make_report("morphism", q, 2, i_max);
  const Morphism m = sigma_q(q);
  for (std::size_t i = 2; i <= i_max; ++i) {
    if (fib4q_length(q, i) > max_length) {
      report.range_hi = i - 1;
      report.notes.emplace_back("stopped_at_length_bound", std::to_string(max_length));
      break;
    }
    const BinaryWord expected = fib4q_word(q, i);
    const BinaryWord image = apply_morphism(m, fib4q_word(q, i - 2));
    if (image != expected) {
      report.fail(i, "sigma(f_" + std::to_string(i - 2) + ") vs f_" + std::to_string(i) + ": " + word_diff(expected, image));
      break;
    }
  }
  return report;
}

VerificationReport verify_sigma_square(std::size_t i_max, std::size_t max_length) {
  VerificationReport report = make_report("sigma_square", 5, 0, i_max);
  const Morphism s = sigma();
  const Morphism s2 = compose(s, s);
  if (!(s2 == sigma_q(5))) {
    report.fail(0, "sigma^2 = (" + s2.image0().to_string() + ", " + s2.image1().to_string() + ") differs from sigma_q(5)");
    return report;
  }
  for (std::size_t i = 0; i <= i_max; ++i) {
    if (fibonacci(i + 3) > max_length) {
      report.range_hi = i == 0 ? 0 : i - 1;
      report.notes.emplace_back("stopped_at_length_bound", std::to_string(max_length));
      break;
    }
    const BinaryWord expected = classic_fib_word(i + 2);
    const BinaryWord image = apply_morphism(s, apply_morphism(s, classic_fib_word(i)));
    if (image != expected) {
      report.fail(i, "sigma^2(f_" + std::to_string(i) + ") vs f_" + std::to_string(i + 2) + ": " + word_diff(expected, image));
      break;
    }
  }
  return report;
}

VerificationReport verify_ominus_theorem(int q, std::size_t k_max) {
  require_valid_q(q);
  if (k_max < 2) throw DomainError("ominus theorem needs k_max >= 2");
  VerificationReport report = make_report("ominus", q, 2, k_max);
  const auto exponent = static_cast<std::size_t>(q - 3);
  for (std::size_t k = 2; k <= k_max; ++k) {
    const BinaryWord odd_prev = fib4q_word(q, 2 * k - 1);
    const BinaryWord odd_prev2 = fib4q_word(q, 2 * k - 3);
    BinaryWord even;
    try {
      even = suffix_delete(odd_prev.power(exponent), odd_prev2);
    } catch (const SuffixMismatchError& e) {
      report.fail(k, std::string("suffix deletion failed: ") + e.what());
      break;
    }
    const BinaryWord expected_even = fib4q_word(q, 2 * k);
    if (even != expected_even) {
      report.fail(k, "f_" + std::to_string(2 * k) + ": " + word_diff(expected_even, even));
      break;
    }
    const BinaryWord odd = even + odd_prev;
    const BinaryWord expected_odd = fib4q_word(q, 2 * k + 1);
    if (odd != expected_odd) {
      report.fail(k, "f_" + std::to_string(2 * k + 1) + ": " + word_diff(expected_odd, odd));
      break;
    }
  }
  if (q == 6) {
    // The alternative reading f_4 = (f_3)^3 ⊖ f_5 of the worked example.
    bool holds = false;
    try {
      holds = suffix_delete(fib4q_word(6, 3).power(3), fib4q_word(6, 5)) == fib4q_word(6, 4);
    } catch (const SuffixMismatchError&) {
      holds = false;
    }
    report.notes.emplace_back("alt_form_f4_eq_f3cubed_minus_f5", holds ? "true" : "false");
  }
  return report;
}

VerificationReport verify_lemmas(int q, std::size_t depth) {
  require_valid_q(q);
  if (depth < 4) throw DomainError("lemma checks need depth >= 4");
  VerificationReport report = make_report("lemmas", q, 0, depth);
  const auto s = row_vertex_counts(q, depth);
  const BigInt seeds[4] = {1, 2, 3, q};
  for (std::size_t n = 0; n < 4; ++n) {
    if (s[n].value != seeds[n]) {
      report.fail(n, "s_" + std::to_string(n) + " = " + s[n].value.str() + ", expected " + seeds[n].str());
      return report;
    }
  }
  for (std::size_t n = 4; n <= depth; ++n) {
    BigInt rhs = (q - 1) * s[n - 1].value - (q - 1) * s[n - 2].value + s[n - 3].value;
    if (s[n].value != rhs) {
      report.fail(n, "ternary law fails for s_" + std::to_string(n));
      return report;
    }
  }
  const BiperiodicParams params(1, static_cast<unsigned>(q - 4));
  for (std::size_t n = 1; n <= depth; ++n) {
    const BigInt u = u_seq(q, n);
    if (u != s[n].value - 2) {
      report.fail(n, "u_" + std::to_string(n) + " = " + u.str() + " but s_n - 2 = " + BigInt(s[n].value - 2).str());
      return report;
    }
    if (u != u_seq_ternary(q, n)) {
      report.fail(n, "binary and ternary recurrences for u_" + std::to_string(n) + " disagree");
      return report;
    }
    if (n >= 2 && u != biperiodic_fib(params, 2 * n - 2)) {
      report.fail(n, "u_" + std::to_string(n) + " differs from F_" + std::to_string(2 * n - 2) + "^(1,q-4)");
      return report;
    }
  }
  for (unsigned a = 1; a <= 5; ++a) {
    for (unsigned b = 1; b <= 5; ++b) {
      const BiperiodicParams p(a, b);
      std::vector<BigInt> f;
      for (std::size_t i = 0; i <= depth; ++i) f.push_back(biperiodic_fib(p, i));
      for (std::size_t i = 4; i <= depth; ++i) {
        if (f[i] != (a * b + 2) * f[i - 2] - f[i - 4]) {
          report.fail(i, "every-second-term law fails for (a,b) = (" + std::to_string(a) + "," + std::to_string(b) + ")");
          return report;
        }
      }
    }
  }
  for (std::size_t i = 0; i <= depth; ++i) {
    if (biperiodic_fib(BiperiodicParams(1, 1), i) != fibonacci(i)) {
      report.fail(i, "F^(1,1) differs from F");
      return report;
    }
  }
  return report;
}

std::size_t complexity_prefix_length(int q) {
  const auto side = static_cast<std::size_t>(q - 2);
  return std::max<std::size_t>(200, 4 * side * side);
}

VerificationReport verify_properties(int q, std::size_t i_max, std::size_t max_length) {
  require_valid_q(q);
  if (i_max < 2) throw DomainError("property checks need i_max >= 2");
  VerificationReport report = make_report("properties", q, 2, i_max);
  const auto forbidden_run = static_cast<std::size_t>(q - 2);
  const BinaryWord head = BinaryWord::from_string("01");

  std::size_t last = 1;
  for (std::size_t i = 2; i <= i_max && fib4q_length(q, i) <= max_length; ++i) last = i;
  if (last < i_max) {
    report.range_hi = last;
    report.notes.emplace_back("stopped_at_length_bound", std::to_string(max_length));
  }
  if (last < 2) {
    report.fail(2, "no word within the length bound");
    return report;
  }
  const BinaryWord limit_prefix = infinite_prefix(q, static_cast<std::size_t>(fib4q_length(q, last)));

  for (std::size_t i = 2; i <= last; ++i) {
    const BinaryWord w = fib4q_word(q, i);
    if (contains_adjacent_ones(w)) {
      report.fail(i, "factor 11 occurs in f_" + std::to_string(i));
      return report;
    }
    if (contains_zero_run(w, forbidden_run)) {
      report.fail(i, "factor 0^" + std::to_string(forbidden_run) + " occurs in f_" + std::to_string(i));
      return report;
    }
    const std::string tail = w.substr(w.size() - 2, 2).to_string();
    const std::string expected_tail = i % 2 == 0 ? "01" : "10";
    if (tail != expected_tail) {
      report.fail(i, "f_" + std::to_string(i) + " ends in " + tail + ", expected " + expected_tail);
      return report;
    }
    if (i % 2 == 1 && !is_palindrome(head + w)) {
      report.fail(i, "01 f_" + std::to_string(i) + " is not a palindrome");
      return report;
    }
    if (!limit_prefix.starts_with(w)) {
      report.fail(i, "f_" + std::to_string(i) + " disagrees with the infinite word prefix");
      return report;
    }
  }
  // 01 f_1 = 010 is the n = 2 member of the palindrome family.
  if (!is_palindrome(head + fib4q_word(q, 1))) report.fail(1, "01 f_1 is not a palindrome");

  const std::size_t base = complexity_prefix_length(q);
  const BinaryWord prefix = infinite_prefix(q, base);
  const BinaryWord doubled = infinite_prefix(q, 2 * base);
  for (std::size_t n = 1; n <= forbidden_run; ++n) {
    const std::size_t count = factor_count(prefix, n);
    const std::size_t count_doubled = factor_count(doubled, n);
    if (count != n + 1 || count_doubled != n + 1) {
      report.fail(n, "length-" + std::to_string(n) + " factors: " + std::to_string(count) + " (prefix " +
                         std::to_string(base) + "), " + std::to_string(count_doubled) + " (doubled), expected " +
                         std::to_string(n + 1));
      return report;
    }
  }
  std::set<BinaryWord> expected;
  const BinaryWord bridge = BinaryWord::from_string("1") + BinaryWord::repeated(false, forbidden_run - 2) + BinaryWord::from_string("1");
  expected.insert(bridge);
  for (std::size_t pos = 0; pos < forbidden_run; ++pos) {
    BinaryWord single = BinaryWord::repeated(false, pos);
    single.push_back(true);
    single.append(BinaryWord::repeated(false, forbidden_run - pos - 1));
    expected.insert(single);
  }
  if (distinct_subwords(doubled, forbidden_run) != expected) {
    report.fail(forbidden_run, "length-(q-2) factor set differs from {10^{q-4}1} plus the single-one words");
  }
  return report;
}

BigDigitCounts digit_counts_by_recurrence(int q, std::size_t i) {
  require_valid_q(q);
  std::vector<BigDigitCounts> d;
  const std::size_t direct = std::min<std::size_t>(i, 5);
  for (std::size_t j = 0; j <= direct; ++j) {
    const DigitCounts c = digit_counts(fib4q_word(q, j));
    d.push_back({BigInt(c.total), BigInt(c.zeros), BigInt(c.ones)});
  }
  for (std::size_t j = 6; j <= i; ++j) {
    if (j % 2 == 0) {
      d.push_back({(q - 3) * d[j - 1].total - d[j - 3].total, (q - 3) * d[j - 1].zeros - d[j - 3].zeros,
                   (q - 3) * d[j - 1].ones - d[j - 3].ones});
    } else {
      d.push_back({d[j - 1].total + d[j - 2].total, d[j - 1].zeros + d[j - 2].zeros, d[j - 1].ones + d[j - 2].ones});
    }
  }
  return d[i];
}

ClosedFormDensity density_closed_form(int q, int precision) {
  require_valid_q(q);
  if (precision < 1) throw DomainError("precision must be at least 1 digit");
  const int scale = precision + kGuardDigits;
  const FixedDecimal root = FixedDecimal::sqrt_of(BigInt(q) * (q - 4), scale);
  ClosedFormDensity out;
  out.q = q;
  out.precision = precision;
  out.r0 = (FixedDecimal::from_integer(q - 4, scale) + root) / FixedDecimal::from_integer(2 * (q - 4), scale);
  out.r1 = (FixedDecimal::from_integer(q - 2, scale) + root) / FixedDecimal::from_integer(2, scale);
  return out;
}

DensityReport density_empirical(int q, std::size_t index, int precision) {
  const ClosedFormDensity closed = density_closed_form(q, precision);
  const BigDigitCounts d = digit_counts_by_recurrence(q, index);
  DensityReport r;
  r.q = q;
  r.index = index;
  r.precision = precision;
  r.r0_closed = closed.r0;
  r.r1_closed = closed.r1;
  r.r0_empirical = {d.total, d.zeros};
  r.r1_empirical = {d.total, d.ones};
  if (!r.r0_empirical.defined()) throw DomainError("f_i has no '0' digit");
  r.gap0 = ratio_gap(r.r0_empirical, closed.r0);
  if (r.r1_empirical.defined()) r.gap1 = ratio_gap(r.r1_empirical, closed.r1);
  if (index >= 4) {
    const BigDigitCounts earlier = digit_counts_by_recurrence(q, index - 2);
    r.gap0_shrinks = r.gap0 < ratio_gap({earlier.total, earlier.zeros}, closed.r0);
  }
  return r;
}

TriangleDensity triangle_density(int q, std::size_t n, int precision) {
  const ClosedFormDensity closed = density_closed_form(q, precision);
  const TypeCounts c = type_counts(q, n);
  TriangleDensity t;
  t.q = q;
  t.n = n;
  t.s_over_b = {c.s, c.b};
  t.s_over_a = {c.s, c.a};
  t.gap0 = ratio_gap(t.s_over_b, closed.r0);
  if (t.s_over_a.defined()) t.gap1 = ratio_gap(t.s_over_a, closed.r1);
  return t;
}

DominantCoefficients dominant_coefficients(int q, int precision) {
  require_valid_q(q);
  if (precision < 1) throw DomainError("precision must be at least 1 digit");
  const int scale = precision + kGuardDigits;
  const BigInt qq = q;
  const FixedDecimal root = FixedDecimal::sqrt_of(qq * qq - 4 * qq, scale);
  auto ratio = [scale](const BigInt& num, const BigInt& den) { return FixedDecimal::from_rational(num, den, scale); };
  auto times = [scale, &root](const BigInt& num, const BigInt& den) {
    return FixedDecimal::from_integer(num, scale) * root / FixedDecimal::from_integer(den, scale);
  };
  DominantCoefficients out;
  out.q = q;
  out.precision = precision;
  out.alpha_s = ratio(-1, 2) + times(qq - 2, 2 * qq * (qq - 4));
  out.alpha_a = ratio(2 - qq, 2) + times(qq * qq - 4 * qq + 2, 2 * qq * (qq - 4));
  out.alpha_b = ratio(qq - 3, 2) + times(1 - qq, 2 * qq);
  return out;
}

}  // namespace hypafib
