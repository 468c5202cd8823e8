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

#include "hypafib/wordcore.hpp"

#include <string>
#include <unordered_set>

#include "hypafib/errors.hpp"
#include "hypafib/limits.hpp"

namespace hypafib {
namespace {

// Length of the word built by f_i = (f_{i-1})^{e_i} f_{i-2} from seeds of
// length 1, with e_i = even_power for even i and odd_power for odd i.
BigInt recurrence_length(std::size_t i, BigInt seed2, unsigned even_power, unsigned odd_power) {
  if (i < 2) return 1;
  BigInt prev = 1, cur = std::move(seed2);
  for (std::size_t k = 3; k <= i; ++k) {
    BigInt next = (k % 2 == 0 ? even_power : odd_power) * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

void check_length(const BigInt& length) {
  if (length > limits::max_word_length()) {
    throw CapacityError("word of length " + length.str() + " exceeds the cap of " +
                        std::to_string(limits::max_word_length()) + " symbols");
  }
}

// Iterates w_k = (w_{k-1})^{e_k} w_{k-2} from w_first and w_second up to i.
BinaryWord power_recurrence(std::size_t first, BinaryWord older, BinaryWord newer, std::size_t i,
                            unsigned even_power, unsigned odd_power) {
  for (std::size_t k = first + 2; k <= i; ++k) {
    BinaryWord next = newer.power(k % 2 == 0 ? even_power : odd_power);
    next.append(older);
    older = std::move(newer);
    newer = std::move(next);
  }
  return newer;
}

}  // namespace

Morphism::Morphism(BinaryWord image0, BinaryWord image1) : image0_(std::move(image0)), image1_(std::move(image1)) {
  if (image0_.empty() || image1_.empty()) throw DomainError("morphism images must be non-empty");
}

Morphism sigma() { return Morphism(BinaryWord::from_string("01"), BinaryWord::from_string("0")); }

Morphism sigma_q(int q) {
  require_valid_q(q);
  BinaryWord zeros = BinaryWord::repeated(false, static_cast<std::size_t>(q - 4));
  BinaryWord image1 = zeros;
  image1.push_back(true);
  BinaryWord image0 = image1;
  image0.push_back(false);
  return Morphism(std::move(image0), std::move(image1));
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  return Morphism(apply_morphism(outer, inner.image0()), apply_morphism(outer, inner.image1()));
}

BinaryWord apply_morphism(const Morphism& m, const BinaryWord& w) {
  const std::size_t ones = kernels::count_ones(w.view());
  const std::size_t zeros = w.size() - ones;
  // Checked in long double first so absurd sizes cannot overflow size_t.
  long double estimate = static_cast<long double>(zeros) * m.image0().size() +
                         static_cast<long double>(ones) * m.image1().size();
  if (estimate > static_cast<long double>(limits::max_word_length())) {
    throw CapacityError("morphism image exceeds the cap of " + std::to_string(limits::max_word_length()) + " symbols");
  }
  BinaryWord out;
  out.reserve(zeros * m.image0().size() + ones * m.image1().size());
  for (std::size_t pos = 0; pos < w.size(); ++pos) out.append(m.image(w[pos]));
  return out;
}

BinaryWord classic_fib_word(std::size_t i) {
  if (i == 0) return BinaryWord::from_string("1");
  if (i == 1) return BinaryWord::from_string("0");
  check_length(fibonacci(i + 1));
  return power_recurrence(0, BinaryWord::from_string("1"), BinaryWord::from_string("0"), i, 1, 1);
}

BinaryWord biperiodic_fib_word(BiperiodicParams p, std::size_t i) {
  if (p.a == 0 || p.b == 0) throw DomainError("biperiodic parameters must be positive integers");
  if (i == 0) return BinaryWord::from_string("1");
  if (i == 1) return BinaryWord::from_string("0");
  check_length(recurrence_length(i, BigInt(p.a), p.a, p.b));
  BinaryWord second = BinaryWord::repeated(false, p.a - 1);
  second.push_back(true);
  if (i == 2) return second;
  return power_recurrence(1, BinaryWord::from_string("0"), std::move(second), i, p.a, p.b);
}

BigInt fib4q_length(int q, std::size_t i) {
  require_valid_q(q);
  return recurrence_length(i, BigInt(q - 3), static_cast<unsigned>(q - 4), 1);
}

BinaryWord fib4q_word(int q, std::size_t i) {
  require_valid_q(q);
  if (i == 0) return BinaryWord::from_string("1");
  if (i == 1) return BinaryWord::from_string("0");
  check_length(fib4q_length(q, i));
  return power_recurrence(0, BinaryWord::from_string("1"), BinaryWord::from_string("0"), i,
                          static_cast<unsigned>(q - 4), 1);
}

PrefixStream::PrefixStream(int q) : q_(q), morphism_(sigma_q(q)) {}

void PrefixStream::expand() {
  if (produced_.empty()) {
    // The fixed point starts with 0, hence with sigma_q(0).
    produced_ = morphism_.image0();
    read_ = 1;
    return;
  }
  produced_.append(morphism_.image(produced_[read_]));
  ++read_;
}

bool PrefixStream::next() {
  while (position_ >= produced_.size()) expand();
  return produced_[position_++];
}

BinaryWord infinite_prefix(int q, std::size_t length) {
  require_valid_q(q);
  if (length > limits::max_word_length()) {
    throw CapacityError("prefix of length " + std::to_string(length) + " exceeds the cap");
  }
  if (length == 0) return {};
  const Morphism m = sigma_q(q);
  BinaryWord out = m.image0();
  out.reserve(length + m.image0().size());
  for (std::size_t read = 1; out.size() < length; ++read) {
    const BinaryWord& img = m.image(out[read]);
    if (out.size() + img.size() > length) {
      out.append(img.prefix(length - out.size()));
    } else {
      out.append(img);
    }
  }
  out.truncate(length);
  return out;
}

BinaryWord suffix_delete(const BinaryWord& u, const BinaryWord& w) {
  if (!u.ends_with(w)) {
    throw SuffixMismatchError("word of length " + std::to_string(w.size()) + " is not a suffix of word of length " +
                              std::to_string(u.size()));
  }
  return u.prefix(u.size() - w.size());
}

bool is_palindrome(const BinaryWord& w) {
  for (std::size_t i = 0, j = w.size(); i + 1 < j; ++i, --j) {
    if (w[i] != w[j - 1]) return false;
  }
  return true;
}

std::set<BinaryWord> distinct_subwords(const BinaryWord& w, std::size_t n) {
  if (n == 0 || n > w.size()) {
    throw DomainError("factor length " + std::to_string(n) + " must lie in [1, " + std::to_string(w.size()) + "]");
  }
  std::set<BinaryWord> out;
  if (n <= 64) {
    std::unordered_set<std::uint64_t> seen;
    for (std::size_t pos = 0; pos + n <= w.size(); ++pos) {
      if (seen.insert(w.window(pos, n)).second) out.insert(w.substr(pos, n));
    }
  } else {
    for (std::size_t pos = 0; pos + n <= w.size(); ++pos) out.insert(w.substr(pos, n));
  }
  return out;
}

std::size_t factor_count(const BinaryWord& w, std::size_t n) {
  if (n == 0 || n > w.size()) {
    throw DomainError("factor length " + std::to_string(n) + " must lie in [1, " + std::to_string(w.size()) + "]");
  }
  if (n > 64) return distinct_subwords(w, n).size();
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t pos = 0; pos + n <= w.size(); ++pos) seen.insert(w.window(pos, n));
  return seen.size();
}

DigitCounts digit_counts(const BinaryWord& w) {
  const std::size_t ones = kernels::count_ones(w.view());
  return {w.size(), w.size() - ones, ones};
}

bool contains_adjacent_ones(const BinaryWord& w) { return kernels::has_adjacent_ones(w.view()); }

bool contains_zero_run(const BinaryWord& w, std::size_t run) { return kernels::has_zero_run(w.view(), run); }

}  // namespace hypafib
