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
#include <set>

#include "hypafib/binary_word.hpp"
#include "hypafib/bigint.hpp"
#include "hypafib/seqcore.hpp"

namespace hypafib {

/// Letter-to-word substitution on {0,1}, extended to words by concatenation.
class Morphism {
 public:
  Morphism(BinaryWord image0, BinaryWord image1);

  const BinaryWord& image0() const noexcept { return image0_; }
  const BinaryWord& image1() const noexcept { return image1_; }
  const BinaryWord& image(bool symbol) const noexcept { return symbol ? image1_ : image0_; }

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  BinaryWord image0_;
  BinaryWord image1_;
};

/// The Fibonacci morphism 0 -> 01, 1 -> 0.
Morphism sigma();
/// The {4,q} morphism 0 -> 0^{q-4}10, 1 -> 0^{q-4}1.
Morphism sigma_q(int q);
/// x -> outer(inner(x)).
Morphism compose(const Morphism& outer, const Morphism& inner);

BinaryWord apply_morphism(const Morphism& m, const BinaryWord& w);

/// f_0 = 1, f_1 = 0, f_i = f_{i-1} f_{i-2}.
BinaryWord classic_fib_word(std::size_t i);

/// f̂_0 = 1, f̂_1 = 0, f̂_2 = 0^{a-1}1, then f̂_i = f̂_{i-1}^a f̂_{i-2} for even
/// i and f̂_{i-1}^b f̂_{i-2} for odd i.
BinaryWord biperiodic_fib_word(BiperiodicParams p, std::size_t i);

/// f_0 = 1, f_1 = 0, f_i = (f_{i-1})^{q-4} f_{i-2} for even i and
/// f_{i-1} f_{i-2} for odd i. Requires q >= 5.
BinaryWord fib4q_word(int q, std::size_t i);

/// |f_i^{[q]}| without building the word.
BigInt fib4q_length(int q, std::size_t i);

/// Single-consumer cursor over the infinite word lim f_i^{[q]}.
///
/// The limit is the fixed point of sigma_q starting with 0; the cursor
/// expands it by reading back its own output, so it holds at most the
/// emitted prefix plus one pending image.
class PrefixStream {
 public:
  explicit PrefixStream(int q);

  int q() const noexcept { return q_; }
  std::size_t position() const noexcept { return position_; }
  bool next();

 private:
  void expand();

  int q_;
  Morphism morphism_;
  BinaryWord produced_;
  std::size_t read_ = 0;  // next symbol of produced_ whose image is pending
  std::size_t position_ = 0;
};

/// First `length` symbols of the infinite {4,q}-Fibonacci word.
BinaryWord infinite_prefix(int q, std::size_t length);

/// u ⊖ w: the word v with u = v w. Throws SuffixMismatchError otherwise.
BinaryWord suffix_delete(const BinaryWord& u, const BinaryWord& w);

bool is_palindrome(const BinaryWord& w);

/// All distinct factors of length n (1 <= n <= |w|), in lexicographic order.
std::set<BinaryWord> distinct_subwords(const BinaryWord& w, std::size_t n);
/// Number of distinct length-n factors; same contract as distinct_subwords.
std::size_t factor_count(const BinaryWord& w, std::size_t n);

struct DigitCounts {
  std::size_t total = 0;
  std::size_t zeros = 0;
  std::size_t ones = 0;

  friend bool operator==(const DigitCounts&, const DigitCounts&) = default;
};

DigitCounts digit_counts(const BinaryWord& w);

bool contains_adjacent_ones(const BinaryWord& w);
bool contains_zero_run(const BinaryWord& w, std::size_t run);

}  // namespace hypafib
