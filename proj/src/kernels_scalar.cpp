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

#include <bit>

#include "hypafib/kernels.hpp"

namespace hypafib::kernels::scalar {
namespace {

std::size_t block_count(std::size_t bits) { return (bits + 63) / 64; }

// Complement of block i with bits past the logical end cleared, so padding
// never reads as a zero symbol.
std::uint64_t zeros_mask(BitView w, std::size_t i) {
  std::uint64_t z = ~w.blocks[i];
  std::size_t tail = w.bits - i * 64;
  if (tail < 64) z &= (std::uint64_t{1} << tail) - 1;
  return z;
}

}  // namespace

std::size_t count_ones(BitView w) {
  std::size_t n = 0;
  for (std::size_t i = 0, e = block_count(w.bits); i < e; ++i) n += static_cast<std::size_t>(std::popcount(w.blocks[i]));
  return n;
}

bool has_adjacent_ones_from(BitView w, std::size_t first_block) {
  const std::size_t nb = block_count(w.bits);
  for (std::size_t i = first_block; i < nb; ++i) {
    std::uint64_t cur = w.blocks[i];
    std::uint64_t next = i + 1 < nb ? w.blocks[i + 1] : 0;
    if (cur & ((cur >> 1) | (next << 63))) return true;
  }
  return false;
}

bool has_adjacent_ones(BitView w) { return has_adjacent_ones_from(w, 0); }

bool has_zero_run_from(BitView w, std::size_t run, std::size_t first_block) {
  const std::size_t nb = block_count(w.bits);
  if (run == 0) return true;
  if (run > w.bits) return false;
  if (run <= 64) {
    for (std::size_t i = first_block; i < nb; ++i) {
      std::uint64_t lo = zeros_mask(w, i);
      std::uint64_t hi = i + 1 < nb ? zeros_mask(w, i + 1) : 0;
      std::uint64_t m = lo;
      for (std::size_t k = 1; k < run && m; ++k) m &= (lo >> k) | (hi << (64 - k));
      if (m) return true;
    }
    return false;
  }
  // Long runs: walk maximal zero stretches. Only runs starting at or after
  // first_block matter, but a stretch may begin earlier and still qualify.
  std::size_t current = 0;
  for (std::size_t i = first_block; i < nb; ++i) {
    std::size_t valid = w.bits - i * 64 < 64 ? w.bits - i * 64 : 64;
    std::uint64_t z = zeros_mask(w, i);
    std::size_t pos = 0;
    while (pos < valid) {
      std::uint64_t rest = z >> pos;
      std::size_t ones_ahead = static_cast<std::size_t>(std::countr_one(rest));
      if (ones_ahead > valid - pos) ones_ahead = valid - pos;
      if (ones_ahead > 0) {
        current += ones_ahead;
        pos += ones_ahead;
        if (current >= run) return true;
      } else {
        current = 0;
        ++pos;
      }
    }
  }
  return false;
}

bool has_zero_run(BitView w, std::size_t run) { return has_zero_run_from(w, run, 0); }

bool bits_equal(BitView a, BitView b) {
  if (a.bits != b.bits) return false;
  for (std::size_t i = 0, e = block_count(a.bits); i < e; ++i) {
    if (a.blocks[i] != b.blocks[i]) return false;
  }
  return true;
}

}  // namespace hypafib::kernels::scalar
