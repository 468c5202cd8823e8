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

#include <immintrin.h>

#include "hypafib/kernels.hpp"

namespace hypafib::kernels::avx2 {
namespace {

std::size_t block_count(std::size_t bits) { return (bits + 63) / 64; }

inline __m256i load(const std::uint64_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

inline bool any_set(__m256i v) { return !_mm256_testz_si256(v, v); }

// Per-byte popcount via nibble lookup, summed into four 64-bit lanes.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

}  // namespace

std::size_t count_ones(BitView w) {
  const std::size_t nb = block_count(w.bits);
  const std::uint64_t* p = w.blocks.data();
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= nb; i += 4) acc = _mm256_add_epi64(acc, popcount_lanes(load(p + i)));
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t n = static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
  for (; i < nb; ++i) n += static_cast<std::size_t>(_mm_popcnt_u64(p[i]));
  return n;
}

bool has_adjacent_ones(BitView w) {
  const std::size_t nb = block_count(w.bits);
  const std::uint64_t* p = w.blocks.data();
  std::size_t i = 0;
  // Needs blocks i..i+4, so the neighbour load stays in bounds.
  for (; i + 5 <= nb; i += 4) {
    __m256i cur = load(p + i);
    __m256i next = load(p + i + 1);
    __m256i shifted = _mm256_or_si256(_mm256_srli_epi64(cur, 1), _mm256_slli_epi64(next, 63));
    if (any_set(_mm256_and_si256(cur, shifted))) return true;
  }
  return scalar::has_adjacent_ones_from(w, i);
}

bool has_zero_run(BitView w, std::size_t run) {
  if (run == 0 || run > 64 || run > w.bits) return scalar::has_zero_run(w, run);
  const std::size_t nb = block_count(w.bits);
  const std::uint64_t* p = w.blocks.data();
  const __m256i ones = _mm256_set1_epi64x(-1);
  std::size_t i = 0;
  // Blocks i..i+4 must all be full so their complements need no masking.
  for (; i + 6 <= nb; i += 4) {
    __m256i lo = _mm256_xor_si256(load(p + i), ones);
    __m256i hi = _mm256_xor_si256(load(p + i + 1), ones);
    __m256i m = lo;
    for (std::size_t k = 1; k < run; ++k) {
      __m128i right = _mm_cvtsi64_si128(static_cast<long long>(k));
      __m128i left = _mm_cvtsi64_si128(static_cast<long long>(64 - k));
      m = _mm256_and_si256(m, _mm256_or_si256(_mm256_srl_epi64(lo, right), _mm256_sll_epi64(hi, left)));
    }
    if (any_set(m)) return true;
  }
  return scalar::has_zero_run_from(w, run, i);
}

bool bits_equal(BitView a, BitView b) {
  if (a.bits != b.bits) return false;
  const std::size_t nb = block_count(a.bits);
  const std::uint64_t* pa = a.blocks.data();
  const std::uint64_t* pb = b.blocks.data();
  std::size_t i = 0;
  for (; i + 4 <= nb; i += 4) {
    __m256i diff = _mm256_xor_si256(load(pa + i), load(pb + i));
    if (any_set(diff)) return false;
  }
  for (; i < nb; ++i) {
    if (pa[i] != pb[i]) return false;
  }
  return true;
}

}  // namespace hypafib::kernels::avx2
