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

// Word-parallel scans over bit-packed binary words.
//
// Symbol j of a word lives in bit (j % 64) of block j / 64. Bits past the
// logical length are always zero. Every kernel has a portable scalar
// implementation and, on x86-64, an AVX2 variant; the public entry points
// dispatch once at startup based on CPUID.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace hypafib::kernels {

struct BitView {
  std::span<const std::uint64_t> blocks;
  std::size_t bits = 0;
};

enum class Backend { kScalar, kAvx2 };

std::size_t count_ones(BitView w);
/// True when some position j has w[j] = w[j+1] = 1.
bool has_adjacent_ones(BitView w);
/// True when w contains `run` consecutive zeros (run >= 1).
bool has_zero_run(BitView w, std::size_t run);
/// Bitwise equality; views must have equal length.
bool bits_equal(BitView a, BitView b);

bool avx2_supported() noexcept;
Backend active_backend() noexcept;
/// Pins dispatch to a backend; returns false (and changes nothing) if the
/// backend is not supported on this machine.
bool set_backend(Backend b) noexcept;
std::string_view backend_name(Backend b) noexcept;

namespace scalar {
std::size_t count_ones(BitView w);
bool has_adjacent_ones(BitView w);
bool has_zero_run(BitView w, std::size_t run);
bool bits_equal(BitView a, BitView b);
// Start-block-restricted variants used for vector-loop tails.
bool has_adjacent_ones_from(BitView w, std::size_t first_block);
bool has_zero_run_from(BitView w, std::size_t run, std::size_t first_block);
}  // namespace scalar

namespace avx2 {
std::size_t count_ones(BitView w);
bool has_adjacent_ones(BitView w);
bool has_zero_run(BitView w, std::size_t run);
bool bits_equal(BitView a, BitView b);
}  // namespace avx2

}  // namespace hypafib::kernels
