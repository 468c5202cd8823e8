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

#include <atomic>

#include "hypafib/kernels.hpp"

namespace hypafib::kernels {
namespace {

bool detect_avx2() noexcept {
#if defined(HYPAFIB_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

std::atomic<Backend>& backend_slot() noexcept {
  static std::atomic<Backend> slot{detect_avx2() ? Backend::kAvx2 : Backend::kScalar};
  return slot;
}

#if defined(HYPAFIB_HAVE_AVX2_KERNELS)
#define HYPAFIB_DISPATCH(fn, ...)                                                   \
  (backend_slot().load(std::memory_order_relaxed) == Backend::kAvx2 ? avx2::fn(__VA_ARGS__) \
                                                                     : scalar::fn(__VA_ARGS__))
#else
#define HYPAFIB_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

}  // namespace

#if !defined(HYPAFIB_HAVE_AVX2_KERNELS)
// Without the AVX2 translation unit these forward to scalar so the symbols
// still link for equivalence tests.
namespace avx2 {
std::size_t count_ones(BitView w) { return scalar::count_ones(w); }
bool has_adjacent_ones(BitView w) { return scalar::has_adjacent_ones(w); }
bool has_zero_run(BitView w, std::size_t run) { return scalar::has_zero_run(w, run); }
bool bits_equal(BitView a, BitView b) { return scalar::bits_equal(a, b); }
}  // namespace avx2
#endif

std::size_t count_ones(BitView w) { return HYPAFIB_DISPATCH(count_ones, w); }
bool has_adjacent_ones(BitView w) { return HYPAFIB_DISPATCH(has_adjacent_ones, w); }
bool has_zero_run(BitView w, std::size_t run) { return HYPAFIB_DISPATCH(has_zero_run, w, run); }
bool bits_equal(BitView a, BitView b) { return HYPAFIB_DISPATCH(bits_equal, a, b); }

bool avx2_supported() noexcept {
  static const bool supported = detect_avx2();
  return supported;
}

Backend active_backend() noexcept { return backend_slot().load(std::memory_order_relaxed); }

bool set_backend(Backend b) noexcept {
  if (b == Backend::kAvx2 && !avx2_supported()) return false;
  backend_slot().store(b, std::memory_order_relaxed);
  return true;
}

std::string_view backend_name(Backend b) noexcept { return b == Backend::kAvx2 ? "avx2" : "scalar"; }

}  // namespace hypafib::kernels
