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

namespace hypafib::limits {

inline constexpr std::size_t kDefaultMaxWordLength = std::size_t{1} << 28;
inline constexpr std::size_t kDefaultMaxNodes = 10'000'000;

/// Upper bound on the number of symbols in any BinaryWord.
std::size_t max_word_length() noexcept;
void set_max_word_length(std::size_t symbols) noexcept;

/// Upper bound on the number of materialized triangle vertices.
std::size_t max_nodes() noexcept;
void set_max_nodes(std::size_t nodes) noexcept;

/// Reads HYPAFIB_MAX_WORD_LEN and HYPAFIB_MAX_NODES. Malformed values
/// raise DomainError; unset variables leave the current caps alone.
void apply_env_overrides();

/// Restores both caps for the lifetime of the guard.
class ScopedLimits {
 public:
  ScopedLimits(std::size_t word_length, std::size_t nodes);
  ~ScopedLimits();
  ScopedLimits(const ScopedLimits&) = delete;
  ScopedLimits& operator=(const ScopedLimits&) = delete;

 private:
  std::size_t saved_word_length_;
  std::size_t saved_nodes_;
};

}  // namespace hypafib::limits
