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

#include "hypafib/limits.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "hypafib/errors.hpp"

namespace hypafib::limits {
namespace {

std::atomic<std::size_t> g_max_word_length{kDefaultMaxWordLength};
std::atomic<std::size_t> g_max_nodes{kDefaultMaxNodes};

std::size_t parse_cap(const char* name, std::string_view text) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw DomainError(std::string(name) + " must be a positive integer (got '" + std::string(text) + "')");
  }
  return value;
}

}  // namespace

std::size_t max_word_length() noexcept { return g_max_word_length.load(std::memory_order_relaxed); }
void set_max_word_length(std::size_t symbols) noexcept { g_max_word_length.store(symbols, std::memory_order_relaxed); }

std::size_t max_nodes() noexcept { return g_max_nodes.load(std::memory_order_relaxed); }
void set_max_nodes(std::size_t nodes) noexcept { g_max_nodes.store(nodes, std::memory_order_relaxed); }

void apply_env_overrides() {
  if (const char* v = std::getenv("HYPAFIB_MAX_WORD_LEN")) set_max_word_length(parse_cap("HYPAFIB_MAX_WORD_LEN", v));
  if (const char* v = std::getenv("HYPAFIB_MAX_NODES")) set_max_nodes(parse_cap("HYPAFIB_MAX_NODES", v));
}

ScopedLimits::ScopedLimits(std::size_t word_length, std::size_t nodes)
    : saved_word_length_(max_word_length()), saved_nodes_(max_nodes()) {
  set_max_word_length(word_length);
  set_max_nodes(nodes);
}

ScopedLimits::~ScopedLimits() {
  set_max_word_length(saved_word_length_);
  set_max_nodes(saved_nodes_);
}

}  // namespace hypafib::limits
