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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypafib/kernels.hpp"

namespace hypafib {

/// Finite word over {0,1}, bit-packed 64 symbols per block.
///
/// Every operation that grows a word checks the global length cap
/// (limits::max_word_length) before allocating and throws CapacityError
/// instead of exhausting memory.
class BinaryWord {
 public:
  BinaryWord() = default;

  /// Parses an ASCII string of '0'/'1'; anything else is a DomainError.
  static BinaryWord from_string(std::string_view text);
  static BinaryWord repeated(bool symbol, std::size_t count);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  bool operator[](std::size_t pos) const noexcept { return (blocks_[pos >> 6] >> (pos & 63)) & 1U; }
  /// Bounds-checked access; throws IndexError.
  bool at(std::size_t pos) const;

  void push_back(bool symbol);
  void append(const BinaryWord& other);
  BinaryWord& operator+=(const BinaryWord& other) {
    append(other);
    return *this;
  }
  /// Drops everything past the first `length` symbols (no-op if shorter).
  void truncate(std::size_t length);
  void reserve(std::size_t symbols);

  BinaryWord power(std::size_t exponent) const;
  BinaryWord prefix(std::size_t length) const;
  BinaryWord substr(std::size_t pos, std::size_t length) const;
  BinaryWord reversed() const;

  bool starts_with(const BinaryWord& w) const;
  bool ends_with(const BinaryWord& w) const;

  /// Packed symbols [pos, pos+length) with symbol pos in bit 0; length <= 64.
  std::uint64_t window(std::size_t pos, std::size_t length) const;

  std::string to_string() const;
  std::span<const std::uint64_t> blocks() const noexcept { return blocks_; }
  kernels::BitView view() const noexcept { return {blocks_, size_}; }

  friend bool operator==(const BinaryWord& a, const BinaryWord& b);
  /// Lexicographic with '0' < '1'; a proper prefix sorts first.
  friend std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b);

 private:
  void ensure_room(std::size_t extra) const;
  void append_bits(std::uint64_t bits, std::size_t count);

  std::vector<std::uint64_t> blocks_;
  std::size_t size_ = 0;
};

BinaryWord operator+(BinaryWord a, const BinaryWord& b);

}  // namespace hypafib
