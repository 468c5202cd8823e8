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

#include "hypafib/binary_word.hpp"

#include <algorithm>
#include <limits>

#include "hypafib/errors.hpp"
#include "hypafib/limits.hpp"

namespace hypafib {
namespace {

constexpr std::size_t kBlockBits = 64;

std::uint64_t low_mask(std::size_t count) {
  return count >= kBlockBits ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

}  // namespace

BinaryWord BinaryWord::from_string(std::string_view text) {
  BinaryWord w;
  w.ensure_room(text.size());
  w.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw DomainError(std::string("binary word contains '") + c + "'");
    w.push_back(c == '1');
  }
  return w;
}

BinaryWord BinaryWord::repeated(bool symbol, std::size_t count) {
  BinaryWord w;
  w.ensure_room(count);
  w.blocks_.assign((count + kBlockBits - 1) / kBlockBits, symbol ? ~std::uint64_t{0} : 0);
  w.size_ = count;
  if (symbol && count % kBlockBits) w.blocks_.back() &= low_mask(count % kBlockBits);
  return w;
}

bool BinaryWord::at(std::size_t pos) const {
  if (pos >= size_) throw IndexError("symbol index " + std::to_string(pos) + " out of range for length " + std::to_string(size_));
  return (*this)[pos];
}

void BinaryWord::ensure_room(std::size_t extra) const {
  const std::size_t cap = limits::max_word_length();
  if (extra > cap || size_ > cap - extra) {
    throw CapacityError("word length would exceed the cap of " + std::to_string(cap) + " symbols");
  }
}

void BinaryWord::reserve(std::size_t symbols) { blocks_.reserve((symbols + kBlockBits - 1) / kBlockBits); }

void BinaryWord::append_bits(std::uint64_t bits, std::size_t count) {
  if (count == 0) return;
  bits &= low_mask(count);
  const std::size_t offset = size_ % kBlockBits;
  if (offset == 0) {
    blocks_.push_back(bits);
  } else {
    blocks_.back() |= bits << offset;
    if (offset + count > kBlockBits) blocks_.push_back(bits >> (kBlockBits - offset));
  }
  size_ += count;
}

void BinaryWord::push_back(bool symbol) {
  ensure_room(1);
  append_bits(symbol ? 1 : 0, 1);
}

void BinaryWord::append(const BinaryWord& other) {
  ensure_room(other.size_);
  if (&other == this) {
    BinaryWord copy = other;
    append(copy);
    return;
  }
  blocks_.reserve((size_ + other.size_ + kBlockBits - 1) / kBlockBits);
  const std::size_t full = other.size_ / kBlockBits;
  for (std::size_t i = 0; i < full; ++i) append_bits(other.blocks_[i], kBlockBits);
  if (other.size_ % kBlockBits) append_bits(other.blocks_[full], other.size_ % kBlockBits);
}

void BinaryWord::truncate(std::size_t length) {
  if (length >= size_) return;
  size_ = length;
  blocks_.resize((length + kBlockBits - 1) / kBlockBits);
  if (length % kBlockBits) blocks_.back() &= low_mask(length % kBlockBits);
}

BinaryWord BinaryWord::power(std::size_t exponent) const {
  BinaryWord out;
  if (exponent == 0 || size_ == 0) return out;
  if (size_ > std::numeric_limits<std::size_t>::max() / exponent) {
    throw CapacityError("word power overflows the length range");
  }
  out.ensure_room(size_ * exponent);
  out.reserve(size_ * exponent);
  for (std::size_t i = 0; i < exponent; ++i) out.append(*this);
  return out;
}

BinaryWord BinaryWord::substr(std::size_t pos, std::size_t length) const {
  if (pos > size_) throw IndexError("substring start past the end of the word");
  length = std::min(length, size_ - pos);
  BinaryWord out;
  out.reserve(length);
  std::size_t done = 0;
  while (done < length) {
    std::size_t take = std::min<std::size_t>(kBlockBits, length - done);
    out.append_bits(window(pos + done, take), take);
    done += take;
  }
  return out;
}

BinaryWord BinaryWord::prefix(std::size_t length) const { return substr(0, length); }

BinaryWord BinaryWord::reversed() const {
  BinaryWord out;
  out.reserve(size_);
  for (std::size_t i = size_; i-- > 0;) out.append_bits((*this)[i] ? 1 : 0, 1);
  return out;
}

std::uint64_t BinaryWord::window(std::size_t pos, std::size_t length) const {
  if (length == 0) return 0;
  if (length > kBlockBits || pos + length > size_) throw IndexError("window out of range");
  const std::size_t block = pos / kBlockBits;
  const std::size_t offset = pos % kBlockBits;
  std::uint64_t bits = blocks_[block] >> offset;
  if (offset && offset + length > kBlockBits) bits |= blocks_[block + 1] << (kBlockBits - offset);
  return bits & low_mask(length);
}

bool BinaryWord::starts_with(const BinaryWord& w) const {
  if (w.size_ > size_) return false;
  return kernels::bits_equal(prefix(w.size_).view(), w.view());
}

bool BinaryWord::ends_with(const BinaryWord& w) const {
  if (w.size_ > size_) return false;
  return kernels::bits_equal(substr(size_ - w.size_, w.size_).view(), w.view());
}

std::string BinaryWord::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if ((*this)[i]) s[i] = '1';
  }
  return s;
}

bool operator==(const BinaryWord& a, const BinaryWord& b) { return kernels::bits_equal(a.view(), b.view()); }

std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) {
  const std::size_t common = std::min(a.size_, b.size_);
  for (std::size_t pos = 0; pos < common; pos += kBlockBits) {
    std::size_t take = std::min(kBlockBits, common - pos);
    std::uint64_t x = a.window(pos, take);
    std::uint64_t y = b.window(pos, take);
    if (x != y) {
      std::uint64_t first = x ^ y;
      // lowest differing bit is the earliest differing symbol
      return ((x & first & (~first + 1)) != 0) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return a.size_ <=> b.size_;
}

BinaryWord operator+(BinaryWord a, const BinaryWord& b) {
  a.append(b);
  return a;
}

}  // namespace hypafib
