// Copyright 2026 The nucc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace nucc {

/// Fixed-length dense bit-vector packed into 64-bit words. Bits beyond
/// size() are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= m;
    } else {
      words_[i >> 6] &= ~m;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  std::size_t popcount() const;
  bool any() const;
  void clear();

  /// Up to 64 bits starting at `offset`, packed with bit `offset` as bit 0.
  std::uint64_t extract(std::size_t offset, std::size_t len) const;
  /// Overwrites bits [offset, offset + len) with the low `len` bits of `v`.
  void deposit(std::size_t offset, std::size_t len, std::uint64_t v);

  BitVector& operator^=(const BitVector& o);
  BitVector& operator&=(const BitVector& o);
  BitVector& operator|=(const BitVector& o);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

  bool operator==(const BitVector& o) const = default;

  /// Support-lexicographic order: at the lowest differing index, the vector
  /// with the bit set sorts first. Sizes must match.
  static int support_compare(const BitVector& a, const BitVector& b);

  /// Indices of set bits, ascending.
  std::vector<std::size_t> support() const;

  /// "0110..." with bit 0 first.
  std::string to_string() const;
  static BitVector from_string(std::string_view bits);

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Parity of popcount(a & b), word-wise. Sizes must match.
bool dot_parity(const BitVector& a, const BitVector& b);

/// Support-lexicographic comparison of two packed words (same convention as
/// BitVector::support_compare).
inline int support_compare_word(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t d = a ^ b;
  if (d == 0) return 0;
  const std::uint64_t low = d & (~d + 1);
  return (a & low) ? -1 : 1;
}

}  // namespace nucc
