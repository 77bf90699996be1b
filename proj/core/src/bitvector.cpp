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

#include "nucc/bitvector.hpp"

#include <algorithm>
#include <stdexcept>

#include "nucc/error.hpp"

namespace nucc {

std::size_t BitVector::popcount() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

void BitVector::clear() { std::fill(words_.begin(), words_.end(), 0); }

std::uint64_t BitVector::extract(std::size_t offset, std::size_t len) const {
  if (len == 0) return 0;
  const std::size_t w = offset >> 6;
  const std::size_t b = offset & 63;
  std::uint64_t v = words_[w] >> b;
  if (b != 0 && b + len > 64 && w + 1 < words_.size()) {
    v |= words_[w + 1] << (64 - b);
  }
  if (len < 64) v &= (std::uint64_t{1} << len) - 1;
  return v;
}

void BitVector::deposit(std::size_t offset, std::size_t len, std::uint64_t v) {
  for (std::size_t i = 0; i < len; ++i) set(offset + i, (v >> i) & 1u);
}

BitVector& BitVector::operator^=(const BitVector& o) {
  if (o.n_ != n_) throw DimensionError("bit-vector size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& o) {
  if (o.n_ != n_) throw DimensionError("bit-vector size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& o) {
  if (o.n_ != n_) throw DimensionError("bit-vector size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

int BitVector::support_compare(const BitVector& a, const BitVector& b) {
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    if (int c = support_compare_word(a.words_[i], b.words_[i]); c != 0) return c;
  }
  return 0;
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t v = words_[w];
    while (v) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(v)));
      v &= v - 1;
    }
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i, true);
    } else if (bits[i] != '0') {
      throw ParseError("bit string may only contain 0 and 1");
    }
  }
  return v;
}

bool dot_parity(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) throw DimensionError("bit-vector size mismatch");
  std::uint64_t acc = 0;
  auto wa = a.words();
  auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) acc ^= wa[i] & wb[i];
  return std::popcount(acc) & 1;
}

}  // namespace nucc
