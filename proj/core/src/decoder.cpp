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

#include "nucc/decoder.hpp"

#include <array>
#include <bit>
#include <map>
#include <mutex>

#include "nucc/error.hpp"

namespace nucc {
namespace {

bool parity(std::uint64_t v) { return std::popcount(v) & 1; }

std::uint64_t low_word(const BitVector& v) { return v.words().empty() ? 0 : v.words()[0]; }

// a < b under canonical order for operators of equal weight.
bool canonical_less(std::uint64_t ax, std::uint64_t az, std::uint64_t bx, std::uint64_t bz) {
  if (int c = support_compare_word(ax, bx); c != 0) return c < 0;
  return support_compare_word(az, bz) < 0;
}

}  // namespace

LookupDecoder::LookupDecoder(CodePtr code) : code_(std::move(code)) {
  const std::size_t n = code_->n();
  if (n > kMaxEnumerableQubits) {
    throw SizeLimitError(code_->name() + ": lookup decoding limited to n <= " +
                         std::to_string(kMaxEnumerableQubits));
  }
  for (const auto& g : code_->generators()) {
    gen_x_.push_back(low_word(g.x()));
    gen_z_.push_back(low_word(g.z()));
  }
  lx_x_ = low_word(code_->logical_x().x());
  lx_z_ = low_word(code_->logical_x().z());
  lz_x_ = low_word(code_->logical_z().x());
  lz_z_ = low_word(code_->logical_z().z());

  const std::size_t r = gen_x_.size();
  const std::uint64_t size = std::uint64_t{1} << r;
  table_x_.assign(size, 0);
  table_z_.assign(size, 0);
  std::vector<int> weight_of(size, -1);
  weight_of[0] = 0;
  std::uint64_t filled = 1;

  // Syndrome contribution of each single-qubit letter.
  std::vector<std::array<std::uint64_t, 4>> contrib(n);
  for (std::size_t q = 0; q < n; ++q) {
    for (int l = 1; l < 4; ++l) {
      const std::uint64_t x = (l & 1) ? std::uint64_t{1} << q : 0;
      const std::uint64_t z = (l & 2) ? std::uint64_t{1} << q : 0;
      contrib[q][static_cast<std::size_t>(l)] = syndrome_word(x, z);
    }
  }

  std::vector<std::size_t> idx;
  for (int w = 1; filled < size && w <= static_cast<int>(n); ++w) {
    idx.resize(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i) idx[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
    while (true) {
      // All 3^w letter assignments on this support.
      std::vector<int> letters(static_cast<std::size_t>(w), 1);
      while (true) {
        std::uint64_t s = 0, x = 0, z = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) {
          const int l = letters[i];
          s ^= contrib[idx[i]][static_cast<std::size_t>(l)];
          if (l & 1) x |= std::uint64_t{1} << idx[i];
          if (l & 2) z |= std::uint64_t{1} << idx[i];
        }
        if (weight_of[s] < 0) {
          weight_of[s] = w;
          table_x_[s] = x;
          table_z_[s] = z;
          ++filled;
        } else if (weight_of[s] == w && canonical_less(x, z, table_x_[s], table_z_[s])) {
          table_x_[s] = x;
          table_z_[s] = z;
        }
        std::size_t i = 0;
        while (i < letters.size() && letters[i] == 3) letters[i++] = 1;
        if (i == letters.size()) break;
        ++letters[i];
      }
      // Next combination in lexicographic order.
      int i = w - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - static_cast<std::size_t>(w - i)) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < w; ++j) {
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  if (filled != size) throw InternalError(code_->name() + ": syndrome table incomplete");
}

std::uint64_t LookupDecoder::syndrome_word(std::uint64_t x, std::uint64_t z) const {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < gen_x_.size(); ++i) {
    if (parity((x & gen_z_[i]) ^ (z & gen_x_[i]))) s |= std::uint64_t{1} << i;
  }
  return s;
}

Letter LookupDecoder::class_word(std::uint64_t x, std::uint64_t z) const {
  const bool anti_x = parity((x & lx_z_) ^ (z & lx_x_));
  const bool anti_z = parity((x & lz_z_) ^ (z & lz_x_));
  return make_letter(anti_z, anti_x);
}

Letter LookupDecoder::residual_word(std::uint64_t x, std::uint64_t z) const {
  const std::uint64_t s = syndrome_word(x, z);
  return class_word(x ^ table_x_[s], z ^ table_z_[s]);
}

PauliOperator LookupDecoder::decode(const BitVector& syndrome) const {
  if (syndrome.size() != gen_x_.size()) {
    throw DimensionError("decode: syndrome has " + std::to_string(syndrome.size()) + " bits, expected " +
                         std::to_string(gen_x_.size()));
  }
  const std::uint64_t s = low_word(syndrome);
  BitVector x(code_->n()), z(code_->n());
  x.deposit(0, code_->n(), table_x_[s]);
  z.deposit(0, code_->n(), table_z_[s]);
  return PauliOperator(std::move(x), std::move(z));
}

void LookupDecoder::override_entry(std::uint64_t s, const PauliOperator& correction) {
  table_x_.at(s) = low_word(correction.x());
  table_z_.at(s) = low_word(correction.z());
}

DecoderPtr build_decoder(CodePtr code) { return std::make_shared<const LookupDecoder>(std::move(code)); }

DecoderPtr cached_decoder(const CodePtr& code) {
  static std::mutex mu;
  static std::map<std::string, DecoderPtr> cache;
  std::string key = code->name();
  for (const auto& g : code->generators()) key += " " + g.str();
  key += " " + code->logical_x().str() + " " + code->logical_z().str();
  std::lock_guard lock(mu);
  auto& slot = cache[key];
  if (!slot) slot = build_decoder(code);
  return slot;
}

Letter residual_logical_action(const StabilizerCode& code, const PauliOperator& error,
                               const LookupDecoder& decoder) {
  PauliOperator c = decoder.decode(syndrome(code, error));
  c.mul_assign(error);
  return logical_class(code, c);
}

}  // namespace nucc
