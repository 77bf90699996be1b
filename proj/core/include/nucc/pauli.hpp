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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nucc/bitvector.hpp"

namespace nucc {

/// Single-qubit Pauli letter. The encoding is (x bit) | (z bit) << 1, so
/// Y carries both bits and is defined as Y = iXZ.
enum class Letter : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char letter_char(Letter l);
Letter letter_from_char(char c);
inline bool letter_x(Letter l) { return static_cast<std::uint8_t>(l) & 1u; }
inline bool letter_z(Letter l) { return static_cast<std::uint8_t>(l) & 2u; }
inline Letter make_letter(bool x, bool z) {
  return static_cast<Letter>(static_cast<std::uint8_t>(x) | (static_cast<std::uint8_t>(z) << 1));
}

/// n-qubit Pauli operator i^phase * (tensor of letters), in symplectic
/// form. Values are immutable in spirit; the mutating helpers exist for hot
/// loops that own their operand.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t n) : x_(n), z_(n) {}
  PauliOperator(BitVector x, BitVector z, std::uint8_t phase = 0);

  /// Parses "+XIZZY", "-XX", "+iZ", "-iY" (a missing sign means "+").
  static PauliOperator parse(std::string_view text);
  /// Single-letter operator on qubit q of an n-qubit register.
  static PauliOperator single(std::size_t n, std::size_t q, Letter l);
  /// Same letter on every listed qubit.
  static PauliOperator on(std::size_t n, std::span<const std::size_t> qubits, Letter l);

  std::size_t num_qubits() const { return x_.size(); }
  const BitVector& x() const { return x_; }
  const BitVector& z() const { return z_; }
  BitVector& x() { return x_; }
  BitVector& z() { return z_; }
  /// Exponent of i in {0,1,2,3}.
  std::uint8_t phase() const { return phase_; }
  void set_phase(std::uint8_t p) { phase_ = p & 3u; }

  Letter letter(std::size_t q) const { return make_letter(x_.get(q), z_.get(q)); }
  void set_letter(std::size_t q, Letter l);

  bool is_identity() const { return !x_.any() && !z_.any(); }
  /// Letters-only equality (ignores phase).
  bool same_letters(const PauliOperator& o) const { return x_ == o.x_ && z_ == o.z_; }
  bool operator==(const PauliOperator& o) const = default;

  /// *this = *this * rhs with exact phase.
  PauliOperator& mul_assign(const PauliOperator& rhs);

  /// Copy of this operator placed at `offset` inside an n-qubit register.
  PauliOperator embed(std::size_t n, std::size_t offset) const;
  /// Letters on qubits [offset, offset + len) with phase 0.
  PauliOperator slice(std::size_t offset, std::size_t len) const;

  std::string str() const;

 private:
  BitVector x_;
  BitVector z_;
  std::uint8_t phase_ = 0;
};

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);
bool commutes(const PauliOperator& p, const PauliOperator& q);
std::size_t weight(const PauliOperator& p);

/// Order used for deterministic tie-breaks: (weight, X-bits, Z-bits) with
/// bit-vectors in support-lexicographic order.
int canonical_compare(const PauliOperator& a, const PauliOperator& b);

/// Exponent of i produced by multiplying two single-qubit-or-wider Paulis
/// given as packed (x, z) masks with zero phase. Shared by the compact paths.
inline std::uint8_t product_phase_words(std::uint64_t x1, std::uint64_t z1, std::uint64_t x2,
                                        std::uint64_t z2) {
  const int e = std::popcount(x1 & z1) + std::popcount(x2 & z2) + 2 * std::popcount(z1 & x2) -
                std::popcount((x1 ^ x2) & (z1 ^ z2));
  return static_cast<std::uint8_t>(((e % 4) + 4) % 4);
}

}  // namespace nucc
