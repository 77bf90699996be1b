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

#include "nucc/pauli.hpp"

#include "nucc/error.hpp"

namespace nucc {

char letter_char(Letter l) {
  switch (l) {
    case Letter::I: return 'I';
    case Letter::X: return 'X';
    case Letter::Z: return 'Z';
    case Letter::Y: return 'Y';
  }
  return '?';
}

Letter letter_from_char(char c) {
  switch (c) {
    case 'I': case '_': return Letter::I;
    case 'X': return Letter::X;
    case 'Z': return Letter::Z;
    case 'Y': return Letter::Y;
    default: throw ParseError(std::string("not a Pauli letter: '") + c + "'");
  }
}

PauliOperator::PauliOperator(BitVector x, BitVector z, std::uint8_t phase)
    : x_(std::move(x)), z_(std::move(z)), phase_(phase & 3u) {
  if (x_.size() != z_.size()) throw DimensionError("x and z components differ in length");
}

PauliOperator PauliOperator::parse(std::string_view text) {
  std::uint8_t phase = 0;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase = 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase = (phase + 1) & 3u;
    ++pos;
  }
  if (pos == text.size()) throw ParseError("Pauli string '" + std::string(text) + "' has no letters");
  PauliOperator p(text.size() - pos);
  for (std::size_t q = 0; pos < text.size(); ++pos, ++q) p.set_letter(q, letter_from_char(text[pos]));
  p.phase_ = phase;
  return p;
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t q, Letter l) {
  PauliOperator p(n);
  p.set_letter(q, l);
  return p;
}

PauliOperator PauliOperator::on(std::size_t n, std::span<const std::size_t> qubits, Letter l) {
  PauliOperator p(n);
  for (auto q : qubits) p.set_letter(q, l);
  return p;
}

void PauliOperator::set_letter(std::size_t q, Letter l) {
  x_.set(q, letter_x(l));
  z_.set(q, letter_z(l));
}

PauliOperator& PauliOperator::mul_assign(const PauliOperator& rhs) {
  if (rhs.num_qubits() != num_qubits()) {
    throw DimensionError("Pauli multiply: " + std::to_string(num_qubits()) + " vs " +
                         std::to_string(rhs.num_qubits()) + " qubits");
  }
  auto ax = x_.words();
  auto az = z_.words();
  auto bx = rhs.x_.words();
  auto bz = rhs.z_.words();
  int e = phase_ + rhs.phase_;
  for (std::size_t w = 0; w < ax.size(); ++w) {
    e += product_phase_words(ax[w], az[w], bx[w], bz[w]);
    ax[w] ^= bx[w];
    az[w] ^= bz[w];
  }
  phase_ = static_cast<std::uint8_t>(e & 3);
  return *this;
}

PauliOperator PauliOperator::embed(std::size_t n, std::size_t offset) const {
  if (offset + num_qubits() > n) throw DimensionError("embed out of range");
  PauliOperator out(n);
  for (std::size_t q = 0; q < num_qubits(); ++q) out.set_letter(offset + q, letter(q));
  out.phase_ = phase_;
  return out;
}

PauliOperator PauliOperator::slice(std::size_t offset, std::size_t len) const {
  if (offset + len > num_qubits()) throw DimensionError("slice out of range");
  PauliOperator out(len);
  for (std::size_t q = 0; q < len; ++q) out.set_letter(q, letter(offset + q));
  return out;
}

std::string PauliOperator::str() const {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string s = kPrefix[phase_];
  s.reserve(s.size() + num_qubits());
  for (std::size_t q = 0; q < num_qubits(); ++q) s.push_back(letter_char(letter(q)));
  return s;
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
  PauliOperator r = p;
  r.mul_assign(q);
  return r;
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
  if (p.num_qubits() != q.num_qubits()) throw DimensionError("commutes: qubit count mismatch");
  auto px = p.x().words();
  auto pz = p.z().words();
  auto qx = q.x().words();
  auto qz = q.z().words();
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < px.size(); ++w) acc ^= (px[w] & qz[w]) ^ (pz[w] & qx[w]);
  return (std::popcount(acc) & 1) == 0;
}

std::size_t weight(const PauliOperator& p) { return (p.x() | p.z()).popcount(); }

int canonical_compare(const PauliOperator& a, const PauliOperator& b) {
  const auto wa = weight(a);
  const auto wb = weight(b);
  if (wa != wb) return wa < wb ? -1 : 1;
  if (int c = BitVector::support_compare(a.x(), b.x()); c != 0) return c;
  return BitVector::support_compare(a.z(), b.z());
}

}  // namespace nucc
