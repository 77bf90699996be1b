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

#include "nucc/statevector.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "nucc/error.hpp"

namespace nucc {
namespace {

constexpr Complex kI{0.0, 1.0};

Complex phase_of(PiFraction t) { return std::polar(1.0, t.radians()); }

Complex pauli_phase(std::uint8_t p) {
  static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[p & 3u];
}

}  // namespace

Matrix2 single_qubit_matrix(const Gate& g) {
  const double r = std::numbers::sqrt2 / 2.0;
  switch (g.kind) {
    case GateKind::H: return {r, r, r, -r};
    case GateKind::S: return {1, 0, 0, kI};
    case GateKind::S_DAG: return {1, 0, 0, -kI};
    case GateKind::T: return {1, 0, 0, phase_of(PiFraction(1, 4))};
    case GateKind::T_DAG: return {1, 0, 0, phase_of(PiFraction(-1, 4))};
    case GateKind::K: return {r, r, kI * r, -kI * r};
    case GateKind::K_DAG: return {r, -kI * r, r, kI * r};
    case GateKind::X: return {0, 1, 1, 0};
    case GateKind::Y: return {0, -kI, kI, 0};
    case GateKind::Z: return {1, 0, 0, -1};
    case GateKind::ZTHETA: return {1, 0, 0, phase_of(g.theta)};
    case GateKind::CKZ:
      if (g.qubits.size() == 1) return {1, 0, 0, phase_of(g.theta)};
      break;
    default: break;
  }
  throw UnsupportedGateError("no 2x2 matrix for " + gate_token(g));
}

std::vector<Complex> gate_unitary(const Gate& g) {
  const std::size_t m = g.qubits.size();
  const std::size_t dim = std::size_t{1} << m;
  std::vector<Complex> u(dim * dim, 0.0);
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector s = StateVector::basis(m, col);
    Gate local = g;
    for (std::size_t i = 0; i < m; ++i) local.qubits[i] = i;
    s.apply(local);
    for (std::size_t row = 0; row < dim; ++row) u[row * dim + col] = s.amplitudes()[row];
  }
  return u;
}

StateVector::StateVector(std::size_t n) : n_(n) {
  if (n > kMaxDenseQubits) {
    throw SizeLimitError("dense simulation limited to " + std::to_string(kMaxDenseQubits) + " qubits, got " +
                         std::to_string(n));
  }
  amp_.assign(std::size_t{1} << n, 0.0);
  amp_[0] = 1.0;
}

StateVector StateVector::basis(std::size_t n, std::uint64_t index) {
  StateVector s(n);
  s.amp_[0] = 0.0;
  s.amp_.at(index) = 1.0;
  return s;
}

void StateVector::apply(const Gate& g) {
  validate_gate(g, n_);
  const std::size_t dim = amp_.size();
  if (auto d = diagonal_form(g)) {
    std::size_t mask = 0;
    for (auto q : g.qubits) mask |= std::size_t{1} << q;
    const Complex ph = phase_of(d->theta);
    for (std::size_t i = 0; i < dim; ++i) {
      if ((i & mask) == mask) amp_[i] *= ph;
    }
    return;
  }
  if (g.kind == GateKind::CNOT) {
    const std::size_t c = std::size_t{1} << g.qubits[0];
    const std::size_t t = std::size_t{1} << g.qubits[1];
    for (std::size_t i = 0; i < dim; ++i) {
      if ((i & c) && !(i & t)) std::swap(amp_[i], amp_[i | t]);
    }
    return;
  }
  const Matrix2 m = single_qubit_matrix(g);
  const std::size_t b = std::size_t{1} << g.qubits[0];
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & b) continue;
    const Complex a0 = amp_[i], a1 = amp_[i | b];
    amp_[i] = m[0] * a0 + m[1] * a1;
    amp_[i | b] = m[2] * a0 + m[3] * a1;
  }
}

void StateVector::apply(const Circuit& c) {
  if (c.register_size() != n_) throw DimensionError("circuit register differs from state size");
  for (const auto& g : c.gates()) apply(g);
}

void StateVector::apply_pauli(const PauliOperator& p) {
  if (p.num_qubits() != n_) throw DimensionError("Pauli size differs from state size");
  const std::uint64_t xm = p.x().extract(0, n_);
  const std::uint64_t zm = p.z().extract(0, n_);
  // P = i^phase * i^{popc(x&z)} X^x Z^z; applying Z first then X.
  const Complex global = pauli_phase(static_cast<std::uint8_t>(p.phase() + std::popcount(xm & zm)));
  std::vector<Complex> out(amp_.size());
  for (std::size_t i = 0; i < amp_.size(); ++i) {
    const double sign = (std::popcount(i & zm) & 1) ? -1.0 : 1.0;
    out[i ^ xm] = global * sign * amp_[i];
  }
  amp_ = std::move(out);
}

void StateVector::project(const PauliOperator& p) {
  StateVector t = *this;
  t.apply_pauli(p);
  for (std::size_t i = 0; i < amp_.size(); ++i) amp_[i] = 0.5 * (amp_[i] + t.amp_[i]);
}

double StateVector::expectation(const PauliOperator& p) const {
  StateVector t = *this;
  t.apply_pauli(p);
  return inner(t).real();
}

double StateVector::norm() const {
  double s = 0;
  for (const auto& a : amp_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  const double nr = norm();
  if (nr == 0) throw InternalError("cannot normalize the zero vector");
  for (auto& a : amp_) a /= nr;
}

Complex StateVector::inner(const StateVector& o) const {
  if (o.n_ != n_) throw DimensionError("inner product of states of different size");
  Complex s = 0;
  for (std::size_t i = 0; i < amp_.size(); ++i) s += std::conj(amp_[i]) * o.amp_[i];
  return s;
}

StateVector StateVector::kron(const StateVector& hi) const {
  StateVector out(n_ + hi.n_);
  const std::size_t lo_dim = amp_.size();
  for (std::size_t j = 0; j < hi.amp_.size(); ++j) {
    for (std::size_t i = 0; i < lo_dim; ++i) out.amp_[i + j * lo_dim] = amp_[i] * hi.amp_[j];
  }
  return out;
}

std::array<StateVector, 2> logical_basis(const StabilizerCode& code) {
  const std::size_t n = code.n();
  for (std::uint64_t start = 0; start < (std::uint64_t{1} << n); ++start) {
    StateVector s = StateVector::basis(n, start);
    for (const auto& g : code.generators()) s.project(g);
    s.project(code.logical_z());
    if (s.norm() < 1e-6) continue;
    s.normalize();
    StateVector one = s;
    one.apply_pauli(code.logical_x());
    return {std::move(s), std::move(one)};
  }
  throw InternalError(code.name() + ": empty codespace");
}

StateVector encode(const StabilizerCode& code, Complex alpha, Complex beta) {
  auto b = logical_basis(code);
  StateVector s(code.n());
  for (std::size_t i = 0; i < s.amplitudes().size(); ++i) {
    s.amplitudes()[i] = alpha * b[0].amplitudes()[i] + beta * b[1].amplitudes()[i];
  }
  return s;
}

StateVector encode_blocks(std::span<const StabilizerCode* const> codes, std::span<const Complex> logical) {
  const std::size_t m = codes.size();
  if (logical.size() != (std::size_t{1} << m)) throw DimensionError("logical amplitude count differs from 2^m");
  std::size_t total = 0;
  for (auto* c : codes) total += c->n();
  if (total > kMaxDenseQubits) throw SizeLimitError("encoded register exceeds the dense limit");
  std::vector<std::array<StateVector, 2>> bases;
  for (auto* c : codes) bases.push_back(logical_basis(*c));
  StateVector out(total);
  out.amplitudes()[0] = 0;
  for (std::size_t b = 0; b < logical.size(); ++b) {
    if (logical[b] == Complex(0)) continue;
    StateVector term = bases[0][b & 1];
    for (std::size_t j = 1; j < m; ++j) term = term.kron(bases[j][(b >> j) & 1]);
    for (std::size_t i = 0; i < term.amplitudes().size(); ++i) out.amplitudes()[i] += logical[b] * term.amplitudes()[i];
  }
  return out;
}

}  // namespace nucc
