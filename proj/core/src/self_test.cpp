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

#include "nucc/self_test.hpp"

#include <cmath>

#include "nucc/clifford.hpp"
#include "nucc/gate.hpp"
#include "nucc/statevector.hpp"

namespace nucc {
namespace {

using Dense = std::vector<Complex>;

std::size_t dim_of(const Dense& m) { return static_cast<std::size_t>(std::lround(std::sqrt(double(m.size())))); }

Dense mul(const Dense& a, const Dense& b) {
  const std::size_t d = dim_of(a);
  Dense c(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      if (a[i * d + k] == Complex(0)) continue;
      for (std::size_t j = 0; j < d; ++j) c[i * d + j] += a[i * d + k] * b[k * d + j];
    }
  }
  return c;
}

Dense dagger(const Dense& a) {
  const std::size_t d = dim_of(a);
  Dense c(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) c[j * d + i] = std::conj(a[i * d + j]);
  }
  return c;
}

double distance(const Dense& a, const Dense& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

Dense unitary(GateKind k, std::vector<std::size_t> q, PiFraction theta = {}) {
  return gate_unitary(make_gate(k, std::move(q), theta));
}

// Dense matrix of a Pauli operator; qubit j is bit j of the basis index.
Dense pauli_matrix(const PauliOperator& p) {
  const std::size_t n = p.num_qubits();
  const std::size_t d = std::size_t{1} << n;
  static const Complex I(0, 1);
  Dense m(d * d, 0.0);
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t row = col;
    Complex amp = std::pow(I, static_cast<int>(p.phase()));
    for (std::size_t q = 0; q < n; ++q) {
      const bool bit = (col >> q) & 1u;
      switch (p.letter(q)) {
        case Letter::I: break;
        case Letter::X: row ^= std::size_t{1} << q; break;
        case Letter::Z: amp *= bit ? -1.0 : 1.0; break;
        case Letter::Y:
          row ^= std::size_t{1} << q;
          amp *= bit ? -I : I;
          break;
      }
    }
    m[row * d + col] = amp;
  }
  return m;
}

Gate as_gate(CliffordKind k, std::vector<std::size_t> q) {
  switch (k) {
    case CliffordKind::H: return make_gate(GateKind::H, q);
    case CliffordKind::S: return make_gate(GateKind::S, q);
    case CliffordKind::S_DAG: return make_gate(GateKind::S_DAG, q);
    case CliffordKind::K: return make_gate(GateKind::K, q);
    case CliffordKind::K_DAG: return make_gate(GateKind::K_DAG, q);
    case CliffordKind::X: return make_gate(GateKind::X, q);
    case CliffordKind::Y: return make_gate(GateKind::Y, q);
    case CliffordKind::Z: return make_gate(GateKind::Z, q);
    case CliffordKind::CNOT: return make_gate(GateKind::CNOT, q);
    case CliffordKind::CZ: return make_gate(GateKind::CZ, q);
  }
  return make_gate(GateKind::X, q);
}

SelfCheck identity(std::string name, const Dense& a, const Dense& b) {
  const double err = distance(a, b);
  return {std::move(name), err < 1e-12, "max entry error " + std::to_string(err)};
}

}  // namespace

std::vector<SelfCheck> run_self_test() {
  std::vector<SelfCheck> out;
  const PiFraction quarter(1, 4), half(1, 2), pi(1, 1);
  out.push_back(identity("K = S H", unitary(GateKind::K, {0}),
                         mul(unitary(GateKind::S, {0}), unitary(GateKind::H, {0}))));
  out.push_back(identity("K_DAG = K^dagger", unitary(GateKind::K_DAG, {0}), dagger(unitary(GateKind::K, {0}))));
  {
    Dense ixz = mul(unitary(GateKind::X, {0}), unitary(GateKind::Z, {0}));
    for (auto& v : ixz) v *= Complex(0, 1);
    out.push_back(identity("Y = i X Z", unitary(GateKind::Y, {0}), ixz));
  }
  out.push_back(identity("T = Z(pi/4)", unitary(GateKind::T, {0}), unitary(GateKind::ZTHETA, {0}, quarter)));
  out.push_back(identity("S = Z(pi/2)", unitary(GateKind::S, {0}), unitary(GateKind::ZTHETA, {0}, half)));
  out.push_back(identity("S = T T", unitary(GateKind::S, {0}), mul(unitary(GateKind::T, {0}), unitary(GateKind::T, {0}))));
  out.push_back(identity("Z = Z(pi)", unitary(GateKind::Z, {0}), unitary(GateKind::ZTHETA, {0}, pi)));
  out.push_back(identity("CZ = C^1 Z(pi)", unitary(GateKind::CZ, {0, 1}), unitary(GateKind::CKZ, {0, 1}, pi)));
  out.push_back(identity("CCZ = C^2 Z(pi)", unitary(GateKind::CCZ, {0, 1, 2}), unitary(GateKind::CKZ, {0, 1, 2}, pi)));
  out.push_back(identity("H Z H = X", mul(mul(unitary(GateKind::H, {0}), unitary(GateKind::Z, {0})), unitary(GateKind::H, {0})),
                         unitary(GateKind::X, {0})));

  for (CliffordKind k : {CliffordKind::H, CliffordKind::S, CliffordKind::S_DAG, CliffordKind::K, CliffordKind::K_DAG,
                         CliffordKind::X, CliffordKind::Y, CliffordKind::Z, CliffordKind::CNOT, CliffordKind::CZ}) {
    const std::size_t a = static_cast<std::size_t>(clifford_arity(k));
    std::vector<std::size_t> q(a);
    for (std::size_t i = 0; i < a; ++i) q[i] = i;
    const CliffordGate g{k, q};
    const Dense U = gate_unitary(as_gate(k, q));
    double worst = 0;
    for (std::size_t v = 1; v < (std::size_t{1} << (2 * a)); ++v) {
      PauliOperator p(a);
      for (std::size_t i = 0; i < a; ++i) {
        p.set_letter(i, static_cast<Letter>((v >> (2 * i)) & 3u));
      }
      const Dense expected = mul(mul(U, pauli_matrix(p)), dagger(U));
      worst = std::max(worst, distance(expected, pauli_matrix(conjugate_by_gate(p, g))));
    }
    out.push_back({"conjugation table " + std::string(clifford_name(k)), worst < 1e-12,
                   "max entry error " + std::to_string(worst)});
  }
  return out;
}

}  // namespace nucc
