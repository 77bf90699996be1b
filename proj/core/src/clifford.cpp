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

#include "nucc/clifford.hpp"

#include <array>
#include <string>

#include "nucc/error.hpp"

namespace nucc {
namespace {

// Compact local Pauli on up to two qubits: bit q of x/z is qubit q.
struct Local {
  std::uint8_t x = 0;
  std::uint8_t z = 0;
  std::uint8_t phase = 0;
};

Local local_mul(const Local& a, const Local& b) {
  return Local{static_cast<std::uint8_t>(a.x ^ b.x), static_cast<std::uint8_t>(a.z ^ b.z),
               static_cast<std::uint8_t>((a.phase + b.phase + product_phase_words(a.x, a.z, b.x, b.z)) & 3u)};
}

using Table = std::vector<Local>;  // indexed by x | z << arity

// Expands generator images (X_q, Z_q per qubit) into the full letter table.
Table expand(int arity, const std::vector<Local>& x_img, const std::vector<Local>& z_img) {
  const int size = 1 << (2 * arity);
  Table t(size);
  for (int idx = 0; idx < size; ++idx) {
    const std::uint8_t x = idx & ((1 << arity) - 1);
    const std::uint8_t z = idx >> arity;
    // L = i^{popcount(x&z)} * prod_q X_q^{x_q} Z_q^{z_q}
    Local acc{0, 0, static_cast<std::uint8_t>(std::popcount(static_cast<unsigned>(x & z)) & 3)};
    for (int q = 0; q < arity; ++q) {
      if ((x >> q) & 1) acc = local_mul(acc, x_img[q]);
      if ((z >> q) & 1) acc = local_mul(acc, z_img[q]);
    }
    t[idx] = acc;
  }
  return t;
}

Local L1(char c, int sign = 1) {
  Letter l = letter_from_char(c);
  return Local{static_cast<std::uint8_t>(letter_x(l)), static_cast<std::uint8_t>(letter_z(l)),
               static_cast<std::uint8_t>(sign < 0 ? 2 : 0)};
}

const std::array<Table, 10>& tables() {
  static const std::array<Table, 10> t = [] {
    std::array<Table, 10> out;
    auto one = [](Local xi, Local zi) { return expand(1, {xi}, {zi}); };
    out[static_cast<int>(CliffordKind::H)] = one(L1('Z'), L1('X'));
    out[static_cast<int>(CliffordKind::S)] = one(L1('Y'), L1('Z'));
    out[static_cast<int>(CliffordKind::S_DAG)] = one(L1('Y', -1), L1('Z'));
    out[static_cast<int>(CliffordKind::K)] = one(L1('Z'), L1('Y'));
    out[static_cast<int>(CliffordKind::K_DAG)] = one(L1('Y'), L1('X'));
    out[static_cast<int>(CliffordKind::X)] = one(L1('X'), L1('Z', -1));
    out[static_cast<int>(CliffordKind::Y)] = one(L1('X', -1), L1('Z', -1));
    out[static_cast<int>(CliffordKind::Z)] = one(L1('X', -1), L1('Z'));
    // Two-qubit: bit 0 = first listed qubit.
    const Local xb{2, 0, 0}, za{0, 1, 0}, zb{0, 2, 0};
    out[static_cast<int>(CliffordKind::CNOT)] =
        expand(2, {Local{3, 0, 0}, xb}, {za, Local{0, 3, 0}});
    out[static_cast<int>(CliffordKind::CZ)] =
        expand(2, {Local{1, 2, 0}, Local{2, 1, 0}}, {za, zb});
    return out;
  }();
  return t;
}

}  // namespace

std::string_view clifford_name(CliffordKind k) {
  switch (k) {
    case CliffordKind::H: return "H";
    case CliffordKind::S: return "S";
    case CliffordKind::S_DAG: return "S_DAG";
    case CliffordKind::K: return "K";
    case CliffordKind::K_DAG: return "K_DAG";
    case CliffordKind::X: return "X";
    case CliffordKind::Y: return "Y";
    case CliffordKind::Z: return "Z";
    case CliffordKind::CNOT: return "CNOT";
    case CliffordKind::CZ: return "CZ";
  }
  return "?";
}

int clifford_arity(CliffordKind k) {
  return (k == CliffordKind::CNOT || k == CliffordKind::CZ) ? 2 : 1;
}

CliffordKind clifford_inverse(CliffordKind k) {
  switch (k) {
    case CliffordKind::S: return CliffordKind::S_DAG;
    case CliffordKind::S_DAG: return CliffordKind::S;
    case CliffordKind::K: return CliffordKind::K_DAG;
    case CliffordKind::K_DAG: return CliffordKind::K;
    default: return k;
  }
}

void conjugate_in_place(PauliOperator& p, CliffordKind kind, std::span<const std::size_t> qubits) {
  const int arity = clifford_arity(kind);
  if (static_cast<int>(qubits.size()) != arity) {
    throw UnsupportedGateError(std::string(clifford_name(kind)) + " expects " +
                               std::to_string(arity) + " qubit(s)");
  }
  int idx = 0;
  for (int q = 0; q < arity; ++q) {
    if (qubits[q] >= p.num_qubits()) throw DimensionError("gate qubit out of range");
    idx |= static_cast<int>(p.x().get(qubits[q])) << q;
    idx |= static_cast<int>(p.z().get(qubits[q])) << (q + arity);
  }
  const Local& img = tables()[static_cast<int>(kind)][idx];
  for (int q = 0; q < arity; ++q) {
    p.x().set(qubits[q], (img.x >> q) & 1);
    p.z().set(qubits[q], (img.z >> q) & 1);
  }
  p.set_phase(static_cast<std::uint8_t>(p.phase() + img.phase));
}

PauliOperator conjugate_by_gate(const PauliOperator& p, const CliffordGate& g) {
  if (g.qubits.size() == 2 && g.qubits[0] == g.qubits[1]) {
    throw UnsupportedGateError("two-qubit gate on a repeated qubit");
  }
  PauliOperator out = p;
  conjugate_in_place(out, g.kind, g.qubits);
  return out;
}

PauliOperator conjugate_by_circuit(const PauliOperator& p, std::span<const CliffordGate> gates) {
  PauliOperator out = p;
  for (const auto& g : gates) conjugate_in_place(out, g.kind, g.qubits);
  return out;
}

}  // namespace nucc
