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
#include <string_view>
#include <vector>

#include "nucc/pauli.hpp"

namespace nucc {

enum class CliffordKind : std::uint8_t { H, S, S_DAG, K, K_DAG, X, Y, Z, CNOT, CZ };

std::string_view clifford_name(CliffordKind k);
int clifford_arity(CliffordKind k);
CliffordKind clifford_inverse(CliffordKind k);

/// A Clifford gate on an ordered list of qubits (control first for CNOT).
/// K is S*H as a unitary.
struct CliffordGate {
  CliffordKind kind;
  std::vector<std::size_t> qubits;

  bool operator==(const CliffordGate&) const = default;
};

/// g p g^dagger with exact phase.
PauliOperator conjugate_by_gate(const PauliOperator& p, const CliffordGate& g);
/// In-place variant for propagation loops; `qubits` must have the gate's arity.
void conjugate_in_place(PauliOperator& p, CliffordKind kind, std::span<const std::size_t> qubits);
/// Sequential conjugation: returns U p U^dagger where U applies gates in order.
PauliOperator conjugate_by_circuit(const PauliOperator& p, std::span<const CliffordGate> gates);

}  // namespace nucc
