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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nucc/angle.hpp"
#include "nucc/clifford.hpp"

namespace nucc {

enum class GateKind : std::uint8_t {
  H, S, S_DAG, T, T_DAG, K, K_DAG, X, Y, Z, ZTHETA, CNOT, CZ, CCZ, CKZ
};

std::string_view gate_name(GateKind k);
GateKind gate_kind_from_name(std::string_view name);
/// Fixed arity, or 0 for CKZ (arity = k + 1, at least 1).
int gate_fixed_arity(GateKind k);
bool gate_has_theta(GateKind k);

/// A located gate. `theta` is meaningful only for ZTHETA and CKZ; CKZ
/// carries k = qubits.size() - 1 controls.
struct Gate {
  GateKind kind = GateKind::X;
  std::vector<std::size_t> qubits;
  PiFraction theta;

  bool operator==(const Gate&) const = default;
};

Gate make_gate(GateKind kind, std::vector<std::size_t> qubits, PiFraction theta = {});

/// The C^kZ(theta) content of a diagonal gate.
struct DiagonalForm {
  int k = 0;
  PiFraction theta;
  bool operator==(const DiagonalForm&) const = default;
};

std::optional<DiagonalForm> diagonal_form(const Gate& g);
bool is_diagonal(const Gate& g);
bool is_clifford(const Gate& g);
bool is_pauli(const Gate& g);
/// Clifford decomposition (empty for identity-like gates such as ZTHETA(0)).
/// Throws UnsupportedGateError for non-Clifford gates.
std::vector<CliffordGate> to_clifford(const Gate& g);
Gate inverse(const Gate& g);

/// Named gate for C^kZ(theta) when one exists (T, S, Z, CZ, CCZ, ...),
/// otherwise ZTHETA / CKZ.
Gate make_phase_gate(int k, PiFraction theta, std::vector<std::size_t> qubits);
/// Same gate with diagonal families canonicalized and qubits renumbered
/// 0..arity-1; used as a lookup key for transversal declarations.
Gate canonical_logical(const Gate& g);

/// "CNOT 0 15", "ZTHETA 4 theta=pi/8".
std::string gate_to_text(const Gate& g);
Gate gate_from_text(std::string_view line);
/// Compact name used in keys and catalog entries: "T", "CCZ", "ZTHETA(pi/8)".
std::string gate_token(const Gate& g);
/// Parses gate_token() output into a gate acting on qubits 0..arity-1. CKZ
/// tokens carry their arity as "CKZ(k,theta)".
Gate gate_from_token(std::string_view token);

void validate_gate(const Gate& g, std::size_t register_size);

}  // namespace nucc
