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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nucc/concatenation.hpp"
#include "nucc/gate.hpp"
#include "nucc/pauli.hpp"

namespace nucc {

/// Ordered list of located gates on a fixed register. Gate i is fault
/// location i.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t register_size, std::string label = {})
      : register_size_(register_size), label_(std::move(label)) {}

  std::size_t register_size() const { return register_size_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Validates arity and register bounds.
  void append(Gate g);
  /// Appends `other` with every qubit q mapped to map[q].
  void append_mapped(const Circuit& other, const std::vector<std::size_t>& map);
  void append(const Circuit& other);

  /// Qubits touched by at least one gate, ascending.
  std::vector<std::size_t> touched_qubits() const;

  bool operator==(const Circuit&) const = default;

 private:
  std::size_t register_size_ = 0;
  std::string label_;
  std::vector<Gate> gates_;
};

/// Reversed order, each gate inverted.
Circuit invert(const Circuit& c);

/// A Pauli fault injected right after gate `after_gate` (or before the first
/// gate when unset), as single-qubit letters on register qubits.
struct FaultInjection {
  std::optional<std::size_t> after_gate;
  std::vector<std::pair<std::size_t, Letter>> paulis;

  bool operator==(const FaultInjection&) const = default;
};

struct CircuitFile {
  Circuit circuit;
  std::vector<FaultInjection> faults;
};

/// Line format: "register N", optional "label <text>", one gate per line as
/// "KIND q0 q1 ... [theta=pi/4]", and for witness files
/// "FAULT <input|gate index> <letter>:<qubit> ...". '#' starts a comment.
CircuitFile parse_circuit(std::string_view text);
std::string dump_circuit(const Circuit& c, const std::vector<FaultInjection>& faults = {});

/// How one outer-level gate of a concatenated gadget is realized on the
/// physical blocks of the outer qubits it touches.
struct InnerStep {
  /// "bare", "pauli", "transversal" or "unencode".
  std::string realization;
  /// Inner code (null when bare).
  CodePtr code;
  /// The outer-level gate, on outer register qubits.
  Gate outer_gate;
  /// Block circuit on operands laid out consecutively (a * code.n qubits).
  Circuit block_circuit;
};

/// Record of the two-level construction of a gadget, used for compositional
/// verification.
struct Composition {
  /// Gadget on bare outer blocks (operand j at offset j * outer.n).
  Circuit outer_circuit;
  std::vector<InnerStep> steps;
};

/// A circuit claimed to implement `logical` on operand blocks that all share
/// `layout`; operand j occupies physical qubits [j*N, (j+1)*N), N =
/// layout.total_n().
struct GadgetCircuit {
  Circuit circuit;
  Gate logical;
  std::shared_ptr<const ConcatenationLayout> layout;
  std::optional<Composition> composition;
  /// Outer qubits coupled by a non-transversal gadget, per operand (empty
  /// for transversal gadgets).
  std::vector<std::size_t> coupled;

  std::size_t operands() const { return logical.qubits.size(); }
  std::size_t block_offset(std::size_t j) const { return j * layout->total_n(); }
  /// Stable identifier of (layout, logical gate, gate list).
  std::string fingerprint() const;
};

}  // namespace nucc

namespace nucc {

/// Physical circuit obtained by placing each inner step on the blocks of its
/// outer qubits (operand j of the gadget at offset j * layout.total_n()).
Circuit expand_composition(const ConcatenationLayout& layout, std::size_t operands, const Composition& comp);

}  // namespace nucc
