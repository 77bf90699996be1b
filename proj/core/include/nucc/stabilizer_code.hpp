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

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nucc/bitvector.hpp"
#include "nucc/clifford.hpp"
#include "nucc/gate.hpp"
#include "nucc/pauli.hpp"
#include "nucc/stabilizer_group.hpp"

namespace nucc {

/// Declared bitwise realization of a logical gate: `physical` applied to
/// qubit i of every operand block, for every i, with optional fixups on
/// block-local qubits before and after. Gates are expressed on operand
/// indices 0..m-1 (fixups on block qubit indices of a single block).
struct TransversalRule {
  Gate logical;
  Gate physical;
  std::vector<Gate> pre;
  std::vector<Gate> post;

  bool operator==(const TransversalRule&) const = default;
};

/// Local-Clifford derivation of one code from another.
struct Derivation {
  std::string base;
  std::vector<CliffordGate> gates;

  bool operator==(const Derivation&) const = default;
};

/// [[n,1,d]] stabilizer code with fixed logical representatives.
class StabilizerCode {
 public:
  StabilizerCode(std::string name, std::vector<PauliOperator> generators,
                 PauliOperator logical_x, PauliOperator logical_z);

  const std::string& name() const { return name_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return 1; }
  const std::vector<PauliOperator>& generators() const { return generators_; }
  const PauliOperator& logical_x() const { return logical_x_; }
  const PauliOperator& logical_z() const { return logical_z_; }
  /// Representative of a logical class; Y is i * X * Z (Hermitian). I is the
  /// identity.
  PauliOperator logical(Letter cls) const;
  bool is_css() const { return css_; }
  const StabilizerGroup& group() const { return group_; }

  const std::string& label() const { return label_; }
  const std::optional<Derivation>& derivation() const { return derivation_; }
  const std::vector<TransversalRule>& transversal() const { return transversal_; }
  const std::vector<Gate>& universal() const { return universal_; }

  void set_name(std::string name) { name_ = std::move(name); }
  void set_label(std::string label) { label_ = std::move(label); }
  void set_derivation(std::optional<Derivation> d) { derivation_ = std::move(d); }
  void set_transversal(std::vector<TransversalRule> rules) { transversal_ = std::move(rules); }
  void set_universal(std::vector<Gate> gates) { universal_ = std::move(gates); }

  /// Declared rule whose canonical logical gate matches `logical`.
  const TransversalRule* find_transversal(const Gate& logical) const;

  bool operator==(const StabilizerCode& o) const;

 private:
  std::string name_;
  std::size_t n_ = 0;
  std::vector<PauliOperator> generators_;
  PauliOperator logical_x_;
  PauliOperator logical_z_;
  bool css_ = false;
  StabilizerGroup group_;
  std::string label_;
  std::optional<Derivation> derivation_;
  std::vector<TransversalRule> transversal_;
  std::vector<Gate> universal_;
};

using CodePtr = std::shared_ptr<const StabilizerCode>;

/// Largest n for which exact coset enumeration is attempted.
inline constexpr std::size_t kMaxEnumerableQubits = 20;

/// Conjugates generators and logical representatives by single-qubit
/// Cliffords. Throws UnsupportedGateError for multi-qubit gates.
StabilizerCode transform_code(const StabilizerCode& code, std::span<const CliffordGate> gates);

/// Bit i is set iff `error` anticommutes with generator i.
BitVector syndrome(const StabilizerCode& code, const PauliOperator& error);

/// Calls `fn` on every stabilizer group element (2^(n-k) of them, exact
/// phase), identity first, in Gray-code order.
void for_each_stabilizer(const StabilizerCode& code,
                         const std::function<void(const PauliOperator&)>& fn);

/// Minimum-weight member of the coset (class representative x stabilizer
/// group), ties broken by canonical_compare. Exact phase is kept.
PauliOperator min_weight_logical(const StabilizerCode& code, Letter cls);
/// Every member of the coset attaining the minimum weight, in canonical order.
std::vector<PauliOperator> all_min_weight_logicals(const StabilizerCode& code, Letter cls);
/// Minimum over X, Y, Z of min_weight_logical weight.
std::size_t distance(const StabilizerCode& code);

/// Classifies an operator in the normalizer by commutation with the logical
/// representatives. Throws InternalError if `op` has a nonzero syndrome.
Letter logical_class(const StabilizerCode& code, const PauliOperator& op);

}  // namespace nucc

namespace nucc {

/// Minimum-weight logical-Z representative used by the staircase gadget:
/// among all minimum-weight members of the Z class, the one needing the
/// fewest non-Pauli local Cliffords to become all-Z (qubits carrying X or Y),
/// then first in canonical order.
PauliOperator diagonalizable_logical_z(const StabilizerCode& code);

}  // namespace nucc
