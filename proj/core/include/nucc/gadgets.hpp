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

#include <memory>
#include <shared_mutex>
#include <map>
#include <string>

#include "nucc/circuit.hpp"
#include "nucc/verify.hpp"

namespace nucc {

struct StaircaseOptions {
  /// When false the inverse staircase and inverse local Cliffords are
  /// omitted (a deliberately broken gadget).
  bool uncompute = true;
};

/// Structure of a staircase circuit on k+1 blocks of one code.
struct StaircasePlan {
  /// Minimum-weight logical-Z representative used on every block.
  PauliOperator representative;
  /// Ascending support; the last entry is q_t.
  std::vector<std::size_t> support;
  /// Local Cliffords (and sign fix) for one block, on block qubits.
  std::vector<Gate> local_cliffords;
};

StaircasePlan plan_staircase(const StabilizerCode& code);

/// LC, CNOT staircase, C^kZ(theta) across the k+1 end qubits, inverse
/// staircase, inverse LC; block j at offset j * code.n.
Circuit staircase_circuit(const StabilizerCode& code, int k, PiFraction theta, const StaircaseOptions& opt = {});

/// Staircase gadget on k+1 bare blocks of `code`.
GadgetCircuit staircase_gadget(const CodePtr& code, int k, PiFraction theta, const StaircaseOptions& opt = {});

/// Bitwise gadget from the code's declared rule for `logical` (on qubits
/// 0..m-1). Throws SynthesisError when none is declared.
GadgetCircuit transversal_gadget(const CodePtr& code, const Gate& logical);

/// Gadget for `logical` (on operands 0..m-1) on blocks of `layout`: outer
/// transversal rule when declared, otherwise the staircase for C^kZ gates;
/// each outer gate is then realized on inner blocks by inner transversal
/// rules, logical Pauli representatives, or (transversal context,
/// single-qubit gates, CSS inner code) decode-act-encode. Throws
/// SynthesisError with a diagnosis when some step has no realization.
GadgetCircuit logical_gadget_for(const ConcatenationLayout& layout, const Gate& logical,
                                 const StaircaseOptions& opt = {});

/// Gadgets for the outer code's universal set on a layout, in catalog order.
std::vector<Gate> universal_gates(const ConcatenationLayout& layout);

struct VerifiedGadget {
  GadgetCircuit gadget;
  Certificate certificate;
};
using VerifiedGadgetPtr = std::shared_ptr<const VerifiedGadget>;

/// Thread-safe map of admitted gadgets keyed by (layout fingerprint, gate).
/// A gadget is admitted only after verify_gadget passes.
class GadgetCache {
 public:
  VerifiedGadgetPtr get(const ConcatenationLayout& layout, const Gate& logical);
  std::size_t size() const;

  static GadgetCache& global();

 private:
  mutable std::shared_mutex mu_;
  std::map<std::string, VerifiedGadgetPtr> entries_;
};

}  // namespace nucc
