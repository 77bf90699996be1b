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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nucc/catalog.hpp"
#include "nucc/circuit.hpp"
#include "nucc/statevector.hpp"

namespace nucc {

/// Outcome of an oracle check. Exact methods report fidelity 1 on success.
struct Certificate {
  bool pass = false;
  /// "dense", "heisenberg", "css-coset" or "compositional".
  std::string method;
  std::string subject;
  double fidelity = 0.0;
  /// Global phase of circuit relative to the claimed unitary, in radians.
  double phase = 0.0;
  /// Exact global phase where the method tracks it ("pi/4").
  std::string exact_phase;
  std::string detail;
  std::vector<Certificate> components;
};

using CodeList = std::vector<const StabilizerCode*>;

/// Dense check on operand blocks laid out consecutively (total <= 22
/// qubits). `claimed` is the 2^m x 2^m logical unitary, row-major, operand j
/// = bit j. Inputs: every logical basis state and the all-|+> state.
Certificate verify_logical_action(const CodeList& codes, const Circuit& c, const std::vector<Complex>& claimed);

/// Conjugates every stabilizer generator and logical representative through
/// a Clifford circuit and checks the images against the claimed logical
/// Clifford (a gate on qubits 0..m-1). Any register size.
Certificate verify_clifford_heisenberg(const CodeList& codes, const Circuit& c, const Gate& claimed);

/// Coset-phase check for circuits of CNOT, X, Y and diagonal gates on CSS
/// blocks: every codeword component is tracked as a classical basis state
/// with an exact phase. Refuses (pass=false) when the number of coset
/// elements exceeds `budget`.
Certificate verify_phase_circuit_css(const CodeList& codes, const Circuit& c, const Gate& claimed,
                                     std::uint64_t budget = std::uint64_t{1} << 22);
/// As verify_phase_circuit_css, restricted to circuits of diagonal gates.
Certificate verify_diagonal_gate_css(const CodeList& codes, const Circuit& c, const Gate& claimed);

/// Picks dense, Heisenberg or coset-phase verification for a circuit on
/// code blocks.
Certificate verify_block_gate(const CodeList& codes, const Circuit& c, const Gate& claimed);

/// Verifies a layout gadget: directly on the flattened codes when a route
/// exists, otherwise compositionally from its construction record.
Certificate verify_gadget(const GadgetCircuit& g);

/// Circuit realizing a declared transversal rule on m blocks of `code`.
Circuit transversal_circuit(const StabilizerCode& code, const TransversalRule& rule);
Certificate verify_transversal_rule(const StabilizerCode& code, const TransversalRule& rule);

struct RuleCertificate {
  std::string code;
  std::string rule;
  Certificate certificate;
};
std::vector<RuleCertificate> verify_catalog(const Catalog& catalog);

/// Cached verification of a rule; throws Error when the declaration is false.
const Certificate& require_verified(const StabilizerCode& code, const TransversalRule& rule);

/// Text of a rule, "S = S_DAG" or "K = K post Z@2".
std::string rule_string(const TransversalRule& rule);

}  // namespace nucc
