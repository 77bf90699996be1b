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
#include <span>
#include <string>
#include <vector>

#include "nucc/circuit.hpp"
#include "nucc/verify.hpp"

namespace nucc {

/// Circuit-input faults (3 per register qubit, qubit order, letters X, Y, Z)
/// followed by every nontrivial Pauli on the output qubits of each gate (3
/// for one qubit, 15 for two, 63 for three), in gate order. The Pauli with
/// code v puts letter (v >> 2i) & 3 on the gate's i-th qubit.
std::vector<FaultInjection> enumerate_locations(const Circuit& c);
std::size_t count_gate_locations(const Circuit& c);

/// Faults at gate outputs and inputs pushed to the end of the circuit.
/// Clifford gates act by exact conjugation. A diagonal non-Clifford gate D
/// maps a Pauli with X part s on its qubits to the Pauli support of
/// D X^s D^dag, obtained by a Walsh-Hadamard transform of its diagonal; each
/// support element becomes a branch. Phases are dropped.
struct PropagationResult {
  std::vector<PauliOperator> branches;
  bool deterministic = true;
};
PropagationResult propagate_faults(const Circuit& c, std::span<const FaultInjection> faults);
PropagationResult propagate_fault(const Circuit& c, const FaultInjection& f);

struct FaultFailure {
  std::vector<FaultInjection> faults;
  PauliOperator branch;
  /// Outer residual class per operand after hierarchical decoding.
  std::vector<Letter> residual;
};

struct PairSearch {
  bool run = false;
  bool exhausted = false;
  std::uint64_t pairs_checked = 0;
  std::uint64_t pairs_total = 0;
  std::optional<FaultFailure> witness;
  /// "propagation-amplified" when the failing branch is heavier than the
  /// injected faults, "memory" otherwise.
  std::string witness_kind;
  /// Dense re-validation, run when the register has at most 22 qubits and
  /// every block is a bare code.
  std::optional<bool> dense_confirmed;
  std::string dense_detail;
};

struct FaultReport {
  std::string layout_descriptor;
  std::string layout_fingerprint;
  std::string gadget_label;
  std::string gadget_fingerprint;
  std::size_t register_size = 0;
  std::size_t gates = 0;
  std::size_t input_locations = 0;
  std::size_t gate_locations = 0;
  std::uint64_t branches_checked = 0;
  std::size_t max_branches = 0;
  /// Fault-free output verified to implement the claimed logical gate.
  bool baseline_pass = true;
  std::string baseline_detail;
  std::uint64_t failure_count = 0;
  /// First failures in location order (capped).
  std::vector<FaultFailure> failures;
  PairSearch pairs;

  std::size_t locations_checked() const { return input_locations + gate_locations; }
  bool single_fault_pass() const { return baseline_pass && failure_count == 0; }
};

/// Every single fault of the gadget, every branch, decoded on `layout`
/// (which supplies the decoders). A failed `baseline` certificate is
/// reported as a fault-free failure.
FaultReport check_single_fault_ft(const ConcatenationLayout& layout, const GadgetCircuit& g,
                                  const Certificate* baseline = nullptr);

inline constexpr std::uint64_t kDefaultPairBudget = 20'000'000;

/// Pairs of faults at distinct sites (a gate, or one input qubit), in
/// lexicographic order of location index; stops at the first failing pair.
/// Throws BudgetError when the pair count exceeds `budget`.
PairSearch find_min_uncorrectable(const ConcatenationLayout& layout, const GadgetCircuit& g,
                                  std::uint64_t budget = kDefaultPairBudget);

/// Outcome of the given faults on a gadget: failing branches, if any.
struct ReplayResult {
  std::size_t branches = 0;
  std::vector<FaultFailure> failing;
};
ReplayResult replay_faults(const ConcatenationLayout& layout, const Circuit& c,
                           std::span<const FaultInjection> faults);

/// Dense check of a failing fault set (bare layouts, register <= 22): the
/// faulty output is projected onto the failing branch's syndrome, corrected
/// by the lookup decoder and compared with the ideal output.
bool dense_confirm_failure(const ConcatenationLayout& layout, const GadgetCircuit& g, const FaultFailure& f,
                           std::string* detail = nullptr);

struct EffectiveDistance {
  /// 1 when some single fault fails, 3 when single faults pass and a pair
  /// fails, otherwise 3 as a lower bound.
  int value = 0;
  bool lower_bound = false;
  std::string witness_gadget;
  std::vector<FaultReport> reports;
  std::string statement;
};

/// Single-fault suite over every gadget, then (if `pairs`) pair search over
/// the gadgets in order until a witness appears.
EffectiveDistance effective_distance_report(const ConcatenationLayout& layout,
                                            const std::vector<GadgetCircuit>& gadgets,
                                            const std::vector<Certificate>& certificates, bool pairs,
                                            std::uint64_t budget = kDefaultPairBudget);

/// "X:3 Z:17" style rendering of a fault set.
std::string fault_string(const FaultInjection& f);

}  // namespace nucc
