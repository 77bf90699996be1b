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

#include "nucc/gadgets.hpp"

#include <mutex>

#include "nucc/encoder.hpp"
#include "nucc/error.hpp"

namespace nucc {
namespace {

std::vector<std::size_t> iota(std::size_t m) {
  std::vector<std::size_t> q(m);
  for (std::size_t i = 0; i < m; ++i) q[i] = i;
  return q;
}

Gate pauli_gate(Letter l, std::size_t q) {
  switch (l) {
    case Letter::X: return make_gate(GateKind::X, {q});
    case Letter::Y: return make_gate(GateKind::Y, {q});
    default: return make_gate(GateKind::Z, {q});
  }
}

// Letters of a Pauli as single-qubit gates (global phase dropped).
Circuit pauli_circuit(const PauliOperator& p, const std::string& label) {
  Circuit c(p.num_qubits(), label);
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    if (p.letter(q) != Letter::I) c.append(pauli_gate(p.letter(q), q));
  }
  return c;
}

Letter pauli_letter(const Gate& g) {
  if (g.kind == GateKind::X) return Letter::X;
  if (g.kind == GateKind::Y) return Letter::Y;
  return Letter::Z;
}

}  // namespace

StaircasePlan plan_staircase(const StabilizerCode& code) {
  StaircasePlan plan;
  plan.representative = diagonalizable_logical_z(code);
  const auto& rep = plan.representative;
  std::vector<CliffordGate> lc;
  for (std::size_t q = 0; q < code.n(); ++q) {
    const Letter l = rep.letter(q);
    if (l == Letter::I) continue;
    plan.support.push_back(q);
    // K X K^dag = Z and K^dag Y K = Z.
    if (l == Letter::X) plan.local_cliffords.push_back(make_gate(GateKind::K, {q}));
    if (l == Letter::Y) plan.local_cliffords.push_back(make_gate(GateKind::K_DAG, {q}));
  }
  for (const auto& g : plan.local_cliffords) {
    for (auto& c : to_clifford(g)) lc.push_back(c);
  }
  PauliOperator image = conjugate_by_circuit(rep, lc);
  if (image.phase() == 2) {
    plan.local_cliffords.push_back(make_gate(GateKind::X, {plan.support.front()}));
    lc.push_back({CliffordKind::X, {plan.support.front()}});
    image = conjugate_by_circuit(rep, lc);
  }
  for (std::size_t q : plan.support) {
    if (image.letter(q) != Letter::Z) {
      throw SynthesisError(code.name() + ": qubit " + std::to_string(q) + " resists normalization to Z");
    }
  }
  if (image.phase() != 0) throw SynthesisError(code.name() + ": representative sign cannot be made positive");
  return plan;
}

Circuit staircase_circuit(const StabilizerCode& code, int k, PiFraction theta, const StaircaseOptions& opt) {
  if (k < 0) throw Error("staircase: k must be nonnegative");
  const StaircasePlan plan = plan_staircase(code);
  const std::size_t m = static_cast<std::size_t>(k) + 1;
  const std::size_t n = code.n();
  Circuit c(m * n, "C^" + std::to_string(k) + "Z(" + theta.str() + ") staircase on " + code.name());
  auto shifted = [&](Gate g, std::size_t j) {
    for (auto& q : g.qubits) q += j * n;
    return g;
  };
  std::vector<Gate> sc;
  for (std::size_t i = 0; i + 1 < plan.support.size(); ++i) {
    sc.push_back(make_gate(GateKind::CNOT, {plan.support[i], plan.support[i + 1]}));
  }
  for (std::size_t j = 0; j < m; ++j) {
    for (const auto& g : plan.local_cliffords) c.append(shifted(g, j));
  }
  for (std::size_t j = 0; j < m; ++j) {
    for (const auto& g : sc) c.append(shifted(g, j));
  }
  std::vector<std::size_t> ends;
  for (std::size_t j = 0; j < m; ++j) ends.push_back(j * n + plan.support.back());
  c.append(make_phase_gate(k, theta, ends));
  if (!opt.uncompute) return c;
  for (std::size_t j = 0; j < m; ++j) {
    for (auto it = sc.rbegin(); it != sc.rend(); ++it) c.append(shifted(inverse(*it), j));
  }
  for (std::size_t j = 0; j < m; ++j) {
    for (auto it = plan.local_cliffords.rbegin(); it != plan.local_cliffords.rend(); ++it) {
      c.append(shifted(inverse(*it), j));
    }
  }
  return c;
}

GadgetCircuit staircase_gadget(const CodePtr& code, int k, PiFraction theta, const StaircaseOptions& opt) {
  GadgetCircuit g;
  g.circuit = staircase_circuit(*code, k, theta, opt);
  g.logical = make_phase_gate(k, theta, iota(static_cast<std::size_t>(k) + 1));
  g.layout = std::make_shared<const ConcatenationLayout>(bare_layout(code));
  g.coupled = plan_staircase(*code).support;
  return g;
}

GadgetCircuit transversal_gadget(const CodePtr& code, const Gate& logical) {
  const TransversalRule* rule = code->find_transversal(logical);
  if (!rule) throw SynthesisError(gate_token(logical) + " is not declared transversal in " + code->name());
  GadgetCircuit g;
  g.circuit = transversal_circuit(*code, *rule);
  g.logical = canonical_logical(logical);
  g.layout = std::make_shared<const ConcatenationLayout>(bare_layout(code));
  return g;
}

GadgetCircuit logical_gadget_for(const ConcatenationLayout& layout, const Gate& logical_in,
                                 const StaircaseOptions& opt) {
  const Gate logical = canonical_logical(logical_in);
  const StabilizerCode& outer = layout.outer();
  const std::size_t m = logical.qubits.size();
  const std::size_t n_out = outer.n();

  Circuit outer_circuit;
  bool staircase = false;
  std::vector<std::size_t> coupled;
  if (const TransversalRule* rule = outer.find_transversal(logical)) {
    require_verified(outer, *rule);
    outer_circuit = transversal_circuit(outer, *rule);
  } else if (auto d = diagonal_form(logical); d && !is_pauli(logical)) {
    outer_circuit = staircase_circuit(outer, d->k, d->theta, opt);
    staircase = true;
    coupled = plan_staircase(outer).support;
  } else if (is_pauli(logical) && m == 1) {
    outer_circuit = pauli_circuit(outer.logical(pauli_letter(logical)), gate_token(logical) + " on " + outer.name());
  } else {
    throw SynthesisError(gate_token(logical) + " is neither transversal in " + outer.name() +
                         " nor a C^kZ(theta) gate");
  }

  GadgetCircuit g;
  g.logical = logical;
  g.layout = std::make_shared<const ConcatenationLayout>(layout);
  g.coupled = coupled;
  const std::string label = gate_token(logical) + " on " + layout.descriptor();
  if (layout.all_bare()) {
    g.circuit = outer_circuit;
    g.circuit.set_label(label);
    return g;
  }

  Composition comp;
  comp.outer_circuit = outer_circuit;
  for (const Gate& og : outer_circuit.gates()) {
    const std::size_t a = og.qubits.size();
    CodePtr code = layout.inner(og.qubits[0] % n_out);
    for (std::size_t Q : og.qubits) {
      const CodePtr& other = layout.inner(Q % n_out);
      if (static_cast<bool>(other) != static_cast<bool>(code) || (code && other->name() != code->name())) {
        throw SynthesisError(gate_token(og) + " couples outer qubits carrying different inner codes");
      }
    }
    Gate local = og;
    local.qubits = iota(a);
    InnerStep step;
    step.outer_gate = og;
    step.code = code;
    if (!code) {
      step.realization = "bare";
      step.block_circuit = Circuit(a);
      step.block_circuit.append(local);
    } else if (is_pauli(og) && a == 1) {
      step.realization = "pauli";
      step.block_circuit = pauli_circuit(code->logical(pauli_letter(og)), gate_token(og) + " on " + code->name());
    } else if (const TransversalRule* rule = code->find_transversal(local)) {
      require_verified(*code, *rule);
      step.realization = "transversal";
      step.block_circuit = transversal_circuit(*code, *rule);
    } else if (!staircase && a == 1 && code->is_css()) {
      step.realization = "unencode";
      step.block_circuit = unencode_apply_reencode(*code, local);
    } else {
      throw SynthesisError("violates the second necessary condition for code concatenation: " + gate_token(og) +
                           " is not transversal in " + code->name());
    }
    comp.steps.push_back(std::move(step));
  }
  g.circuit = expand_composition(layout, m, comp);
  g.circuit.set_label(label);
  g.composition = std::move(comp);
  return g;
}

std::vector<Gate> universal_gates(const ConcatenationLayout& layout) { return layout.outer().universal(); }

VerifiedGadgetPtr GadgetCache::get(const ConcatenationLayout& layout, const Gate& logical) {
  const std::string key = layout.fingerprint() + "|" + gate_token(canonical_logical(logical));
  {
    std::shared_lock lock(mu_);
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  }
  auto v = std::make_shared<VerifiedGadget>();
  v->gadget = logical_gadget_for(layout, logical);
  v->certificate = verify_gadget(v->gadget);
  if (!v->certificate.pass) {
    throw SynthesisError(gate_token(logical) + " gadget on " + layout.descriptor() + " failed verification (" +
                         v->certificate.method + "): " + v->certificate.detail);
  }
  std::unique_lock lock(mu_);
  return entries_.emplace(key, std::move(v)).first->second;
}

std::size_t GadgetCache::size() const {
  std::shared_lock lock(mu_);
  return entries_.size();
}

GadgetCache& GadgetCache::global() {
  static GadgetCache cache;
  return cache;
}

}  // namespace nucc
