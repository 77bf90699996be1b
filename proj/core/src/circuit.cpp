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

#include "nucc/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "nucc/error.hpp"
#include "nucc/hash.hpp"

namespace nucc {

void Circuit::append(Gate g) {
  validate_gate(g, register_size_);
  gates_.push_back(std::move(g));
}

void Circuit::append_mapped(const Circuit& other, const std::vector<std::size_t>& map) {
  if (map.size() != other.register_size()) throw DimensionError("append_mapped: map size differs from register");
  for (Gate g : other.gates()) {
    for (auto& q : g.qubits) q = map[q];
    append(std::move(g));
  }
}

void Circuit::append(const Circuit& other) {
  if (other.register_size() != register_size_) throw DimensionError("append: register sizes differ");
  for (const auto& g : other.gates()) gates_.push_back(g);
}

std::vector<std::size_t> Circuit::touched_qubits() const {
  std::vector<bool> t(register_size_, false);
  for (const auto& g : gates_) {
    for (auto q : g.qubits) t[q] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < register_size_; ++q) {
    if (t[q]) out.push_back(q);
  }
  return out;
}

Circuit invert(const Circuit& c) {
  Circuit out(c.register_size(), c.label());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) out.append(inverse(*it));
  return out;
}

CircuitFile parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> reg;
  CircuitFile out;
  std::string label;
  int lineno = 0;
  auto fail = [&](const std::string& m) { throw ParseError("circuit line " + std::to_string(lineno) + ": " + m); };
  auto parse_size = [&](const std::string& s) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) fail("bad number '" + s + "'");
    return v;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "register") {
      std::string v;
      ls >> v;
      if (reg) fail("duplicate register line");
      reg = parse_size(v);
      out.circuit = Circuit(*reg);
      continue;
    }
    if (!reg) fail("'register N' must come first");
    if (key == "label") {
      std::string rest;
      std::getline(ls >> std::ws, rest);
      out.circuit.set_label(rest);
    } else if (key == "FAULT") {
      FaultInjection f;
      std::string where;
      if (!(ls >> where)) fail("FAULT needs a location");
      if (where != "input") {
        f.after_gate = parse_size(where);
        if (*f.after_gate >= out.circuit.size()) fail("FAULT refers to a gate not yet defined");
      }
      std::string tok;
      while (ls >> tok) {
        const auto colon = tok.find(':');
        if (colon != 1) fail("expected <letter>:<qubit>, got '" + tok + "'");
        const Letter l = letter_from_char(tok[0]);
        const std::size_t q = parse_size(tok.substr(2));
        if (q >= *reg) fail("FAULT qubit out of register");
        if (l != Letter::I) f.paulis.emplace_back(q, l);
      }
      if (f.paulis.empty()) fail("FAULT with no Pauli");
      out.faults.push_back(std::move(f));
    } else {
      try {
        out.circuit.append(gate_from_text(line));
      } catch (const Error& e) {
        fail(e.what());
      }
    }
  }
  if (!reg) throw ParseError("circuit has no 'register N' line");
  return out;
}

std::string dump_circuit(const Circuit& c, const std::vector<FaultInjection>& faults) {
  std::string s = "register " + std::to_string(c.register_size()) + "\n";
  if (!c.label().empty()) s += "label " + c.label() + "\n";
  // Faults are written right after the gate they follow so the file parses
  // in one pass.
  auto emit_faults = [&](std::optional<std::size_t> where) {
    for (const auto& f : faults) {
      if (f.after_gate != where) continue;
      s += "FAULT " + (where ? std::to_string(*where) : std::string("input"));
      for (const auto& [q, l] : f.paulis) s += std::string(" ") + letter_char(l) + ":" + std::to_string(q);
      s += "\n";
    }
  };
  emit_faults(std::nullopt);
  for (std::size_t i = 0; i < c.size(); ++i) {
    s += gate_to_text(c.gates()[i]) + "\n";
    emit_faults(i);
  }
  return s;
}

std::string GadgetCircuit::fingerprint() const {
  std::string key = layout->fingerprint() + "|" + gate_token(logical) + "|" + dump_circuit(circuit);
  return hex64(fnv1a(key));
}

}  // namespace nucc

namespace nucc {

Circuit expand_composition(const ConcatenationLayout& layout, std::size_t operands, const Composition& comp) {
  const std::size_t n_out = layout.outer_n();
  const std::size_t N = layout.total_n();
  Circuit out(operands * N);
  for (const auto& step : comp.steps) {
    std::vector<std::size_t> map;
    for (std::size_t Q : step.outer_gate.qubits) {
      const std::size_t j = Q / n_out, q = Q % n_out;
      const std::size_t base = j * N + layout.offset(q);
      for (std::size_t t = 0; t < layout.block_size(q); ++t) map.push_back(base + t);
    }
    out.append_mapped(step.block_circuit, map);
  }
  return out;
}

}  // namespace nucc
