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

#include "nucc/encoder.hpp"

#include "nucc/error.hpp"

namespace nucc {
namespace {

bool is_pure_x(const PauliOperator& p) { return !p.z().any() && p.phase() == 0; }
bool is_pure_z(const PauliOperator& p) { return !p.x().any() && p.phase() == 0; }

}  // namespace

CssEncoder css_encoder(const StabilizerCode& code) {
  const std::size_t n = code.n();
  if (!code.is_css() || !is_pure_x(code.logical_x()) || !is_pure_z(code.logical_z())) {
    throw UnsupportedGateError(code.name() + ": CSS encoder needs a CSS code with +X / +Z logical representatives");
  }
  std::vector<BitVector> rows;
  for (const auto& g : code.generators()) {
    if (g.phase() != 0) throw UnsupportedGateError(code.name() + ": CSS encoder needs positive-sign generators");
    if (g.x().any()) rows.push_back(g.x());
  }
  // Reduced row echelon form of the X-check rows.
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && !rows[sel].get(c)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
    }
    pivots.push_back(c);
    ++r;
  }
  BitVector lx = code.logical_x().x();
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (lx.get(pivots[i])) lx ^= rows[i];
  }
  const auto lx_support = lx.support();
  if (lx_support.empty()) throw InternalError(code.name() + ": logical X reduced to zero");

  CssEncoder enc;
  enc.circuit = Circuit(n, code.name() + " encoder");
  enc.data_qubit = lx_support.front();
  for (std::size_t q : lx_support) {
    if (q != enc.data_qubit) enc.circuit.append(make_gate(GateKind::CNOT, {enc.data_qubit, q}));
  }
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    enc.circuit.append(make_gate(GateKind::H, {pivots[i]}));
    for (std::size_t q : rows[i].support()) {
      if (q != pivots[i]) enc.circuit.append(make_gate(GateKind::CNOT, {pivots[i], q}));
    }
  }
  return enc;
}

Circuit unencode_apply_reencode(const StabilizerCode& code, const Gate& g) {
  if (g.qubits.size() != 1) throw UnsupportedGateError("unencode-reencode handles single-qubit gates only");
  const CssEncoder enc = css_encoder(code);
  Circuit out = invert(enc.circuit);
  out.set_label(gate_token(g) + " on " + code.name() + " by unencode-reencode");
  Gate local = g;
  local.qubits = {enc.data_qubit};
  out.append(std::move(local));
  out.append(enc.circuit);
  return out;
}

}  // namespace nucc
