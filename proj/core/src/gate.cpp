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

#include "nucc/gate.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

#include "nucc/error.hpp"

namespace nucc {
namespace {

struct KindInfo {
  GateKind kind;
  std::string_view name;
  int arity;
};

constexpr std::array<KindInfo, 15> kKinds = {{
    {GateKind::H, "H", 1},         {GateKind::S, "S", 1},       {GateKind::S_DAG, "S_DAG", 1},
    {GateKind::T, "T", 1},         {GateKind::T_DAG, "T_DAG", 1}, {GateKind::K, "K", 1},
    {GateKind::K_DAG, "K_DAG", 1}, {GateKind::X, "X", 1},       {GateKind::Y, "Y", 1},
    {GateKind::Z, "Z", 1},         {GateKind::ZTHETA, "ZTHETA", 1}, {GateKind::CNOT, "CNOT", 2},
    {GateKind::CZ, "CZ", 2},       {GateKind::CCZ, "CCZ", 3},   {GateKind::CKZ, "CKZ", 0},
}};

std::vector<std::size_t> iota_qubits(int n) {
  std::vector<std::size_t> q(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) q[i] = static_cast<std::size_t>(i);
  return q;
}

}  // namespace

std::string_view gate_name(GateKind k) { return kKinds[static_cast<int>(k)].name; }

GateKind gate_kind_from_name(std::string_view name) {
  for (const auto& info : kKinds) {
    if (info.name == name) return info.kind;
  }
  throw ParseError("unknown gate kind '" + std::string(name) + "'");
}

int gate_fixed_arity(GateKind k) { return kKinds[static_cast<int>(k)].arity; }

bool gate_has_theta(GateKind k) { return k == GateKind::ZTHETA || k == GateKind::CKZ; }

Gate make_gate(GateKind kind, std::vector<std::size_t> qubits, PiFraction theta) {
  Gate g{kind, std::move(qubits), gate_has_theta(kind) ? theta : PiFraction{}};
  return g;
}

std::optional<DiagonalForm> diagonal_form(const Gate& g) {
  switch (g.kind) {
    case GateKind::T: return DiagonalForm{0, {1, 4}};
    case GateKind::T_DAG: return DiagonalForm{0, {-1, 4}};
    case GateKind::S: return DiagonalForm{0, {1, 2}};
    case GateKind::S_DAG: return DiagonalForm{0, {-1, 2}};
    case GateKind::Z: return DiagonalForm{0, PiFraction::pi()};
    case GateKind::ZTHETA: return DiagonalForm{0, g.theta};
    case GateKind::CZ: return DiagonalForm{1, PiFraction::pi()};
    case GateKind::CCZ: return DiagonalForm{2, PiFraction::pi()};
    case GateKind::CKZ: return DiagonalForm{static_cast<int>(g.qubits.size()) - 1, g.theta};
    default: return std::nullopt;
  }
}

bool is_diagonal(const Gate& g) { return diagonal_form(g).has_value(); }

bool is_pauli(const Gate& g) {
  if (g.kind == GateKind::X || g.kind == GateKind::Y || g.kind == GateKind::Z) return true;
  auto d = diagonal_form(g);
  return d && d->k == 0 && (d->theta == PiFraction::pi() || d->theta.is_zero());
}

bool is_clifford(const Gate& g) {
  auto d = diagonal_form(g);
  if (!d) return true;  // H, K, K_DAG, X, Y, CNOT
  if (d->theta.is_zero()) return true;
  if (d->k == 0) return d->theta.den() <= 2;
  if (d->k == 1) return d->theta == PiFraction::pi();
  return false;
}

std::vector<CliffordGate> to_clifford(const Gate& g) {
  auto one = [&](CliffordKind k) { return std::vector<CliffordGate>{{k, g.qubits}}; };
  switch (g.kind) {
    case GateKind::H: return one(CliffordKind::H);
    case GateKind::K: return one(CliffordKind::K);
    case GateKind::K_DAG: return one(CliffordKind::K_DAG);
    case GateKind::X: return one(CliffordKind::X);
    case GateKind::Y: return one(CliffordKind::Y);
    case GateKind::CNOT: return one(CliffordKind::CNOT);
    default: break;
  }
  auto d = diagonal_form(g);
  if (!d || !is_clifford(g)) {
    throw UnsupportedGateError("gate " + gate_token(g) + " is not Clifford");
  }
  if (d->theta.is_zero()) return {};
  if (d->k == 1) return one(CliffordKind::CZ);
  if (d->theta == PiFraction::pi()) return one(CliffordKind::Z);
  if (d->theta == PiFraction(1, 2)) return one(CliffordKind::S);
  return one(CliffordKind::S_DAG);
}

Gate inverse(const Gate& g) {
  Gate out = g;
  switch (g.kind) {
    case GateKind::S: out.kind = GateKind::S_DAG; break;
    case GateKind::S_DAG: out.kind = GateKind::S; break;
    case GateKind::T: out.kind = GateKind::T_DAG; break;
    case GateKind::T_DAG: out.kind = GateKind::T; break;
    case GateKind::K: out.kind = GateKind::K_DAG; break;
    case GateKind::K_DAG: out.kind = GateKind::K; break;
    case GateKind::ZTHETA:
    case GateKind::CKZ: out.theta = -g.theta; break;
    default: break;
  }
  return out;
}

Gate make_phase_gate(int k, PiFraction theta, std::vector<std::size_t> qubits) {
  if (static_cast<int>(qubits.size()) != k + 1) {
    throw DimensionError("C^kZ gate needs k+1 qubits");
  }
  if (k == 0) {
    if (theta == PiFraction(1, 4)) return make_gate(GateKind::T, std::move(qubits));
    if (theta == PiFraction(-1, 4)) return make_gate(GateKind::T_DAG, std::move(qubits));
    if (theta == PiFraction(1, 2)) return make_gate(GateKind::S, std::move(qubits));
    if (theta == PiFraction(-1, 2)) return make_gate(GateKind::S_DAG, std::move(qubits));
    if (theta == PiFraction::pi()) return make_gate(GateKind::Z, std::move(qubits));
    return make_gate(GateKind::ZTHETA, std::move(qubits), theta);
  }
  if (theta == PiFraction::pi() && k == 1) return make_gate(GateKind::CZ, std::move(qubits));
  if (theta == PiFraction::pi() && k == 2) return make_gate(GateKind::CCZ, std::move(qubits));
  return make_gate(GateKind::CKZ, std::move(qubits), theta);
}

Gate canonical_logical(const Gate& g) {
  const auto q = iota_qubits(static_cast<int>(g.qubits.size()));
  if (auto d = diagonal_form(g)) return make_phase_gate(d->k, d->theta, q);
  return make_gate(g.kind, q, g.theta);
}

std::string gate_to_text(const Gate& g) {
  std::string s(gate_name(g.kind));
  for (auto q : g.qubits) s += " " + std::to_string(q);
  if (gate_has_theta(g.kind)) s += " theta=" + g.theta.str();
  return s;
}

Gate gate_from_text(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string tok;
  if (!(in >> tok)) throw ParseError("empty gate line");
  Gate g;
  g.kind = gate_kind_from_name(tok);
  bool have_theta = false;
  while (in >> tok) {
    if (tok.rfind("theta=", 0) == 0) {
      g.theta = PiFraction::parse(tok.substr(6));
      have_theta = true;
      continue;
    }
    std::size_t q = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), q);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
      throw ParseError("bad qubit index '" + tok + "' in gate line '" + std::string(line) + "'");
    }
    g.qubits.push_back(q);
  }
  if (gate_has_theta(g.kind) && !have_theta) {
    throw ParseError(std::string(gate_name(g.kind)) + " requires theta=<multiple of pi>");
  }
  if (!gate_has_theta(g.kind) && have_theta) {
    throw ParseError(std::string(gate_name(g.kind)) + " does not take theta");
  }
  const int arity = gate_fixed_arity(g.kind);
  if ((arity > 0 && static_cast<int>(g.qubits.size()) != arity) || g.qubits.empty()) {
    throw ParseError("wrong number of qubits in gate line '" + std::string(line) + "'");
  }
  return g;
}

std::string gate_token(const Gate& g) {
  std::string s(gate_name(g.kind));
  if (g.kind == GateKind::ZTHETA) s += "(" + g.theta.str() + ")";
  if (g.kind == GateKind::CKZ) {
    s += "(" + std::to_string(static_cast<int>(g.qubits.size()) - 1) + "," + g.theta.str() + ")";
  }
  return s;
}

Gate gate_from_token(std::string_view token) {
  const auto open = token.find('(');
  const GateKind kind = gate_kind_from_name(token.substr(0, open));
  if (!gate_has_theta(kind)) {
    if (open != std::string_view::npos) throw ParseError("unexpected argument in gate token");
    return make_gate(kind, iota_qubits(gate_fixed_arity(kind)));
  }
  if (open == std::string_view::npos || token.back() != ')') {
    throw ParseError("gate token '" + std::string(token) + "' needs an angle argument");
  }
  std::string_view args = token.substr(open + 1, token.size() - open - 2);
  int arity = 1;
  if (kind == GateKind::CKZ) {
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) throw ParseError("CKZ token needs (k,theta)");
    int k = 0;
    std::from_chars(args.data(), args.data() + comma, k);
    arity = k + 1;
    args = args.substr(comma + 1);
  }
  return make_gate(kind, iota_qubits(arity), PiFraction::parse(args));
}

void validate_gate(const Gate& g, std::size_t register_size) {
  const int arity = gate_fixed_arity(g.kind);
  if (g.qubits.empty() || (arity > 0 && static_cast<int>(g.qubits.size()) != arity)) {
    throw DimensionError("gate " + gate_token(g) + " has wrong arity");
  }
  for (std::size_t i = 0; i < g.qubits.size(); ++i) {
    if (g.qubits[i] >= register_size) throw DimensionError("gate qubit out of register");
    for (std::size_t j = 0; j < i; ++j) {
      if (g.qubits[i] == g.qubits[j]) throw DimensionError("gate acts twice on one qubit");
    }
  }
}

}  // namespace nucc
