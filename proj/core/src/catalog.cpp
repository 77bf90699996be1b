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

#include "nucc/catalog.hpp"

#include <charconv>
#include <sstream>

#include "nucc/error.hpp"
#include "nucc/hash.hpp"

namespace nucc {
namespace {

constexpr std::string_view kEmbedded = R"(catalog 1

code steane
label 7-qubit Steane code, CSS from the [7,4,3] Hamming code
stabilizer +XIIXIXX
stabilizer +IXIIXXX
stabilizer +IIXXXXI
stabilizer +ZIIZIZZ
stabilizer +IZIIZZZ
stabilizer +IIZZZZI
logical_x +XXXXXXX
logical_z +ZZZZZZZ
transversal X = X
transversal Y = Y
transversal Z = Z
transversal H = H
transversal S = S_DAG
transversal S_DAG = S
transversal CNOT = CNOT
transversal CZ = CZ
universal T CCZ H S CNOT
end

code five_qubit
label 5-qubit perfect code, cyclic generators XZZXI
stabilizer +XZZXI
stabilizer +IXZZX
stabilizer +XIXZZ
stabilizer +ZXIXZ
logical_x +XXXXX
logical_z +ZZZZZ
transversal X = X
transversal Z = Z
universal T S CZ CCZ
end

code five_prime
label 5-qubit code rotated by K on qubits 1 and 5 and Y on qubit 3
derive five_qubit K@0 Y@2 K@4
transversal K = K post Z@2
universal T S CZ CCZ K
end

code rm15
label 15-qubit quantum Reed-Muller code, CSS from punctured RM(1,4)
stabilizer +XIXIXIXIXIXIXIX
stabilizer +IXXIIXXIIXXIIXX
stabilizer +IIIXXXXIIIIXXXX
stabilizer +IIIIIIIXXXXXXXX
stabilizer +ZIZIZIZIZIZIZIZ
stabilizer +IZZIIZZIIZZIIZZ
stabilizer +IIIZZZZIIIIZZZZ
stabilizer +IIIIIIIZZZZZZZZ
stabilizer +IIZIIIZIIIZIIIZ
stabilizer +IIIIZIZIIIIIZIZ
stabilizer +IIIIIIIIZIZIZIZ
stabilizer +IIIIIZZIIIIIIZZ
stabilizer +IIIIIIIIIZZIIZZ
stabilizer +IIIIIIIIIIIZZZZ
logical_x +XXXXXXXXXXXXXXX
logical_z +ZZZZZZZZZZZZZZZ
transversal X = X
transversal Z = Z
transversal T = T_DAG
transversal T_DAG = T
transversal S = S_DAG
transversal S_DAG = S
transversal CNOT = CNOT
transversal CZ = CZ
transversal CCZ = CCZ
universal T CCZ CNOT
end
)";

std::size_t parse_index(std::string_view s) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    throw ParseError("bad qubit index '" + std::string(s) + "'");
  }
  return v;
}

// "K@0" / "ZTHETA(pi/8)@3"
Gate located_gate_from_token(std::string_view tok) {
  const auto at = tok.rfind('@');
  if (at == std::string_view::npos) throw ParseError("expected <gate>@<qubit>, got '" + std::string(tok) + "'");
  Gate g = gate_from_token(tok.substr(0, at));
  if (g.qubits.size() != 1) throw ParseError("located gates must be single-qubit");
  g.qubits = {parse_index(tok.substr(at + 1))};
  return g;
}

std::string located_gate_token(const Gate& g) {
  Gate base = g;
  base.qubits = {0};
  return gate_token(base) + "@" + std::to_string(g.qubits.at(0));
}

CliffordGate located_clifford(std::string_view tok) {
  Gate g = located_gate_from_token(tok);
  auto cl = to_clifford(g);
  if (cl.size() != 1) throw ParseError("derivation gate '" + std::string(tok) + "' is not a Clifford");
  return cl.front();
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

struct PendingCode {
  std::string name;
  std::string label;
  std::vector<PauliOperator> stabilizers;
  std::optional<PauliOperator> lx, lz;
  std::optional<Derivation> derivation;
  std::vector<TransversalRule> transversal;
  std::vector<Gate> universal;
};

}  // namespace

std::string_view embedded_catalog_text() { return kEmbedded; }

const Catalog& embedded_catalog() {
  static const Catalog c = Catalog::parse(kEmbedded);
  return c;
}

Catalog Catalog::parse(std::string_view text) {
  Catalog cat;
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<PendingCode> cur;
  bool saw_header = false;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw ParseError("catalog line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    const std::string& key = toks[0];
    if (key == "catalog") {
      if (toks.size() != 2 || toks[1] != "1") fail("unsupported catalog version");
      saw_header = true;
      continue;
    }
    if (!saw_header) fail("missing 'catalog 1' header");
    if (key == "code") {
      if (cur) fail("nested code block");
      if (toks.size() != 2) fail("code needs a name");
      cur = PendingCode{};
      cur->name = toks[1];
      continue;
    }
    if (!cur) fail("'" + key + "' outside a code block");
    try {
      if (key == "label") {
        const auto pos = line.find("label") + 5;
        cur->label = line.substr(std::min(line.size(), pos + 1));
      } else if (key == "stabilizer") {
        if (toks.size() != 2) fail("stabilizer takes one Pauli string");
        cur->stabilizers.push_back(PauliOperator::parse(toks[1]));
      } else if (key == "logical_x") {
        cur->lx = PauliOperator::parse(toks.at(1));
      } else if (key == "logical_z") {
        cur->lz = PauliOperator::parse(toks.at(1));
      } else if (key == "derive") {
        if (toks.size() < 2) fail("derive needs a base code");
        Derivation d{toks[1], {}};
        for (std::size_t i = 2; i < toks.size(); ++i) d.gates.push_back(located_clifford(toks[i]));
        cur->derivation = std::move(d);
      } else if (key == "transversal") {
        if (toks.size() < 4 || toks[2] != "=") fail("expected 'transversal <logical> = <physical> ...'");
        TransversalRule r{gate_from_token(toks[1]), gate_from_token(toks[3]), {}, {}};
        if (r.logical.qubits.size() != r.physical.qubits.size()) fail("logical and physical arity differ");
        for (std::size_t i = 4; i < toks.size(); i += 2) {
          if (i + 1 >= toks.size()) fail("fixup needs a gate");
          if (toks[i] == "pre") {
            r.pre.push_back(located_gate_from_token(toks[i + 1]));
          } else if (toks[i] == "post") {
            r.post.push_back(located_gate_from_token(toks[i + 1]));
          } else {
            fail("expected 'pre' or 'post', got '" + toks[i] + "'");
          }
        }
        cur->transversal.push_back(std::move(r));
      } else if (key == "universal") {
        for (std::size_t i = 1; i < toks.size(); ++i) cur->universal.push_back(gate_from_token(toks[i]));
      } else if (key == "end") {
        std::shared_ptr<StabilizerCode> code;
        if (cur->derivation) {
          if (!cur->stabilizers.empty() || cur->lx || cur->lz) fail("derived code may not list generators");
          CodePtr base = cat.get(cur->derivation->base);
          code = std::make_shared<StabilizerCode>(transform_code(*base, cur->derivation->gates));
          code->set_derivation(cur->derivation);
        } else {
          if (!cur->lx || !cur->lz) fail("code '" + cur->name + "' lacks logical operators");
          code = std::make_shared<StabilizerCode>(cur->name, cur->stabilizers, *cur->lx, *cur->lz);
        }
        code->set_name(cur->name);
        code->set_label(cur->label);
        code->set_transversal(std::move(cur->transversal));
        code->set_universal(std::move(cur->universal));
        if (cat.find(code->name())) fail("duplicate code '" + code->name() + "'");
        cat.add(std::move(code));
        cur.reset();
      } else {
        fail("unknown directive '" + key + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  if (cur) throw ParseError("catalog ended inside code '" + cur->name + "'");
  if (!saw_header) throw ParseError("missing 'catalog 1' header");
  return cat;
}

std::string Catalog::dump() const {
  std::string out = "catalog 1\n";
  for (const auto& c : codes_) {
    out += "\ncode " + c->name() + "\n";
    if (!c->label().empty()) out += "label " + c->label() + "\n";
    if (c->derivation()) {
      out += "derive " + c->derivation()->base;
      for (const auto& g : c->derivation()->gates) {
        out += " " + std::string(clifford_name(g.kind)) + "@" + std::to_string(g.qubits.at(0));
      }
      out += "\n";
    } else {
      for (const auto& g : c->generators()) out += "stabilizer " + g.str() + "\n";
      out += "logical_x " + c->logical_x().str() + "\n";
      out += "logical_z " + c->logical_z().str() + "\n";
    }
    for (const auto& r : c->transversal()) {
      out += "transversal " + gate_token(r.logical) + " = " + gate_token(r.physical);
      for (const auto& g : r.pre) out += " pre " + located_gate_token(g);
      for (const auto& g : r.post) out += " post " + located_gate_token(g);
      out += "\n";
    }
    if (!c->universal().empty()) {
      out += "universal";
      for (const auto& g : c->universal()) out += " " + gate_token(g);
      out += "\n";
    }
    out += "end\n";
  }
  return out;
}

void Catalog::add(CodePtr code) { codes_.push_back(std::move(code)); }

CodePtr Catalog::find(std::string_view name) const {
  for (const auto& c : codes_) {
    if (c->name() == name) return c;
  }
  return nullptr;
}

CodePtr Catalog::get(std::string_view name) const {
  if (auto c = find(name)) return c;
  std::string known;
  for (const auto& c : codes_) known += (known.empty() ? "" : ", ") + c->name();
  throw Error("unknown code '" + std::string(name) + "' (known: " + known + ")");
}

std::string Catalog::fingerprint() const {
  return hex64(fnv1a(dump()));
}

std::string derivation_string(const Derivation& d) {
  std::string s = d.base + " ∘";
  for (const auto& g : d.gates) {
    s += " " + std::string(clifford_name(g.kind)) + std::to_string(g.qubits.at(0) + 1);
  }
  return s;
}

CodePtr steane() { return embedded_catalog().get("steane"); }
CodePtr five_qubit() { return embedded_catalog().get("five_qubit"); }
CodePtr five_prime() { return embedded_catalog().get("five_prime"); }
CodePtr reed_muller_15() { return embedded_catalog().get("rm15"); }

}  // namespace nucc
