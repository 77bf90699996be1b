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

#include "nucc/verify.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "nucc/error.hpp"
#include "nucc/hash.hpp"

namespace nucc {
namespace {

constexpr double kFidelityTolerance = 1e-10;
constexpr double kPhaseTolerance = 1e-8;

std::size_t total_qubits(const CodeList& codes) {
  std::size_t t = 0;
  for (auto* c : codes) t += c->n();
  return t;
}

std::vector<std::size_t> offsets_of(const CodeList& codes) {
  std::vector<std::size_t> off;
  std::size_t t = 0;
  for (auto* c : codes) {
    off.push_back(t);
    t += c->n();
  }
  return off;
}

std::string subject_of(const CodeList& codes, const Gate& claimed) {
  std::string s = gate_token(claimed) + " on ";
  for (std::size_t j = 0; j < codes.size(); ++j) s += (j ? "," : "") + codes[j]->name();
  return s;
}

Certificate failed(std::string method, std::string subject, std::string detail) {
  Certificate c;
  c.method = std::move(method);
  c.subject = std::move(subject);
  c.detail = std::move(detail);
  return c;
}

double wrap_angle(double a) {
  a = std::fmod(a, 2 * std::numbers::pi);
  if (a > std::numbers::pi) a -= 2 * std::numbers::pi;
  if (a <= -std::numbers::pi) a += 2 * std::numbers::pi;
  return a;
}

PauliOperator lift_operands(const CodeList& codes, const PauliOperator& q) {
  const auto off = offsets_of(codes);
  const std::size_t N = total_qubits(codes);
  PauliOperator out(N);
  for (std::size_t j = 0; j < codes.size(); ++j) {
    const Letter l = q.letter(j);
    if (l != Letter::I) out.mul_assign(codes[j]->logical(l).embed(N, off[j]));
  }
  out.set_phase(static_cast<std::uint8_t>(out.phase() + q.phase()));
  return out;
}

// Basis-state evaluation of a circuit of CNOT, X, Y and diagonal gates.
bool is_monomial(const Gate& g) {
  return g.kind == GateKind::CNOT || g.kind == GateKind::X || g.kind == GateKind::Y || is_diagonal(g);
}

void run_monomial(const Circuit& c, BitVector& x, PiFraction& phase) {
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::CNOT:
        if (x.get(g.qubits[0])) x.flip(g.qubits[1]);
        break;
      case GateKind::X: x.flip(g.qubits[0]); break;
      case GateKind::Y:
        // Y|0> = i|1>, Y|1> = -i|0>.
        phase = phase + (x.get(g.qubits[0]) ? PiFraction(-1, 2) : PiFraction(1, 2));
        x.flip(g.qubits[0]);
        break;
      default: {
        const auto d = diagonal_form(g);
        if (!d) throw UnsupportedGateError("not a monomial gate: " + gate_token(g));
        bool all = true;
        for (auto q : g.qubits) all = all && x.get(q);
        if (all) phase = phase + d->theta;
      }
    }
  }
}

struct CssBlock {
  std::vector<BitVector> rows;  // reduced X-check rows
  std::vector<std::size_t> pivots;
  BitVector lx;

  bool in_rowspace(BitVector v) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (v.get(pivots[i])) v ^= rows[i];
    }
    return !v.any();
  }
};

std::optional<CssBlock> css_block(const StabilizerCode& code) {
  if (!code.is_css()) return std::nullopt;
  const auto& lx = code.logical_x();
  const auto& lz = code.logical_z();
  if (lx.z().any() || lx.phase() != 0 || lz.x().any() || lz.phase() != 0) return std::nullopt;
  CssBlock b;
  for (const auto& g : code.generators()) {
    if (g.phase() != 0) return std::nullopt;
    if (g.x().any()) b.rows.push_back(g.x());
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < code.n() && r < b.rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < b.rows.size() && !b.rows[sel].get(c)) ++sel;
    if (sel == b.rows.size()) continue;
    std::swap(b.rows[r], b.rows[sel]);
    for (std::size_t i = 0; i < b.rows.size(); ++i) {
      if (i != r && b.rows[i].get(c)) b.rows[i] ^= b.rows[r];
    }
    b.pivots.push_back(c);
    ++r;
  }
  b.lx = lx.x();
  return b;
}

bool all_clifford(const Circuit& c) {
  for (const auto& g : c.gates()) {
    if (!is_clifford(g)) return false;
  }
  return true;
}

}  // namespace

Certificate verify_logical_action(const CodeList& codes, const Circuit& c, const std::vector<Complex>& claimed) {
  Certificate cert;
  cert.method = "dense";
  const std::size_t m = codes.size();
  const std::size_t dim = std::size_t{1} << m;
  if (claimed.size() != dim * dim) throw DimensionError("claimed unitary has the wrong size");
  if (c.register_size() != total_qubits(codes)) throw DimensionError("circuit register differs from code blocks");
  std::vector<std::vector<Complex>> inputs;
  for (std::size_t b = 0; b < dim; ++b) {
    std::vector<Complex> v(dim, 0.0);
    v[b] = 1.0;
    inputs.push_back(std::move(v));
  }
  inputs.emplace_back(dim, Complex(1.0 / std::sqrt(static_cast<double>(dim))));

  double min_fid = 1.0;
  std::optional<double> phase0;
  bool phase_ok = true;
  std::optional<StateVector> last;
  for (const auto& v : inputs) {
    StateVector actual = encode_blocks(codes, v);
    actual.apply(c);
    std::vector<Complex> w(dim, 0.0);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t k = 0; k < dim; ++k) w[r] += claimed[r * dim + k] * v[k];
    }
    const StateVector expected = encode_blocks(codes, w);
    const Complex ov = expected.inner(actual);
    const double f = std::norm(ov);
    min_fid = std::min(min_fid, f);
    if (f > 0.5) {
      const double ph = std::arg(ov);
      if (!phase0) {
        phase0 = ph;
      } else if (std::abs(wrap_angle(ph - *phase0)) > kPhaseTolerance) {
        phase_ok = false;
      }
    }
    last = std::move(actual);
  }
  // Codespace check on the output of the all-|+> input.
  const auto off = offsets_of(codes);
  double min_exp = 1.0;
  for (std::size_t j = 0; j < m; ++j) {
    for (const auto& g : codes[j]->generators()) {
      min_exp = std::min(min_exp, last->expectation(g.embed(c.register_size(), off[j])));
    }
  }
  cert.fidelity = min_fid;
  cert.phase = phase0.value_or(0.0);
  cert.pass = min_fid >= 1 - kFidelityTolerance && phase_ok && min_exp >= 1 - kFidelityTolerance;
  if (!cert.pass) {
    cert.detail = "min fidelity " + std::to_string(min_fid) + (phase_ok ? "" : ", inconsistent global phase") +
                  ", min stabilizer expectation " + std::to_string(min_exp);
  }
  return cert;
}

Certificate verify_clifford_heisenberg(const CodeList& codes, const Circuit& c, const Gate& claimed) {
  const std::string subject = subject_of(codes, claimed);
  Certificate cert;
  cert.method = "heisenberg";
  cert.subject = subject;
  const std::size_t N = total_qubits(codes);
  if (c.register_size() != N) throw DimensionError("circuit register differs from code blocks");
  std::vector<CliffordGate> cl;
  for (const auto& g : c.gates()) {
    if (!is_clifford(g)) return failed("heisenberg", subject, "non-Clifford gate " + gate_token(g) + " present");
    for (auto& x : to_clifford(g)) cl.push_back(std::move(x));
  }
  if (!is_clifford(claimed)) return failed("heisenberg", subject, "claimed gate is not Clifford");
  const auto claimed_cl = to_clifford(claimed);

  const auto off = offsets_of(codes);
  std::vector<PauliOperator> gens;
  for (std::size_t j = 0; j < codes.size(); ++j) {
    for (const auto& g : codes[j]->generators()) gens.push_back(g.embed(N, off[j]));
  }
  const StabilizerGroup group(gens);
  for (const auto& g : gens) {
    const auto ph = group.membership_phase(conjugate_by_circuit(g, cl));
    if (!ph || *ph != 0) {
      return failed("heisenberg", subject, "stabilizer " + g.str() + " is not preserved");
    }
  }
  for (std::size_t j = 0; j < codes.size(); ++j) {
    for (Letter l : {Letter::X, Letter::Z}) {
      const PauliOperator p = PauliOperator::single(codes.size(), j, l);
      const PauliOperator q = conjugate_by_circuit(p, claimed_cl);
      const PauliOperator lhs = conjugate_by_circuit(lift_operands(codes, p), cl);
      const auto ph = group.membership_phase(multiply(lhs, lift_operands(codes, q)));
      if (!ph || *ph != 0) {
        return failed("heisenberg", subject,
                      std::string("logical ") + letter_char(l) + " of operand " + std::to_string(j) +
                          " maps outside the claimed image " + q.str());
      }
    }
  }
  cert.pass = true;
  cert.fidelity = 1.0;
  return cert;
}

Certificate verify_phase_circuit_css(const CodeList& codes, const Circuit& c, const Gate& claimed,
                                     std::uint64_t budget) {
  const std::string subject = subject_of(codes, claimed);
  const std::size_t m = codes.size();
  const std::size_t N = total_qubits(codes);
  if (c.register_size() != N) throw DimensionError("circuit register differs from code blocks");
  for (const auto& g : c.gates()) {
    if (!is_monomial(g)) return failed("css-coset", subject, "gate " + gate_token(g) + " is not a phase/permutation gate");
  }
  if (!is_monomial(claimed)) return failed("css-coset", subject, "claimed gate is not a phase/permutation gate");
  std::vector<CssBlock> blocks;
  std::size_t total_rows = 0;
  for (auto* code : codes) {
    auto b = css_block(*code);
    if (!b) return failed("css-coset", subject, code->name() + " is not a positive-sign CSS code");
    total_rows += b->rows.size();
    blocks.push_back(std::move(*b));
  }
  if (total_rows + m >= 63 || (std::uint64_t{1} << (total_rows + m)) > budget) {
    return failed("css-coset", subject,
                  "2^" + std::to_string(total_rows + m) + " coset elements exceed the budget of " +
                      std::to_string(budget));
  }
  const auto off = offsets_of(codes);
  // Row r of the concatenated list, embedded in the register.
  std::vector<BitVector> rows;
  for (std::size_t j = 0; j < m; ++j) {
    for (const auto& r : blocks[j].rows) {
      BitVector e(N);
      for (auto q : r.support()) e.set(off[j] + q, true);
      rows.push_back(std::move(e));
    }
  }
  Circuit logical_circuit(m);
  logical_circuit.append(claimed);

  std::optional<PiFraction> gamma;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) {
    BitVector lb(m);
    for (std::size_t j = 0; j < m; ++j) lb.set(j, (b >> j) & 1);
    PiFraction lambda;
    run_monomial(logical_circuit, lb, lambda);

    BitVector x(N);
    for (std::size_t j = 0; j < m; ++j) {
      if ((b >> j) & 1) {
        for (auto q : blocks[j].lx.support()) x.flip(off[j] + q);
      }
    }
    const std::uint64_t count = std::uint64_t{1} << rows.size();
    for (std::uint64_t t = 0; t < count; ++t) {
      if (t) x ^= rows[static_cast<std::size_t>(std::countr_zero(t))];
      BitVector y = x;
      PiFraction phi;
      run_monomial(c, y, phi);
      for (std::size_t j = 0; j < m; ++j) {
        BitVector slice(codes[j]->n());
        for (std::size_t q = 0; q < codes[j]->n(); ++q) slice.set(q, y.get(off[j] + q));
        if (lb.get(j)) slice ^= blocks[j].lx;
        if (!blocks[j].in_rowspace(slice)) {
          return failed("css-coset", subject,
                        "basis input " + std::to_string(b) + " leaves the expected coset on operand " +
                            std::to_string(j));
        }
      }
      const PiFraction delta = phi - lambda;
      if (!gamma) {
        gamma = delta;
      } else if (delta != *gamma) {
        return failed("css-coset", subject,
                      "relative phase " + delta.str() + " differs from " + gamma->str() + " on input " +
                          std::to_string(b));
      }
    }
  }
  Certificate cert;
  cert.pass = true;
  cert.method = "css-coset";
  cert.subject = subject;
  cert.fidelity = 1.0;
  cert.phase = gamma->radians();
  cert.exact_phase = gamma->str();
  return cert;
}

Certificate verify_diagonal_gate_css(const CodeList& codes, const Circuit& c, const Gate& claimed) {
  for (const auto& g : c.gates()) {
    if (!is_diagonal(g)) {
      return failed("css-coset", subject_of(codes, claimed), "non-diagonal gate " + gate_token(g) + " present");
    }
  }
  if (!is_diagonal(claimed)) return failed("css-coset", subject_of(codes, claimed), "claimed gate is not diagonal");
  return verify_phase_circuit_css(codes, c, claimed);
}

Certificate verify_block_gate(const CodeList& codes, const Circuit& c, const Gate& claimed) {
  Certificate cert;
  if (total_qubits(codes) <= kMaxDenseQubits) {
    cert = verify_logical_action(codes, c, gate_unitary(claimed));
  } else if (all_clifford(c) && is_clifford(claimed)) {
    cert = verify_clifford_heisenberg(codes, c, claimed);
  } else {
    cert = verify_phase_circuit_css(codes, c, claimed);
  }
  cert.subject = subject_of(codes, claimed);
  return cert;
}

Certificate verify_gadget(const GadgetCircuit& g) {
  const ConcatenationLayout& layout = *g.layout;
  const std::size_t m = g.operands();
  const std::string subject = gate_token(g.logical) + " on " + layout.descriptor();
  if (layout.all_bare()) {
    CodeList codes(m, &layout.outer());
    Certificate c = verify_block_gate(codes, g.circuit, g.logical);
    c.subject = subject;
    return c;
  }
  const StabilizerCode flat = flattened_code(layout);
  CodeList codes(m, &flat);
  if (all_clifford(g.circuit) && is_clifford(g.logical)) {
    Certificate c = verify_clifford_heisenberg(codes, g.circuit, g.logical);
    c.subject = subject;
    return c;
  }
  if (auto b = css_block(flat)) {
    const std::size_t rows = b->rows.size() * m + m;
    if (rows <= 22) {
      Certificate c = verify_phase_circuit_css(codes, g.circuit, g.logical);
      c.subject = subject;
      return c;
    }
  }
  if (!g.composition) return failed("compositional", subject, "no direct route and no construction record");

  Certificate cert;
  cert.method = "compositional";
  cert.subject = subject;
  const Circuit expanded = expand_composition(layout, m, *g.composition);
  if (expanded.gates() != g.circuit.gates()) {
    cert.detail = "construction record does not reproduce the circuit";
    return cert;
  }
  CodeList outer_codes(m, &layout.outer());
  Certificate outer = verify_block_gate(outer_codes, g.composition->outer_circuit, g.logical);
  outer.subject = "outer level: " + outer.subject;
  cert.pass = outer.pass;
  cert.phase = outer.phase;
  cert.components.push_back(std::move(outer));
  std::map<std::string, bool> seen;
  for (const auto& step : g.composition->steps) {
    if (step.realization == "bare") continue;
    Gate claimed = step.outer_gate;
    for (std::size_t i = 0; i < claimed.qubits.size(); ++i) claimed.qubits[i] = i;
    const std::string key = step.code->name() + "|" + gate_token(claimed) + "|" + dump_circuit(step.block_circuit);
    if (seen.count(key)) continue;
    seen[key] = true;
    CodeList inner(claimed.qubits.size(), step.code.get());
    Certificate c = verify_block_gate(inner, step.block_circuit, claimed);
    c.subject = step.realization + " " + c.subject;
    cert.pass = cert.pass && c.pass;
    cert.components.push_back(std::move(c));
  }
  cert.fidelity = cert.pass ? 1.0 : 0.0;
  if (!cert.pass) cert.detail = "a component failed verification";
  return cert;
}

Circuit transversal_circuit(const StabilizerCode& code, const TransversalRule& rule) {
  const std::size_t m = rule.logical.qubits.size();
  const std::size_t n = code.n();
  Circuit c(m * n, gate_token(rule.logical) + " on " + code.name());
  auto fixups = [&](const std::vector<Gate>& gs) {
    for (std::size_t j = 0; j < m; ++j) {
      for (Gate g : gs) {
        for (auto& q : g.qubits) q += j * n;
        c.append(std::move(g));
      }
    }
  };
  fixups(rule.pre);
  for (std::size_t i = 0; i < n; ++i) {
    Gate g = rule.physical;
    for (auto& q : g.qubits) q = q * n + i;
    c.append(std::move(g));
  }
  fixups(rule.post);
  return c;
}

std::string rule_string(const TransversalRule& rule) {
  std::string s = gate_token(rule.logical) + " = " + gate_token(rule.physical);
  auto loc = [](const Gate& g) {
    Gate b = g;
    b.qubits = {0};
    return gate_token(b) + "@" + std::to_string(g.qubits.at(0));
  };
  for (const auto& g : rule.pre) s += " pre " + loc(g);
  for (const auto& g : rule.post) s += " post " + loc(g);
  return s;
}

Certificate verify_transversal_rule(const StabilizerCode& code, const TransversalRule& rule) {
  CodeList codes(rule.logical.qubits.size(), &code);
  Certificate c = verify_block_gate(codes, transversal_circuit(code, rule), rule.logical);
  c.subject = code.name() + ": transversal " + rule_string(rule);
  return c;
}

std::vector<RuleCertificate> verify_catalog(const Catalog& catalog) {
  std::vector<RuleCertificate> out;
  for (const auto& code : catalog.codes()) {
    for (const auto& r : code->transversal()) {
      out.push_back({code->name(), rule_string(r), require_verified(*code, r)});
    }
  }
  return out;
}

const Certificate& require_verified(const StabilizerCode& code, const TransversalRule& rule) {
  static std::mutex mu;
  static std::map<std::string, Certificate> cache;
  std::string key = code.name() + "|" + rule_string(rule);
  for (const auto& g : code.generators()) key += " " + g.str();
  key += " " + code.logical_x().str() + " " + code.logical_z().str();
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Certificate c = verify_transversal_rule(code, rule);
  if (!c.pass) {
    throw Error(code.name() + ": declared transversal rule '" + rule_string(rule) +
                "' fails verification (" + c.method + ": " + c.detail + ")");
  }
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(c)).first->second;
}

}  // namespace nucc
