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

#include "nucc/fault.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <map>
#include <thread>

#include "nucc/error.hpp"
#include "nucc/statevector.hpp"

namespace nucc {
namespace {

constexpr std::size_t kMaxWords = 8;
constexpr std::size_t kMaxRegister = kMaxWords * 64;
constexpr std::size_t kMaxStoredFailures = 100;

struct Frame {
  std::array<std::uint64_t, kMaxWords> x{};
  std::array<std::uint64_t, kMaxWords> z{};

  bool operator==(const Frame&) const = default;
  bool operator<(const Frame& o) const { return std::tie(x, z) < std::tie(o.x, o.z); }

  bool getx(std::size_t q) const { return (x[q >> 6] >> (q & 63)) & 1u; }
  bool getz(std::size_t q) const { return (z[q >> 6] >> (q & 63)) & 1u; }
  void flipx(std::size_t q) { x[q >> 6] ^= std::uint64_t{1} << (q & 63); }
  void flipz(std::size_t q) { z[q >> 6] ^= std::uint64_t{1} << (q & 63); }
  void setx(std::size_t q, bool v) {
    if (getx(q) != v) flipx(q);
  }
  void setz(std::size_t q, bool v) {
    if (getz(q) != v) flipz(q);
  }
  void mul(std::size_t q, Letter l) {
    if (letter_x(l)) flipx(q);
    if (letter_z(l)) flipz(q);
  }
};

std::uint64_t bits(const std::array<std::uint64_t, kMaxWords>& w, std::size_t off, std::size_t len) {
  const std::size_t word = off >> 6, sh = off & 63;
  std::uint64_t v = w[word] >> sh;
  if (sh && sh + len > 64 && word + 1 < kMaxWords) v |= w[word + 1] << (64 - sh);
  return len == 64 ? v : v & ((std::uint64_t{1} << len) - 1);
}

enum class OpKind { Nop, Hadamard, Phase, K, KDag, Cnot, Cz, Diagonal };

struct Op {
  OpKind kind = OpKind::Nop;
  std::vector<std::size_t> q;
  std::size_t table = 0;
};

// For every nonzero X pattern s on the gate's qubits, the Z patterns u with
// nonzero weight in D X^s D^dag = X^s sum_u c_u Z^u.
using DiagonalTable = std::vector<std::vector<std::uint32_t>>;

DiagonalTable diagonal_table(std::size_t arity, PiFraction theta) {
  if (arity > 12) throw SizeLimitError("diagonal gate too wide for exact branching");
  const std::size_t dim = std::size_t{1} << arity;
  const std::size_t ones = dim - 1;
  const double t = theta.radians();
  DiagonalTable table(dim);
  std::vector<std::complex<double>> f(dim);
  for (std::size_t s = 1; s < dim; ++s) {
    for (std::size_t x = 0; x < dim; ++x) {
      const double e = (((x ^ s) == ones) ? t : 0.0) - ((x == ones) ? t : 0.0);
      f[x] = std::polar(1.0, e);
    }
    for (std::size_t u = 0; u < dim; ++u) {
      std::complex<double> c = 0;
      for (std::size_t x = 0; x < dim; ++x) c += (std::popcount(u & x) & 1) ? -f[x] : f[x];
      if (std::abs(c) / static_cast<double>(dim) > 1e-9) table[s].push_back(static_cast<std::uint32_t>(u));
    }
  }
  return table;
}

class Engine {
 public:
  explicit Engine(const Circuit& c) : n_(c.register_size()) {
    if (n_ > kMaxRegister) {
      throw SizeLimitError("fault propagation limited to " + std::to_string(kMaxRegister) + " qubits");
    }
    std::map<std::pair<std::size_t, PiFraction>, std::size_t> index;
    for (const auto& g : c.gates()) {
      Op op;
      op.q = g.qubits;
      if (is_clifford(g)) {
        switch (g.kind) {
          case GateKind::H: op.kind = OpKind::Hadamard; break;
          case GateKind::K: op.kind = OpKind::K; break;
          case GateKind::K_DAG: op.kind = OpKind::KDag; break;
          case GateKind::CNOT: op.kind = OpKind::Cnot; break;
          case GateKind::X:
          case GateKind::Y:
          case GateKind::Z: op.kind = OpKind::Nop; break;
          default: {
            const auto d = diagonal_form(g);
            if (d->theta.is_zero() || d->theta == PiFraction::pi()) {
              op.kind = d->k == 1 && !d->theta.is_zero() ? OpKind::Cz : OpKind::Nop;
            } else {
              op.kind = OpKind::Phase;
            }
          }
        }
      } else {
        const auto d = diagonal_form(g);
        if (!d) throw UnsupportedGateError("cannot propagate through " + gate_token(g));
        op.kind = OpKind::Diagonal;
        const auto key = std::make_pair(g.qubits.size(), d->theta);
        auto it = index.find(key);
        if (it == index.end()) {
          it = index.emplace(key, tables_.size()).first;
          tables_.push_back(diagonal_table(g.qubits.size(), d->theta));
        }
        op.table = it->second;
      }
      ops_.push_back(std::move(op));
    }
  }

  std::size_t size() const { return ops_.size(); }

  void apply(std::vector<Frame>& frames, std::size_t from, std::size_t to) const {
    for (std::size_t i = from; i < to; ++i) apply_op(frames, ops_[i]);
  }

 private:
  void apply_op(std::vector<Frame>& frames, const Op& op) const {
    switch (op.kind) {
      case OpKind::Nop: return;
      case OpKind::Hadamard:
        for (auto& f : frames) {
          const bool x = f.getx(op.q[0]), z = f.getz(op.q[0]);
          f.setx(op.q[0], z);
          f.setz(op.q[0], x);
        }
        return;
      case OpKind::Phase:
        for (auto& f : frames) {
          if (f.getx(op.q[0])) f.flipz(op.q[0]);
        }
        return;
      case OpKind::K:  // X -> Z, Z -> Y
        for (auto& f : frames) {
          const bool x = f.getx(op.q[0]), z = f.getz(op.q[0]);
          f.setx(op.q[0], z);
          f.setz(op.q[0], x != z);
        }
        return;
      case OpKind::KDag:  // X -> Y, Z -> X
        for (auto& f : frames) {
          const bool x = f.getx(op.q[0]), z = f.getz(op.q[0]);
          f.setx(op.q[0], x != z);
          f.setz(op.q[0], x);
        }
        return;
      case OpKind::Cnot:
        for (auto& f : frames) {
          if (f.getx(op.q[0])) f.flipx(op.q[1]);
          if (f.getz(op.q[1])) f.flipz(op.q[0]);
        }
        return;
      case OpKind::Cz:
        for (auto& f : frames) {
          const bool xa = f.getx(op.q[0]), xb = f.getx(op.q[1]);
          if (xb) f.flipz(op.q[0]);
          if (xa) f.flipz(op.q[1]);
        }
        return;
      case OpKind::Diagonal: {
        const auto& table = tables_[op.table];
        std::vector<Frame> out;
        out.reserve(frames.size() * 2);
        bool branched = false;
        for (const auto& f : frames) {
          std::size_t s = 0;
          for (std::size_t i = 0; i < op.q.size(); ++i) s |= static_cast<std::size_t>(f.getx(op.q[i])) << i;
          if (!s) {
            out.push_back(f);
            continue;
          }
          const auto& us = table[s];
          branched = branched || us.size() > 1;
          for (std::uint32_t u : us) {
            Frame b = f;
            for (std::size_t i = 0; i < op.q.size(); ++i) {
              if ((u >> i) & 1u) b.flipz(op.q[i]);
            }
            out.push_back(b);
          }
        }
        if (branched) {
          std::sort(out.begin(), out.end());
          out.erase(std::unique(out.begin(), out.end()), out.end());
        }
        frames = std::move(out);
        return;
      }
    }
  }

  std::size_t n_;
  std::vector<Op> ops_;
  std::vector<DiagonalTable> tables_;
};

std::size_t point_of(const FaultInjection& f) { return f.after_gate ? *f.after_gate + 1 : 0; }

void inject(Frame& fr, const FaultInjection& f) {
  for (const auto& [q, l] : f.paulis) fr.mul(q, l);
}

PauliOperator to_pauli(const Frame& f, std::size_t n) {
  BitVector x(n), z(n);
  for (std::size_t q = 0; q < n; ++q) {
    x.set(q, f.getx(q));
    z.set(q, f.getz(q));
  }
  return PauliOperator(std::move(x), std::move(z));
}

// Hierarchical decoding of every operand block of a frame.
class FrameDecoder {
 public:
  FrameDecoder(const ConcatenationLayout& layout, std::size_t operands) : layout_(layout), operands_(operands) {}

  bool corrected(const Frame& f, std::vector<Letter>* residual) const {
    bool ok = true;
    if (residual) residual->assign(operands_, Letter::I);
    const std::size_t N = layout_.total_n();
    for (std::size_t j = 0; j < operands_; ++j) {
      std::uint64_t ox = 0, oz = 0;
      for (std::size_t q = 0; q < layout_.outer_n(); ++q) {
        const std::size_t off = j * N + layout_.offset(q);
        Letter l;
        if (layout_.is_bare(q)) {
          l = make_letter(f.getx(off), f.getz(off));
        } else {
          const std::size_t n = layout_.block_size(q);
          l = layout_.inner_decoder(q)->residual_word(bits(f.x, off, n), bits(f.z, off, n));
        }
        if (letter_x(l)) ox |= std::uint64_t{1} << q;
        if (letter_z(l)) oz |= std::uint64_t{1} << q;
      }
      const Letter r = layout_.outer_decoder().residual_word(ox, oz);
      if (r != Letter::I) {
        ok = false;
        if (residual) (*residual)[j] = r;
        else return false;
      }
    }
    return ok;
  }

 private:
  const ConcatenationLayout& layout_;
  std::size_t operands_;
};

template <typename Fn>
void parallel_for(std::size_t count, Fn fn) {
  const std::size_t threads = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 16));
  if (threads == 1 || count < 64) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

void check_shapes(const ConcatenationLayout& layout, const GadgetCircuit& g) {
  if (g.circuit.register_size() != g.operands() * layout.total_n()) {
    throw DimensionError("gadget register does not match " + std::to_string(g.operands()) + " blocks of " +
                         layout.descriptor());
  }
}

std::size_t injected_weight(const std::vector<FaultInjection>& faults) {
  std::size_t w = 0;
  for (const auto& f : faults) w += f.paulis.size();
  return w;
}

}  // namespace

std::vector<FaultInjection> enumerate_locations(const Circuit& c) {
  std::vector<FaultInjection> out;
  for (std::size_t q = 0; q < c.register_size(); ++q) {
    for (Letter l : {Letter::X, Letter::Y, Letter::Z}) out.push_back({std::nullopt, {{q, l}}});
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& qs = c.gates()[i].qubits;
    const std::size_t count = std::size_t{1} << (2 * qs.size());
    for (std::size_t v = 1; v < count; ++v) {
      FaultInjection f{i, {}};
      for (std::size_t t = 0; t < qs.size(); ++t) {
        const auto l = static_cast<Letter>((v >> (2 * t)) & 3u);
        if (l != Letter::I) f.paulis.emplace_back(qs[t], l);
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::size_t count_gate_locations(const Circuit& c) {
  std::size_t n = 0;
  for (const auto& g : c.gates()) n += (std::size_t{1} << (2 * g.qubits.size())) - 1;
  return n;
}

PropagationResult propagate_faults(const Circuit& c, std::span<const FaultInjection> faults) {
  const Engine engine(c);
  std::vector<FaultInjection> sorted(faults.begin(), faults.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const FaultInjection& a, const FaultInjection& b) { return point_of(a) < point_of(b); });
  std::vector<Frame> frames(1);
  std::size_t p = 0;
  for (const auto& f : sorted) {
    engine.apply(frames, p, point_of(f));
    p = point_of(f);
    for (auto& fr : frames) inject(fr, f);
  }
  engine.apply(frames, p, engine.size());
  PropagationResult r;
  for (const auto& fr : frames) r.branches.push_back(to_pauli(fr, c.register_size()));
  r.deterministic = r.branches.size() == 1;
  return r;
}

PropagationResult propagate_fault(const Circuit& c, const FaultInjection& f) {
  return propagate_faults(c, std::span<const FaultInjection>(&f, 1));
}

FaultReport check_single_fault_ft(const ConcatenationLayout& layout, const GadgetCircuit& g,
                                  const Certificate* baseline) {
  check_shapes(layout, g);
  FaultReport rep;
  rep.layout_descriptor = layout.descriptor();
  rep.layout_fingerprint = layout.fingerprint();
  rep.gadget_label = g.circuit.label();
  rep.gadget_fingerprint = g.fingerprint();
  rep.register_size = g.circuit.register_size();
  rep.gates = g.circuit.size();
  rep.input_locations = 3 * g.circuit.register_size();
  rep.gate_locations = count_gate_locations(g.circuit);
  if (baseline && !baseline->pass) {
    rep.baseline_pass = false;
    rep.baseline_detail = "fault-free gadget fails " + baseline->method + " verification: " + baseline->detail;
  }
  const Engine engine(g.circuit);
  const FrameDecoder decoder(layout, g.operands());
  const auto locations = enumerate_locations(g.circuit);
  struct Result {
    std::size_t branches = 0;
    std::optional<FaultFailure> failure;
  };
  std::vector<Result> results(locations.size());
  parallel_for(locations.size(), [&](std::size_t i) {
    std::vector<Frame> frames(1);
    inject(frames[0], locations[i]);
    engine.apply(frames, point_of(locations[i]), engine.size());
    results[i].branches = frames.size();
    std::vector<Letter> residual;
    for (const auto& fr : frames) {
      if (!decoder.corrected(fr, &residual)) {
        results[i].failure = FaultFailure{{locations[i]}, to_pauli(fr, g.circuit.register_size()), residual};
        break;
      }
    }
  });
  for (auto& r : results) {
    rep.branches_checked += r.branches;
    rep.max_branches = std::max(rep.max_branches, r.branches);
    if (r.failure) {
      ++rep.failure_count;
      if (rep.failures.size() < kMaxStoredFailures) rep.failures.push_back(std::move(*r.failure));
    }
  }
  return rep;
}

PairSearch find_min_uncorrectable(const ConcatenationLayout& layout, const GadgetCircuit& g, std::uint64_t budget) {
  check_shapes(layout, g);
  const auto locations = enumerate_locations(g.circuit);
  const std::size_t L = locations.size();
  auto site = [](const FaultInjection& f) -> std::uint64_t {
    return f.after_gate ? (std::uint64_t{1} << 40) + *f.after_gate : f.paulis.front().first;
  };
  std::map<std::uint64_t, std::uint64_t> per_site;
  for (const auto& f : locations) ++per_site[site(f)];
  PairSearch res;
  res.run = true;
  res.pairs_total = static_cast<std::uint64_t>(L) * (L - 1) / 2;
  for (const auto& [s, c] : per_site) res.pairs_total -= c * (c - 1) / 2;
  if (res.pairs_total > budget) {
    throw BudgetError("pair search over " + std::to_string(res.pairs_total) + " fault pairs exceeds the budget of " +
                          std::to_string(budget),
                      res.pairs_total);
  }
  const Engine engine(g.circuit);
  const FrameDecoder decoder(layout, g.operands());
  const std::size_t n = g.circuit.register_size();
  std::vector<Letter> residual;
  auto record = [&](std::vector<FaultInjection> faults, const Frame& fr) {
    decoder.corrected(fr, &residual);
    FaultFailure f{std::move(faults), to_pauli(fr, n), residual};
    res.witness_kind = weight(f.branch) > injected_weight(f.faults) ? "propagation-amplified" : "memory";
    res.witness = std::move(f);
  };

  // Single faults first: a failing single fault is a smaller witness.
  for (std::size_t i = 0; i < L && !res.witness; ++i) {
    std::vector<Frame> frames(1);
    inject(frames[0], locations[i]);
    engine.apply(frames, point_of(locations[i]), engine.size());
    for (const auto& fr : frames) {
      if (!decoder.corrected(fr, nullptr)) {
        record({locations[i]}, fr);
        break;
      }
    }
  }

  std::vector<Frame> cur, work;
  for (std::size_t i = 0; i < L && !res.witness; ++i) {
    cur.assign(1, Frame{});
    inject(cur[0], locations[i]);
    std::size_t p = point_of(locations[i]);
    for (std::size_t j = i + 1; j < L && !res.witness; ++j) {
      if (site(locations[j]) == site(locations[i])) continue;
      const std::size_t pj = point_of(locations[j]);
      if (pj > p) {
        engine.apply(cur, p, pj);
        p = pj;
      }
      work = cur;
      for (auto& fr : work) inject(fr, locations[j]);
      engine.apply(work, p, engine.size());
      ++res.pairs_checked;
      for (const auto& fr : work) {
        if (!decoder.corrected(fr, nullptr)) {
          record({locations[i], locations[j]}, fr);
          break;
        }
      }
    }
  }
  res.exhausted = !res.witness;
  if (res.witness) {
    if (layout.all_bare() && n <= kMaxDenseQubits) {
      res.dense_confirmed = dense_confirm_failure(layout, g, *res.witness, &res.dense_detail);
    } else {
      res.dense_detail = "not applicable: " + std::string(layout.all_bare() ? "" : "concatenated blocks, ") +
                         "register of " + std::to_string(n) + " qubits";
    }
  }
  return res;
}

ReplayResult replay_faults(const ConcatenationLayout& layout, const Circuit& c, std::span<const FaultInjection> faults) {
  if (c.register_size() % layout.total_n() != 0) throw DimensionError("circuit register is not a multiple of the layout size");
  const std::size_t operands = c.register_size() / layout.total_n();
  const PropagationResult pr = propagate_faults(c, faults);
  ReplayResult r;
  r.branches = pr.branches.size();
  const std::size_t N = layout.total_n();
  for (const auto& b : pr.branches) {
    std::vector<Letter> residual(operands, Letter::I);
    bool fail = false;
    for (std::size_t j = 0; j < operands; ++j) {
      residual[j] = layout.hierarchical_decode(b.slice(j * N, N));
      fail = fail || residual[j] != Letter::I;
    }
    if (fail) r.failing.push_back({std::vector<FaultInjection>(faults.begin(), faults.end()), b, residual});
  }
  return r;
}

bool dense_confirm_failure(const ConcatenationLayout& layout, const GadgetCircuit& g, const FaultFailure& f,
                           std::string* detail) {
  auto say = [&](const std::string& s) {
    if (detail) *detail = s;
  };
  const std::size_t n = g.circuit.register_size();
  if (!layout.all_bare() || n > kMaxDenseQubits) {
    say("not applicable");
    return false;
  }
  const std::size_t m = g.operands();
  const StabilizerCode& code = layout.outer();
  CodeList codes(m, &code);
  const auto U = gate_unitary(g.logical);
  const std::size_t dim = std::size_t{1} << m;

  // Syndrome projectors and correction for the failing branch.
  std::vector<PauliOperator> projectors;
  PauliOperator correction(n);
  for (std::size_t j = 0; j < m; ++j) {
    const PauliOperator block = f.branch.slice(j * code.n(), code.n());
    const BitVector s = syndrome(code, block);
    for (std::size_t i = 0; i < code.generators().size(); ++i) {
      PauliOperator p = code.generators()[i].embed(n, j * code.n());
      if (s.get(i)) p.set_phase(static_cast<std::uint8_t>(p.phase() + 2));
      projectors.push_back(std::move(p));
    }
    correction.mul_assign(layout.outer_decoder().decode(s).embed(n, j * code.n()));
  }

  std::vector<std::vector<Complex>> inputs;
  for (std::size_t b = 0; b < dim; ++b) {
    std::vector<Complex> v(dim, 0.0);
    v[b] = 1.0;
    inputs.push_back(std::move(v));
  }
  inputs.emplace_back(dim, Complex(1.0 / std::sqrt(static_cast<double>(dim))));
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const auto& v = inputs[k];
    StateVector psi = encode_blocks(codes, v);
    auto inject_at = [&](std::optional<std::size_t> where) {
      for (const auto& fi : f.faults) {
        if (fi.after_gate != where) continue;
        PauliOperator p(n);
        for (const auto& [q, l] : fi.paulis) p.mul_assign(PauliOperator::single(n, q, l));
        psi.apply_pauli(p);
      }
    };
    inject_at(std::nullopt);
    for (std::size_t i = 0; i < g.circuit.size(); ++i) {
      psi.apply(g.circuit.gates()[i]);
      inject_at(i);
    }
    for (const auto& p : projectors) psi.project(p);
    const double prob = psi.norm() * psi.norm();
    if (prob < 1e-12) continue;
    psi.normalize();
    psi.apply_pauli(correction);
    std::vector<Complex> w(dim, 0.0);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) w[r] += U[r * dim + c] * v[c];
    }
    const double fid = std::norm(encode_blocks(codes, w).inner(psi));
    if (fid < 1 - 1e-6) {
      say("input " + std::to_string(k) + ": syndrome probability " + std::to_string(prob) +
          ", fidelity after correction " + std::to_string(fid));
      return true;
    }
  }
  say("every input recovers after correction");
  return false;
}

EffectiveDistance effective_distance_report(const ConcatenationLayout& layout,
                                            const std::vector<GadgetCircuit>& gadgets,
                                            const std::vector<Certificate>& certificates, bool pairs,
                                            std::uint64_t budget) {
  EffectiveDistance ed;
  for (std::size_t i = 0; i < gadgets.size(); ++i) {
    const Certificate* c = i < certificates.size() ? &certificates[i] : nullptr;
    ed.reports.push_back(check_single_fault_ft(layout, gadgets[i], c));
  }
  for (const auto& r : ed.reports) {
    if (!r.single_fault_pass()) {
      ed.value = 1;
      ed.witness_gadget = r.gadget_label;
      ed.statement = r.baseline_pass ? "a single fault is uncorrectable" : "a gadget fails verification";
      return ed;
    }
  }
  ed.value = 3;
  if (!pairs) {
    ed.lower_bound = true;
    ed.statement = "every single fault is corrected; pair search not run";
    return ed;
  }
  for (std::size_t i = 0; i < gadgets.size(); ++i) {
    ed.reports[i].pairs = find_min_uncorrectable(layout, gadgets[i], budget);
    if (ed.reports[i].pairs.witness) {
      ed.witness_gadget = ed.reports[i].gadget_label;
      ed.statement = "every single fault is corrected; a pair of faults is not";
      return ed;
    }
  }
  ed.lower_bound = true;
  ed.statement = "every single fault and every fault pair is corrected within the gadget set";
  return ed;
}

std::string fault_string(const FaultInjection& f) {
  std::string s = f.after_gate ? "after gate " + std::to_string(*f.after_gate) + ":" : std::string("input:");
  for (const auto& [q, l] : f.paulis) s += std::string(" ") + letter_char(l) + ":" + std::to_string(q);
  return s;
}

}  // namespace nucc
