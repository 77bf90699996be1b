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

#include "nucc/concatenation.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>

#include "nucc/error.hpp"
#include "nucc/hash.hpp"

namespace nucc {
namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_args(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

// Minimum weight of each inner logical class, indexed by Letter.
const std::array<std::size_t, 4>& class_costs(const CodePtr& code) {
  static std::mutex mu;
  // Holding the CodePtr keeps the key address from being reused.
  static std::map<const StabilizerCode*, std::pair<CodePtr, std::array<std::size_t, 4>>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(code.get());
  if (it == cache.end()) {
    std::array<std::size_t, 4> c{};
    for (Letter l : {Letter::X, Letter::Y, Letter::Z}) {
      c[static_cast<std::size_t>(l)] = weight(min_weight_logical(*code, l));
    }
    it = cache.emplace(code.get(), std::make_pair(code, c)).first;
  }
  return it->second.second;
}

}  // namespace

Partition partition_from_gadget(const StabilizerCode& outer,
                                std::span<const std::vector<std::size_t>> supports) {
  std::vector<bool> in(outer.n(), false);
  for (const auto& s : supports) {
    for (std::size_t q : s) {
      if (q >= outer.n()) throw DimensionError("partition: qubit " + std::to_string(q) + " out of range");
      in[q] = true;
    }
  }
  Partition p;
  for (std::size_t q = 0; q < outer.n(); ++q) (in[q] ? p.b1 : p.b2).push_back(q);
  if (p.b1.empty()) throw Error("partition: empty gadget support");
  return p;
}

Partition partition_from_gadget(const StabilizerCode& outer, std::span<const std::size_t> support) {
  std::vector<std::vector<std::size_t>> one{std::vector<std::size_t>(support.begin(), support.end())};
  return partition_from_gadget(outer, one);
}

Partition staircase_partition(const StabilizerCode& outer) {
  const PauliOperator rep = diagonalizable_logical_z(outer);
  std::vector<std::size_t> support;
  for (std::size_t q = 0; q < outer.n(); ++q) {
    if (rep.letter(q) != Letter::I) support.push_back(q);
  }
  return partition_from_gadget(outer, support);
}

ConcatenationLayout::ConcatenationLayout(CodePtr outer, std::vector<CodePtr> assignment,
                                         const DecoderOverrides& overrides)
    : outer_(std::move(outer)), assignment_(std::move(assignment)) {
  if (assignment_.size() != outer_->n()) {
    throw DimensionError("layout: " + std::to_string(assignment_.size()) + " assignments for outer code " +
                         outer_->name() + " with n=" + std::to_string(outer_->n()));
  }
  auto decoder_for = [&](const CodePtr& c) {
    auto it = overrides.find(c->name());
    return it != overrides.end() ? it->second : cached_decoder(c);
  };
  for (std::size_t q = 0; q < assignment_.size(); ++q) {
    offsets_.push_back(total_n_);
    const std::size_t size = block_size(q);
    for (std::size_t i = 0; i < size; ++i) owner_.push_back(q);
    total_n_ += size;
    inner_decoders_.push_back(assignment_[q] ? decoder_for(assignment_[q]) : nullptr);
  }
  outer_decoder_ = decoder_for(outer_);
}

bool ConcatenationLayout::is_uniform() const {
  return std::all_of(assignment_.begin(), assignment_.end(), [&](const CodePtr& c) {
    return c == assignment_.front() || (c && assignment_.front() && c->name() == assignment_.front()->name());
  });
}

bool ConcatenationLayout::all_bare() const {
  return std::all_of(assignment_.begin(), assignment_.end(), [](const CodePtr& c) { return !c; });
}

std::string ConcatenationLayout::kind() const {
  if (all_bare()) return "bare";
  return is_uniform() ? "uniform" : "non-uniform";
}

std::string ConcatenationLayout::descriptor() const {
  std::string s = outer_->name() + "[";
  for (std::size_t q = 0; q < assignment_.size(); ++q) {
    if (q) s += ",";
    s += assignment_[q] ? assignment_[q]->name() : "bare";
  }
  return s + "]";
}

std::string ConcatenationLayout::fingerprint() const {
  std::string key = descriptor();
  auto add_code = [&](const StabilizerCode& c) {
    key += "|" + c.name();
    for (const auto& g : c.generators()) key += " " + g.str();
    key += " " + c.logical_x().str() + " " + c.logical_z().str();
  };
  add_code(*outer_);
  for (const auto& c : assignment_) {
    if (c) add_code(*c);
  }
  return hex64(fnv1a(key));
}

Partition ConcatenationLayout::encoded_partition() const {
  Partition p;
  for (std::size_t q = 0; q < assignment_.size(); ++q) (assignment_[q] ? p.b1 : p.b2).push_back(q);
  return p;
}

ConcatenationLayout ConcatenationLayout::with_decoders(const DecoderOverrides& overrides) const {
  return ConcatenationLayout(outer_, assignment_, overrides);
}

PauliOperator ConcatenationLayout::lift_letter(std::size_t q, Letter l) const {
  if (is_bare(q)) return PauliOperator::single(total_n_, offsets_[q], l);
  return assignment_[q]->logical(l).embed(total_n_, offsets_[q]);
}

PauliOperator ConcatenationLayout::lift(const PauliOperator& outer_op) const {
  if (outer_op.num_qubits() != outer_n()) throw DimensionError("lift: operator size differs from outer code");
  PauliOperator out(total_n_);
  for (std::size_t q = 0; q < outer_n(); ++q) {
    const Letter l = outer_op.letter(q);
    if (l != Letter::I) out.mul_assign(lift_letter(q, l));
  }
  out.set_phase(static_cast<std::uint8_t>(out.phase() + outer_op.phase()));
  return out;
}

PauliOperator ConcatenationLayout::inner_residuals(const BitVector& x, const BitVector& z) const {
  if (x.size() != total_n_ || z.size() != total_n_) throw DimensionError("decode: error size differs from layout");
  PauliOperator out(outer_n());
  for (std::size_t q = 0; q < outer_n(); ++q) {
    const std::size_t off = offsets_[q];
    if (is_bare(q)) {
      out.set_letter(q, make_letter(x.get(off), z.get(off)));
    } else {
      const std::size_t n = assignment_[q]->n();
      out.set_letter(q, inner_decoders_[q]->residual_word(x.extract(off, n), z.extract(off, n)));
    }
  }
  return out;
}

Letter ConcatenationLayout::hierarchical_decode(const BitVector& x, const BitVector& z) const {
  const PauliOperator o = inner_residuals(x, z);
  return outer_decoder_->residual_word(o.x().extract(0, outer_n()), o.z().extract(0, outer_n()));
}

Letter ConcatenationLayout::hierarchical_decode(const PauliOperator& error) const {
  return hierarchical_decode(error.x(), error.z());
}

ConcatenationLayout make_layout(CodePtr outer, LayoutRule rule, CodePtr inner,
                                const std::optional<Partition>& partition, CodePtr b2_inner,
                                const DecoderOverrides& overrides) {
  if (!inner) throw Error("make_layout: inner code required");
  std::vector<CodePtr> assignment(outer->n(), inner);
  if (rule != LayoutRule::Uniform) {
    const Partition p = partition ? *partition : staircase_partition(*outer);
    std::vector<int> seen(outer->n(), 0);
    for (std::size_t q : p.b1) {
      if (q >= outer->n()) throw Error("make_layout: b1 qubit out of range");
      ++seen[q];
    }
    for (std::size_t q : p.b2) {
      if (q >= outer->n()) throw Error("make_layout: b2 qubit out of range");
      ++seen[q];
    }
    if (p.b1.empty() || std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; })) {
      throw Error("make_layout: b1 and b2 must partition the outer qubits with b1 nonempty");
    }
    if (rule == LayoutRule::B2Encoded && !b2_inner) throw Error("make_layout: b2 inner code required");
    for (std::size_t q : p.b2) assignment[q] = rule == LayoutRule::B2Encoded ? b2_inner : nullptr;
  }
  return ConcatenationLayout(std::move(outer), std::move(assignment), overrides);
}

ConcatenationLayout bare_layout(CodePtr outer, const DecoderOverrides& overrides) {
  std::vector<CodePtr> assignment(outer->n(), nullptr);
  return ConcatenationLayout(std::move(outer), std::move(assignment), overrides);
}

ConcatenationLayout parse_layout(std::string_view text, const Catalog& catalog,
                                 const DecoderOverrides& overrides) {
  const std::string t = trim(text);
  if (t.empty()) throw ParseError("empty layout descriptor");
  auto code_or_bare = [&](const std::string& name) -> CodePtr {
    if (name == "bare") return nullptr;
    try {
      return catalog.get(name);
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  };
  if (t.rfind("layout", 0) == 0) {
    std::istringstream in(t);
    std::string line;
    CodePtr outer;
    std::optional<std::vector<CodePtr>> assignment;
    bool header = false;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string key;
      if (!(ls >> key) || key[0] == '#') continue;
      if (key == "layout") {
        std::string v;
        ls >> v;
        if (v != "v1") throw ParseError("unsupported layout version '" + v + "'");
        header = true;
      } else if (key == "outer") {
        std::string name;
        ls >> name;
        outer = code_or_bare(name);
        if (!outer) throw ParseError("outer code cannot be bare");
      } else if (key == "assign") {
        assignment.emplace();
        std::string name;
        while (ls >> name) assignment->push_back(code_or_bare(name));
      } else {
        throw ParseError("unknown layout directive '" + key + "'");
      }
    }
    if (!header || !outer || !assignment) throw ParseError("layout document needs 'layout v1', 'outer' and 'assign'");
    if (assignment->size() != outer->n()) throw ParseError("assign list length differs from outer code size");
    return ConcatenationLayout(outer, std::move(*assignment), overrides);
  }
  const auto open = t.find_first_of("([");
  if (open == std::string::npos) throw ParseError("malformed layout descriptor '" + t + "'");
  const char close = t[open] == '(' ? ')' : ']';
  if (t.back() != close) throw ParseError("malformed layout descriptor '" + t + "'");
  const std::string head = trim(t.substr(0, open));
  const auto args = split_args(std::string_view(t).substr(open + 1, t.size() - open - 2));
  if (close == ']') {
    CodePtr outer = code_or_bare(head);
    if (!outer) throw ParseError("outer code cannot be bare");
    std::vector<CodePtr> assignment;
    for (const auto& a : args) assignment.push_back(code_or_bare(a));
    if (assignment.size() != outer->n()) throw ParseError("assignment list length differs from outer code size");
    return ConcatenationLayout(outer, std::move(assignment), overrides);
  }
  auto need = [&](std::size_t k) {
    if (args.size() != k) throw ParseError(head + " expects " + std::to_string(k) + " arguments");
  };
  auto code = [&](const std::string& name) {
    CodePtr c = code_or_bare(name);
    if (!c) throw ParseError("'bare' is not a code here");
    return c;
  };
  if (head == "bare") {
    need(1);
    return bare_layout(code(args[0]), overrides);
  }
  if (head == "uniform") {
    need(2);
    return make_layout(code(args[0]), LayoutRule::Uniform, code(args[1]), std::nullopt, nullptr, overrides);
  }
  if (head == "nonuniform") {
    need(2);
    return make_layout(code(args[0]), LayoutRule::NonUniform, code(args[1]), std::nullopt, nullptr, overrides);
  }
  if (head == "b2encoded") {
    need(3);
    return make_layout(code(args[0]), LayoutRule::B2Encoded, code(args[1]), std::nullopt, code(args[2]),
                       overrides);
  }
  throw ParseError("unknown layout rule '" + head + "'");
}

std::string dump_layout(const ConcatenationLayout& layout) {
  std::string s = "layout v1\nouter " + layout.outer().name() + "\nassign";
  for (std::size_t q = 0; q < layout.outer_n(); ++q) {
    s += " " + (layout.is_bare(q) ? std::string("bare") : layout.inner(q)->name());
  }
  return s + "\n";
}

std::vector<PauliOperator> flatten_stabilizers(const ConcatenationLayout& layout) {
  std::vector<PauliOperator> out;
  for (std::size_t q = 0; q < layout.outer_n(); ++q) {
    if (layout.is_bare(q)) continue;
    for (const auto& g : layout.inner(q)->generators()) out.push_back(g.embed(layout.total_n(), layout.offset(q)));
  }
  for (const auto& g : layout.outer().generators()) out.push_back(layout.lift(g));
  if (!all_commute(out)) throw InternalError(layout.descriptor() + ": flattened generators do not commute");
  return out;
}

StabilizerCode flattened_code(const ConcatenationLayout& layout) {
  return StabilizerCode(layout.descriptor(), flatten_stabilizers(layout), layout.lift(layout.outer().logical_x()),
                        layout.lift(layout.outer().logical_z()));
}

DistanceResult concatenated_distance(const ConcatenationLayout& layout) {
  const StabilizerCode& outer = layout.outer();
  if (outer.n() > kMaxEnumerableQubits) throw SizeLimitError("outer code too large for coset enumeration");
  std::vector<std::array<std::size_t, 4>> cost(layout.outer_n());
  for (std::size_t q = 0; q < layout.outer_n(); ++q) {
    cost[q] = layout.is_bare(q) ? std::array<std::size_t, 4>{0, 1, 1, 1} : class_costs(layout.inner(q));
  }
  DistanceResult res;
  res.distance = layout.total_n() + 1;
  std::optional<PauliOperator> best;
  std::size_t ci = 0;
  for (Letter cls : {Letter::X, Letter::Y, Letter::Z}) {
    const PauliOperator rep = outer.logical(cls);
    std::size_t class_best = layout.total_n() + 1;
    for_each_stabilizer(outer, [&](const PauliOperator& s) {
      PauliOperator e = multiply(rep, s);
      std::size_t c = 0;
      for (std::size_t q = 0; q < outer.n(); ++q) c += cost[q][static_cast<std::size_t>(e.letter(q))];
      class_best = std::min(class_best, c);
      if (c < res.distance || (c == res.distance && canonical_compare(e, *best) < 0)) {
        res.distance = c;
        best = std::move(e);
        res.logical_class = cls;
      }
    });
    res.class_minimum[ci++] = class_best;
  }
  res.outer_logical = *best;
  PauliOperator w(layout.total_n());
  for (std::size_t q = 0; q < outer.n(); ++q) {
    const Letter l = best->letter(q);
    if (l == Letter::I) continue;
    if (layout.is_bare(q)) {
      w.mul_assign(PauliOperator::single(layout.total_n(), layout.offset(q), l));
    } else {
      w.mul_assign(min_weight_logical(*layout.inner(q), l).embed(layout.total_n(), layout.offset(q)));
    }
  }
  res.witness = w;

  const StabilizerCode flat = flattened_code(layout);
  if (weight(w) != res.distance) throw InternalError("distance witness weight mismatch");
  if (syndrome(flat, w).any()) throw InternalError("distance witness has a nonzero syndrome");
  if (logical_class(flat, w) != res.logical_class) throw InternalError("distance witness is in the wrong class");
  return res;
}

ConcatenationLayout named_layout(std::size_t qubits, const DecoderOverrides& overrides) {
  const CodePtr rm = reed_muller_15();
  switch (qubits) {
    case 105: return make_layout(steane(), LayoutRule::Uniform, rm, std::nullopt, nullptr, overrides);
    case 49: return make_layout(steane(), LayoutRule::NonUniform, rm, std::nullopt, nullptr, overrides);
    case 73: return make_layout(steane(), LayoutRule::B2Encoded, rm, std::nullopt, steane(), overrides);
    case 75: return make_layout(five_prime(), LayoutRule::Uniform, rm, std::nullopt, nullptr, overrides);
    case 47: return make_layout(five_prime(), LayoutRule::NonUniform, rm, std::nullopt, nullptr, overrides);
    case 55: return make_layout(five_prime(), LayoutRule::B2Encoded, rm, std::nullopt, five_prime(), overrides);
    default: throw Error("no named layout with " + std::to_string(qubits) + " qubits");
  }
}

std::vector<std::size_t> named_layout_sizes() { return {105, 49, 75, 47, 73, 55}; }

}  // namespace nucc
