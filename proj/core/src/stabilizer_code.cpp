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

#include "nucc/stabilizer_code.hpp"

#include <algorithm>
#include <bit>

#include "nucc/error.hpp"

namespace nucc {

StabilizerCode::StabilizerCode(std::string name, std::vector<PauliOperator> generators,
                               PauliOperator logical_x, PauliOperator logical_z)
    : name_(std::move(name)),
      n_(logical_x.num_qubits()),
      generators_(std::move(generators)),
      logical_x_(std::move(logical_x)),
      logical_z_(std::move(logical_z)) {
  if (logical_z_.num_qubits() != n_) throw DimensionError(name_ + ": logical operators differ in size");
  for (const auto& g : generators_) {
    if (g.num_qubits() != n_) throw DimensionError(name_ + ": generator size mismatch");
    if (g.phase() & 1u) throw Error(name_ + ": generator " + g.str() + " is not Hermitian");
  }
  if (generators_.size() + 1 != n_) {
    throw Error(name_ + ": expected n-1 = " + std::to_string(n_ - 1) + " generators, got " +
                std::to_string(generators_.size()));
  }
  if (!all_commute(generators_)) throw Error(name_ + ": generators do not commute");
  group_ = StabilizerGroup(generators_);
  if (group_.rank() != generators_.size()) throw Error(name_ + ": generators are not independent");
  for (const auto& g : generators_) {
    if (!commutes(g, logical_x_) || !commutes(g, logical_z_)) {
      throw Error(name_ + ": logical operator does not commute with " + g.str());
    }
  }
  if (commutes(logical_x_, logical_z_)) throw Error(name_ + ": logical X and Z must anticommute");
  css_ = std::all_of(generators_.begin(), generators_.end(),
                     [](const PauliOperator& g) { return !g.x().any() || !g.z().any(); });
}

PauliOperator StabilizerCode::logical(Letter cls) const {
  switch (cls) {
    case Letter::I: return PauliOperator(n_);
    case Letter::X: return logical_x_;
    case Letter::Z: return logical_z_;
    case Letter::Y: {
      PauliOperator y = multiply(logical_x_, logical_z_);
      y.set_phase(static_cast<std::uint8_t>(y.phase() + 1));
      return y;
    }
  }
  return PauliOperator(n_);
}

const TransversalRule* StabilizerCode::find_transversal(const Gate& logical) const {
  const Gate key = canonical_logical(logical);
  for (const auto& r : transversal_) {
    if (canonical_logical(r.logical) == key) return &r;
  }
  return nullptr;
}

bool StabilizerCode::operator==(const StabilizerCode& o) const {
  return name_ == o.name_ && generators_ == o.generators_ && logical_x_ == o.logical_x_ &&
         logical_z_ == o.logical_z_ && label_ == o.label_ && derivation_ == o.derivation_ &&
         transversal_ == o.transversal_ && universal_ == o.universal_;
}

StabilizerCode transform_code(const StabilizerCode& code, std::span<const CliffordGate> gates) {
  for (const auto& g : gates) {
    if (clifford_arity(g.kind) != 1) {
      throw UnsupportedGateError("transform_code accepts local (single-qubit) Cliffords only, got " +
                                 std::string(clifford_name(g.kind)));
    }
    if (g.qubits.size() != 1 || g.qubits[0] >= code.n()) throw DimensionError("transform gate out of range");
  }
  std::vector<PauliOperator> gens;
  gens.reserve(code.generators().size());
  for (const auto& g : code.generators()) gens.push_back(conjugate_by_circuit(g, gates));
  StabilizerCode out(code.name(), std::move(gens), conjugate_by_circuit(code.logical_x(), gates),
                     conjugate_by_circuit(code.logical_z(), gates));
  out.set_label(code.label());
  return out;
}

BitVector syndrome(const StabilizerCode& code, const PauliOperator& error) {
  if (error.num_qubits() != code.n()) {
    throw DimensionError("syndrome: error has " + std::to_string(error.num_qubits()) +
                         " qubits, code has " + std::to_string(code.n()));
  }
  BitVector s(code.generators().size());
  for (std::size_t i = 0; i < code.generators().size(); ++i) {
    if (!commutes(error, code.generators()[i])) s.set(i, true);
  }
  return s;
}

void for_each_stabilizer(const StabilizerCode& code,
                         const std::function<void(const PauliOperator&)>& fn) {
  const std::size_t r = code.generators().size();
  if (code.n() > kMaxEnumerableQubits) {
    throw SizeLimitError(code.name() + ": coset enumeration limited to n <= " +
                         std::to_string(kMaxEnumerableQubits));
  }
  PauliOperator cur(code.n());
  fn(cur);
  const std::uint64_t total = std::uint64_t{1} << r;
  for (std::uint64_t i = 1; i < total; ++i) {
    // Gray code: flip generator at the lowest set bit of i.
    const auto bit = static_cast<std::size_t>(std::countr_zero(i));
    cur.mul_assign(code.generators()[bit]);
    fn(cur);
  }
}

std::vector<PauliOperator> all_min_weight_logicals(const StabilizerCode& code, Letter cls) {
  if (cls == Letter::I) throw Error("min_weight_logical: class must be X, Y or Z");
  const PauliOperator rep = code.logical(cls);
  std::vector<PauliOperator> best;
  std::size_t best_w = code.n() + 1;
  for_each_stabilizer(code, [&](const PauliOperator& s) {
    PauliOperator c = multiply(rep, s);
    const std::size_t w = weight(c);
    if (w < best_w) {
      best_w = w;
      best.clear();
    }
    if (w == best_w) best.push_back(std::move(c));
  });
  std::sort(best.begin(), best.end(), [](const PauliOperator& a, const PauliOperator& b) {
    return canonical_compare(a, b) < 0;
  });
  return best;
}

PauliOperator min_weight_logical(const StabilizerCode& code, Letter cls) {
  return all_min_weight_logicals(code, cls).front();
}

std::size_t distance(const StabilizerCode& code) {
  std::size_t d = code.n();
  for (Letter cls : {Letter::X, Letter::Y, Letter::Z}) {
    d = std::min(d, weight(min_weight_logical(code, cls)));
  }
  return d;
}

Letter logical_class(const StabilizerCode& code, const PauliOperator& op) {
  for (const auto& g : code.generators()) {
    if (!commutes(op, g)) {
      throw InternalError(code.name() + ": operator " + op.str() + " is outside the normalizer");
    }
  }
  const bool anti_x = !commutes(op, code.logical_x());
  const bool anti_z = !commutes(op, code.logical_z());
  // An X-class element anticommutes with logical Z, and vice versa.
  return make_letter(anti_z, anti_x);
}

}  // namespace nucc

namespace nucc {

PauliOperator diagonalizable_logical_z(const StabilizerCode& code) {
  auto reps = all_min_weight_logicals(code, Letter::Z);
  auto non_z = [](const PauliOperator& p) { return p.x().popcount(); };
  // reps is sorted canonically, so a stable pass keeps the canonical tie-break.
  std::stable_sort(reps.begin(), reps.end(), [&](const PauliOperator& a, const PauliOperator& b) {
    return non_z(a) < non_z(b);
  });
  return reps.front();
}

}  // namespace nucc
