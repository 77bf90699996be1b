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

#include "nucc/stabilizer_group.hpp"

#include <bit>

#include "nucc/error.hpp"

namespace nucc {
namespace {

// Column c < n is the x bit of qubit c, otherwise the z bit of qubit c - n.
bool column(const PauliOperator& p, std::size_t c) {
  const std::size_t n = p.num_qubits();
  return c < n ? p.x().get(c) : p.z().get(c - n);
}

std::optional<std::size_t> first_column(const PauliOperator& p) {
  const std::size_t n = p.num_qubits();
  auto xs = p.x().words();
  for (std::size_t w = 0; w < xs.size(); ++w) {
    if (xs[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(xs[w]));
  }
  auto zs = p.z().words();
  for (std::size_t w = 0; w < zs.size(); ++w) {
    if (zs[w]) return n + w * 64 + static_cast<std::size_t>(std::countr_zero(zs[w]));
  }
  return std::nullopt;
}

}  // namespace

StabilizerGroup::StabilizerGroup(std::span<const PauliOperator> generators) {
  if (generators.empty()) return;
  n_ = generators.front().num_qubits();
  for (const auto& g : generators) {
    if (g.num_qubits() != n_) throw DimensionError("stabilizer generators differ in size");
    PauliOperator r = g;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (column(r, pivots_[i])) r.mul_assign(basis_[i]);
    }
    if (auto c = first_column(r)) {
      basis_.push_back(std::move(r));
      pivots_.push_back(*c);
    }
  }
}

std::optional<std::uint8_t> StabilizerGroup::membership_phase(const PauliOperator& p) const {
  if (p.is_identity()) return p.phase();
  if (basis_.empty()) return std::nullopt;
  if (p.num_qubits() != n_) throw DimensionError("membership: qubit count mismatch");
  PauliOperator r = p;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (column(r, pivots_[i])) r.mul_assign(basis_[i]);
  }
  if (!r.is_identity()) return std::nullopt;
  return r.phase();
}

bool StabilizerGroup::contains(const PauliOperator& p) const {
  auto e = membership_phase(p);
  return e && *e == 0;
}

bool all_commute(std::span<const PauliOperator> ops) {
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      if (!commutes(ops[i], ops[j])) return false;
    }
  }
  return true;
}

std::size_t symplectic_rank(std::span<const PauliOperator> ops) {
  return StabilizerGroup(ops).rank();
}

}  // namespace nucc
