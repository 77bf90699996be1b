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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nucc/pauli.hpp"

namespace nucc {

/// Echelon form of an abelian Pauli group, for exact membership tests with
/// sign. Generators are assumed to commute; `all_commute` checks that.
class StabilizerGroup {
 public:
  StabilizerGroup() = default;
  explicit StabilizerGroup(std::span<const PauliOperator> generators);

  std::size_t num_qubits() const { return n_; }
  /// Number of independent generators (symplectic rank).
  std::size_t rank() const { return basis_.size(); }

  /// If the letters of p match some group element g, returns e with
  /// p = i^e * g. Otherwise nullopt.
  std::optional<std::uint8_t> membership_phase(const PauliOperator& p) const;
  /// p is exactly a group element (sign included).
  bool contains(const PauliOperator& p) const;

 private:
  std::size_t n_ = 0;
  std::vector<PauliOperator> basis_;
  std::vector<std::size_t> pivots_;
};

bool all_commute(std::span<const PauliOperator> ops);
std::size_t symplectic_rank(std::span<const PauliOperator> ops);

}  // namespace nucc
