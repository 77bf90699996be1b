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

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "nucc/circuit.hpp"
#include "nucc/stabilizer_code.hpp"

namespace nucc {

using Complex = std::complex<double>;
using Matrix2 = std::array<Complex, 4>;  // row-major

inline constexpr std::size_t kMaxDenseQubits = 22;

/// Dense 2x2 matrix of a single-qubit gate (H, S, S_DAG, T, T_DAG, K, K_DAG,
/// X, Y, Z, ZTHETA).
Matrix2 single_qubit_matrix(const Gate& g);

/// Dense matrix (row-major, 2^m x 2^m, qubit j = bit j of the index) of a
/// gate acting on qubits 0..m-1 of its own register.
std::vector<Complex> gate_unitary(const Gate& g);

/// Pure state on n <= 22 qubits; qubit q is bit q of the amplitude index.
class StateVector {
 public:
  explicit StateVector(std::size_t n);
  static StateVector basis(std::size_t n, std::uint64_t index);

  std::size_t num_qubits() const { return n_; }
  const std::vector<Complex>& amplitudes() const { return amp_; }
  std::vector<Complex>& amplitudes() { return amp_; }

  void apply(const Gate& g);
  void apply(const Circuit& c);
  void apply_pauli(const PauliOperator& p);
  /// |psi> <- (I + P)/2 |psi>, unnormalized.
  void project(const PauliOperator& p);
  double expectation(const PauliOperator& p) const;
  double norm() const;
  void normalize();
  Complex inner(const StateVector& o) const;

  /// Tensor product with `hi` occupying the higher qubit indices.
  StateVector kron(const StateVector& hi) const;

 private:
  std::size_t n_;
  std::vector<Complex> amp_;
};

/// alpha |0_L> + beta |1_L>, |1_L> = logical_x |0_L>.
StateVector encode(const StabilizerCode& code, Complex alpha, Complex beta);

/// Encoded |0_L> and |1_L> of a code (cached by the caller if needed).
std::array<StateVector, 2> logical_basis(const StabilizerCode& code);

/// Logical state with amplitudes `logical` (2^m entries, operand j = bit j)
/// encoded in blocks of the given codes laid out consecutively.
StateVector encode_blocks(std::span<const StabilizerCode* const> codes, std::span<const Complex> logical);

}  // namespace nucc
