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

#include <random>

#include <gtest/gtest.h>

#include "nucc/catalog.hpp"
#include "nucc/circuit.hpp"
#include "nucc/stabilizer_code.hpp"
#include "nucc/statevector.hpp"
#include "nucc/verify.hpp"
#include "oracles.hpp"

namespace {

using nucc::GateKind;
using oracle::C;
using oracle::Matrix;

Matrix local_matrix(GateKind k) {
  const double r = 1 / std::sqrt(2.0);
  const C i(0, 1);
  const Matrix H{r, r, r, -r}, S{1, 0, 0, i};
  switch (k) {
    case GateKind::H: return H;
    case GateKind::S: return S;
    case GateKind::T: return {1, 0, 0, std::polar(1.0, M_PI / 4)};
    case GateKind::K: return oracle::mul(S, H);
    case GateKind::X: return oracle::pauli("X");
    case GateKind::Y: return oracle::pauli("Y");
    case GateKind::CNOT: {
      Matrix m(16, 0.0);
      for (std::size_t c = 0; c < 4; ++c) m[((c & 1u) ? c ^ 2u : c) * 4 + c] = 1;
      return m;
    }
    case GateKind::CZ: return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1};
    case GateKind::CCZ: {
      Matrix m(64, 0.0);
      for (std::size_t c = 0; c < 8; ++c) m[c * 8 + c] = c == 7 ? -1 : 1;
      return m;
    }
    default: return {};
  }
}

// Full-register matrix of a gate acting on `qubits` (qubit j = bit j).
Matrix embed(const Matrix& u, const std::vector<std::size_t>& qubits, std::size_t n) {
  const std::size_t d = std::size_t{1} << n;
  const std::size_t a = qubits.size();
  const std::size_t ld = std::size_t{1} << a;
  auto sub = [&](std::size_t idx) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < a; ++i) s |= ((idx >> qubits[i]) & 1u) << i;
    return s;
  };
  std::size_t mask = 0;
  for (auto q : qubits) mask |= std::size_t{1} << q;
  Matrix m(d * d, 0.0);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      if ((r & ~mask) == (c & ~mask)) m[r * d + c] = u[sub(r) * ld + sub(c)];
  return m;
}

TEST(StateVector, RandomCircuitsMatchDenseProducts) {
  std::mt19937_64 rng(424242);
  const GateKind kinds[] = {GateKind::H, GateKind::S, GateKind::T, GateKind::K, GateKind::X,
                            GateKind::Y, GateKind::CNOT, GateKind::CZ, GateKind::CCZ};
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3;
    nucc::Circuit c(n);
    Matrix U = oracle::pauli("III");
    for (int g = 0; g < 12; ++g) {
      const GateKind k = kinds[rng() % 9];
      const std::size_t arity = k == GateKind::CCZ ? 3 : (k == GateKind::CNOT || k == GateKind::CZ) ? 2 : 1;
      std::vector<std::size_t> q{0, 1, 2};
      std::shuffle(q.begin(), q.end(), rng);
      q.resize(arity);
      c.append(nucc::make_gate(k, q));
      U = oracle::mul(embed(local_matrix(k), q, n), U);
    }
    const std::uint64_t b = rng() % 8;
    auto psi = nucc::StateVector::basis(n, b);
    psi.apply(c);
    for (std::size_t r = 0; r < 8; ++r) ASSERT_LT(std::abs(psi.amplitudes()[r] - U[r * 8 + b]), 1e-12);
  }
}

TEST(StateVector, PauliExpectationAndProjection) {
  auto psi = nucc::StateVector::basis(2, 0);
  psi.apply(nucc::make_gate(GateKind::H, {0}));
  psi.apply(nucc::make_gate(GateKind::CNOT, {0, 1}));
  EXPECT_NEAR(psi.expectation(nucc::PauliOperator::parse("XX")), 1.0, 1e-12);
  EXPECT_NEAR(psi.expectation(nucc::PauliOperator::parse("-YY")), 1.0, 1e-12);
  psi.project(nucc::PauliOperator::parse("-ZZ"));
  EXPECT_NEAR(psi.norm(), 0.0, 1e-12);
}

class CodeStates : public ::testing::TestWithParam<const char*> {};

TEST_P(CodeStates, EncodedStatesAreStabilizedAndCarryTheLogical) {
  const auto code = nucc::embedded_catalog().get(GetParam());
  const auto psi = nucc::encode(*code, C(0.6), C(0, 0.8));
  for (const auto& g : code->generators()) EXPECT_NEAR(psi.expectation(g), 1.0, 1e-10) << g.str();
  EXPECT_NEAR(psi.expectation(code->logical_z()), 0.36 - 0.64, 1e-10);
  const auto basis = nucc::logical_basis(*code);
  EXPECT_NEAR(basis[0].expectation(code->logical_z()), 1.0, 1e-10);
  EXPECT_NEAR(basis[1].expectation(code->logical_z()), -1.0, 1e-10);
}

INSTANTIATE_TEST_SUITE_P(Catalog, CodeStates, ::testing::Values("steane", "five_qubit", "five_prime", "rm15"));

TEST(Verify, FalseTransversalDeclarationIsCaught) {
  const auto rm = nucc::reed_muller_15();
  nucc::TransversalRule wrong{nucc::make_gate(GateKind::T, {0}), nucc::make_gate(GateKind::T, {0}), {}, {}};
  EXPECT_FALSE(nucc::verify_transversal_rule(*rm, wrong).pass);
  const auto five = nucc::five_prime();
  nucc::TransversalRule no_fix{nucc::make_gate(GateKind::K, {0}), nucc::make_gate(GateKind::K, {0}), {}, {}};
  EXPECT_FALSE(nucc::verify_transversal_rule(*five, no_fix).pass);
}

TEST(Verify, TransversalCczAcrossThreeReedMullerBlocks) {
  const auto rm = nucc::reed_muller_15();
  const auto* rule = rm->find_transversal(nucc::make_gate(GateKind::CCZ, {0, 1, 2}));
  ASSERT_NE(rule, nullptr);
  const auto cert = nucc::verify_transversal_rule(*rm, *rule);
  EXPECT_TRUE(cert.pass) << cert.detail;
  EXPECT_EQ(cert.method, "css-coset");
}

TEST(Verify, DenseCheckDetectsAWrongClaim) {
  const auto steane = nucc::steane();
  nucc::Circuit c(7);
  for (std::size_t q = 0; q < 7; ++q) c.append(nucc::make_gate(GateKind::H, {q}));
  const nucc::CodeList codes{steane.get()};
  EXPECT_TRUE(nucc::verify_block_gate(codes, c, nucc::make_gate(GateKind::H, {0})).pass);
  EXPECT_FALSE(nucc::verify_block_gate(codes, c, nucc::make_gate(GateKind::S, {0})).pass);
}

TEST(Verify, CatalogRulesAllPass) {
  for (const auto& rc : nucc::verify_catalog(nucc::embedded_catalog())) {
    EXPECT_TRUE(rc.certificate.pass) << rc.code << " " << rc.rule << ": " << rc.certificate.detail;
  }
}

}  // namespace
