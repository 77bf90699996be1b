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

#include <set>

#include <gtest/gtest.h>

#include "nucc/catalog.hpp"
#include "nucc/error.hpp"
#include "nucc/gadgets.hpp"
#include "nucc/verify.hpp"

namespace {

using nucc::GateKind;
using nucc::PiFraction;

struct StaircaseCase {
  const char* code;
  int k;
  PiFraction theta;
};

class Staircases : public ::testing::TestWithParam<StaircaseCase> {};

TEST_P(Staircases, CouplesThreeQubitsPerBlockAndVerifies) {
  const auto& p = GetParam();
  const auto code = nucc::embedded_catalog().get(p.code);
  const auto g = nucc::staircase_gadget(code, p.k, p.theta);
  ASSERT_EQ(g.operands(), static_cast<std::size_t>(p.k + 1));
  EXPECT_EQ(g.coupled.size(), 3u);
  std::vector<std::set<std::size_t>> touched(g.operands());
  for (auto q : g.circuit.touched_qubits()) touched[q / code->n()].insert(q % code->n());
  for (const auto& t : touched) EXPECT_EQ(t.size(), 3u);
  const auto cert = nucc::verify_gadget(g);
  EXPECT_TRUE(cert.pass) << cert.detail;
  EXPECT_GE(cert.fidelity, 1 - 1e-10);
}

INSTANTIATE_TEST_SUITE_P(Codes, Staircases,
                         ::testing::Values(StaircaseCase{"steane", 0, PiFraction(1, 4)},
                                           StaircaseCase{"steane", 1, PiFraction(1, 1)},
                                           StaircaseCase{"five_prime", 0, PiFraction(1, 4)},
                                           StaircaseCase{"five_prime", 1, PiFraction(1, 1)},
                                           StaircaseCase{"five_prime", 2, PiFraction(1, 1)},
                                           StaircaseCase{"five_qubit", 0, PiFraction(1, 8)}),
                         [](const auto& info) {
                           return std::string(info.param.code) + "_k" + std::to_string(info.param.k) + "_" +
                                  std::to_string(info.param.theta.den());
                         });

TEST(Staircase, PlanUsesKForXAndKDagForY) {
  const auto plan = nucc::plan_staircase(*nucc::five_qubit());
  EXPECT_EQ(plan.support.size(), 3u);
  for (const auto& lc : plan.local_cliffords) {
    EXPECT_TRUE(lc.kind == GateKind::K || lc.kind == GateKind::K_DAG || lc.kind == GateKind::X) << nucc::gate_token(lc);
  }
}

TEST(Staircase, DroppingTheUncomputeBreaksTheGate) {
  const auto g = nucc::staircase_gadget(nucc::steane(), 0, PiFraction(1, 4), nucc::StaircaseOptions{false});
  EXPECT_FALSE(nucc::verify_gadget(g).pass);
}

TEST(Synthesis, StandardFiveQubitCodeWithReedMullerIsRefused) {
  const auto layout = nucc::make_layout(nucc::five_qubit(), nucc::LayoutRule::NonUniform, nucc::reed_muller_15());
  try {
    nucc::logical_gadget_for(layout, nucc::make_gate(GateKind::T, {0}));
    FAIL() << "synthesis should be refused";
  } catch (const nucc::SynthesisError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("violates the second necessary condition"), std::string::npos) << msg;
    EXPECT_NE(msg.find("K is not transversal in rm15"), std::string::npos) << msg;
  }
}

class LayoutGadgets : public ::testing::TestWithParam<std::size_t> {};

TEST_P(LayoutGadgets, UniversalSetVerifies) {
  const auto layout = nucc::named_layout(GetParam());
  for (const auto& gate : nucc::universal_gates(layout)) {
    const auto v = nucc::GadgetCache::global().get(layout, gate);
    ASSERT_TRUE(v);
    EXPECT_TRUE(v->certificate.pass) << nucc::gate_token(gate) << ": " << v->certificate.detail;
    if (nucc::is_diagonal(gate) && !nucc::is_clifford(gate) && gate.kind == GateKind::T) {
      EXPECT_EQ(v->gadget.coupled.size(), 3u);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Table, LayoutGadgets, ::testing::Values(105, 49, 75, 47, 73, 55));

TEST(GadgetCache, ReturnsTheSameEntry) {
  const auto layout = nucc::named_layout(49);
  const auto a = nucc::GadgetCache::global().get(layout, nucc::make_gate(GateKind::T, {0}));
  const auto b = nucc::GadgetCache::global().get(layout, nucc::make_gate(GateKind::T, {0}));
  EXPECT_EQ(a.get(), b.get());
}

}  // namespace
