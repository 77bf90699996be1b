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

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "nucc/catalog.hpp"
#include "nucc/decoder.hpp"
#include "nucc/error.hpp"
#include "nucc/fault.hpp"
#include "nucc/gadgets.hpp"
#include "nucc/statevector.hpp"
#include "nucc/verify.hpp"
#include "oracles.hpp"

namespace {

using nucc::FaultInjection;
using nucc::GateKind;
using nucc::Letter;

std::set<std::string> branch_letters(const nucc::PropagationResult& r) {
  std::set<std::string> out;
  for (const auto& b : r.branches) out.insert(oracle::letters_of(b.str()));
  return out;
}

nucc::Circuit one_gate(std::size_t n, nucc::Gate g) {
  nucc::Circuit c(n);
  c.append(std::move(g));
  return c;
}

FaultInjection input(std::size_t q, Letter l) { return {std::nullopt, {{q, l}}}; }

TEST(Locations, GateOutputCounts) {
  EXPECT_EQ(nucc::count_gate_locations(one_gate(1, nucc::make_gate(GateKind::T, {0}))), 3u);
  EXPECT_EQ(nucc::count_gate_locations(one_gate(2, nucc::make_gate(GateKind::CNOT, {0, 1}))), 15u);
  EXPECT_EQ(nucc::count_gate_locations(one_gate(3, nucc::make_gate(GateKind::CCZ, {0, 1, 2}))), 63u);
  const auto c = one_gate(2, nucc::make_gate(GateKind::CNOT, {0, 1}));
  EXPECT_EQ(nucc::enumerate_locations(c).size(), 6u + 15u);
}

TEST(Propagation, CliffordRules) {
  const auto cnot = one_gate(2, nucc::make_gate(GateKind::CNOT, {0, 1}));
  EXPECT_EQ(branch_letters(nucc::propagate_fault(cnot, input(0, Letter::X))), std::set<std::string>{"XX"});
  EXPECT_EQ(branch_letters(nucc::propagate_fault(cnot, input(1, Letter::Z))), std::set<std::string>{"ZZ"});
  EXPECT_EQ(branch_letters(nucc::propagate_fault(cnot, input(1, Letter::X))), std::set<std::string>{"IX"});
  const auto k = one_gate(1, nucc::make_gate(GateKind::K, {0}));
  EXPECT_EQ(branch_letters(nucc::propagate_fault(k, input(0, Letter::X))), std::set<std::string>{"Z"});
  EXPECT_EQ(branch_letters(nucc::propagate_fault(k, input(0, Letter::Z))), std::set<std::string>{"Y"});
  const auto kd = one_gate(1, nucc::make_gate(GateKind::K_DAG, {0}));
  EXPECT_EQ(branch_letters(nucc::propagate_fault(kd, input(0, Letter::X))), std::set<std::string>{"Y"});
  const auto cz = one_gate(2, nucc::make_gate(GateKind::CZ, {0, 1}));
  EXPECT_EQ(branch_letters(nucc::propagate_fault(cz, input(0, Letter::X))), std::set<std::string>{"XZ"});
}

TEST(Propagation, NonCliffordDiagonalGatesBranch) {
  const auto t = one_gate(1, nucc::make_gate(GateKind::T, {0}));
  const auto r = nucc::propagate_fault(t, input(0, Letter::X));
  EXPECT_FALSE(r.deterministic);
  EXPECT_EQ(branch_letters(r), (std::set<std::string>{"X", "Y"}));
  EXPECT_EQ(branch_letters(nucc::propagate_fault(t, input(0, Letter::Z))), std::set<std::string>{"Z"});
  const auto ccz = one_gate(3, nucc::make_gate(GateKind::CCZ, {0, 1, 2}));
  EXPECT_EQ(branch_letters(nucc::propagate_fault(ccz, input(0, Letter::X))),
            (std::set<std::string>{"XII", "XZI", "XIZ", "XZZ"}));
}

// Dense oracle: every Pauli with nonzero weight in U P U^dagger must appear
// among the propagated branches (branches may over-approximate).
TEST(Propagation, BranchesCoverTheDensePauliDecomposition) {
  std::mt19937_64 rng(31337);
  const GateKind kinds[] = {GateKind::H, GateKind::S, GateKind::T, GateKind::K, GateKind::K_DAG,
                            GateKind::CNOT, GateKind::CZ, GateKind::CCZ, GateKind::T_DAG};
  const char* const letters = "IXYZ";
  for (int trial = 0; trial < 300; ++trial) {
    nucc::Circuit c(3);
    for (int g = 0; g < 8; ++g) {
      const GateKind k = kinds[rng() % 9];
      const std::size_t arity = k == GateKind::CCZ ? 3 : (k == GateKind::CNOT || k == GateKind::CZ) ? 2 : 1;
      std::vector<std::size_t> q{0, 1, 2};
      std::shuffle(q.begin(), q.end(), rng);
      q.resize(arity);
      c.append(nucc::make_gate(k, q));
    }
    const std::size_t fq = rng() % 3;
    const Letter fl = static_cast<Letter>(1 + rng() % 3);
    const auto branches = branch_letters(nucc::propagate_fault(c, input(fq, fl)));

    // U from the statevector simulator column by column.
    oracle::Matrix U(64);
    for (std::uint64_t b = 0; b < 8; ++b) {
      auto psi = nucc::StateVector::basis(3, b);
      psi.apply(c);
      for (std::size_t r = 0; r < 8; ++r) U[r * 8 + b] = psi.amplitudes()[r];
    }
    std::string fault = "III";
    fault[fq] = nucc::letter_char(fl);
    const auto M = oracle::mul(oracle::mul(U, oracle::pauli(fault)), oracle::dagger(U));
    for (int v = 0; v < 64; ++v) {
      const std::string p{letters[v & 3], letters[(v >> 2) & 3], letters[(v >> 4) & 3]};
      const auto prod = oracle::mul(oracle::dagger(oracle::pauli(p)), M);
      oracle::C tr = 0;
      for (std::size_t i = 0; i < 8; ++i) tr += prod[i * 8 + i];
      if (std::abs(tr) / 8 > 1e-9) {
        ASSERT_TRUE(branches.count(p)) << "missing branch " << p << " trial " << trial;
      }
    }
  }
}

TEST(Propagation, MultipleInjectionsCompose) {
  nucc::Circuit c(2);
  c.append(nucc::make_gate(GateKind::CNOT, {0, 1}));
  c.append(nucc::make_gate(GateKind::H, {1}));
  const std::vector<FaultInjection> faults{input(0, Letter::X), {0, {{1, Letter::X}}}};
  // X0 -> X0 X1 through CNOT, times X1 after it -> X0, then H leaves X0.
  EXPECT_EQ(branch_letters(nucc::propagate_faults(c, faults)), std::set<std::string>{"XI"});
}

TEST(SingleFault, NonUniformTGadgetCorrectsEverySingleFault) {
  const auto layout = nucc::named_layout(49);
  const auto v = nucc::GadgetCache::global().get(layout, nucc::make_gate(GateKind::T, {0}));
  const auto rep = nucc::check_single_fault_ft(layout, v->gadget, &v->certificate);
  EXPECT_TRUE(rep.baseline_pass);
  EXPECT_EQ(rep.failure_count, 0u);
  EXPECT_EQ(rep.locations_checked(), 3 * 49 + nucc::count_gate_locations(v->gadget.circuit));
  EXPECT_GT(rep.max_branches, 1u);
}

TEST(SingleFault, BareSteaneStaircaseIsNotFaultTolerant) {
  const auto layout = nucc::bare_layout(nucc::steane());
  const auto g = nucc::logical_gadget_for(layout, nucc::make_gate(GateKind::T, {0}));
  const auto rep = nucc::check_single_fault_ft(layout, g);
  EXPECT_GT(rep.failure_count, 0u);
  ASSERT_FALSE(rep.failures.empty());
  // Every reported failure replays to a failing branch.
  const auto replay = nucc::replay_faults(layout, g.circuit, rep.failures.front().faults);
  EXPECT_FALSE(replay.failing.empty());
}

TEST(SingleFault, CorruptedDecoderIsDetected) {
  auto bad = std::make_shared<nucc::LookupDecoder>(nucc::reed_muller_15());
  const auto s = nucc::syndrome(*nucc::reed_muller_15(), nucc::PauliOperator::single(15, 0, Letter::Z));
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < s.size(); ++i) word |= std::uint64_t{s.get(i)} << i;
  bad->override_entry(word, nucc::PauliOperator(15));
  const auto layout = nucc::named_layout(49, {{"rm15", bad}});
  const auto g = nucc::logical_gadget_for(layout, nucc::make_gate(GateKind::T, {0}));
  EXPECT_GT(nucc::check_single_fault_ft(layout, g).failure_count, 0u);
}

TEST(SingleFault, BaselineFailureIsReported) {
  const auto layout = nucc::named_layout(49);
  const auto g = nucc::logical_gadget_for(layout, nucc::make_gate(GateKind::T, {0}), nucc::StaircaseOptions{false});
  const auto cert = nucc::verify_gadget(g);
  ASSERT_FALSE(cert.pass);
  const auto rep = nucc::check_single_fault_ft(layout, g, &cert);
  EXPECT_FALSE(rep.single_fault_pass());
}

TEST(PairSearch, NonUniformTGadgetHasAWitnessThatReplays) {
  const auto layout = nucc::named_layout(49);
  const auto v = nucc::GadgetCache::global().get(layout, nucc::make_gate(GateKind::T, {0}));
  const auto ps = nucc::find_min_uncorrectable(layout, v->gadget, nucc::kDefaultPairBudget);
  ASSERT_TRUE(ps.witness);
  EXPECT_EQ(ps.witness->faults.size(), 2u);
  EXPECT_FALSE(ps.exhausted);
  const auto replay = nucc::replay_faults(layout, v->gadget.circuit, ps.witness->faults);
  EXPECT_FALSE(replay.failing.empty());
}

TEST(PairSearch, BudgetRefusalCarriesTheEstimate) {
  const auto layout = nucc::named_layout(49);
  const auto v = nucc::GadgetCache::global().get(layout, nucc::make_gate(GateKind::T, {0}));
  try {
    nucc::find_min_uncorrectable(layout, v->gadget, 10);
    FAIL();
  } catch (const nucc::BudgetError& e) {
    EXPECT_GT(e.estimate(), 10u);
  }
}

TEST(PairSearch, BareSteaneMemoryWitnessIsDenselyConfirmed) {
  const auto layout = nucc::bare_layout(nucc::steane());
  const auto g = nucc::logical_gadget_for(layout, nucc::make_gate(GateKind::H, {0}));
  EXPECT_EQ(nucc::check_single_fault_ft(layout, g).failure_count, 0u);
  const auto ps = nucc::find_min_uncorrectable(layout, g, nucc::kDefaultPairBudget);
  ASSERT_TRUE(ps.witness);
  EXPECT_EQ(ps.witness_kind, "memory");
  ASSERT_TRUE(ps.dense_confirmed.has_value());
  EXPECT_TRUE(*ps.dense_confirmed) << ps.dense_detail;
}

TEST(EffectiveDistance, ReportsThreeWithAWitness) {
  const auto layout = nucc::named_layout(75);
  std::vector<nucc::GadgetCircuit> gadgets;
  std::vector<nucc::Certificate> certs;
  for (const auto& gate : nucc::universal_gates(layout)) {
    const auto v = nucc::GadgetCache::global().get(layout, gate);
    gadgets.push_back(v->gadget);
    certs.push_back(v->certificate);
  }
  const auto ed = nucc::effective_distance_report(layout, gadgets, certs, true, nucc::kDefaultPairBudget);
  EXPECT_EQ(ed.value, 3);
  EXPECT_FALSE(ed.lower_bound);
  EXPECT_FALSE(ed.witness_gadget.empty());
}

}  // namespace
