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

#include <bit>

#include <gtest/gtest.h>

#include "nucc/catalog.hpp"
#include "nucc/concatenation.hpp"
#include "nucc/error.hpp"
#include "oracles.hpp"

namespace {

using nucc::PauliOperator;

struct Packed {
  std::uint64_t x = 0, z = 0;
};

Packed pack(const PauliOperator& p) {
  Packed out;
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    if (nucc::letter_x(p.letter(q))) out.x |= std::uint64_t{1} << q;
    if (nucc::letter_z(p.letter(q))) out.z |= std::uint64_t{1} << q;
  }
  return out;
}

std::vector<oracle::Row> rows_of(const std::vector<PauliOperator>& ops) {
  std::vector<oracle::Row> rows;
  for (const auto& p : ops) rows.push_back(oracle::symplectic(oracle::letters_of(p.str())));
  return rows;
}

bool is_logical(const std::vector<PauliOperator>& gens, const PauliOperator& p) {
  const auto l = oracle::letters_of(p.str());
  for (const auto& g : gens) {
    if (!oracle::letters_commute(oracle::letters_of(g.str()), l)) return false;
  }
  auto rows = rows_of(gens);
  const std::size_t r0 = oracle::gf2_rank(rows);
  rows.push_back(oracle::symplectic(l));
  return oracle::gf2_rank(rows) > r0;
}

// True if some Pauli of weight <= max_weight commutes with every generator
// and lies outside their span. Bit-packed, registers up to 64 qubits.
bool has_logical_up_to(const std::vector<PauliOperator>& gens, std::size_t n, std::size_t max_weight) {
  std::vector<Packed> g;
  for (const auto& p : gens) g.push_back(pack(p));
  auto rows = rows_of(gens);
  const std::size_t r0 = oracle::gf2_rank(rows);
  std::vector<std::size_t> idx;
  for (std::size_t w = 1; w <= max_weight; ++w) {
    idx.assign(w, 0);
    for (std::size_t i = 0; i < w; ++i) idx[i] = i;
    std::size_t total = 1;
    for (std::size_t i = 0; i < w; ++i) total *= 3;
    while (true) {
      for (std::size_t v = 0; v < total; ++v) {
        Packed p;
        std::size_t t = v;
        for (std::size_t i = 0; i < w; ++i) {
          const std::size_t l = t % 3 + 1;  // 1 = X, 2 = Z, 3 = Y
          t /= 3;
          if (l & 1u) p.x |= std::uint64_t{1} << idx[i];
          if (l & 2u) p.z |= std::uint64_t{1} << idx[i];
        }
        bool commutes = true;
        for (const auto& s : g) {
          if (std::popcount((s.x & p.z) ^ (s.z & p.x)) & 1) {
            commutes = false;
            break;
          }
        }
        if (!commutes) continue;
        oracle::Row row(2 * n, 0);
        for (std::size_t q = 0; q < n; ++q) {
          row[q] = (p.x >> q) & 1u;
          row[n + q] = (p.z >> q) & 1u;
        }
        auto ext = rows;
        ext.push_back(row);
        if (oracle::gf2_rank(ext) > r0) return true;
      }
      std::size_t i = w;
      while (i > 0 && idx[i - 1] == n - w + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

struct Expected {
  std::size_t qubits;
  std::size_t distance;
  const char* descriptor;
};

class NamedLayouts : public ::testing::TestWithParam<Expected> {};

TEST_P(NamedLayouts, DistanceAndWitness) {
  const auto& e = GetParam();
  const auto layout = nucc::named_layout(e.qubits);
  ASSERT_EQ(layout.total_n(), e.qubits);
  EXPECT_EQ(layout.descriptor(), e.descriptor);
  const auto d = nucc::concatenated_distance(layout);
  EXPECT_EQ(d.distance, e.distance);
  EXPECT_EQ(nucc::weight(d.witness), e.distance);
  EXPECT_TRUE(is_logical(nucc::flatten_stabilizers(layout), d.witness)) << d.witness.str();
  EXPECT_EQ(*std::min_element(d.class_minimum.begin(), d.class_minimum.end()), e.distance);
}

TEST_P(NamedLayouts, FlattenedStabilizersCommuteWithFullRank) {
  const auto layout = nucc::named_layout(GetParam().qubits);
  const auto gens = nucc::flatten_stabilizers(layout);
  ASSERT_EQ(gens.size(), layout.total_n() - 1);
  std::vector<std::string> l;
  for (const auto& g : gens) l.push_back(oracle::letters_of(g.str()));
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j) ASSERT_TRUE(oracle::letters_commute(l[i], l[j])) << i << " " << j;
  EXPECT_EQ(oracle::gf2_rank(rows_of(gens)), layout.total_n() - 1);
}

TEST_P(NamedLayouts, HierarchicalDecodeCorrectsEveryWeightOneError) {
  const auto layout = nucc::named_layout(GetParam().qubits);
  const std::size_t n = layout.total_n();
  for (std::size_t q = 0; q < n; ++q) {
    for (auto l : {nucc::Letter::X, nucc::Letter::Y, nucc::Letter::Z}) {
      ASSERT_EQ(layout.hierarchical_decode(PauliOperator::single(n, q, l)), nucc::Letter::I) << q;
    }
  }
}

TEST_P(NamedLayouts, LiftedLogicalsAreLogical) {
  const auto layout = nucc::named_layout(GetParam().qubits);
  const auto gens = nucc::flatten_stabilizers(layout);
  EXPECT_TRUE(is_logical(gens, layout.lift(layout.outer().logical_x())));
  EXPECT_TRUE(is_logical(gens, layout.lift(layout.outer().logical_z())));
  EXPECT_EQ(layout.hierarchical_decode(layout.lift(layout.outer().logical_z())), nucc::Letter::Z);
}

TEST_P(NamedLayouts, LayoutDocumentRoundTrips) {
  const auto layout = nucc::named_layout(GetParam().qubits);
  const auto text = nucc::dump_layout(layout);
  const auto back = nucc::parse_layout(text, nucc::embedded_catalog());
  EXPECT_EQ(back.descriptor(), layout.descriptor());
  EXPECT_EQ(back.fingerprint(), layout.fingerprint());
  EXPECT_EQ(nucc::dump_layout(back), text);
}

INSTANTIATE_TEST_SUITE_P(
    Table, NamedLayouts,
    ::testing::Values(Expected{105, 9, "steane[rm15,rm15,rm15,rm15,rm15,rm15,rm15]"},
                      Expected{49, 5, "steane[rm15,rm15,bare,bare,bare,bare,rm15]"},
                      Expected{75, 9, "five_prime[rm15,rm15,rm15,rm15,rm15]"},
                      Expected{47, 5, "five_prime[rm15,bare,rm15,bare,rm15]"},
                      Expected{73, 9, "steane[rm15,rm15,steane,steane,steane,steane,rm15]"},
                      Expected{55, 9, "five_prime[rm15,five_prime,rm15,five_prime,rm15]"}),
    [](const auto& info) { return "q" + std::to_string(info.param.qubits); });

TEST(Concatenation, NonUniformDistanceFiveHasNoLighterLogical) {
  for (std::size_t q : {49u, 47u}) {
    const auto layout = nucc::named_layout(q);
    EXPECT_FALSE(has_logical_up_to(nucc::flatten_stabilizers(layout), layout.total_n(), 4)) << q;
  }
}

TEST(Concatenation, BareLayoutEqualsOuterCode) {
  const auto layout = nucc::bare_layout(nucc::steane());
  EXPECT_TRUE(layout.all_bare());
  EXPECT_EQ(layout.kind(), "bare");
  EXPECT_EQ(nucc::concatenated_distance(layout).distance, 3u);
}

TEST(Concatenation, DescriptorForms) {
  const auto& cat = nucc::embedded_catalog();
  EXPECT_EQ(nucc::parse_layout("uniform(steane,rm15)", cat).total_n(), 105u);
  EXPECT_EQ(nucc::parse_layout("nonuniform(steane,rm15)", cat).descriptor(),
            nucc::named_layout(49).descriptor());
  EXPECT_EQ(nucc::parse_layout("b2encoded(steane,rm15,steane)", cat).total_n(), 73u);
  EXPECT_EQ(nucc::parse_layout("steane[rm15,bare,bare,bare,bare,bare,bare]", cat).total_n(), 21u);
  EXPECT_THROW(nucc::parse_layout("steane[rm15]", cat), nucc::Error);
  EXPECT_THROW(nucc::parse_layout("uniform(steane,nothing)", cat), nucc::Error);
  EXPECT_THROW(nucc::parse_layout("bare[steane]", cat), nucc::Error);
}

TEST(Concatenation, StaircasePartitions) {
  const auto steane = nucc::staircase_partition(*nucc::steane());
  EXPECT_EQ(steane.b1, (std::vector<std::size_t>{0, 1, 6}));
  const auto prime = nucc::staircase_partition(*nucc::five_prime());
  EXPECT_EQ(prime.b1, (std::vector<std::size_t>{0, 2, 4}));
  EXPECT_EQ(prime.b2, (std::vector<std::size_t>{1, 3}));
}

}  // namespace
