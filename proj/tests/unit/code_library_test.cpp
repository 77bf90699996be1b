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

#include <gtest/gtest.h>

#include "nucc/catalog.hpp"
#include "nucc/decoder.hpp"
#include "nucc/error.hpp"
#include "nucc/stabilizer_code.hpp"
#include "nucc/verify.hpp"
#include "oracles.hpp"

namespace {

using nucc::PauliOperator;

std::vector<std::string> letters(const nucc::StabilizerCode& c) {
  std::vector<std::string> out;
  for (const auto& g : c.generators()) out.push_back(oracle::letters_of(g.str()));
  return out;
}

class BaseCodes : public ::testing::TestWithParam<const char*> {};

TEST_P(BaseCodes, DistanceMatchesBruteForce) {
  const auto code = nucc::embedded_catalog().get(GetParam());
  EXPECT_EQ(nucc::distance(*code), oracle::brute_force_distance(letters(*code), 3));
  EXPECT_EQ(nucc::distance(*code), 3u);
}

TEST_P(BaseCodes, GeneratorsCommuteAndAreIndependent) {
  const auto code = nucc::embedded_catalog().get(GetParam());
  const auto g = letters(*code);
  ASSERT_EQ(g.size(), code->n() - 1);
  for (const auto& a : g)
    for (const auto& b : g) EXPECT_TRUE(oracle::letters_commute(a, b));
  std::vector<oracle::Row> rows;
  for (const auto& s : g) rows.push_back(oracle::symplectic(s));
  EXPECT_EQ(oracle::gf2_rank(rows), code->n() - 1);
}

TEST_P(BaseCodes, LogicalsCommuteWithStabilizersAndAnticommutePairwise) {
  const auto code = nucc::embedded_catalog().get(GetParam());
  const auto lx = oracle::letters_of(code->logical_x().str());
  const auto lz = oracle::letters_of(code->logical_z().str());
  for (const auto& s : letters(*code)) {
    EXPECT_TRUE(oracle::letters_commute(s, lx));
    EXPECT_TRUE(oracle::letters_commute(s, lz));
  }
  EXPECT_FALSE(oracle::letters_commute(lx, lz));
}

TEST_P(BaseCodes, DecoderCorrectsEveryWeightOneError) {
  const auto code = nucc::embedded_catalog().get(GetParam());
  const auto dec = nucc::build_decoder(code);
  for (std::size_t q = 0; q < code->n(); ++q) {
    for (auto l : {nucc::Letter::X, nucc::Letter::Y, nucc::Letter::Z}) {
      const auto e = PauliOperator::single(code->n(), q, l);
      EXPECT_EQ(nucc::residual_logical_action(*code, e, *dec), nucc::Letter::I) << e.str();
    }
  }
  EXPECT_EQ(dec->table_size(), std::size_t{1} << (code->n() - 1));
}

TEST_P(BaseCodes, DeclaredTransversalRulesVerify) {
  const auto code = nucc::embedded_catalog().get(GetParam());
  for (const auto& rule : code->transversal()) {
    const auto cert = nucc::verify_transversal_rule(*code, rule);
    EXPECT_TRUE(cert.pass) << nucc::rule_string(rule) << ": " << cert.detail;
  }
}

INSTANTIATE_TEST_SUITE_P(Catalog, BaseCodes, ::testing::Values("steane", "five_qubit", "five_prime", "rm15"));

TEST(Catalog, DumpIsCanonical) {
  const auto& c = nucc::embedded_catalog();
  EXPECT_EQ(c.dump(), std::string(nucc::embedded_catalog_text()));
  EXPECT_EQ(nucc::Catalog::parse(c.dump()).dump(), c.dump());
  EXPECT_EQ(nucc::Catalog::parse(c.dump()).fingerprint(), c.fingerprint());
}

TEST(Catalog, UnknownCodeNamesTheKnownOnes) {
  try {
    nucc::embedded_catalog().get("toric");
    FAIL();
  } catch (const nucc::Error& e) {
    EXPECT_NE(std::string(e.what()).find("steane"), std::string::npos);
  }
}

TEST(Catalog, MalformedTextIsRejected) {
  EXPECT_THROW(nucc::Catalog::parse("catalog 1\n\ncode x\nstabilizer XQ\nend\n"), nucc::ParseError);
  EXPECT_THROW(nucc::Catalog::parse("catalog 1\n\ncode x\nderive nowhere K@0\nend\n"), nucc::ParseError);
}

TEST(Catalog, FivePrimeDerivation) {
  const auto c = nucc::five_prime();
  ASSERT_TRUE(c->derivation().has_value());
  EXPECT_EQ(nucc::derivation_string(*c->derivation()), "five_qubit \xE2\x88\x98 K1 Y3 K5");
}

TEST(Catalog, FivePrimeIsTheRotatedFiveQubitCode) {
  // Oracle: conjugate every generator of the base code by K on qubits 1 and
  // 5 and Y on qubit 3 (1-based) using dense matrices.
  const oracle::Matrix H{1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 1 / std::sqrt(2.0), -1 / std::sqrt(2.0)};
  const oracle::Matrix S{1, 0, 0, oracle::C(0, 1)};
  const oracle::Matrix K = oracle::mul(S, H);
  const oracle::Matrix Y = oracle::pauli("Y");
  const oracle::Matrix I = oracle::pauli("I");
  const oracle::Matrix local[5] = {K, I, Y, I, K};
  const auto base = nucc::five_qubit();
  const auto rotated = nucc::five_prime();
  nucc::StabilizerGroup group(rotated->generators());
  for (const auto& g : base->generators()) {
    const std::string l = oracle::letters_of(g.str());
    std::string out(5, 'I');
    int sign = 0;
    for (std::size_t q = 0; q < 5; ++q) {
      const auto m = oracle::mul(oracle::mul(local[q], oracle::pauli(std::string(1, l[q]))), oracle::dagger(local[q]));
      for (char c : std::string("IXYZ")) {
        const int k = oracle::phase_relation(m, oracle::pauli(std::string(1, c)));
        if (k >= 0) {
          out[q] = c;
          sign += k;
        }
      }
    }
    auto p = PauliOperator::parse("+" + out);
    p.set_phase(static_cast<std::uint8_t>((g.phase() + sign) & 3));
    EXPECT_TRUE(group.contains(p)) << p.str();
  }
}

TEST(Catalog, SteaneDiagonalizableLogicalZ) {
  const auto z = nucc::diagonalizable_logical_z(*nucc::steane());
  EXPECT_EQ(nucc::weight(z), 3u);
  EXPECT_FALSE(z.x().any());
}

TEST(Decoder, OverrideChangesTheCorrection) {
  const auto code = nucc::reed_muller_15();
  auto dec = std::make_shared<nucc::LookupDecoder>(code);
  const auto e = PauliOperator::single(15, 0, nucc::Letter::Z);
  const auto s = nucc::syndrome(*code, e);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < s.size(); ++i) word |= std::uint64_t{s.get(i)} << i;
  // Same syndrome, but the correction differs from the error by logical Z.
  dec->override_entry(word, nucc::multiply(e, code->logical_z()));
  EXPECT_EQ(nucc::residual_logical_action(*code, e, *dec), nucc::Letter::Z);
}

TEST(Decoder, RejectsOversizedCodes) {
  std::vector<PauliOperator> gens;
  for (std::size_t i = 0; i + 1 < 23; ++i) {
    std::string g(23, 'I');
    g[i] = g[i + 1] = 'Z';
    gens.push_back(PauliOperator::parse(g));
  }
  std::string lx(23, 'X');
  std::string lz(23, 'I');
  lz[0] = 'Z';
  auto code = std::make_shared<nucc::StabilizerCode>("rep23", gens, PauliOperator::parse(lx), PauliOperator::parse(lz));
  EXPECT_THROW(nucc::LookupDecoder{code}, nucc::SizeLimitError);
}

}  // namespace
