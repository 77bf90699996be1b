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

#include <benchmark/benchmark.h>

#include "nucc/catalog.hpp"
#include "nucc/concatenation.hpp"
#include "nucc/decoder.hpp"
#include "nucc/fault.hpp"
#include "nucc/gadgets.hpp"

namespace {

nucc::PauliOperator random_pauli(std::mt19937_64& rng, std::size_t n) {
  nucc::PauliOperator p(n);
  for (std::size_t q = 0; q < n; ++q) p.set_letter(q, static_cast<nucc::Letter>(rng() & 3u));
  return p;
}

void BM_PauliMultiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  auto a = random_pauli(rng, n);
  const auto b = random_pauli(rng, n);
  for (auto _ : state) {
    a.mul_assign(b);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_PauliMultiply)->Arg(7)->Arg(49)->Arg(105)->Arg(512);

void BM_ReedMullerDecoderBuild(benchmark::State& state) {
  const auto rm = nucc::reed_muller_15();
  for (auto _ : state) benchmark::DoNotOptimize(nucc::build_decoder(rm));
}
BENCHMARK(BM_ReedMullerDecoderBuild)->Unit(benchmark::kMillisecond);

void BM_HierarchicalDecode(benchmark::State& state) {
  const auto layout = nucc::named_layout(static_cast<std::size_t>(state.range(0)));
  std::mt19937_64 rng(2);
  std::vector<nucc::PauliOperator> errors;
  for (int i = 0; i < 256; ++i) {
    nucc::PauliOperator e(layout.total_n());
    e.set_letter(rng() % layout.total_n(), static_cast<nucc::Letter>(1 + rng() % 3));
    e.set_letter(rng() % layout.total_n(), static_cast<nucc::Letter>(1 + rng() % 3));
    errors.push_back(e);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(layout.hierarchical_decode(errors[i++ & 255]));
}
BENCHMARK(BM_HierarchicalDecode)->Arg(49)->Arg(105);

void BM_SingleFaultSweep(benchmark::State& state) {
  const auto layout = nucc::named_layout(static_cast<std::size_t>(state.range(0)));
  const auto v = nucc::GadgetCache::global().get(layout, nucc::make_gate(nucc::GateKind::T, {0}));
  for (auto _ : state) benchmark::DoNotOptimize(nucc::check_single_fault_ft(layout, v->gadget, &v->certificate));
}
BENCHMARK(BM_SingleFaultSweep)->Arg(49)->Arg(105)->Unit(benchmark::kMillisecond);

void BM_ConcatenatedDistance(benchmark::State& state) {
  const auto layout = nucc::named_layout(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nucc::concatenated_distance(layout));
}
BENCHMARK(BM_ConcatenatedDistance)->Arg(49)->Arg(105)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
