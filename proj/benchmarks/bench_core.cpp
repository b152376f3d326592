// Copyright 2026 The cbundle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "cbundle/brauer.hpp"
#include "cbundle/pipeline.hpp"
#include "cbundle/quadric_builder.hpp"
#include "cbundle/real_topology.hpp"
#include "fixtures.hpp"

using namespace cbundle;

namespace {

const CoverSpec& instance(PencilCase kase) {
  static const CoverSpec r3 = testing::random_admissible(PencilCase::rank3, 42);
  static const CoverSpec r2 = testing::random_admissible(PencilCase::rank2, 42);
  return kase == PencilCase::rank3 ? r3 : r2;
}

void BM_Det6x6Poly(benchmark::State& state) {
  const CoverSpec& c = instance(PencilCase::rank3);
  QuadricPencil p = build_pencil(c);
  const Ring* r = Ring::get({"T"});
  MPoly t = MPoly::variable(r, 0);
  PolyMatrix m(6, 6);
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = 0; j < 6; ++j) m(i, j) = MPoly::monomial(r, {0}, p.A0(i, j)) - t.scaled(p.Ainf(i, j));
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_Det6x6Poly);

void BM_BuildCover(benchmark::State& state) {
  const CoverSpec& c = instance(PencilCase::rank3);
  for (auto _ : state) benchmark::DoNotOptimize(build_cover(c.q1, c.q2, c.q3, 1));
}
BENCHMARK(BM_BuildCover)->Unit(benchmark::kMillisecond);

void BM_BuildAndVerifyPencil(benchmark::State& state) {
  const CoverSpec& c = instance(state.range(0) ? PencilCase::rank3 : PencilCase::rank2);
  for (auto _ : state) {
    QuadricPencil p = build_pencil(c);
    benchmark::DoNotOptimize(verify_pencil(p, c));
  }
}
BENCHMARK(BM_BuildAndVerifyPencil)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_Hilbert(benchmark::State& state) {
  Rng rng(7);
  std::vector<std::pair<Rat, Rat>> pairs;
  for (int i = 0; i < 64; ++i) pairs.push_back({Rat(rng.uniform(-100000, 100000) | 1), Rat(rng.uniform(1, 100000))});
  for (auto _ : state)
    for (const auto& [a, b] : pairs) benchmark::DoNotOptimize(class_of(a, b));
  state.SetItemsProcessed(state.iterations() * pairs.size());
}
BENCHMARK(BM_Hilbert);

void BM_QuarticTopology(benchmark::State& state) {
  const CoverSpec& c = instance(PencilCase::rank3);
  for (auto _ : state) benchmark::DoNotOptimize(quartic_topology(c, 3));
}
BENCHMARK(BM_QuarticTopology)->Unit(benchmark::kMillisecond);

void BM_Analyze(benchmark::State& state) {
  const CoverSpec& c = instance(PencilCase::rank3);
  InstanceInput in;
  in.q1 = c.q1;
  in.q2 = c.q2;
  in.q3 = c.q3;
  AnalyzeOptions opt;
  opt.real = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(analyze(in, opt));
}
BENCHMARK(BM_Analyze)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
