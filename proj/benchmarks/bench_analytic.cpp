// Copyright 2026 The ehccrn Authors
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

#include "ehccrn/analytic.hpp"
#include "ehccrn/optimize.hpp"

namespace {

ehccrn::OperatingPoint point(int L) {
  ehccrn::ProtocolConfig c;
  c.L = L;
  return ehccrn::OperatingPoint::make(c, ehccrn::SystemGeometry{});
}

void BM_OutageFull(benchmark::State& state) {
  auto const op = point(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ehccrn::analytic::p_full(op.params, op.rates));
  }
}
BENCHMARK(BM_OutageFull)->DenseRange(1, 4)->Arg(8);

void BM_OutageHighMargin(benchmark::State& state) {
  auto const op = point(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ehccrn::analytic::p_high_margin(op.params, op.rates));
  }
}
BENCHMARK(BM_OutageHighMargin)->Arg(1)->Arg(4);

void BM_NumericRhoStar(benchmark::State& state) {
  auto const op = point(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ehccrn::opt::rho_star_analytic(op.config, op.rates, ehccrn::Mode::Cooperative));
  }
}
BENCHMARK(BM_NumericRhoStar);

}  // namespace
