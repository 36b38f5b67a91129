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

#include "ehccrn/montecarlo.hpp"

namespace {

void BM_Estimate(benchmark::State& state) {
  ehccrn::ProtocolConfig c;
  c.L = static_cast<int>(state.range(0));
  auto const op = ehccrn::OperatingPoint::make(c, ehccrn::SystemGeometry{});
  ehccrn::mc::RunOptions run;
  run.trials = 100'000;
  run.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ehccrn::mc::estimate(op, run));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(run.trials));
}
BENCHMARK(BM_Estimate)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Philox(benchmark::State& state) {
  std::uint64_t k = 0;
  for (auto _ : state) {
    ehccrn::mc::TrialStream s(1, k++);
    benchmark::DoNotOptimize(s.uniform());
  }
}
BENCHMARK(BM_Philox);

}  // namespace
