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

#include "ehccrn/specfun.hpp"

namespace {

void BM_ExpintEn(benchmark::State& state) {
  int const n = static_cast<int>(state.range(0));
  double x = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ehccrn::specfun::expint_en_scaled(n, x));
    x = x < 50.0 ? x * 1.7 : 0.05;
  }
}
BENCHMARK(BM_ExpintEn)->Arg(1)->Arg(3)->Arg(11);

void BM_ExpintEi(benchmark::State& state) {
  double x = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ehccrn::specfun::expint_ei_scaled(x));
    x = x < 300.0 ? x * 1.9 : 0.01;
  }
}
BENCHMARK(BM_ExpintEi);

}  // namespace
