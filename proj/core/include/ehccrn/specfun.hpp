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

#ifndef EHCCRN_SPECFUN_HPP
#define EHCCRN_SPECFUN_HPP

#include <cstdint>

namespace ehccrn::specfun {

/// Generalized exponential integral E_n(x) = int_1^inf exp(-x t) t^-n dt.
/// Requires n >= 1 and x > 0. Returns 0 once exp(-x) underflows.
double expint_en(int n, double x);

/// exp(x) * E_n(x). Finite for all x > 0; also defined at x = 0 for n >= 2.
double expint_en_scaled(int n, double x);

/// Exponential integral Ei(x), x > 0.
double expint_ei(double x);

/// exp(-x) * Ei(x), x > 0.
double expint_ei_scaled(double x);

double ln_gamma(double x);

/// Exact binomial coefficient, 0 <= k <= n <= 64.
std::uint64_t binomial(int n, int k);

}  // namespace ehccrn::specfun

#endif  // EHCCRN_SPECFUN_HPP
