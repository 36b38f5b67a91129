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

#include "ehccrn/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ehccrn/error.hpp"

namespace ehccrn::specfun {
namespace {

constexpr double kEuler = 0.57721566490153286060651209008240243;
constexpr double kEps = 1e-16;
constexpr int kMaxIter = 100000;
constexpr double kTiny = 1e-300;

// Neumaier variant of Kahan summation.
struct CompensatedSum {
  double sum = 0.0;
  double c = 0.0;
  void add(double v) {
    double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v)) {
      c += (sum - t) + v;
    } else {
      c += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + c; }
};

// Continued fraction for exp(x) E_n(x), x >= 1 (modified Lentz).
double en_scaled_cf(int n, double x) {
  double const nm1 = n - 1;
  double b = x + n;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    double const an = -i * (nm1 + i);
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    double const del = c * d;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  throw StabilityError("expint_en: continued fraction did not converge");
}

// Power series for E_n(x), 0 < x < 1.
double en_series(int n, double x) {
  int const nm1 = n - 1;
  double ans = nm1 != 0 ? 1.0 / nm1 : -std::log(x) - kEuler;
  double fact = 1.0;
  for (int i = 1; i <= kMaxIter; ++i) {
    fact *= -x / i;
    double del;
    if (i != nm1) {
      del = -fact / (i - nm1);
    } else {
      double psi = -kEuler;
      for (int ii = 1; ii <= nm1; ++ii) psi += 1.0 / ii;
      del = fact * (-std::log(x) + psi);
    }
    ans += del;
    if (std::fabs(del) < std::fabs(ans) * kEps) return ans;
  }
  throw StabilityError("expint_en: series did not converge");
}

void check_en_args(int n, double x, bool allow_zero) {
  if (n < 1) throw DomainError("expint_en: order must be >= 1");
  if (std::isnan(x) || x < 0.0 || (x == 0.0 && (!allow_zero || n == 1))) {
    throw DomainError("expint_en: argument must be > 0, got " + std::to_string(x));
  }
}

double ei_series(double x) {
  CompensatedSum s;
  s.add(kEuler);
  s.add(std::log(x));
  double term = 1.0;
  for (int k = 1; k <= kMaxIter; ++k) {
    term *= x / k;
    double const del = term / k;
    s.add(del);
    if (del < kEps * std::fabs(s.value())) return s.value();
  }
  throw StabilityError("expint_ei: series did not converge");
}

// Asymptotic expansion, returns exp(-x) Ei(x).
double ei_scaled_asymptotic(double x) {
  double sum = 1.0;
  double term = 1.0;
  for (int k = 1; k < 200; ++k) {
    double const prev = term;
    term *= k / x;
    if (term < kEps * sum) break;
    if (term > prev) break;
    sum += term;
  }
  return sum / x;
}

constexpr double kEiSeriesLimit = 40.0;

}  // namespace

double expint_en_scaled(int n, double x) {
  check_en_args(n, x, true);
  if (x == 0.0) return 1.0 / (n - 1);
  if (x >= 1.0) return en_scaled_cf(n, x);
  return std::exp(x) * en_series(n, x);
}

double expint_en(int n, double x) {
  check_en_args(n, x, false);
  if (x >= 1.0) {
    if (x > 745.2) return 0.0;
    return en_scaled_cf(n, x) * std::exp(-x);
  }
  return en_series(n, x);
}

double expint_ei(double x) {
  if (!(x > 0.0)) throw DomainError("expint_ei: argument must be > 0");
  if (x <= kEiSeriesLimit) return ei_series(x);
  if (x > 709.0) return std::numeric_limits<double>::infinity();
  return ei_scaled_asymptotic(x) * std::exp(x);
}

double expint_ei_scaled(double x) {
  if (!(x > 0.0)) throw DomainError("expint_ei: argument must be > 0");
  if (x <= kEiSeriesLimit) return ei_series(x) * std::exp(-x);
  return ei_scaled_asymptotic(x);
}

double ln_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("ln_gamma: argument must be > 0");
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw DomainError("binomial: need 0 <= k <= n");
  if (n > 64) throw OverflowError("binomial: n > 64 exceeds 64-bit range");
  if (k > n - k) k = n - k;
  __extension__ typedef unsigned __int128 u128;
  u128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace ehccrn::specfun
