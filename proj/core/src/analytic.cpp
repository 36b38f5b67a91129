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

#include "ehccrn/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "ehccrn/error.hpp"
#include "ehccrn/specfun.hpp"

namespace ehccrn::analytic {
namespace {

using specfun::binomial;
using specfun::expint_ei_scaled;
using specfun::expint_en_scaled;

constexpr double kCancellationLimit = 1e8;
constexpr double kAbsoluteFloor = 1e-6;

// Compensated sum that remembers its largest addend. finish() raises a
// StabilityError when the addends dwarf the result.
class GuardedSum {
 public:
  explicit GuardedSum(char const* who) : who_(who) {}

  void add(double v) {
    max_term_ = std::max(max_term_, std::fabs(v));
    double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      c_ += (sum_ - t) + v;
    } else {
      c_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  double finish() const {
    double const v = sum_ + c_;
    if (!std::isfinite(v)) {
      throw StabilityError(std::string(who_) + ": non-finite result");
    }
    if (max_term_ > kCancellationLimit * std::max(std::fabs(v), kAbsoluteFloor)) {
      char buf[96];
      std::snprintf(buf, sizeof buf, " (largest term %.3g, sum %.3g)", max_term_, v);
      throw StabilityError(std::string(who_) +
                           ": cancellation in alternating sum exceeds 1e8" + buf);
    }
    return v;
  }

 private:
  char const* who_;
  double sum_ = 0.0;
  double c_ = 0.0;
  double max_term_ = 0.0;
};

double factorial(int n) { return std::tgamma(n + 1.0); }

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

void require_supported_L(int L, char const* who) {
  if (L < 1 || L > kMaxStableL) {
    throw DomainError(std::string(who) + ": L must lie in [1," +
                      std::to_string(kMaxStableL) + "]");
  }
}

double alt_sign(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

// [(ln(1+a) - a/(1+a)) / a^2], with a series near zero.
double cond_mean_kernel(double a) {
  if (a >= 1e-3) return (std::log1p(a) - a / (1.0 + a)) / (a * a);
  double s = 0.0;
  double pw = 1.0;
  for (int k = 2; k < 14; ++k) {
    s += alt_sign(k) * (k - 1) * pw / k;
    pw *= a;
  }
  return s;
}

// Shared notation of the Full-tier kernel.
struct Kernel {
  int L;
  double lsr, lsp;
  double a, b, c, d, g;
  double B1, B2;

  Kernel(DerivedParams const& dp, ChannelRates const& lam)
      : L(dp.L),
        lsr(lam.sr),
        lsp(lam.sp),
        a(lam.rp / dp.beta),
        b(dp.psi * lam.rd / dp.beta),
        c(dp.psi * lam.sd),
        d(lam.rd / (dp.beta * lam.sd)),
        g(dp.xi / dp.psi),
        B1(g * (c + lsp) + lsr),
        B2(g * lsp + lsr) {}

  // e^x E_L(x) - (lsr/B)^(L-1) e^{y(lsr-B)} e^{yB} E_L(yB), evaluated with
  // x = y lsr.
  double en_pair(double y, double B) const {
    return expint_en_scaled(L, y * lsr) -
           std::pow(lsr / B, L - 1) * std::exp(y * (lsr - B)) *
               expint_en_scaled(L, y * B);
  }

  // Contribution of the (i, j) cell, without the binomial weight.
  double cell(int i, int j) const {
    double const aj = a * j;
    double const bi = b * i;
    double const di = d * i;
    double const den = aj + bi + di * lsp;
    double const e_j = std::exp(-a * g * j);
    double const e_ij = std::exp(-g * (aj + bi));
    double term = 0.0;

    if (i > 0) {
      double s = 0.0;
      for (int k = 0; k <= L - 2; ++k) {
        s += std::pow(di, k) * factorial(L - 2 - k) *
             (e_j * std::pow(B1, k - L + 1) - e_ij * std::pow(B2, k - L + 1));
      }
      double const A2 = di * B2;
      double const A1 = di * B1;
      s += std::pow(di, L - 1) *
           (e_ij * expint_ei_scaled(A2) - e_j * expint_ei_scaled(A1));
      term += std::pow(lsr, L) * lsp * di * di / (factorial(L - 1) * den) * s;
    }
    if (j > 0) {
      double const a2 = aj / (c + lsp);
      term += lsp * lsr / den * a2 * a2 * en_pair(a2, B1);
      term += lsp / (c + lsp) * e_j * std::pow(lsr / B1, L) + c / (c + lsp);
    }
    if (i + j > 0) {
      double const a1 = (aj + bi) / lsp;
      term -= lsr / (lsp * den) * (aj + bi) * (aj + bi) * en_pair(a1, B2);
    }
    term -= std::pow(lsr / B2, L) * e_ij;
    return term;
  }

  // Direct-link-free cell (lambda_sd -> infinity).
  double cell_nd(int i, int j) const {
    double const aj = a * j;
    double const bi = b * i;
    double term = (j > 0) ? 1.0 : 0.0;
    if (i + j > 0) {
      double const a1 = (aj + bi) / lsp;
      term -= lsr * (aj + bi) / lsp * en_pair(a1, B2);
    }
    term -= std::pow(lsr / B2, L) * std::exp(-g * (aj + bi));
    return term;
  }
};

template <typename Cell>
double double_sum(int L, double t, char const* who, Cell&& cell) {
  GuardedSum sum(who);
  for (int i = 0; i <= L; ++i) {
    for (int j = 0; j <= i; ++j) {
      if (j > 0 && t == 0.0) break;
      double const w = static_cast<double>(binomial(L, i)) *
                       static_cast<double>(binomial(i, j)) * alt_sign(i + j) *
                       (j > 0 ? std::pow(t, j) : 1.0);
      sum.add(w * cell(i, j));
    }
  }
  return sum.finish();
}

OutageBreakdown make_breakdown(double p1, double p2, Tier tier) {
  OutageBreakdown o;
  o.tier = tier;
  o.p1 = clamp01(p1);
  o.p2 = p2;
  o.p_raw = p1 + p2;
  o.p = clamp01(o.p_raw);
  return o;
}

double high_margin_t11(DerivedParams const& dp, ChannelRates const& lam) {
  return 1.0 / (1.0 + lam.sp / (lam.sd * dp.psi));
}

double high_margin_t12(DerivedParams const& dp, ChannelRates const& lam) {
  return 1.0 - high_margin_sum(dp.L, high_margin_x(dp, lam));
}

double high_margin_t2(DerivedParams const& dp, ChannelRates const& lam) {
  double const harvest_fail = 1.0 - std::exp(-lam.rd * dp.xi / dp.beta);
  return (1.0 - std::pow(harvest_fail, dp.L)) * p1_exact(dp, lam);
}

bool high_margin_out_of_regime(DerivedParams const& dp, ChannelRates const& lam) {
  return lam.sp / dp.psi < 10.0;
}

}  // namespace

std::string_view to_string(Tier t) {
  switch (t) {
    case Tier::Full:
      return "full";
    case Tier::NoRpConstraint:
      return "no_rp";
    case Tier::HighMargin:
      return "high_margin";
    case Tier::NoDirectLink:
      return "no_direct";
  }
  return "?";
}

std::string_view to_string(TFormula f) {
  return f == TFormula::Consistent ? "consistent" : "printed";
}

double p1_exact(DerivedParams const& dp, ChannelRates const& lam) {
  return std::pow(lam.sp * dp.xi / (lam.sr * dp.psi) + 1.0, -dp.L);
}

double mean_interference_term(DerivedParams const& dp, ChannelRates const& lam) {
  double const a = lam.sd * dp.psi / lam.sp;
  double const m = dp.psi * (1.0 + a) * cond_mean_kernel(a);
  return dp.i_over_n0 * m;
}

double compute_t(DerivedParams const& dp, ChannelRates const& lam, TFormula f) {
  double x;
  if (f == TFormula::Consistent) {
    x = dp.psi - mean_interference_term(dp, lam) / dp.i_over_n0;
  } else {
    double const g = dp.gamma_th;
    double const k = lam.sd / lam.sp;
    x = g - (1.0 / k) * (std::log(g * k + 1.0) + g * k / (g * k + 1.0));
  }
  double const t = 1.0 - 1.0 / (1.0 + lam.rd / lam.rp * x);
  return std::clamp(t, 0.0, std::nextafter(1.0, 0.0));
}

double compute_t_nd(DerivedParams const& dp, ChannelRates const& lam,
                    TFormula f) {
  double const x = (f == TFormula::Consistent) ? dp.psi : dp.gamma_th;
  return 1.0 - 1.0 / (1.0 + lam.rd * x / lam.rp);
}

double p2_full_with_t(DerivedParams const& dp, ChannelRates const& lam,
                      double t) {
  require_supported_L(dp.L, "p2_full");
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("p2_full: t must lie in [0,1]");
  Kernel const k(dp, lam);
  return double_sum(dp.L, t, "p2_full",
                    [&](int i, int j) { return k.cell(i, j); });
}

double p2_full(DerivedParams const& dp, ChannelRates const& lam,
               Options const& opt) {
  return p2_full_with_t(dp, lam, compute_t(dp, lam, opt.t_formula));
}

double p2_no_rp(DerivedParams const& dp, ChannelRates const& lam) {
  require_supported_L(dp.L, "p2_no_rp");
  int const L = dp.L;
  double const lsr = lam.sr, lrd = lam.rd, lsp = lam.sp, lsd = lam.sd;
  double const xi = dp.xi, beta = dp.beta, psi = dp.psi;

  double const common = lrd * lsp / lsd + lrd * psi;
  double const pre = lrd * lrd * lsp * std::pow(lsr, L) /
                     (beta * lsd * lsd * factorial(L - 1) * common);
  double const r1 = xi * (lsd * psi + lsp) / psi + lsr;
  double const r2 = lsp * xi / psi + lsr;
  double const p1_base = lsp * xi / (psi * lsr) + 1.0;

  GuardedSum sum("p2_no_rp");
  for (int i = 1; i <= L; ++i) {
    double const D = lrd * i / (beta * lsd);
    double const X = lrd * i * xi / beta;
    double const eX = std::exp(-X);
    double s = 0.0;
    for (int k = 0; k <= L - 2; ++k) {
      s += i * factorial(L - k - 2) * std::pow(D, k) *
           (std::pow(r1, k - L + 1) - eX * std::pow(r2, k - L + 1));
    }
    double const A2 = D * r2;
    double const A1 = D * r1;
    s += i * std::pow(D, L - 1) *
         (eX * expint_ei_scaled(A2) - expint_ei_scaled(A1));

    double const x = lrd * lsr * i * psi / (beta * lsp);
    double const y = lrd * i * psi / (beta * lsp) * r2;
    double const second =
        lrd * lrd * lsr * i * psi * psi / (beta * lsp * common) *
        (expint_en_scaled(L, x) -
         std::pow(p1_base, 1 - L) * std::exp(x - y) * expint_en_scaled(L, y));

    double const cell = pre * s - second - eX * std::pow(p1_base, -L);
    sum.add(alt_sign(i) * static_cast<double>(binomial(L, i)) * cell);
  }
  sum.add(-std::pow(p1_base, -L));
  return sum.finish();
}

double p2_no_direct(DerivedParams const& dp, ChannelRates const& lam,
                    Options const& opt) {
  require_supported_L(dp.L, "p2_no_direct");
  Kernel const k(dp, lam);
  double const t = compute_t_nd(dp, lam, opt.t_formula);
  return double_sum(dp.L, t, "p2_no_direct",
                    [&](int i, int j) { return k.cell_nd(i, j); });
}

double high_margin_x(DerivedParams const& dp, ChannelRates const& lam) {
  return dp.psi * lam.rd * lam.sr / (dp.beta * lam.sp);
}

double high_margin_sum(int L, double x) {
  if (L < 1) throw DomainError("high_margin_sum: L must be >= 1");
  GuardedSum sum("high_margin_sum");
  for (int i = 1; i <= L; ++i) {
    sum.add(-alt_sign(i) * static_cast<double>(binomial(L, i)) * L *
            expint_en_scaled(L + 1, x * i));
  }
  return sum.finish();
}

OutageBreakdown p_full(DerivedParams const& dp, ChannelRates const& lam,
                       Options const& opt) {
  return make_breakdown(p1_exact(dp, lam), p2_full(dp, lam, opt), Tier::Full);
}

OutageBreakdown p_no_rp(DerivedParams const& dp, ChannelRates const& lam) {
  auto o = make_breakdown(p1_exact(dp, lam), p2_no_rp(dp, lam),
                          Tier::NoRpConstraint);
  o.regime_warning = lam.rp / lam.rd < 10.0;
  return o;
}

OutageBreakdown p_high_margin(DerivedParams const& dp, ChannelRates const& lam) {
  double const p1 = p1_exact(dp, lam);
  double const p = high_margin_t11(dp, lam) * high_margin_t12(dp, lam) +
                   high_margin_t2(dp, lam);
  auto o = make_breakdown(p1, p - p1, Tier::HighMargin);
  o.regime_warning = high_margin_out_of_regime(dp, lam);
  return o;
}

OutageBreakdown p_no_direct(DerivedParams const& dp, ChannelRates const& lam,
                            Options const& opt) {
  return make_breakdown(p1_exact(dp, lam), p2_no_direct(dp, lam, opt),
                        Tier::NoDirectLink);
}

OutageBreakdown outage(DerivedParams const& dp, ChannelRates const& lam,
                       Tier tier, Options const& opt) {
  switch (tier) {
    case Tier::Full:
      return p_full(dp, lam, opt);
    case Tier::NoRpConstraint:
      return p_no_rp(dp, lam);
    case Tier::HighMargin:
      return p_high_margin(dp, lam);
    case Tier::NoDirectLink:
      return p_no_direct(dp, lam, opt);
  }
  throw DomainError("outage: unknown tier");
}

OutageBreakdown outage_no_direct(DerivedParams const& dp,
                                 ChannelRates const& lam, Tier tier,
                                 Options const& opt) {
  switch (tier) {
    case Tier::Full:
    case Tier::NoDirectLink:
      return p_no_direct(dp, lam, opt);
    case Tier::NoRpConstraint: {
      require_supported_L(dp.L, "p2_no_direct");
      Kernel const k(dp, lam);
      double const p2 = double_sum(dp.L, 0.0, "p2_no_direct",
                                   [&](int i, int j) { return k.cell_nd(i, j); });
      auto o = make_breakdown(p1_exact(dp, lam), p2, Tier::NoRpConstraint);
      o.regime_warning = lam.rp / lam.rd < 10.0;
      return o;
    }
    case Tier::HighMargin: {
      double const p1 = p1_exact(dp, lam);
      double const p = high_margin_t12(dp, lam) + high_margin_t2(dp, lam);
      auto o = make_breakdown(p1, p - p1, Tier::HighMargin);
      o.regime_warning = high_margin_out_of_regime(dp, lam);
      return o;
    }
  }
  throw DomainError("outage_no_direct: unknown tier");
}

double q2(DerivedParams const& dp, ChannelRates const& lam) {
  return 1.0 / (1.0 + lam.sd * dp.psi / lam.sp);
}

double p3(DerivedParams const& dp, ChannelRates const& lam) {
  double const K = lam.sd * dp.xi / lam.sr + lam.sp * dp.xi / (lam.sr * dp.psi) + 1.0;
  return q2(dp, lam) * (1.0 - std::pow(K, -dp.L));
}

double tau_direct(DerivedParams const& dp, ChannelRates const& lam) {
  return dp.Rs * q2(dp, lam);
}

ThroughputReport throughput(DerivedParams const& dp, ChannelRates const& lam,
                            Tier tier, Options const& opt) {
  ThroughputReport r;
  r.outage = outage(dp, lam, tier, opt);
  r.scheme = tier == Tier::NoDirectLink ? Mode::NoDirect : Mode::Cooperative;
  r.tau = std::clamp(0.5 * dp.Rs * dp.zeta * (1.0 - r.outage.p), 0.0, dp.Rs);
  return r;
}

double tau_incremental_gain(DerivedParams const& dp, ChannelRates const& lam) {
  double const K = 1.0 + lam.sd * dp.xi / lam.sr + lam.sp * dp.xi / (lam.sr * dp.psi);
  return 0.5 * dp.zeta * dp.Rs * q2(dp, lam) * (1.0 + std::pow(K, -dp.L));
}

ThroughputReport tau_incremental(DerivedParams const& dp,
                                 ChannelRates const& lam, Tier tier,
                                 Options const& opt) {
  if (tier == Tier::NoDirectLink) {
    throw DomainError("incremental relaying requires the direct link");
  }
  ThroughputReport r;
  r.scheme = Mode::Incremental;
  r.outage = outage(dp, lam, tier, opt);

  double const p = r.outage.p_raw;
  double const q2v = q2(dp, lam);
  double const p3v = p3(dp, lam);
  double const q1_raw = 1.0 - p - p3v;
  double const tau_decomposed = dp.zeta * (0.5 * dp.Rs * q1_raw + dp.Rs * q2v);
  double const tau_relation =
      0.5 * dp.Rs * dp.zeta * (1.0 - p) + tau_incremental_gain(dp, lam);
  if (std::fabs(tau_decomposed - tau_relation) > 1e-8) {
    throw ConsistencyError("tau_incremental: decomposed and correction forms differ");
  }

  double const q1 = std::max(q1_raw, 0.0);
  r.components = IncrementalComponents{q1, q2v, p3v};
  r.tau = std::clamp(dp.zeta * (0.5 * dp.Rs * q1 + dp.Rs * q2v), 0.0, dp.Rs);
  return r;
}

double tau_gap_direct(DerivedParams const& dp, ChannelRates const& lam) {
  double const r = lam.sp / (lam.sd * dp.psi);
  return 0.5 * dp.Rs * dp.zeta * high_margin_t12(dp, lam) * r / (1.0 + r);
}

ThroughputReport evaluate(DerivedParams const& dp, ChannelRates const& lam,
                          Mode mode, Tier tier, Options const& opt) {
  switch (mode) {
    case Mode::Cooperative:
      return throughput(dp, lam, tier, opt);
    case Mode::NoDirect: {
      ThroughputReport r;
      r.scheme = Mode::NoDirect;
      r.outage = outage_no_direct(dp, lam, tier, opt);
      r.tau = std::clamp(0.5 * dp.Rs * dp.zeta * (1.0 - r.outage.p), 0.0, dp.Rs);
      return r;
    }
    case Mode::Incremental:
      return tau_incremental(dp, lam, tier, opt);
    case Mode::DirectOnly: {
      ThroughputReport r;
      r.scheme = Mode::DirectOnly;
      double const q = q2(dp, lam);
      r.outage.tier = tier;
      r.outage.p1 = 0.0;
      r.outage.p2 = 1.0 - q;
      r.outage.p = 1.0 - q;
      r.outage.p_raw = 1.0 - q;
      r.tau = dp.Rs * q;
      return r;
    }
  }
  throw DomainError("evaluate: unknown mode");
}

}  // namespace ehccrn::analytic
