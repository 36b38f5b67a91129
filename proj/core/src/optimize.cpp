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

#include "ehccrn/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ehccrn/error.hpp"

namespace ehccrn::opt {
namespace {

double closed_form_raw(Variant v, ChannelRates const& lam, double eta, double psi) {
  double const lsr = lam.sr, lrd = lam.rd, lsp = lam.sp, lsd = lam.sd;
  double const K = 1.0 + lsp / (lsd * psi);
  double const B = 2.0 * eta * lsp / (lrd * lsr * psi);
  switch (v) {
    case Variant::PS:
    case Variant::IncrementalPS:
      return (1.0 - std::sqrt(K) * psi * lsr / lsp) /
             (1.0 + std::sqrt(K) * eta / lrd);
    case Variant::TS: {
      double const inner =
          lsd * lsp * psi / ((lsd + lsp / psi) * 2.0 * eta / (lsr * lrd) - 1.0);
      return (2.0 * eta / (lrd * lsr * psi) * std::sqrt(inner) - 1.0) / (B - 1.0);
    }
    case Variant::NoDirectPS:
      return (1.0 - psi * lsr / lsp) / (1.0 + eta / lrd);
    case Variant::NoDirectTS:
      return (std::sqrt(B) - 1.0) / (B - 1.0);
    case Variant::IncrementalTS: {
      double const inner =
          2.0 * lsd * lsp / psi / (eta * lsd / (lrd * lsr) + B - 1.0);
      return (-1.0 + eta / (lrd * lsr) * std::sqrt(inner)) / (B - 1.0);
    }
  }
  throw DomainError("rho_star_closed_form: unknown variant");
}

constexpr double kInvPhi = 0.6180339887498948482;

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::ClosedForm:
      return "closed_form";
    case Method::GoldenSection:
      return "golden_section";
    case Method::GridRefine:
      return "grid_refine";
  }
  return "?";
}

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::PS:
      return "ps";
    case Variant::TS:
      return "ts";
    case Variant::NoDirectPS:
      return "nd-ps";
    case Variant::NoDirectTS:
      return "nd-ts";
    case Variant::IncrementalPS:
      return "in-ps";
    case Variant::IncrementalTS:
      return "in-ts";
  }
  return "?";
}

Variant variant_for(Scheme s, Mode m) {
  bool const ps = s == Scheme::PS;
  switch (m) {
    case Mode::Cooperative:
      return ps ? Variant::PS : Variant::TS;
    case Mode::NoDirect:
      return ps ? Variant::NoDirectPS : Variant::NoDirectTS;
    case Mode::Incremental:
      return ps ? Variant::IncrementalPS : Variant::IncrementalTS;
    case Mode::DirectOnly:
      break;
  }
  throw DomainError("direct-only transmission has no EH parameter to optimize");
}

Scheme scheme_of(Variant v) {
  switch (v) {
    case Variant::PS:
    case Variant::NoDirectPS:
    case Variant::IncrementalPS:
      return Scheme::PS;
    default:
      return Scheme::TS;
  }
}

Mode mode_of(Variant v) {
  switch (v) {
    case Variant::PS:
    case Variant::TS:
      return Mode::Cooperative;
    case Variant::NoDirectPS:
    case Variant::NoDirectTS:
      return Mode::NoDirect;
    default:
      return Mode::Incremental;
  }
}

RhoOptimum rho_star_closed_form(Variant v, ChannelRates const& lam,
                                ProtocolConfig const& ctx) {
  if (ctx.L != 1) throw DomainError("closed-form rho* is available for L = 1 only");
  ProtocolConfig cfg = ctx;
  cfg.scheme = scheme_of(v);
  DerivedParams const dp = derive(cfg);

  RhoOptimum r;
  r.method = Method::ClosedForm;
  r.raw = closed_form_raw(v, lam, cfg.eta, dp.psi);
  if (std::isnan(r.raw) || r.raw < kRhoLo || r.raw > kRhoHi) {
    r.clamped = true;
    r.rho_star = std::isnan(r.raw) ? kRhoLo : std::clamp(r.raw, kRhoLo, kRhoHi);
  } else {
    r.rho_star = r.raw;
  }
  r.tau_at_star = analytic_tau(cfg, lam, mode_of(v), analytic::Tier::Full, r.rho_star);
  return r;
}

RhoOptimum rho_star_numeric(std::function<double(double)> const& objective,
                            NumericOptions const& opt) {
  if (!(opt.lo < opt.hi) || opt.coarse_points < 3) {
    throw DomainError("rho_star_numeric: invalid search interval");
  }
  int const n = opt.coarse_points;
  double const h = (opt.hi - opt.lo) / (n - 1);
  std::vector<double> f(n);
  for (int i = 0; i < n; ++i) f[i] = objective(opt.lo + i * h);

  auto const [mn, mx] = std::minmax_element(f.begin(), f.end());
  int const best = static_cast<int>(mx - f.begin());
  RhoOptimum r;
  r.flat = (*mx - *mn) < 1e-9;

  double a = opt.lo + std::max(best - 1, 0) * h;
  double b = opt.lo + std::min(best + 1, n - 1) * h;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = objective(x1);
  double f2 = objective(x2);
  while (b - a > opt.tolerance) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = objective(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = objective(x2);
    }
  }
  double const xg = f1 >= f2 ? x1 : x2;
  double const fg = std::max(f1, f2);

  if (fg >= *mx) {
    r.rho_star = xg;
    r.tau_at_star = fg;
    r.method = Method::GoldenSection;
  } else {
    r.rho_star = opt.lo + best * h;
    r.tau_at_star = *mx;
    r.method = Method::GridRefine;
  }
  return r;
}

double analytic_tau(ProtocolConfig base, ChannelRates const& lam, Mode mode,
                    analytic::Tier tier, double rho, analytic::Options const& aopt) {
  base.rho = rho;
  base.validate();
  return analytic::evaluate(derive(base), lam, mode, tier, aopt).tau;
}

RhoOptimum rho_star_analytic(ProtocolConfig const& base, ChannelRates const& lam,
                             Mode mode, analytic::Tier tier,
                             analytic::Options const& aopt,
                             NumericOptions const& nopt) {
  return rho_star_numeric(
      [&](double rho) { return analytic_tau(base, lam, mode, tier, rho, aopt); },
      nopt);
}

double mc_tau(ProtocolConfig base, ChannelRates const& lam, double rho,
              mc::RunOptions const& run) {
  base.rho = rho;
  return mc::estimate(OperatingPoint::make(base, lam), run).tau.value;
}

RhoOptimum rho_star_mc(ProtocolConfig const& base, ChannelRates const& lam,
                       mc::RunOptions const& run, NumericOptions const& nopt) {
  return rho_star_numeric([&](double rho) { return mc_tau(base, lam, rho, run); },
                          nopt);
}

}  // namespace ehccrn::opt
