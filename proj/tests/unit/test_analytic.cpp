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


#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "doctest.h"
#include "ehccrn/analytic.hpp"
#include "ehccrn/error.hpp"
#include "frozen_p2.hpp"

using namespace ehccrn;
using namespace ehccrn::analytic;

namespace {

OperatingPoint reference_point(int L = 2) {
  ProtocolConfig c;
  c.L = L;
  return OperatingPoint::make(c, SystemGeometry{});
}

struct RandomPoint {
  ProtocolConfig cfg;
  SystemGeometry geo;
};

RandomPoint random_point(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  RandomPoint r;
  r.geo = SystemGeometry{0.8 + 1.5 * u(gen), 0.8 + 1.5 * u(gen), 2.0 + 2.0 * u(gen),
                         1.5 + 2.0 * u(gen), 1.5 + 2.5 * u(gen), 4.0};
  r.cfg.scheme = u(gen) < 0.5 ? Scheme::PS : Scheme::TS;
  r.cfg.rho = 0.05 + 0.9 * u(gen);
  r.cfg.eta = 0.5 + 0.5 * u(gen);
  r.cfg.L = 1 + static_cast<int>(4 * u(gen));
  r.cfg.Rs = 0.5 + 2.0 * u(gen);
  r.cfg.i_over_n0 = db_to_linear(15.0 * u(gen));
  return r;
}

int sign_changes(std::vector<double> const& y) {
  int changes = 0;
  int last = 0;
  for (std::size_t k = 1; k < y.size(); ++k) {
    double const d = y[k] - y[k - 1];
    if (std::fabs(d) < 1e-13) continue;
    int const s = d > 0 ? 1 : -1;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// t written out directly from the threshold-based textbook expression.
double printed_t_reference(double gth, ChannelRates const& lam) {
  double const inner =
      gth - (lam.sp / lam.sd) * (std::log(gth * lam.sd / lam.sp + 1.0) +
                                 gth * lam.sd / (gth * lam.sd + lam.sp));
  double const t = 1.0 - 1.0 / (1.0 + (lam.rd / lam.rp) * inner);
  return std::clamp(t, 0.0, 1.0);
}

// E[R | R < psi] for R = X / Y with X ~ Exp(lsd), Y ~ Exp(lsp), by
// integrating the conditional survival function.
double conditional_ratio_mean(double psi, double lsd, double lsp) {
  auto cdf = [&](double r) { return lsd * r / (lsp + lsd * r); };
  double const total = cdf(psi);
  auto f = [&](double r) { return total - cdf(r); };
  double err = 0.0;
  double const integral =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, psi, 15, 1e-13, &err);
  return integral / total;
}

}  // namespace

TEST_CASE("p1 closed form") {
  ProtocolConfig c;
  c.L = 1;
  auto dp = derive(c);
  ChannelRates lam;
  lam.sp = lam.sr * dp.psi / dp.xi;
  CHECK(p1_exact(dp, lam) == doctest::Approx(0.5).epsilon(1e-14));

  c.rho = 1.0 - 1e-12;
  auto const op = OperatingPoint::make(c, SystemGeometry{});
  CHECK(p1_exact(op.params, op.rates) == doctest::Approx(1.0).epsilon(1e-8));

  auto const ref = reference_point();
  double const k = ref.rates.sp * ref.params.xi / (ref.rates.sr * ref.params.psi);
  CHECK(p1_exact(ref.params, ref.rates) == doctest::Approx(std::pow(k + 1.0, -2)));
}

TEST_CASE("p2 matches frozen quadrature values") {
  for (auto const& fc : frozen::kP2Cases) {
    auto const op = fc.point();
    double const got = p2_full_with_t(op.params, op.rates, fc.t);
    INFO("L=" << fc.L << " rho=" << fc.rho << " db=" << fc.db << " t=" << fc.t);
    CHECK(std::fabs(got - fc.expected) <= 1e-10 * std::max(1.0, std::fabs(fc.expected)));
  }
}

TEST_CASE("p2 vanishes at zero threshold") {
  ProtocolConfig c;
  c.i_over_n0 = 1e12;
  auto const op = OperatingPoint::make(c, SystemGeometry{});
  CHECK(p2_full(op.params, op.rates) < 1e-9);
  CHECK(p2_no_rp(op.params, op.rates) < 1e-9);
}

TEST_CASE("t limits") {
  auto op = reference_point();
  op.rates.rp = 1e12;
  CHECK(compute_t(op.params, op.rates) < 1e-9);
  CHECK(compute_t(op.params, op.rates, TFormula::Printed) < 1e-9);
  CHECK(compute_t_nd(op.params, op.rates) < 1e-9);

  ProtocolConfig c;
  c.i_over_n0 = 1e12;
  auto const hi = OperatingPoint::make(c, SystemGeometry{});
  CHECK(compute_t(hi.params, hi.rates) < 1e-9);
}

TEST_CASE("printed t agrees with an independent implementation") {
  for (double rs : {0.5, 1.0, 2.0, 3.0}) {
    ProtocolConfig c;
    c.Rs = rs;
    auto const op = OperatingPoint::make(c, SystemGeometry{});
    double const want = printed_t_reference(op.params.gamma_th, op.rates);
    double const got = compute_t(op.params, op.rates, TFormula::Printed);
    CHECK(got == doctest::Approx(std::min(want, std::nextafter(1.0, 0.0))).epsilon(1e-13));
  }
}

TEST_CASE("conditional interference mean agrees with quadrature") {
  std::mt19937_64 gen(11);
  for (int n = 0; n < 20; ++n) {
    auto const rp = random_point(gen);
    auto const op = OperatingPoint::make(rp.cfg, rp.geo);
    double const want = op.params.i_over_n0 *
                        conditional_ratio_mean(op.params.psi, op.rates.sd, op.rates.sp);
    CHECK(mean_interference_term(op.params, op.rates) == doctest::Approx(want).epsilon(1e-9));
    double const t = compute_t(op.params, op.rates);
    CHECK(t >= 0.0);
    CHECK(t < 1.0);
  }
}

TEST_CASE("no-rp tier is the large lambda_rp limit of the full tier") {
  std::mt19937_64 gen(21);
  for (int n = 0; n < 50; ++n) {
    auto const rp = random_point(gen);
    auto op = OperatingPoint::make(rp.cfg, rp.geo);
    double const approx = p2_no_rp(op.params, op.rates);
    op.rates.rp = 1e8;
    double const full = p2_full(op.params, op.rates);
    CHECK(std::fabs(approx - full) <= 1e-4);
  }
}

TEST_CASE("no-direct outage is the large lambda_sd limit of the full tier") {
  std::mt19937_64 gen(31);
  for (int n = 0; n < 50; ++n) {
    auto const rp = random_point(gen);
    auto op = OperatingPoint::make(rp.cfg, rp.geo);
    double const nd = p_no_direct(op.params, op.rates).p;
    double const p2nd = p2_no_direct(op.params, op.rates);
    op.rates.sd = 1e8;
    CHECK(std::fabs(p_full(op.params, op.rates).p - nd) <= 1e-4);
    op.rates.sd = 1e13;
    CHECK(std::fabs(p2_full(op.params, op.rates) - p2nd) <= 1e-6);
  }
}

TEST_CASE("removing the direct link never helps") {
  std::mt19937_64 gen(41);
  for (int n = 0; n < 50; ++n) {
    auto const rp = random_point(gen);
    auto const op = OperatingPoint::make(rp.cfg, rp.geo);
    CHECK(p_no_direct(op.params, op.rates).p >= p_full(op.params, op.rates).p - 1e-12);
  }
}

TEST_CASE("all received power harvested") {
  ProtocolConfig c;
  c.rho = 1.0 - 1e-9;
  auto const op = OperatingPoint::make(c, SystemGeometry{});
  CHECK(p1_exact(op.params, op.rates) > 1.0 - 1e-6);
  CHECK(std::fabs(p2_no_rp(op.params, op.rates)) < 1e-6);
  CHECK(throughput(op.params, op.rates, Tier::Full).tau < 1e-6);
}

TEST_CASE("outage breakdown invariants") {
  std::mt19937_64 gen(51);
  for (int n = 0; n < 40; ++n) {
    auto const rp = random_point(gen);
    auto const op = OperatingPoint::make(rp.cfg, rp.geo);
    for (Tier tier : {Tier::Full, Tier::NoRpConstraint, Tier::NoDirectLink}) {
      auto const o = outage(op.params, op.rates, tier);
      CHECK(o.p1 >= 0.0);
      CHECK(o.p >= 0.0);
      CHECK(o.p <= 1.0);
      CHECK(o.p_raw == doctest::Approx(o.p1 + o.p2).epsilon(1e-15));
      CHECK(o.p2 > -1e-6);
    }
  }
}

TEST_CASE("alternating exponential-integral sum") {
  auto const op = reference_point();
  double const x = high_margin_x(op.params, op.rates);
  double prev = 0.0;
  for (int L : {2, 4, 8, 12}) {
    double const s = high_margin_sum(L, x);
    CHECK(s >= 0.0);
    CHECK(s <= 1.0);
    CHECK(s > prev);
    prev = s;
  }
  CHECK(1.0 - high_margin_sum(8, x) < 1e-3);
  CHECK(1.0 - high_margin_sum(12, x) < 1e-5);
  CHECK(high_margin_sum(3, 1e-12) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("high-margin tier under unlimited harvested power") {
  auto op = reference_point();
  op.params.beta = 1e12;
  CHECK(high_margin_sum(op.params.L, high_margin_x(op.params, op.rates)) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(p_high_margin(op.params, op.rates).p ==
        doctest::Approx(p1_exact(op.params, op.rates)).epsilon(1e-6));
}

TEST_CASE("high-margin regime warning") {
  auto const op = reference_point();
  CHECK_FALSE(p_high_margin(op.params, op.rates).regime_warning);
  ProtocolConfig c;
  c.i_over_n0 = 0.01;
  auto const lo = OperatingPoint::make(c, SystemGeometry{});
  CHECK(p_high_margin(lo.params, lo.rates).regime_warning);

  auto near = reference_point();
  near.rates.rp = near.rates.rd * 2.0;
  CHECK(p_no_rp(near.params, near.rates).regime_warning);
}

TEST_CASE("throughput formula") {
  std::mt19937_64 gen(61);
  for (int n = 0; n < 20; ++n) {
    auto const rp = random_point(gen);
    auto const op = OperatingPoint::make(rp.cfg, rp.geo);
    auto const r = throughput(op.params, op.rates, Tier::Full);
    CHECK(r.tau == doctest::Approx(0.5 * op.params.Rs * op.params.zeta * (1.0 - r.outage.p)));
    CHECK(r.tau >= 0.0);
    CHECK(r.tau <= op.params.Rs);
  }
  ProtocolConfig ps;
  ps.rho = 0.3;
  ProtocolConfig ts = ps;
  ts.scheme = Scheme::TS;
  CHECK(derive(ps).zeta / derive(ts).zeta == doctest::Approx(1.0 / 0.7));
}

TEST_CASE("incremental components and limits") {
  auto op = reference_point(60);
  CHECK(p3(op.params, op.rates) == doctest::Approx(q2(op.params, op.rates)).epsilon(1e-12));

  ProtocolConfig c;
  c.Rs = 2.0;
  c.i_over_n0 = 1e14;
  auto const hi = OperatingPoint::make(c, SystemGeometry{});
  CHECK(q2(hi.params, hi.rates) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(tau_direct(hi.params, hi.rates) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("incremental throughput forms agree and dominate cooperative") {
  std::mt19937_64 gen(71);
  for (int n = 0; n < 60; ++n) {
    auto const rp = random_point(gen);
    auto const op = OperatingPoint::make(rp.cfg, rp.geo);
    ThroughputReport in;
    REQUIRE_NOTHROW(in = tau_incremental(op.params, op.rates, Tier::Full));
    auto const co = throughput(op.params, op.rates, Tier::Full);
    REQUIRE(in.components.has_value());
    auto const& k = *in.components;
    CHECK(in.tau == doctest::Approx(op.params.zeta * (0.5 * op.params.Rs * k.q1 +
                                                      op.params.Rs * k.q2)));
    CHECK(in.tau >= co.tau - 1e-12);
    CHECK(in.tau <= op.params.Rs);
  }
}

TEST_CASE("incremental gain saturates for many antennas") {
  auto const op = reference_point(8);
  double const gain = tau_incremental(op.params, op.rates, Tier::Full).tau -
                      throughput(op.params, op.rates, Tier::Full).tau;
  double const limit = 0.5 * op.params.zeta * tau_direct(op.params, op.rates);
  CHECK(std::fabs(gain - limit) <= 0.02 * limit);
}

TEST_CASE("incremental gain across the power-splitting rho grid") {
  SystemGeometry g;
  g.d_sr = 1.5;
  std::vector<double> gaps;
  for (int k = 1; k <= 99; ++k) {
    ProtocolConfig c;
    c.L = 1;
    c.Rs = 3.0;
    c.rho = k / 100.0;
    auto const op = OperatingPoint::make(c, g);
    gaps.push_back(tau_incremental(op.params, op.rates, Tier::Full).tau -
                   throughput(op.params, op.rates, Tier::Full).tau);
  }
  double mean = 0.0;
  for (double g : gaps) mean += g;
  mean /= static_cast<double>(gaps.size());
  double dev = 0.0;
  for (std::size_t k = 0; k < gaps.size(); ++k) {
    dev = std::max(dev, std::fabs(gaps[k] - mean));
    if (k > 0) CHECK(gaps[k] >= gaps[k - 1]);
  }
  // The gain grows as the cooperative throughput collapses near rho = 1, so
  // it is not constant to within 5% over the whole grid.
  CHECK(dev / mean > 0.05);
  CHECK(gaps.front() == doctest::Approx(0.0942).epsilon(1e-3));
  CHECK(gaps.back() == doctest::Approx(0.1653).epsilon(1e-3));
}

TEST_CASE("direct-link throughput gain") {
  double prev = 1e300;
  for (int L : {1, 2, 4, 8}) {
    auto const op = reference_point(L);
    double const gap = tau_gap_direct(op.params, op.rates);
    CHECK(gap >= 0.0);
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK(prev < 1e-3);

  auto op = reference_point(2);
  double const gap = tau_gap_direct(op.params, op.rates);
  double const diff = throughput(op.params, op.rates, Tier::Full).tau -
                      throughput(op.params, op.rates, Tier::NoDirectLink).tau;
  CHECK(std::fabs(gap - diff) <= 0.10 * diff);

  op.rates.sd = 1e12;
  CHECK(tau_gap_direct(op.params, op.rates) < 1e-9);
}

TEST_CASE("throughput is unimodal in rho") {
  std::mt19937_64 gen(81);
  int evaluated = 0;
  int drawn = 0;
  while (evaluated < 20 && drawn < 500) {
    ++drawn;
    auto const rp = random_point(gen);
    auto const lam = lambdas_from_geometry(rp.geo);
    if (lam.sp / derive(rp.cfg).psi < 10.0) continue;
    std::vector<double> co, in;
    try {
      for (int k = 1; k <= 99; ++k) {
        auto c = rp.cfg;
        c.rho = k / 100.0;
        auto const dp = derive(c);
        co.push_back(throughput(dp, lam, Tier::Full).tau);
        in.push_back(tau_incremental(dp, lam, Tier::Full).tau);
      }
    } catch (StabilityError const&) {
      continue;
    }
    ++evaluated;
    CHECK(sign_changes(co) <= 1);
    CHECK(sign_changes(in) <= 1);
  }
  CHECK(evaluated == 20);
}

TEST_CASE("outage decreases with interference margin and antennas") {
  for (Scheme s : {Scheme::PS, Scheme::TS}) {
    double prev = 2.0;
    for (int db = 0; db <= 20; ++db) {
      ProtocolConfig c;
      c.scheme = s;
      c.i_over_n0 = db_to_linear(db);
      auto const op = OperatingPoint::make(c, SystemGeometry{});
      double const p = p_full(op.params, op.rates).p;
      CHECK(p <= prev + 1e-12);
      prev = p;
    }
    prev = 2.0;
    for (int L = 1; L <= 8; ++L) {
      ProtocolConfig c;
      c.scheme = s;
      c.L = L;
      auto const op = OperatingPoint::make(c, SystemGeometry{});
      double const p = p_full(op.params, op.rates).p;
      CHECK(p <= prev + 1e-12);
      prev = p;
    }
  }
}

TEST_CASE("supported antenna range") {
  auto const op = reference_point(11);
  CHECK_THROWS_AS(p2_full(op.params, op.rates), DomainError);
  CHECK_THROWS_AS(p2_no_rp(op.params, op.rates), DomainError);
  CHECK_THROWS_AS(p_no_direct(op.params, op.rates), DomainError);
  CHECK_THROWS_AS(high_margin_sum(60, 1e-3), StabilityError);
  CHECK_THROWS_AS(p2_full_with_t(reference_point().params, reference_point().rates, 1.5),
                  DomainError);
  CHECK_THROWS_AS(tau_incremental(op.params, op.rates, Tier::NoDirectLink), DomainError);
}

TEST_CASE("mode dispatch") {
  auto const op = reference_point();
  auto const d = evaluate(op.params, op.rates, Mode::DirectOnly, Tier::Full);
  CHECK(d.tau == doctest::Approx(tau_direct(op.params, op.rates)));
  auto const nd = evaluate(op.params, op.rates, Mode::NoDirect, Tier::Full);
  CHECK(nd.outage.p == doctest::Approx(p_no_direct(op.params, op.rates).p));
  auto const in = evaluate(op.params, op.rates, Mode::Incremental, Tier::Full);
  CHECK(in.scheme == Mode::Incremental);
}
