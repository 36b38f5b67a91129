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

#ifndef EHCCRN_ANALYTIC_HPP
#define EHCCRN_ANALYTIC_HPP

#include <optional>
#include <string_view>

#include "ehccrn/model.hpp"

namespace ehccrn::analytic {

/// Approximation tier for the outage probability.
enum class Tier { Full, NoRpConstraint, HighMargin, NoDirectLink };

/// How the weight t of the Full tier is computed.
///  - Consistent: conditional-mean interference term normalized by I/N0.
///  - Printed: the literal textbook expression, which uses gamma_th in
///    place of psi. Kept for comparison; results are clamped to [0,1).
enum class TFormula { Consistent, Printed };

std::string_view to_string(Tier t);
std::string_view to_string(TFormula f);

struct Options {
  TFormula t_formula = TFormula::Consistent;
};

/// Largest L accepted by the alternating-sum evaluators.
inline constexpr int kMaxStableL = 10;

struct OutageBreakdown {
  double p1 = 0.0;
  double p2 = 0.0;
  double p = 0.0;
  Tier tier = Tier::Full;
  /// p1 + p2 before clamping.
  double p_raw = 0.0;
  /// Set when the operating point is outside the tier's intended regime.
  bool regime_warning = false;
};

struct IncrementalComponents {
  double q1 = 0.0;
  double q2 = 0.0;
  double p3 = 0.0;
};

struct ThroughputReport {
  double tau = 0.0;
  Mode scheme = Mode::Cooperative;
  OutageBreakdown outage;
  std::optional<IncrementalComponents> components;
};

double p1_exact(DerivedParams const& dp, ChannelRates const& lam);

/// Conditional mean of P_s |h_sd|^2 given that the direct link alone is in
/// outage.
double mean_interference_term(DerivedParams const& dp, ChannelRates const& lam);

double compute_t(DerivedParams const& dp, ChannelRates const& lam,
                 TFormula f = TFormula::Consistent);
double compute_t_nd(DerivedParams const& dp, ChannelRates const& lam,
                    TFormula f = TFormula::Consistent);

/// Full-tier p2 for an explicit weight t in [0,1].
double p2_full_with_t(DerivedParams const& dp, ChannelRates const& lam, double t);
double p2_full(DerivedParams const& dp, ChannelRates const& lam,
               Options const& opt = {});
double p2_no_rp(DerivedParams const& dp, ChannelRates const& lam);
double p2_no_direct(DerivedParams const& dp, ChannelRates const& lam,
                    Options const& opt = {});

/// Alternating sum sum_i (-1)^(i+1) C(L,i) L e^(x i) E_{L+1}(x i).
double high_margin_sum(int L, double x);
/// Argument x of high_margin_sum at an operating point.
double high_margin_x(DerivedParams const& dp, ChannelRates const& lam);

OutageBreakdown p_full(DerivedParams const& dp, ChannelRates const& lam,
                       Options const& opt = {});
OutageBreakdown p_no_rp(DerivedParams const& dp, ChannelRates const& lam);
OutageBreakdown p_high_margin(DerivedParams const& dp, ChannelRates const& lam);
OutageBreakdown p_no_direct(DerivedParams const& dp, ChannelRates const& lam,
                            Options const& opt = {});

/// Outage of the cooperative scheme for the requested tier. NoDirectLink
/// returns the no-direct outage.
OutageBreakdown outage(DerivedParams const& dp, ChannelRates const& lam,
                       Tier tier, Options const& opt = {});
/// Outage with the direct link removed, using the tier's approximation.
OutageBreakdown outage_no_direct(DerivedParams const& dp, ChannelRates const& lam,
                                 Tier tier, Options const& opt = {});

double q2(DerivedParams const& dp, ChannelRates const& lam);
double p3(DerivedParams const& dp, ChannelRates const& lam);
double tau_direct(DerivedParams const& dp, ChannelRates const& lam);

/// tau = 0.5 Rs zeta (1 - p). Tier NoDirectLink yields the no-direct
/// throughput.
ThroughputReport throughput(DerivedParams const& dp, ChannelRates const& lam,
                            Tier tier, Options const& opt = {});

/// Incremental-relaying correction tau_in - tau.
double tau_incremental_gain(DerivedParams const& dp, ChannelRates const& lam);

/// Throws ConsistencyError if the decomposed and the correction-term forms
/// differ by more than 1e-8.
ThroughputReport tau_incremental(DerivedParams const& dp, ChannelRates const& lam,
                                 Tier tier, Options const& opt = {});

double tau_gap_direct(DerivedParams const& dp, ChannelRates const& lam);

/// Dispatch on transmission mode. Tier is ignored for DirectOnly.
ThroughputReport evaluate(DerivedParams const& dp, ChannelRates const& lam,
                          Mode mode, Tier tier, Options const& opt = {});

}  // namespace ehccrn::analytic

#endif  // EHCCRN_ANALYTIC_HPP
