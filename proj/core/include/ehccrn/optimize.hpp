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

#ifndef EHCCRN_OPTIMIZE_HPP
#define EHCCRN_OPTIMIZE_HPP

#include <cstdint>
#include <functional>
#include <string_view>

#include "ehccrn/analytic.hpp"
#include "ehccrn/model.hpp"
#include "ehccrn/montecarlo.hpp"

namespace ehccrn::opt {

enum class Method { ClosedForm, GoldenSection, GridRefine };

enum class Variant { PS, TS, NoDirectPS, NoDirectTS, IncrementalPS, IncrementalTS };

std::string_view to_string(Method m);
std::string_view to_string(Variant v);

/// Variant matching a scheme and transmission mode. DirectOnly has no
/// EH parameter and is rejected.
Variant variant_for(Scheme s, Mode m);
Scheme scheme_of(Variant v);
Mode mode_of(Variant v);

struct RhoOptimum {
  double rho_star = 0.0;
  double tau_at_star = 0.0;
  Method method = Method::GoldenSection;
  /// Closed form fell outside (0.01, 0.99) and was clamped.
  bool clamped = false;
  /// Coarse-grid spread of the objective below 1e-9.
  bool flat = false;
  /// Unclamped closed-form value.
  double raw = 0.0;
};

inline constexpr double kRhoLo = 0.01;
inline constexpr double kRhoHi = 0.99;

/// Closed-form optimum for L = 1. `ctx` supplies eta, Rs and I/N0; its
/// scheme and rho are ignored. tau_at_star is the Full-tier throughput.
RhoOptimum rho_star_closed_form(Variant v, ChannelRates const& lam,
                                ProtocolConfig const& ctx);

struct NumericOptions {
  double lo = kRhoLo;
  double hi = kRhoHi;
  int coarse_points = 33;
  double tolerance = 1e-4;
};

/// Coarse grid to pick the bracketing cell, then golden-section refinement.
RhoOptimum rho_star_numeric(std::function<double(double)> const& objective,
                            NumericOptions const& opt = {});

/// Analytic throughput of `mode` as a function of rho, all else from `base`.
double analytic_tau(ProtocolConfig base, ChannelRates const& lam, Mode mode,
                    analytic::Tier tier, double rho,
                    analytic::Options const& aopt = {});

RhoOptimum rho_star_analytic(ProtocolConfig const& base, ChannelRates const& lam,
                             Mode mode, analytic::Tier tier = analytic::Tier::Full,
                             analytic::Options const& aopt = {},
                             NumericOptions const& nopt = {});

/// Monte Carlo throughput at rho. The same seed is used for every rho.
double mc_tau(ProtocolConfig base, ChannelRates const& lam, double rho,
              mc::RunOptions const& run);

RhoOptimum rho_star_mc(ProtocolConfig const& base, ChannelRates const& lam,
                       mc::RunOptions const& run, NumericOptions const& nopt = {});

}  // namespace ehccrn::opt

#endif  // EHCCRN_OPTIMIZE_HPP
