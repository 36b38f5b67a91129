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

#include "ehccrn/model.hpp"

#include <cmath>
#include <string>

#include "ehccrn/error.hpp"

namespace ehccrn {
namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

void require_positive(double v, char const* name) {
  if (!positive_finite(v)) {
    throw DomainError(std::string(name) + " must be a finite positive number");
  }
}

}  // namespace

std::string_view to_string(Scheme s) {
  return s == Scheme::PS ? "ps" : "ts";
}

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::Cooperative:
      return "cooperative";
    case Mode::NoDirect:
      return "nodirect";
    case Mode::Incremental:
      return "incremental";
    case Mode::DirectOnly:
      return "directonly";
  }
  return "?";
}

std::string_view to_string(Combining c) {
  return c == Combining::MRC ? "mrc" : "sc";
}

void SystemGeometry::validate() const {
  require_positive(d_sr, "d_sr");
  require_positive(d_rd, "d_rd");
  require_positive(d_sp, "d_sp");
  require_positive(d_rp, "d_rp");
  require_positive(d_sd, "d_sd");
  require_positive(epsilon, "epsilon");
  lambdas_from_geometry(*this).validate();
}

void ChannelRates::validate() const {
  require_positive(sr, "lambda_sr");
  require_positive(rd, "lambda_rd");
  require_positive(sp, "lambda_sp");
  require_positive(rp, "lambda_rp");
  require_positive(sd, "lambda_sd");
}

ChannelRates lambdas_from_geometry(SystemGeometry const& g) {
  return ChannelRates{std::pow(g.d_sr, g.epsilon), std::pow(g.d_rd, g.epsilon),
                      std::pow(g.d_sp, g.epsilon), std::pow(g.d_rp, g.epsilon),
                      std::pow(g.d_sd, g.epsilon)};
}

void ProtocolConfig::validate() const {
  if (!(rho > 0.0 && rho < 1.0)) throw DomainError("rho must lie in (0,1)");
  if (!(eta > 0.0 && eta <= 1.0)) throw DomainError("eta must lie in (0,1]");
  if (L < 1) throw DomainError("L must be >= 1");
  require_positive(Rs, "Rs");
  require_positive(i_over_n0, "i_over_n0");
}

DerivedParams derive(ProtocolConfig const& cfg) {
  DerivedParams dp;
  if (cfg.scheme == Scheme::PS) {
    dp.xi = 1.0 - cfg.rho;
    dp.beta = cfg.eta * cfg.rho;
    dp.zeta = 1.0;
  } else {
    dp.xi = 1.0;
    dp.beta = 2.0 * cfg.eta * cfg.rho / (1.0 - cfg.rho);
    dp.zeta = 1.0 - cfg.rho;
  }
  dp.gamma_th = std::exp2(2.0 * cfg.Rs) - 1.0;
  dp.psi = dp.gamma_th / cfg.i_over_n0;
  dp.scheme = cfg.scheme;
  dp.rho = cfg.rho;
  dp.eta = cfg.eta;
  dp.L = cfg.L;
  dp.Rs = cfg.Rs;
  dp.i_over_n0 = cfg.i_over_n0;
  return dp;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

OperatingPoint OperatingPoint::make(ProtocolConfig const& cfg,
                                    SystemGeometry const& g) {
  g.validate();
  return make(cfg, lambdas_from_geometry(g));
}

OperatingPoint OperatingPoint::make(ProtocolConfig const& cfg,
                                    ChannelRates const& r) {
  cfg.validate();
  r.validate();
  return OperatingPoint{cfg, derive(cfg), r};
}

}  // namespace ehccrn
