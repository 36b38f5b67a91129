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

#ifndef EHCCRN_MODEL_HPP
#define EHCCRN_MODEL_HPP

#include <string_view>

namespace ehccrn {

enum class Scheme { PS, TS };

/// Transmission mode at the destination.
enum class Mode { Cooperative, NoDirect, Incremental, DirectOnly };

enum class Combining { MRC, SC };

std::string_view to_string(Scheme s);
std::string_view to_string(Mode m);
std::string_view to_string(Combining c);

/// Normalized node distances and path-loss exponent. Defaults give the
/// reference layout used throughout the tests and example configs.
struct SystemGeometry {
  double d_sr = 1.2;
  double d_rd = 1.8;
  double d_sp = 3.0;
  double d_rp = 3.0;
  double d_sd = 3.0;
  double epsilon = 4.0;

  void validate() const;
  bool operator==(SystemGeometry const&) const = default;
};

/// Exponential rate parameters of the squared channel magnitudes. The mean
/// gain of link x is 1 / rates.x.
struct ChannelRates {
  double sr = 1.0;
  double rd = 1.0;
  double sp = 1.0;
  double rp = 1.0;
  double sd = 1.0;

  void validate() const;
  bool operator==(ChannelRates const&) const = default;
};

ChannelRates lambdas_from_geometry(SystemGeometry const& g);

struct ProtocolConfig {
  Scheme scheme = Scheme::PS;
  double rho = 0.4;
  double eta = 0.7;
  int L = 2;
  double Rs = 1.0;
  double i_over_n0 = 3.9810717055349722;  // 6 dB

  void validate() const;
  bool operator==(ProtocolConfig const&) const = default;
};

/// Unified protocol parameters. The configuration fields that downstream
/// formulas also need (L, Rs, I/N0, eta) are carried along.
struct DerivedParams {
  double xi = 0.0;
  double beta = 0.0;
  double zeta = 0.0;
  double gamma_th = 0.0;
  double psi = 0.0;

  Scheme scheme = Scheme::PS;
  double rho = 0.0;
  double eta = 0.0;
  int L = 0;
  double Rs = 0.0;
  double i_over_n0 = 0.0;

  bool operator==(DerivedParams const&) const = default;
};

DerivedParams derive(ProtocolConfig const& cfg);

double db_to_linear(double db);

/// Everything needed to evaluate one operating point.
struct OperatingPoint {
  ProtocolConfig config;
  DerivedParams params;
  ChannelRates rates;

  static OperatingPoint make(ProtocolConfig const& cfg, SystemGeometry const& g);
  static OperatingPoint make(ProtocolConfig const& cfg, ChannelRates const& r);
};

}  // namespace ehccrn

#endif  // EHCCRN_MODEL_HPP
