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

#ifndef EHCCRN_CONFIG_HPP
#define EHCCRN_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ehccrn/analytic.hpp"
#include "ehccrn/model.hpp"

namespace ehccrn::sweep {

enum class Axis { IOverN0Db, Rho, Rs, L, DSr };

std::string_view to_string(Axis a);

struct Engine {
  enum class Kind { Analytic, MonteCarlo };
  Kind kind = Kind::Analytic;
  analytic::Tier tier = analytic::Tier::Full;

  std::string name() const;
  bool operator==(Engine const&) const = default;
};

inline constexpr std::uint64_t kDefaultSweepTrials = 1'000'000;
inline constexpr std::uint64_t kDefaultOptimizeTrials = 100'000;

/// A parsed run configuration.
struct SweepSpec {
  ProtocolConfig base;
  double i_over_n0_db = 6.0;
  SystemGeometry geometry;
  /// Keep S, R and D on a line: d_rd = d_sd - d_sr whenever d_sr changes.
  bool collinear = false;

  std::optional<Axis> axis;
  std::vector<double> values;
  std::vector<Mode> modes{Mode::Cooperative};
  std::vector<Engine> engines{Engine{}};
  Combining combining = Combining::MRC;
  analytic::TFormula t_formula = analytic::TFormula::Consistent;
  std::optional<std::uint64_t> trials;
  std::uint64_t seed = 1;

  bool operator==(SweepSpec const&) const = default;
};

/// Parses a key=value document. Throws ConfigError with the offending line.
SweepSpec parse_config(std::string_view text);

/// Canonical text form; parse_config(render(s)) == s.
std::string render(SweepSpec const& s);

/// Checks the invariants that need the whole document. `need_axis` is
/// false for optimizer runs.
void validate(SweepSpec const& s, bool need_axis);

/// Base configuration and geometry with the axis set to `value`.
void apply_axis(SweepSpec const& s, double value, ProtocolConfig& cfg,
                SystemGeometry& geom);

}  // namespace ehccrn::sweep

#endif  // EHCCRN_CONFIG_HPP
