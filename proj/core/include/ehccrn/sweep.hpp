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

#ifndef EHCCRN_SWEEP_HPP
#define EHCCRN_SWEEP_HPP

#include <optional>
#include <string>
#include <vector>

#include "ehccrn/config.hpp"

namespace ehccrn::sweep {

inline constexpr char const* kVersion = "0.1.0";

struct ResultRow {
  double axis_value = 0.0;
  Mode mode = Mode::Cooperative;
  std::string engine;
  double p1 = 0.0;
  double p2 = 0.0;
  double p = 0.0;
  double tau = 0.0;
  /// Standard error of p, Monte Carlo rows only.
  std::optional<double> std_error;
  std::string status = "ok";
};

/// One row per (axis value, mode, engine), in that nesting order. Row
/// failures are reported in `status` and do not stop the sweep.
std::vector<ResultRow> run_sweep(SweepSpec const& spec, unsigned threads = 0);

struct OptimizeRow {
  Mode mode = Mode::Cooperative;
  Scheme scheme = Scheme::PS;
  std::string method;
  std::optional<double> rho_star;
  std::optional<double> tau;
  std::string status = "ok";
};

/// Closed-form (L = 1) and numeric rho* for every requested mode, both
/// schemes and every engine.
std::vector<OptimizeRow> run_optimize(SweepSpec const& spec, unsigned threads = 0);

struct ValidationRow {
  double axis_value = 0.0;
  Mode mode = Mode::Cooperative;
  std::string quantity;
  double analytic = 0.0;
  double montecarlo = 0.0;
  double std_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string status = "ok";
};

/// Full-tier analytic against Monte Carlo, tolerance max(3% relative, 3 SE).
std::vector<ValidationRow> run_validate(SweepSpec const& spec, unsigned threads = 0);

std::string metadata(SweepSpec const& spec, std::string_view command);
std::string sweep_csv(SweepSpec const& spec, std::vector<ResultRow> const& rows);
std::string optimize_csv(SweepSpec const& spec, std::vector<OptimizeRow> const& rows);
std::string validate_csv(SweepSpec const& spec, std::vector<ValidationRow> const& rows);

bool has_failures(std::vector<ResultRow> const& rows);
bool has_failures(std::vector<OptimizeRow> const& rows);

}  // namespace ehccrn::sweep

#endif  // EHCCRN_SWEEP_HPP
