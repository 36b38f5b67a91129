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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ehccrn/error.hpp"
#include "ehccrn/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitPartial = 2;

struct Common {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  unsigned threads = 0;
};

ehccrn::sweep::SweepSpec load(Common const& c) {
  std::ifstream in(c.config);
  if (!in) throw ehccrn::ConfigError("cannot open config file '" + c.config + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  auto spec = ehccrn::sweep::parse_config(ss.str());
  if (c.seed) spec.seed = *c.seed;
  if (c.trials) {
    if (*c.trials < 1000) throw ehccrn::ConfigError("--trials must be >= 1000");
    spec.trials = c.trials;
  }
  return spec;
}

void emit(Common const& c, std::string const& text) {
  if (c.out.empty() || c.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw ehccrn::ConfigError("cannot write '" + c.out + "'");
  f << text;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("config", c.config, "Run configuration (key=value file)")->required();
  sub->add_option("--out,-o", c.out, "Output CSV path (default: stdout)");
  sub->add_option("--seed", c.seed, "Monte Carlo seed override");
  sub->add_option("--trials", c.trials, "Monte Carlo trial count override");
  sub->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Outage, throughput and optimal EH-parameter evaluator for "
               "energy-harvesting cooperative cognitive relay networks"};
  app.set_version_flag("--version", std::string(ehccrn::sweep::kVersion));
  app.require_subcommand(1);

  Common sweep_opts, optimize_opts, validate_opts;
  auto* sweep = app.add_subcommand("sweep", "Evaluate engines over a parameter axis");
  add_common(sweep, sweep_opts);
  auto* optimize = app.add_subcommand("optimize", "Closed-form and numeric optimal rho");
  add_common(optimize, optimize_opts);
  auto* validate = app.add_subcommand("validate", "Analytic versus Monte Carlo agreement");
  add_common(validate, validate_opts);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  using namespace ehccrn::sweep;
  try {
    if (*sweep) {
      auto const spec = load(sweep_opts);
      auto const rows = run_sweep(spec, sweep_opts.threads);
      emit(sweep_opts, sweep_csv(spec, rows));
      return has_failures(rows) ? kExitPartial : kExitOk;
    }
    if (*optimize) {
      auto const spec = load(optimize_opts);
      auto const rows = run_optimize(spec, optimize_opts.threads);
      emit(optimize_opts, optimize_csv(spec, rows));
      return has_failures(rows) ? kExitPartial : kExitOk;
    }
    auto const spec = load(validate_opts);
    auto const rows = run_validate(spec, validate_opts.threads);
    emit(validate_opts, validate_csv(spec, rows));
    bool const ok = std::all_of(rows.begin(), rows.end(), [](auto const& r) { return r.pass; });
    return ok ? kExitOk : kExitPartial;
  } catch (ehccrn::ConfigError const& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (ehccrn::DomainError const& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPartial;
  }
}
