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

#include "ehccrn/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <thread>

#include "ehccrn/csv.hpp"
#include "ehccrn/montecarlo.hpp"
#include "ehccrn/optimize.hpp"

namespace ehccrn::sweep {
namespace {

unsigned pool_size(unsigned threads) {
  return threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, unsigned threads,
                  std::function<void(std::size_t)> const& fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) fn(i);
  };
  unsigned const k = static_cast<unsigned>(std::min<std::size_t>(pool_size(threads), n));
  if (k <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned i = 0; i < k; ++i) pool.emplace_back(worker);
}

std::string error_status(std::exception const& e) {
  return std::string("error: ") + e.what();
}

mc::RunOptions mc_run(SweepSpec const& spec, Mode mode, std::uint64_t default_trials,
                      unsigned inner_threads) {
  mc::RunOptions run;
  run.mode = mode;
  run.combining = spec.combining;
  run.trials = spec.trials.value_or(default_trials);
  run.seed = spec.seed;
  run.threads = inner_threads;
  return run;
}

OperatingPoint point_at(SweepSpec const& spec, double value) {
  ProtocolConfig cfg;
  SystemGeometry geom;
  apply_axis(spec, value, cfg, geom);
  return OperatingPoint::make(cfg, geom);
}

std::vector<double> axis_values(SweepSpec const& spec) {
  if (spec.axis && !spec.values.empty()) return spec.values;
  return {0.0};
}

std::string axis_label(SweepSpec const& spec) {
  return spec.axis ? std::string(to_string(*spec.axis)) : std::string("none");
}

}  // namespace

std::vector<ResultRow> run_sweep(SweepSpec const& spec, unsigned threads) {
  validate(spec, true);
  struct Task {
    double value;
    Mode mode;
    Engine engine;
  };
  std::vector<Task> tasks;
  for (double v : spec.values) {
    for (Mode m : spec.modes) {
      for (Engine const& e : spec.engines) tasks.push_back({v, m, e});
    }
  }
  unsigned const outer = pool_size(threads);
  unsigned const inner = outer > 1 ? 1 : 0;
  std::vector<ResultRow> rows(tasks.size());
  analytic::Options const aopt{spec.t_formula};

  parallel_for(tasks.size(), outer, [&](std::size_t i) {
    Task const& t = tasks[i];
    ResultRow& r = rows[i];
    r.axis_value = t.value;
    r.mode = t.mode;
    r.engine = t.engine.name();
    try {
      OperatingPoint const op = point_at(spec, t.value);
      if (t.engine.kind == Engine::Kind::Analytic) {
        auto const rep = analytic::evaluate(op.params, op.rates, t.mode, t.engine.tier, aopt);
        r.p1 = rep.outage.p1;
        r.p2 = rep.outage.p2;
        r.p = rep.outage.p;
        r.tau = rep.tau;
        if (rep.outage.regime_warning) r.status = "warning: outside approximation regime";
      } else {
        auto const e = mc::estimate(op, mc_run(spec, t.mode, kDefaultSweepTrials, inner));
        r.p1 = e.p1.value;
        r.p2 = e.p2.value;
        r.p = e.p.value;
        r.tau = e.tau.value;
        r.std_error = e.p.std_error;
      }
    } catch (std::exception const& ex) {
      r.p1 = r.p2 = r.p = r.tau = std::nan("");
      r.status = error_status(ex);
    }
  });
  return rows;
}

std::vector<OptimizeRow> run_optimize(SweepSpec const& spec, unsigned threads) {
  validate(spec, false);
  struct Task {
    Mode mode;
    Scheme scheme;
    std::optional<Engine> engine;
  };
  std::vector<Task> tasks;
  for (Mode m : spec.modes) {
    for (Scheme s : {Scheme::PS, Scheme::TS}) {
      tasks.push_back({m, s, std::nullopt});
      for (Engine const& e : spec.engines) tasks.push_back({m, s, e});
    }
  }
  unsigned const outer = pool_size(threads);
  unsigned const inner = outer > 1 ? 1 : 0;
  analytic::Options const aopt{spec.t_formula};
  ChannelRates const lam = lambdas_from_geometry(spec.geometry);
  std::vector<OptimizeRow> rows(tasks.size());

  parallel_for(tasks.size(), outer, [&](std::size_t i) {
    Task const& t = tasks[i];
    OptimizeRow& r = rows[i];
    r.mode = t.mode;
    r.scheme = t.scheme;
    r.method = t.engine ? "numeric:" + t.engine->name() : "closed_form";
    if (t.mode == Mode::DirectOnly) {
      r.status = "unavailable: direct-only mode has no EH parameter";
      return;
    }
    try {
      ProtocolConfig base = spec.base;
      base.scheme = t.scheme;
      opt::RhoOptimum o;
      if (!t.engine) {
        if (base.L != 1) {
          r.status = "unavailable: closed form needs L = 1";
          return;
        }
        o = opt::rho_star_closed_form(opt::variant_for(t.scheme, t.mode), lam, base);
        if (o.clamped) r.status = "warning: clamped to [0.01,0.99]";
      } else if (t.engine->kind == Engine::Kind::Analytic) {
        o = opt::rho_star_analytic(base, lam, t.mode, t.engine->tier, aopt);
      } else {
        o = opt::rho_star_mc(base, lam, mc_run(spec, t.mode, kDefaultOptimizeTrials, inner));
      }
      if (o.flat) r.status = "warning: flat objective";
      r.rho_star = o.rho_star;
      r.tau = o.tau_at_star;
    } catch (std::exception const& ex) {
      r.status = error_status(ex);
    }
  });
  return rows;
}

std::vector<ValidationRow> run_validate(SweepSpec const& spec, unsigned threads) {
  validate(spec, false);
  struct Task {
    double value;
    Mode mode;
  };
  std::vector<Task> tasks;
  for (double v : axis_values(spec)) {
    for (Mode m : spec.modes) tasks.push_back({v, m});
  }
  unsigned const outer = pool_size(threads);
  unsigned const inner = outer > 1 ? 1 : 0;
  analytic::Options const aopt{spec.t_formula};
  std::vector<std::array<ValidationRow, 2>> out(tasks.size());

  parallel_for(tasks.size(), outer, [&](std::size_t i) {
    Task const& t = tasks[i];
    auto& pair = out[i];
    pair[0].quantity = "p";
    pair[1].quantity = "tau";
    for (auto& r : pair) {
      r.axis_value = t.value;
      r.mode = t.mode;
    }
    try {
      OperatingPoint const op = point_at(spec, t.value);
      auto const a = analytic::evaluate(op.params, op.rates, t.mode, analytic::Tier::Full, aopt);
      auto const run = mc_run(spec, t.mode, kDefaultSweepTrials, inner);
      auto const e = mc::estimate(op, run);
      double const n = static_cast<double>(run.trials);

      pair[0].analytic = a.outage.p;
      pair[0].montecarlo = e.p.value;
      pair[0].std_error = std::sqrt(a.outage.p * (1.0 - a.outage.p) / n);
      pair[1].analytic = a.tau;
      pair[1].montecarlo = e.tau.value;
      pair[1].std_error = e.tau.std_error;
      for (auto& r : pair) {
        r.tolerance = std::max(0.03 * std::fabs(r.analytic), 3.0 * r.std_error);
        r.pass = std::fabs(r.analytic - r.montecarlo) <= r.tolerance;
      }
    } catch (std::exception const& ex) {
      for (auto& r : pair) {
        r.status = error_status(ex);
        r.pass = false;
      }
    }
  });
  std::vector<ValidationRow> rows;
  for (auto const& pair : out) rows.insert(rows.end(), pair.begin(), pair.end());
  return rows;
}

std::string metadata(SweepSpec const& spec, std::string_view command) {
  std::string out = "# ehccrn " + std::string(kVersion) + " " + std::string(command) + "\n";
  std::string const body = render(spec);
  std::size_t pos = 0;
  while (pos < body.size()) {
    auto const nl = body.find('\n', pos);
    out += "# " + body.substr(pos, nl - pos) + "\n";
    pos = nl + 1;
  }
  return out;
}

std::string sweep_csv(SweepSpec const& spec, std::vector<ResultRow> const& rows) {
  std::string out = metadata(spec, "sweep");
  out += "# axis column holds " + axis_label(spec) + "; std_error is the standard error of p\n";
  out += "axis,mode,engine,p1,p2,p,tau,std_error,status\n";
  for (auto const& r : rows) {
    out += csv::row({csv::number(r.axis_value), std::string(to_string(r.mode)), r.engine,
                     csv::number(r.p1), csv::number(r.p2), csv::number(r.p),
                     csv::number(r.tau), r.std_error ? csv::number(*r.std_error) : "",
                     r.status});
  }
  return out;
}

std::string optimize_csv(SweepSpec const& spec, std::vector<OptimizeRow> const& rows) {
  std::string out = metadata(spec, "optimize");
  out += "mode,scheme,method,rho_star,tau,status\n";
  for (auto const& r : rows) {
    out += csv::row({std::string(to_string(r.mode)), std::string(to_string(r.scheme)),
                     r.method, r.rho_star ? csv::number(*r.rho_star) : "",
                     r.tau ? csv::number(*r.tau) : "", r.status});
  }
  return out;
}

std::string validate_csv(SweepSpec const& spec, std::vector<ValidationRow> const& rows) {
  std::string out = metadata(spec, "validate");
  out += "axis,mode,quantity,analytic,montecarlo,std_error,tolerance,verdict,status\n";
  for (auto const& r : rows) {
    out += csv::row({csv::number(r.axis_value), std::string(to_string(r.mode)), r.quantity,
                     csv::number(r.analytic), csv::number(r.montecarlo),
                     csv::number(r.std_error), csv::number(r.tolerance),
                     r.pass ? "PASS" : "FAIL", r.status});
  }
  return out;
}

bool has_failures(std::vector<ResultRow> const& rows) {
  return std::any_of(rows.begin(), rows.end(),
                     [](auto const& r) { return r.status.rfind("error", 0) == 0; });
}

bool has_failures(std::vector<OptimizeRow> const& rows) {
  return std::any_of(rows.begin(), rows.end(),
                     [](auto const& r) { return r.status.rfind("error", 0) == 0; });
}

}  // namespace ehccrn::sweep
