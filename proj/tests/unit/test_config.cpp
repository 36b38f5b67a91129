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


#include <cmath>
#include <string>

#include "doctest.h"
#include "ehccrn/csv.hpp"
#include "ehccrn/error.hpp"
#include "ehccrn/sweep.hpp"

using namespace ehccrn;
using namespace ehccrn::sweep;

namespace {

constexpr char const* kOutageDoc = R"(# outage versus interference margin
scheme = ps
rho = 0.4
eta = 0.7
L = 2
rs = 1
i_over_n0_db = 6
d_sr = 1.2
d_rd = 1.8
d_sp = 3
d_rp = 3
d_sd = 3
axis = i_over_n0_db
values = 0:2:20
)";

int error_line(std::string const& text) {
  try {
    parse_config(text);
  } catch (ConfigError const& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("minimal outage sweep document") {
  auto const s = parse_config(kOutageDoc);
  CHECK(s.base.scheme == Scheme::PS);
  CHECK(s.base.rho == 0.4);
  CHECK(s.base.L == 2);
  CHECK(s.base.i_over_n0 == doctest::Approx(db_to_linear(6.0)));
  CHECK(s.geometry == SystemGeometry{});
  REQUIRE(s.axis.has_value());
  CHECK(*s.axis == Axis::IOverN0Db);
  REQUIRE(s.values.size() == 11);
  CHECK(s.values.front() == 0.0);
  CHECK(s.values.back() == 20.0);
  CHECK(s.modes == std::vector<Mode>{Mode::Cooperative});
  CHECK_NOTHROW(validate(s, true));
}

TEST_CASE("keys are case-insensitive and comments are ignored") {
  auto const s = parse_config("SCHEME = TS   # trailing\n\n  Rho=0.25\nEngines = analytic:no_rp, montecarlo\n");
  CHECK(s.base.scheme == Scheme::TS);
  CHECK(s.base.rho == 0.25);
  REQUIRE(s.engines.size() == 2);
  CHECK(s.engines[0].tier == analytic::Tier::NoRpConstraint);
  CHECK(s.engines[1].kind == Engine::Kind::MonteCarlo);
  CHECK(s.engines[0].name() == "analytic:no_rp");
}

TEST_CASE("configuration errors carry line numbers") {
  CHECK(error_line("scheme = ps\nrho = 0.4\nfoo = 1\n") == 3);
  CHECK(error_line("rho = 1.0\n") == 1);
  CHECK(error_line("rho = 0.4\nrho = 0.5\n") == 2);
  CHECK(error_line("modes =\n") == 1);
  CHECK(error_line("modes = cooperative, sideways\n") == 1);
  CHECK(error_line("axis = rho\n# x\nvalues = 0.2, 0.1\n") == 3);
  CHECK(error_line("axis = rho\nvalues = 0.5, 1.2\n") == 2);
  CHECK(error_line("trials = 10\n") == 1);
  CHECK(error_line("just words\n") == 1);
  CHECK(error_line("d_sr = 4\nd_sd = 3\ncollinear = yes\n") == 3);

  try {
    parse_config("scheme = ps\nrho = 0.4\nfoo = 1\n");
    FAIL("expected a configuration error");
  } catch (ConfigError const& e) {
    CHECK(std::string(e.what()) == "line 3: unknown key 'foo'");
  }
  try {
    parse_config("rho = 1.0\n");
  } catch (ConfigError const& e) {
    CHECK(std::string(e.what()).find("rho must lie in (0,1)") != std::string::npos);
  }
}

TEST_CASE("whole-document validation") {
  SweepSpec s;
  CHECK_THROWS_AS(validate(s, true), ConfigError);
  CHECK_NOTHROW(validate(s, false));
  s.modes.clear();
  CHECK_THROWS_AS(validate(s, false), ConfigError);
}

TEST_CASE("ranges and lists") {
  auto const a = parse_config("axis = rho\nvalues = 0.01:0.01:0.99\n");
  REQUIRE(a.values.size() == 99);
  CHECK(a.values[49] == doctest::Approx(0.5));
  CHECK(a.values.back() == doctest::Approx(0.99));
  auto const b = parse_config("axis = L\nvalues = 1, 2, 4, 8\n");
  CHECK(b.values == std::vector<double>{1, 2, 4, 8});
}

TEST_CASE("collinear layout follows the relay position") {
  auto const s = parse_config(
      "collinear = true\nd_sd = 4\nd_sp = 4\nd_rp = 4\nd_sr = 1\naxis = d_sr\nvalues = 0.5:0.5:3.5\n");
  CHECK(s.geometry.d_rd == doctest::Approx(3.0));
  ProtocolConfig cfg;
  SystemGeometry g;
  apply_axis(s, 2.5, cfg, g);
  CHECK(g.d_sr == 2.5);
  CHECK(g.d_rd == doctest::Approx(1.5));
}

TEST_CASE("render round trip") {
  auto s = parse_config(kOutageDoc);
  s.modes = {Mode::Incremental, Mode::DirectOnly};
  s.engines = {Engine{Engine::Kind::Analytic, analytic::Tier::HighMargin},
               Engine{Engine::Kind::MonteCarlo, analytic::Tier::Full}};
  s.combining = Combining::SC;
  s.t_formula = analytic::TFormula::Printed;
  s.trials = 12345;
  s.seed = 99;
  s.base.eta = 0.1 + 0.2;
  CHECK(parse_config(render(s)) == s);
  CHECK(parse_config(render(SweepSpec{})) == SweepSpec{});
}

TEST_CASE("csv fields") {
  CHECK(csv::escape("plain") == "plain");
  CHECK(csv::escape("a,b") == "\"a,b\"");
  CHECK(csv::escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv::escape("two\nlines") == "\"two\nlines\"");
  CHECK(csv::number(0.1) == "0.1");
  CHECK(csv::number(1.0 / 3.0) == "0.333333333333");
  CHECK(csv::number(std::nan("")).empty());
  CHECK(csv::row({"x", "y,z"}) == "x,\"y,z\"\n");
}

TEST_CASE("sweep output is deterministic") {
  auto s = parse_config(
      "axis = i_over_n0_db\nvalues = 0, 10\nmodes = cooperative, incremental\n"
      "engines = analytic:full, montecarlo\ntrials = 5000\nseed = 4\n");
  auto const a = sweep_csv(s, run_sweep(s, 1));
  auto const b = sweep_csv(s, run_sweep(s, 3));
  CHECK(a == b);
  CHECK(a.find("\naxis,mode,engine,p1,p2,p,tau,std_error,status\n") != std::string::npos);
  auto const rows = run_sweep(s, 1);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0].axis_value == 0.0);
  CHECK(rows[0].engine == "analytic:full");
  CHECK(rows[1].engine == "montecarlo");
  CHECK(rows[1].std_error.has_value());
  CHECK_FALSE(rows[0].std_error.has_value());
  CHECK(rows[2].mode == Mode::Incremental);
  CHECK(rows[7].axis_value == 10.0);
  for (auto const& r : rows) {
    CHECK(r.status == "ok");
    CHECK(r.p >= 0.0);
    CHECK(r.p <= 1.0);
  }
}

TEST_CASE("a failing row does not stop the sweep") {
  auto const s = parse_config("axis = L\nvalues = 1, 11, 12\nengines = analytic:full\n");
  auto const rows = run_sweep(s, 1);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].status == "ok");
  CHECK(rows[1].status.rfind("error:", 0) == 0);
  CHECK(rows[2].status.rfind("error:", 0) == 0);
  CHECK(has_failures(rows));
}

TEST_CASE("optimizer rows") {
  auto const one = parse_config("L = 1\nrs = 3\nd_sr = 1.5\nmodes = cooperative, incremental\n");
  auto const rows = run_optimize(one, 1);
  REQUIRE(rows.size() == 2 * 2 * 2);
  double ps_closed = -1, inps_closed = -2;
  for (auto const& r : rows) {
    CHECK((r.status == "ok" || r.status.rfind("warning:", 0) == 0));
    REQUIRE(r.rho_star.has_value());
    CHECK(*r.rho_star > 0.0);
    CHECK(*r.rho_star < 1.0);
    if (r.scheme == Scheme::PS && r.method == "closed_form") {
      (r.mode == Mode::Cooperative ? ps_closed : inps_closed) = *r.rho_star;
    }
  }
  CHECK(ps_closed == inps_closed);
  CHECK_FALSE(has_failures(rows));

  auto const two = parse_config("L = 2\n");
  for (auto const& r : run_optimize(two, 1)) {
    if (r.method == "closed_form") {
      CHECK(r.status.rfind("unavailable", 0) == 0);
      CHECK_FALSE(r.rho_star.has_value());
    } else {
      CHECK(r.rho_star.has_value());
    }
  }
}
