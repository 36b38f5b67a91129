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

#include "ehccrn/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "ehccrn/error.hpp"

namespace ehccrn::sweep {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  auto const b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto const e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto const pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double to_double(std::string_view v, std::string const& key, int line) {
  double out = 0.0;
  auto const* end = v.data() + v.size();
  auto const [ptr, ec] = std::from_chars(v.data(), end, out);
  if (v.empty() || ec != std::errc{} || ptr != end || !std::isfinite(out)) {
    throw ConfigError(key + ": expected a number, got '" + std::string(v) + "'", line);
  }
  return out;
}

std::uint64_t to_u64(std::string_view v, std::string const& key, int line) {
  std::uint64_t out = 0;
  auto const* end = v.data() + v.size();
  auto const [ptr, ec] = std::from_chars(v.data(), end, out);
  if (v.empty() || ec != std::errc{} || ptr != end) {
    throw ConfigError(key + ": expected a non-negative integer, got '" +
                          std::string(v) + "'",
                      line);
  }
  return out;
}

bool to_bool(std::string_view v, std::string const& key, int line) {
  std::string const s = lower(v);
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw ConfigError(key + ": expected true or false", line);
}

Mode to_mode(std::string_view v, int line) {
  std::string const s = lower(v);
  if (s == "cooperative") return Mode::Cooperative;
  if (s == "nodirect") return Mode::NoDirect;
  if (s == "incremental") return Mode::Incremental;
  if (s == "directonly") return Mode::DirectOnly;
  throw ConfigError("modes: unknown mode '" + std::string(v) + "'", line);
}

analytic::Tier to_tier(std::string_view v, int line) {
  std::string const s = lower(v);
  if (s == "full") return analytic::Tier::Full;
  if (s == "no_rp") return analytic::Tier::NoRpConstraint;
  if (s == "high_margin") return analytic::Tier::HighMargin;
  if (s == "no_direct") return analytic::Tier::NoDirectLink;
  throw ConfigError("engines: unknown analytic tier '" + std::string(v) + "'", line);
}

Engine to_engine(std::string_view v, int line) {
  std::string const s = lower(v);
  if (s == "montecarlo") return Engine{Engine::Kind::MonteCarlo, analytic::Tier::Full};
  if (s == "analytic") return Engine{};
  if (s.rfind("analytic:", 0) == 0) {
    return Engine{Engine::Kind::Analytic, to_tier(std::string_view(s).substr(9), line)};
  }
  throw ConfigError("engines: unknown engine '" + std::string(v) + "'", line);
}

Axis to_axis(std::string_view v, int line) {
  std::string const s = lower(v);
  if (s == "i_over_n0_db") return Axis::IOverN0Db;
  if (s == "rho") return Axis::Rho;
  if (s == "rs") return Axis::Rs;
  if (s == "l") return Axis::L;
  if (s == "d_sr") return Axis::DSr;
  throw ConfigError("axis: unknown axis '" + std::string(v) + "'", line);
}

std::vector<double> to_values(std::string_view v, int line) {
  std::vector<double> out;
  if (v.find(':') != std::string_view::npos) {
    auto const parts = split(v, ':');
    if (parts.size() != 3) {
      throw ConfigError("values: range must be start:step:stop", line);
    }
    double const a = to_double(parts[0], "values", line);
    double const h = to_double(parts[1], "values", line);
    double const b = to_double(parts[2], "values", line);
    if (!(h > 0.0) || b < a) {
      throw ConfigError("values: range needs step > 0 and stop >= start", line);
    }
    double const n = std::floor((b - a) / h + 1e-9);
    if (n > 1e6) throw ConfigError("values: range has too many points", line);
    for (int k = 0; k <= static_cast<int>(n); ++k) out.push_back(a + k * h);
    return out;
  }
  for (auto const item : split(v, ',')) out.push_back(to_double(item, "values", line));
  return out;
}

template <typename T>
void push_unique(std::vector<T>& out, T const& v, std::string const& key, int line) {
  if (std::find(out.begin(), out.end(), v) != out.end()) {
    throw ConfigError(key + ": duplicate entry", line);
  }
  out.push_back(v);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Wraps a model-level DomainError as a ConfigError on `line`.
template <typename F>
void checked(int line, F&& f) {
  try {
    f();
  } catch (DomainError const& e) {
    throw ConfigError(e.what(), line);
  }
}

}  // namespace

std::string_view to_string(Axis a) {
  switch (a) {
    case Axis::IOverN0Db:
      return "i_over_n0_db";
    case Axis::Rho:
      return "rho";
    case Axis::Rs:
      return "rs";
    case Axis::L:
      return "l";
    case Axis::DSr:
      return "d_sr";
  }
  return "?";
}

std::string Engine::name() const {
  if (kind == Kind::MonteCarlo) return "montecarlo";
  return "analytic:" + std::string(analytic::to_string(tier));
}

SweepSpec parse_config(std::string_view text) {
  SweepSpec s;
  std::map<std::string, int> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto const nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (auto const hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    auto const eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("expected key=value, got '" + std::string(line) + "'", line_no);
    }
    std::string const key = lower(trim(line.substr(0, eq)));
    std::string_view const val = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("missing key before '='", line_no);
    if (seen.count(key) != 0) {
      throw ConfigError("duplicate key '" + key + "' (first on line " +
                            std::to_string(seen[key]) + ")",
                        line_no);
    }
    seen[key] = line_no;

    int const ln = line_no;
    if (key == "scheme") {
      std::string const v = lower(val);
      if (v == "ps") {
        s.base.scheme = Scheme::PS;
      } else if (v == "ts") {
        s.base.scheme = Scheme::TS;
      } else {
        throw ConfigError("scheme must be ps or ts", ln);
      }
    } else if (key == "rho") {
      s.base.rho = to_double(val, key, ln);
      if (!(s.base.rho > 0.0 && s.base.rho < 1.0)) {
        throw ConfigError("rho must lie in (0,1)", ln);
      }
    } else if (key == "eta") {
      s.base.eta = to_double(val, key, ln);
      if (!(s.base.eta > 0.0 && s.base.eta <= 1.0)) {
        throw ConfigError("eta must lie in (0,1]", ln);
      }
    } else if (key == "l") {
      auto const L = to_u64(val, key, ln);
      if (L < 1 || L > 64) throw ConfigError("L must lie in [1,64]", ln);
      s.base.L = static_cast<int>(L);
    } else if (key == "rs") {
      s.base.Rs = to_double(val, key, ln);
      if (!(s.base.Rs > 0.0)) throw ConfigError("rs must be > 0", ln);
    } else if (key == "i_over_n0_db") {
      s.i_over_n0_db = to_double(val, key, ln);
    } else if (key == "d_sr" || key == "d_rd" || key == "d_sp" || key == "d_rp" ||
               key == "d_sd" || key == "epsilon") {
      double const v = to_double(val, key, ln);
      if (!(v > 0.0)) throw ConfigError(key + " must be > 0", ln);
      double* field = key == "d_sr"   ? &s.geometry.d_sr
                      : key == "d_rd" ? &s.geometry.d_rd
                      : key == "d_sp" ? &s.geometry.d_sp
                      : key == "d_rp" ? &s.geometry.d_rp
                      : key == "d_sd" ? &s.geometry.d_sd
                                      : &s.geometry.epsilon;
      *field = v;
    } else if (key == "axis") {
      s.axis = to_axis(val, ln);
    } else if (key == "values") {
      s.values = to_values(val, ln);
    } else if (key == "modes") {
      s.modes.clear();
      if (!val.empty()) {
        for (auto const m : split(val, ',')) push_unique(s.modes, to_mode(m, ln), key, ln);
      }
      if (s.modes.empty()) throw ConfigError("modes must list at least one mode", ln);
    } else if (key == "engines") {
      s.engines.clear();
      if (!val.empty()) {
        for (auto const e : split(val, ',')) push_unique(s.engines, to_engine(e, ln), key, ln);
      }
      if (s.engines.empty()) throw ConfigError("engines must list at least one engine", ln);
    } else if (key == "trials") {
      s.trials = to_u64(val, key, ln);
      if (*s.trials < 1000) throw ConfigError("trials must be >= 1000", ln);
    } else if (key == "seed") {
      s.seed = to_u64(val, key, ln);
    } else if (key == "combining") {
      std::string const v = lower(val);
      if (v == "mrc") {
        s.combining = Combining::MRC;
      } else if (v == "sc") {
        s.combining = Combining::SC;
      } else {
        throw ConfigError("combining must be mrc or sc", ln);
      }
    } else if (key == "t_formula") {
      std::string const v = lower(val);
      if (v == "consistent") {
        s.t_formula = analytic::TFormula::Consistent;
      } else if (v == "printed") {
        s.t_formula = analytic::TFormula::Printed;
      } else {
        throw ConfigError("t_formula must be consistent or printed", ln);
      }
    } else if (key == "collinear") {
      s.collinear = to_bool(val, key, ln);
    } else {
      throw ConfigError("unknown key '" + key + "'", ln);
    }
  }

  s.base.i_over_n0 = db_to_linear(s.i_over_n0_db);
  auto line_of = [&](char const* k) {
    auto const it = seen.find(k);
    return it == seen.end() ? 0 : it->second;
  };
  checked(line_of("values"), [&] {
    for (std::size_t i = 1; i < s.values.size(); ++i) {
      if (!(s.values[i] > s.values[i - 1])) {
        throw DomainError("values must be strictly increasing");
      }
    }
  });
  if (s.axis && !s.values.empty()) {
    int const ln = line_of("values");
    for (double v : s.values) {
      switch (*s.axis) {
        case Axis::Rho:
          if (!(v > 0.0 && v < 1.0)) throw ConfigError("rho values must lie in (0,1)", ln);
          break;
        case Axis::L:
          if (v < 1.0 || v > 64.0 || v != std::floor(v)) {
            throw ConfigError("L values must be integers in [1,64]", ln);
          }
          break;
        case Axis::Rs:
        case Axis::DSr:
          if (!(v > 0.0)) throw ConfigError("axis values must be > 0", ln);
          break;
        case Axis::IOverN0Db:
          break;
      }
    }
  }
  if (s.collinear && s.geometry.d_sr >= s.geometry.d_sd) {
    throw ConfigError("collinear layout needs d_sr < d_sd", line_of("collinear"));
  }
  if (s.collinear) s.geometry.d_rd = s.geometry.d_sd - s.geometry.d_sr;
  return s;
}

void validate(SweepSpec const& s, bool need_axis) {
  s.base.validate();
  s.geometry.validate();
  if (s.modes.empty()) throw ConfigError("modes must list at least one mode");
  if (s.engines.empty()) throw ConfigError("engines must list at least one engine");
  if (need_axis) {
    if (!s.axis) throw ConfigError("axis is required for a sweep");
    if (s.values.empty()) throw ConfigError("values is required for a sweep");
  }
  if (s.collinear && s.axis == Axis::DSr) {
    for (double v : s.values) {
      if (v >= s.geometry.d_sd) throw ConfigError("collinear d_sr values must be < d_sd");
    }
  }
}

void apply_axis(SweepSpec const& s, double value, ProtocolConfig& cfg,
                SystemGeometry& geom) {
  cfg = s.base;
  geom = s.geometry;
  if (!s.axis) return;
  switch (*s.axis) {
    case Axis::IOverN0Db:
      cfg.i_over_n0 = db_to_linear(value);
      break;
    case Axis::Rho:
      cfg.rho = value;
      break;
    case Axis::Rs:
      cfg.Rs = value;
      break;
    case Axis::L:
      cfg.L = static_cast<int>(value);
      break;
    case Axis::DSr:
      geom.d_sr = value;
      if (s.collinear) geom.d_rd = geom.d_sd - value;
      break;
  }
}

std::string render(SweepSpec const& s) {
  std::string out;
  auto kv = [&](std::string_view k, std::string const& v) {
    out += k;
    out += " = ";
    out += v;
    out += '\n';
  };
  kv("scheme", std::string(to_string(s.base.scheme)));
  kv("rho", fmt(s.base.rho));
  kv("eta", fmt(s.base.eta));
  kv("L", std::to_string(s.base.L));
  kv("rs", fmt(s.base.Rs));
  kv("i_over_n0_db", fmt(s.i_over_n0_db));
  kv("d_sr", fmt(s.geometry.d_sr));
  kv("d_rd", fmt(s.geometry.d_rd));
  kv("d_sp", fmt(s.geometry.d_sp));
  kv("d_rp", fmt(s.geometry.d_rp));
  kv("d_sd", fmt(s.geometry.d_sd));
  kv("epsilon", fmt(s.geometry.epsilon));
  kv("collinear", s.collinear ? "true" : "false");
  if (s.axis) kv("axis", std::string(to_string(*s.axis)));
  if (!s.values.empty()) {
    std::string v;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
      if (i > 0) v += ',';
      v += fmt(s.values[i]);
    }
    kv("values", v);
  }
  std::string m;
  for (std::size_t i = 0; i < s.modes.size(); ++i) {
    if (i > 0) m += ',';
    m += to_string(s.modes[i]);
  }
  kv("modes", m);
  std::string e;
  for (std::size_t i = 0; i < s.engines.size(); ++i) {
    if (i > 0) e += ',';
    e += s.engines[i].name();
  }
  kv("engines", e);
  kv("combining", std::string(to_string(s.combining)));
  kv("t_formula", std::string(analytic::to_string(s.t_formula)));
  if (s.trials) kv("trials", std::to_string(*s.trials));
  kv("seed", std::to_string(s.seed));
  return out;
}

}  // namespace ehccrn::sweep
