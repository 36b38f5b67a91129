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

#include "ehccrn/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "ehccrn/error.hpp"

namespace ehccrn::mc {
namespace {

enum BitClass { kNone = 0, kHalf = 1, kZeta = 2, kRs = 3 };

double exponential(TrialStream& rng, double rate) {
  return -std::log(rng.uniform()) / rate;
}

struct TrialResult {
  TrialOutcome outcome;
  BitClass cls = kNone;
};

TrialResult classify(ChannelDraw const& cd, DerivedParams const& dp, Mode mode,
                     Combining combining) {
  TrialResult r;
  TrialOutcome& o = r.outcome;
  double const I = dp.i_over_n0;
  double const ps = I / cd.g_sp;
  double const harvested = dp.beta * ps * cd.h_sr_sum;

  double best = -1.0;
  for (int j = 0; j < cd.L; ++j) {
    double const pr = std::min(harvested, I / cd.g_rp[j]);
    double const snr = pr * cd.h_rd[j];
    if (snr > best) {
      best = snr;
      o.antenna = j;
    }
  }
  double const relayed = best;

  o.relay_snr = dp.xi * ps * cd.h_sr_sum;
  o.direct_snr = ps * cd.h_sd;
  o.relay_decoded = o.relay_snr >= dp.gamma_th;
  o.direct_ok = o.direct_snr >= dp.gamma_th;

  double const direct_in = (mode == Mode::NoDirect) ? 0.0 : o.direct_snr;
  o.dest_snr = combining == Combining::MRC ? relayed + direct_in
                                           : std::max(relayed, direct_in);
  bool const dest_ok = o.dest_snr >= dp.gamma_th;

  switch (mode) {
    case Mode::Cooperative:
    case Mode::NoDirect:
      o.outage = !(o.relay_decoded && dest_ok);
      r.cls = o.outage ? kNone : kHalf;
      break;
    case Mode::Incremental:
      o.outage = !(o.relay_decoded && dest_ok);
      if (o.direct_ok) {
        r.cls = kZeta;
      } else {
        r.cls = o.outage ? kNone : kHalf;
      }
      break;
    case Mode::DirectOnly:
      o.outage = !o.direct_ok;
      r.cls = o.outage ? kNone : kRs;
      break;
  }
  return r;
}

double class_bits(BitClass c, DerivedParams const& dp) {
  switch (c) {
    case kNone:
      return 0.0;
    case kHalf:
      return 0.5 * dp.zeta * dp.Rs;
    case kZeta:
      return dp.zeta * dp.Rs;
    case kRs:
      return dp.Rs;
  }
  return 0.0;
}

void require_runnable(OperatingPoint const& op, RunOptions const& run) {
  if (op.config.L > kMaxAntennas) {
    throw DomainError("montecarlo: L exceeds the supported antenna count");
  }
  if (run.trials < kMinTrials) {
    throw DomainError("montecarlo: at least 1000 trials are required");
  }
}

// Runs body(first, last, accumulator) over fixed-size chunks on a pool of
// threads and reduces the per-chunk accumulators in chunk order.
template <typename Acc, typename Body>
Acc run_chunks(std::uint64_t trials, unsigned threads, Body body) {
  std::uint64_t const nchunks = (trials + kChunkSize - 1) / kChunkSize;
  std::vector<Acc> partial(nchunks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::uint64_t const c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= nchunks) return;
      std::uint64_t const first = c * kChunkSize;
      std::uint64_t const last = std::min(trials, first + kChunkSize);
      body(first, last, partial[c]);
    }
  };
  unsigned n = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::uint64_t>(n, nchunks));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  Acc total{};
  for (auto const& a : partial) total += a;
  return total;
}

MonteCarloEstimate probability(std::uint64_t count, std::uint64_t n) {
  double const v = static_cast<double>(count) / static_cast<double>(n);
  return {v, n, std::sqrt(v * (1.0 - v) / static_cast<double>(n))};
}

struct PairCounts {
  std::array<std::uint64_t, 16> n{};
  PairCounts& operator+=(PairCounts const& o) {
    for (std::size_t i = 0; i < n.size(); ++i) n[i] += o.n[i];
    return *this;
  }
};

}  // namespace

ChannelDraw draw(ChannelRates const& lam, int L, TrialStream& rng) {
  ChannelDraw cd;
  cd.L = L;
  cd.g_sp = exponential(rng, lam.sp);
  cd.h_sd = exponential(rng, lam.sd);
  double prod = 1.0;
  for (int j = 0; j < L; ++j) prod *= rng.uniform();
  cd.h_sr_sum = -std::log(prod) / lam.sr;
  for (int j = 0; j < L; ++j) cd.h_rd[j] = exponential(rng, lam.rd);
  for (int j = 0; j < L; ++j) cd.g_rp[j] = exponential(rng, lam.rp);
  return cd;
}

TrialOutcome evaluate_trial(ChannelDraw const& cd, DerivedParams const& dp,
                            Mode mode, Combining combining) {
  TrialResult r = classify(cd, dp, mode, combining);
  r.outcome.bits = class_bits(r.cls, dp);
  return r.outcome;
}

EventCounts& EventCounts::operator+=(EventCounts const& o) {
  trials += o.trials;
  p1 += o.p1;
  p2 += o.p2;
  p += o.p;
  p3 += o.p3;
  q1 += o.q1;
  q2 += o.q2;
  bits_half += o.bits_half;
  bits_zeta += o.bits_zeta;
  bits_rs += o.bits_rs;
  return *this;
}

Estimates estimate(OperatingPoint const& op, RunOptions const& run) {
  require_runnable(op, run);
  DerivedParams const dp = op.params;
  ChannelRates const lam = op.rates;
  int const L = op.config.L;

  EventCounts const c = run_chunks<EventCounts>(
      run.trials, run.threads,
      [&](std::uint64_t first, std::uint64_t last, EventCounts& acc) {
        for (std::uint64_t k = first; k < last; ++k) {
          TrialStream rng(run.seed, k);
          ChannelDraw const cd = draw(lam, L, rng);
          TrialResult const r = classify(cd, dp, run.mode, run.combining);
          TrialOutcome const& o = r.outcome;
          ++acc.trials;
          if (run.mode == Mode::DirectOnly) {
            acc.p2 += o.outage;
          } else {
            acc.p1 += !o.relay_decoded;
            acc.p2 += o.relay_decoded && o.outage;
          }
          acc.p += o.outage;
          acc.p3 += o.direct_ok && o.relay_decoded;
          acc.q2 += o.direct_ok;
          acc.q1 += !o.direct_ok && o.relay_decoded && !o.outage;
          acc.bits_half += r.cls == kHalf;
          acc.bits_zeta += r.cls == kZeta;
          acc.bits_rs += r.cls == kRs;
        }
      });

  Estimates e;
  e.counts = c;
  std::uint64_t const n = c.trials;
  e.p1 = probability(c.p1, n);
  e.p2 = probability(c.p2, n);
  e.p = probability(c.p, n);
  e.p3 = probability(c.p3, n);
  e.q1 = probability(c.q1, n);
  e.q2 = probability(c.q2, n);

  double const bh = class_bits(kHalf, dp);
  double const bz = class_bits(kZeta, dp);
  double const br = class_bits(kRs, dp);
  double const dn = static_cast<double>(n);
  double const mean =
      (bh * c.bits_half + bz * c.bits_zeta + br * c.bits_rs) / dn;
  double const second =
      (bh * bh * c.bits_half + bz * bz * c.bits_zeta + br * br * c.bits_rs) / dn;
  double const var = std::max(second - mean * mean, 0.0);
  e.tau = {mean, n, std::sqrt(var / dn)};
  return e;
}

PairedDifference combining_gain(OperatingPoint const& op, RunOptions const& run) {
  require_runnable(op, run);
  DerivedParams const dp = op.params;
  ChannelRates const lam = op.rates;
  int const L = op.config.L;

  PairCounts const pc = run_chunks<PairCounts>(
      run.trials, run.threads,
      [&](std::uint64_t first, std::uint64_t last, PairCounts& acc) {
        for (std::uint64_t k = first; k < last; ++k) {
          TrialStream rng(run.seed, k);
          ChannelDraw const cd = draw(lam, L, rng);
          auto const a = classify(cd, dp, run.mode, Combining::MRC).cls;
          auto const b = classify(cd, dp, run.mode, Combining::SC).cls;
          ++acc.n[a * 4 + b];
        }
      });

  double sum = 0.0;
  double sum2 = 0.0;
  std::uint64_t n = 0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      auto const cnt = pc.n[a * 4 + b];
      double const d = class_bits(BitClass(a), dp) - class_bits(BitClass(b), dp);
      sum += d * cnt;
      sum2 += d * d * cnt;
      n += cnt;
    }
  }
  double const dn = static_cast<double>(n);
  double const mean = sum / dn;
  double const var = std::max(sum2 / dn - mean * mean, 0.0);
  return {mean, std::sqrt(var / dn), n};
}

}  // namespace ehccrn::mc
