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

#ifndef EHCCRN_MONTECARLO_HPP
#define EHCCRN_MONTECARLO_HPP

#include <array>
#include <cstdint>

#include "ehccrn/model.hpp"
#include "ehccrn/philox.hpp"

namespace ehccrn::mc {

inline constexpr int kMaxAntennas = 32;
inline constexpr std::uint64_t kChunkSize = 4096;
inline constexpr std::uint64_t kMinTrials = 1000;

/// Squared channel magnitudes of one coherence block.
struct ChannelDraw {
  int L = 1;
  double g_sp = 0.0;
  double h_sd = 0.0;
  double h_sr_sum = 0.0;
  std::array<double, kMaxAntennas> h_rd{};
  std::array<double, kMaxAntennas> g_rp{};
};

/// Draw order: g_sp, h_sd, the L factors of h_sr_sum, h_rd[0..L), g_rp[0..L).
ChannelDraw draw(ChannelRates const& lam, int L, TrialStream& rng);

struct TrialOutcome {
  bool relay_decoded = false;
  bool direct_ok = false;
  double relay_snr = 0.0;
  double direct_snr = 0.0;
  double dest_snr = 0.0;
  int antenna = 0;
  bool outage = false;
  double bits = 0.0;
};

TrialOutcome evaluate_trial(ChannelDraw const& cd, DerivedParams const& dp,
                            Mode mode, Combining combining);

struct MonteCarloEstimate {
  double value = 0.0;
  std::uint64_t trials = 0;
  double std_error = 0.0;
};

/// Raw per-run event counts. Every trial falls into exactly one of
/// {p1, p2, p3, q1} in the modes that use the direct link.
struct EventCounts {
  std::uint64_t trials = 0;
  std::uint64_t p1 = 0;
  std::uint64_t p2 = 0;
  std::uint64_t p = 0;
  std::uint64_t p3 = 0;
  std::uint64_t q1 = 0;
  std::uint64_t q2 = 0;
  std::uint64_t bits_half = 0;
  std::uint64_t bits_zeta = 0;
  std::uint64_t bits_rs = 0;

  EventCounts& operator+=(EventCounts const& o);
  bool operator==(EventCounts const&) const = default;
};

struct Estimates {
  MonteCarloEstimate p1, p2, p, tau, q1, q2, p3;
  EventCounts counts;
};

struct RunOptions {
  Mode mode = Mode::Cooperative;
  Combining combining = Combining::MRC;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

Estimates estimate(OperatingPoint const& op, RunOptions const& run);

/// Paired MRC minus SC throughput on a common set of draws.
struct PairedDifference {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;
};

PairedDifference combining_gain(OperatingPoint const& op, RunOptions const& run);

}  // namespace ehccrn::mc

#endif  // EHCCRN_MONTECARLO_HPP
