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

#ifndef EHCCRN_PHILOX_HPP
#define EHCCRN_PHILOX_HPP

#include <array>
#include <cstdint>

namespace ehccrn::mc {

/// Counter-based Philox4x32 generator with 10 rounds.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr Counter apply(Counter ctr, Key key) {
    for (int r = 0; r < 10; ++r) {
      if (r > 0) {
        key[0] += kW0;
        key[1] += kW1;
      }
      ctr = round(ctr, key);
    }
    return ctr;
  }

 private:
  static constexpr std::uint32_t kM0 = 0xD2511F53u;
  static constexpr std::uint32_t kM1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kW0 = 0x9E3779B9u;
  static constexpr std::uint32_t kW1 = 0xBB67AE85u;

  static constexpr Counter round(Counter const& c, Key const& k) {
    std::uint64_t const p0 = std::uint64_t{kM0} * c[0];
    std::uint64_t const p1 = std::uint64_t{kM1} * c[2];
    auto const hi0 = static_cast<std::uint32_t>(p0 >> 32);
    auto const lo0 = static_cast<std::uint32_t>(p0);
    auto const hi1 = static_cast<std::uint32_t>(p1 >> 32);
    auto const lo1 = static_cast<std::uint32_t>(p1);
    return Counter{hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
  }
};

/// Uniform stream for one Monte Carlo trial. The trial index and the seed
/// fully determine the sequence.
class TrialStream {
 public:
  TrialStream(std::uint64_t seed, std::uint64_t trial)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        trial_(trial) {}

  /// Uniform double in (0, 1] with 53 random bits.
  double uniform() {
    if (used_ == 2) refill();
    std::uint64_t const bits =
        (std::uint64_t{buf_[2 * used_]} << 32) | buf_[2 * used_ + 1];
    ++used_;
    return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
  }

 private:
  void refill() {
    Philox4x32::Counter const ctr{block_++, static_cast<std::uint32_t>(trial_),
                                  static_cast<std::uint32_t>(trial_ >> 32), 0u};
    buf_ = Philox4x32::apply(ctr, key_);
    used_ = 0;
  }

  Philox4x32::Key key_;
  std::uint64_t trial_;
  std::uint32_t block_ = 0;
  Philox4x32::Counter buf_{};
  int used_ = 2;
};

}  // namespace ehccrn::mc

#endif  // EHCCRN_PHILOX_HPP
