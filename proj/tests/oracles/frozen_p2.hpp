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

#ifndef EHCCRN_TESTS_FROZEN_P2_HPP
#define EHCCRN_TESTS_FROZEN_P2_HPP

#include <array>

#include "ehccrn/model.hpp"

namespace frozen {

struct P2Case {
  ehccrn::Scheme scheme;
  double rho;
  int L;
  double db;
  double d_rp;
  double t;
  double expected;

  ehccrn::OperatingPoint point() const {
    ehccrn::ProtocolConfig c;
    c.scheme = scheme;
    c.rho = rho;
    c.L = L;
    c.i_over_n0 = ehccrn::db_to_linear(db);
    ehccrn::SystemGeometry g;
    g.d_rp = d_rp;
    return ehccrn::OperatingPoint::make(c, g);
  }
};

// Expected values from oracle::p2_quad.
inline constexpr std::array<P2Case, 12> kP2Cases{{
    {ehccrn::Scheme::PS, 0.4, 1, 6.0, 3.0, 0.0, 0.208481922405429},
    {ehccrn::Scheme::PS, 0.4, 1, 6.0, 3.0, 0.3, 0.21203383156964},
    {ehccrn::Scheme::PS, 0.4, 2, 6.0, 3.0, 0.0, 0.0816011133966649},
    {ehccrn::Scheme::PS, 0.4, 2, 6.0, 3.0, 0.3, 0.0836155005424774},
    {ehccrn::Scheme::PS, 0.4, 3, 6.0, 3.0, 0.0, 0.0264859819873987},
    {ehccrn::Scheme::PS, 0.4, 3, 6.0, 3.0, 0.3, 0.0272019015431916},
    {ehccrn::Scheme::PS, 0.4, 4, 6.0, 3.0, 0.3, 0.00831527384456708},
    {ehccrn::Scheme::TS, 0.3, 2, 10.0, 1.5, 0.2, 0.015861031022045},
    {ehccrn::Scheme::TS, 0.6, 1, 0.0, 2.0, 0.5, 0.421925649961428},
    {ehccrn::Scheme::PS, 0.7, 3, 3.0, 2.0, 0.5, 0.100272881269504},
    {ehccrn::Scheme::PS, 0.2, 2, 15.0, 1.2, 0.8, 0.0322469824550146},
    {ehccrn::Scheme::TS, 0.5, 3, 12.0, 3.0, 0.1, 6.14628299092148e-05},
}};

}  // namespace frozen

#endif  // EHCCRN_TESTS_FROZEN_P2_HPP
