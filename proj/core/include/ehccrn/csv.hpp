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

#ifndef EHCCRN_CSV_HPP
#define EHCCRN_CSV_HPP

#include <string>
#include <string_view>
#include <vector>

namespace ehccrn::csv {

/// Quotes a field when it contains a comma, quote or line break.
std::string escape(std::string_view field);

/// 12 significant digits; empty for NaN.
std::string number(double v);

std::string row(std::vector<std::string> const& fields);

}  // namespace ehccrn::csv

#endif  // EHCCRN_CSV_HPP
