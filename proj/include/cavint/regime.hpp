// Copyright 2026 The cavint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "cavint/dressing.hpp"
#include "cavint/params.hpp"

namespace cavint {

inline constexpr double kDefaultRegimeFactor = 10.0;

struct RegimeReport {
  bool ok = false;
  double worst_ratio = 0.0;  // Ω̄ divided by the largest competing scale
};

/// Checks the secular-approximation condition Ω̄ ≫ {|δ|, g, ε, Γ₀, Γ±},
/// with "≫" meaning a factor of `factor`. Advisory only.
inline RegimeReport regime_check(const SystemParams& p, const DressedFrame& f,
                                 double factor = kDefaultRegimeFactor) {
  const double competitor =
      std::max({std::abs(p.delta_c), p.g, p.epsilon, f.gamma_cap_0,
                f.gamma_cap_plus, f.gamma_cap_minus});
  RegimeReport r;
  if (competitor == 0.0) {
    r.ok = true;
    r.worst_ratio = std::numeric_limits<double>::infinity();
    return r;
  }
  r.worst_ratio = f.omega_bar / competitor;
  r.ok = f.omega_bar >= factor * competitor;
  return r;
}

}  // namespace cavint
