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

#include <cmath>
#include <utility>

#include "cavint/error.hpp"

namespace cavint {

struct ScalarMinimum {
  double x = 0.0;
  double fx = 0.0;
  int evaluations = 0;
};

/// Golden-section search for the minimum of a unimodal function on [lo, hi].
template <class F>
ScalarMinimum golden_section_minimize(F&& f, double lo, double hi, double tol = 1e-11,
                                      int max_iter = 500) {
  if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "golden section needs lo < hi");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int evals = 2;
  for (int it = 0; it < max_iter && (b - a) > tol * (1.0 + std::abs(a) + std::abs(b)); ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++evals;
  }
  return fc <= fd ? ScalarMinimum{c, fc, evals} : ScalarMinimum{d, fd, evals};
}

/// One parabolic-interpolation step through x - h, x, x + h. The vertex is
/// accepted only if it does not increase f.
template <class F>
ScalarMinimum parabolic_refine(F&& f, ScalarMinimum best, double h) {
  const double x = best.x;
  const double fl = f(x - h);
  const double fr = f(x + h);
  best.evaluations += 2;
  const double curvature = fl - 2.0 * best.fx + fr;
  if (!(curvature > 0.0)) return best;
  const double vertex = x - 0.5 * h * (fr - fl) / curvature;
  const double fv = f(vertex);
  ++best.evaluations;
  if (fv <= best.fx) {
    best.x = vertex;
    best.fx = fv;
  }
  return best;
}

}  // namespace cavint
