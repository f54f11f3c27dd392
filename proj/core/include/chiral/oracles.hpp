// Copyright 2026 The chiralwind Authors
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

#include "chiral/numerics.hpp"

namespace chiral {

struct QuadratureResult {
  Complex value;
  double est_error = 0.0;
  long evaluations = 0;
};

struct QuadOptions {
  double rel_tol = 1e-7;
  long max_evaluations = 10'000'000;
  /// When false, an exhausted budget returns the current estimate instead of
  /// throwing BudgetExceededError.
  bool throw_on_budget = true;
};

/// Adaptive polar quadrature of
///   J = int_C d[z] (1+|z|^2)^{-(2N+2)} / ((z + k1)(z^* + k2)) ((1 - k1^* z)/(1 + |k1|^2))^{2N+1},
/// with the cell grid aligned to both poles. Needs k1 != k2 and 1 <= N <= 4.
QuadratureResult quad_J(Complex kappa1, Complex kappa2, int N, const QuadOptions& options = {});

/// pi ((1 + k1^* k2^*) / ((1+|k1|^2)(1+|k2|^2)))^{2N+2} Phi_{2N+2}(|1 + k1 k2|^2 / ((1+|k1|^2)(1+|k2|^2))).
Complex j_integral_closed_form(Complex kappa1, Complex kappa2, int N);

/// int_C d[z] z^{a-1} (z^*)^{b-1} (z - z^*) / (1+|z|^2)^{2N+2}; the angular
/// integral is done exactly, the radial one numerically. Needs a, b <= 2N+1.
QuadratureResult quad_skew_product(int a, int b, int N, const QuadOptions& options = {});

/// Two-dimensional quadrature of the one-variable Heine ratio for q_2^{(N)}(x).
/// Needs 1 <= N <= 4.
QuadratureResult heine_q2_check(int N, double x, const QuadOptions& options = {});

}  // namespace chiral
