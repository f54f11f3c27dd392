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

#include <complex>
#include <vector>

#include "chiral/numerics.hpp"

namespace chiral {

/// ln B(x, y) for x, y > 0.
double log_beta(double x, double y);

/// Truncated Lerch transcendent
///   Phi_{n+1}(z) = -z^{-(n+1)} [ln(1 - z) + sum_{j=1..n} z^j / j]
///               = sum_{j>=n+1} z^{j-n-1} / j.
/// Principal branch of ln(1 - z). Uses the tail series for |z| <= 0.95 and the
/// log form beyond. Throws BranchCutError for real z >= 1.
Complex lerch_phi(int n, Complex z);

/// Tail series only. With terms > 0 exactly that many terms are summed,
/// otherwise summation stops once terms drop below double precision.
Complex lerch_phi_series(int n, Complex z, int terms = 0);

/// Closed log form only; cancels badly for small |z|.
Complex lerch_phi_log(int n, Complex z);

/// Coefficients c_m, m = 0..n, of q_{2n}^{(N)}(x) = sum_m c_m x^{2m} with
/// c_m = B(n+1, N-n+1/2) / B(m+1, N-m+1/2). Requires 0 <= n <= N.
/// Cached per (n, N); the returned reference stays valid for the process.
const std::vector<double>& skew_poly_even_coeffs(int n, int N);

Complex skew_poly_even(int n, int N, Complex x);

/// sum_m c_m x^{2m} d^{2(n-m)}, i.e. d^{2n} q_{2n}^{(N)}(x/d) without the
/// division, in log form. Regular at d = 0.
LogScalar skew_poly_even_homogeneous(int n, int N, Complex x, Complex d);

/// x^{2n+1}.
Complex skew_poly_odd(int n, Complex x);

/// h_j^{(N)} = pi B(2j+2, 2N-2j), 0 <= j <= N-1.
double skew_norm(int j, int N);

/// D_ab = 2 pi B(2N+2-(a+b+1)/2, (a+b+1)/2) (delta_{a,b-1} - delta_{a-1,b});
/// twice the skew product of the monomials z^{a-1} and z^{b-1}.
double monomial_skew_product(int a, int b, int N);

}  // namespace chiral
