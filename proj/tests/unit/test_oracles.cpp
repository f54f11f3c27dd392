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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "chiral/errors.hpp"
#include "chiral/oracles.hpp"
#include "chiral/specfun.hpp"
#include "support/reference.hpp"

namespace chiral {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kKappa1{0.3, 0.2};
const Complex kKappa2{-0.5, 0.7};

TEST(QuadJ, MatchesClosedForm) {
  for (int N : {1, 2}) {
    const QuadratureResult r = quad_J(kKappa1, kKappa2, N);
    const Complex closed = j_integral_closed_form(kKappa1, kKappa2, N);
    EXPECT_LT(testing::rel_diff(r.value, closed), 1e-6) << r.value << " vs " << closed;
    EXPECT_GE(r.est_error, 0.0);
    EXPECT_LE(r.est_error, 1e-7 * std::abs(r.value));
    EXPECT_GT(r.evaluations, 0);
  }
}

TEST(QuadJ, SwapSymmetry) {
  const QuadratureResult a = quad_J(kKappa1, kKappa2, 1);
  const QuadratureResult b = quad_J(kKappa2, kKappa1, 1);
  EXPECT_LT(testing::rel_diff(a.value, b.value), 1e-6);
  EXPECT_LT(testing::rel_diff(j_integral_closed_form(kKappa1, kKappa2, 2),
                              j_integral_closed_form(kKappa2, kKappa1, 2)),
            1e-12);
}

TEST(QuadJ, ConjugationSymmetry) {
  const Complex k1{0.0, 0.6}, k2{0.0, -1.4};
  const QuadratureResult a = quad_J(k1, k2, 1);
  // For imaginary kappas the conjugates are the negatives.
  const QuadratureResult b = quad_J(-k1, -k2, 1);
  EXPECT_LT(testing::rel_diff(a.value, std::conj(b.value)), 1e-6);
  EXPECT_LT(testing::rel_diff(a.value, j_integral_closed_form(k1, k2, 1)), 1e-6);
}

TEST(QuadJ, BudgetQuadruplingHalvesError) {
  QuadOptions small;
  small.rel_tol = 1e-15;
  small.max_evaluations = 20000;
  small.throw_on_budget = false;
  QuadOptions large = small;
  large.max_evaluations = 4 * small.max_evaluations;
  const double e1 = quad_J(kKappa1, kKappa2, 1, small).est_error;
  const double e2 = quad_J(kKappa1, kKappa2, 1, large).est_error;
  EXPECT_LE(e2, 0.5 * e1);
}

TEST(QuadJ, BudgetExceededThrows) {
  QuadOptions tight;
  tight.rel_tol = 1e-15;
  tight.max_evaluations = 5000;
  EXPECT_THROW(quad_J(kKappa1, kKappa2, 1, tight), BudgetExceededError);
}

TEST(QuadJ, RejectsBadArguments) {
  EXPECT_THROW(quad_J(kKappa1, kKappa1, 1), DomainError);
  EXPECT_THROW(quad_J(kKappa1, kKappa2, 5), DomainError);
  EXPECT_THROW(quad_J(kKappa1, kKappa2, 0), DomainError);
}

TEST(QuadSkewProduct, KnownValues) {
  const QuadratureResult r = quad_skew_product(1, 2, 2);
  EXPECT_NEAR(r.value.real(), kPi * std::exp(log_beta(4.0, 2.0)), 1e-8);
  EXPECT_EQ(quad_skew_product(2, 2, 2).value, Complex(0.0, 0.0));
  EXPECT_EQ(quad_skew_product(1, 4, 2).value, Complex(0.0, 0.0));
}

TEST(QuadSkewProduct, AntisymmetricAndMatchesClosedForm) {
  for (int N : {1, 2, 3}) {
    for (int a = 1; a <= 2 * N; ++a) {
      const int b = a + 1;
      const Complex ab = quad_skew_product(a, b, N).value;
      const Complex ba = quad_skew_product(b, a, N).value;
      EXPECT_LT(std::abs(ab + ba), 1e-9 * std::abs(ab));
      EXPECT_LT(testing::rel_diff(ab, Complex(monomial_skew_product(a, b, N) / 2.0, 0.0)), 1e-8);
    }
  }
}

TEST(QuadSkewProduct, BudgetQuadruplingHalvesError) {
  QuadOptions small;
  small.rel_tol = 1e-15;
  small.max_evaluations = 30;
  small.throw_on_budget = false;
  QuadOptions large = small;
  large.max_evaluations = 4 * small.max_evaluations;
  const double e1 = quad_skew_product(1, 2, 2, small).est_error;
  const double e2 = quad_skew_product(1, 2, 2, large).est_error;
  EXPECT_LE(e2, 0.5 * e1);
}

TEST(HeineQ2, KnownValues) {
  EXPECT_NEAR(heine_q2_check(2, 0.0).value.real(), 2.0 / 3.0, 1e-6);
  EXPECT_NEAR(heine_q2_check(2, 1.0).value.real(), 5.0 / 3.0, 1e-6);
}

TEST(HeineQ2, MatchesPolynomialAndIsReal) {
  for (int N : {1, 2, 3}) {
    for (double x : {0.0, 0.5, 1.0, -1.3}) {
      const QuadratureResult r = heine_q2_check(N, x);
      EXPECT_LT(std::abs(r.value - skew_poly_even(1, N, Complex(x, 0.0))), 1e-6 * (1.0 + std::abs(r.value)));
      EXPECT_LT(std::abs(r.value.imag()), 1e-9);
    }
  }
}

TEST(HeineQ2, BudgetQuadruplingHalvesError) {
  QuadOptions small;
  small.rel_tol = 1e-15;
  small.max_evaluations = 20000;
  small.throw_on_budget = false;
  QuadOptions large = small;
  large.max_evaluations = 4 * small.max_evaluations;
  EXPECT_LE(heine_q2_check(2, 0.5, large).est_error, 0.5 * heine_q2_check(2, 0.5, small).est_error);
}

}  // namespace
}  // namespace chiral
