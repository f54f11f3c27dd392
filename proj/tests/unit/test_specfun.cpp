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
#include <string>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "chiral/diagnostics.hpp"
#include "chiral/errors.hpp"
#include "chiral/specfun.hpp"
#include "support/reference.hpp"

namespace chiral {
namespace {

using testing::rel_diff;

constexpr double kPi = std::numbers::pi;

TEST(LogBeta, HandValues) {
  EXPECT_NEAR(log_beta(1.0, 1.0), 0.0, 1e-15);
  EXPECT_NEAR(log_beta(2.0, 4.0), std::log(1.0 / 20.0), 1e-14);
  EXPECT_NEAR(log_beta(2.0, 1.5), std::log(4.0 / 15.0), 1e-14);
  EXPECT_NEAR(log_beta(4.0, 2.0), log_beta(2.0, 4.0), 1e-15);
}

TEST(LogBeta, RejectsNonPositive) {
  EXPECT_THROW(log_beta(0.0, 1.0), DomainError);
  EXPECT_THROW(log_beta(1.0, -2.0), DomainError);
}

TEST(Lerch, HalfAtOrderOne) {
  EXPECT_LT(rel_diff(lerch_phi(0, 0.5), 2.0 * std::log(2.0)), 1e-14);
}

TEST(Lerch, ZeroArgumentIsReciprocal) {
  for (int n = 0; n <= 40; ++n) {
    EXPECT_EQ(lerch_phi(n, 0.0), Complex(1.0 / (n + 1.0), 0.0));
    EXPECT_EQ(lerch_phi_log(n, 0.0), Complex(1.0 / (n + 1.0), 0.0));
  }
}

TEST(Lerch, ClosedFormMatchesTwoHundredTermSeries) {
  const Complex series = lerch_phi_series(3, 0.3, 200);
  EXPECT_LT(rel_diff(lerch_phi_log(3, 0.3), series), 1e-13);
  EXPECT_LT(rel_diff(lerch_phi(3, 0.3), series), 1e-13);
}

TEST(Lerch, SeriesAndLogFormAgreeWhereBothAreAccurate) {
  // The double-precision log form loses about |z|^{-(n+1)} digits, so compare
  // only where that loss stays below 1e-12 relative.
  for (int N = 1; N <= 16; ++N) {
    for (int n = 0; n <= 2 * N + 2; ++n) {
      for (double r : {0.3, 0.6, 0.9}) {
        if (std::pow(r, -(n + 1)) * 1e-16 > 1e-14) continue;
        for (double angle : {0.0, 1.0, 2.5, -2.0}) {
          const Complex z = std::polar(r, angle);
          EXPECT_LT(rel_diff(lerch_phi_series(n, z), lerch_phi_log(n, z)), 1e-12) << n << " " << z;
        }
      }
    }
  }
}

TEST(Lerch, AgreesWithHighPrecisionLogForm) {
  for (int n = 0; n <= 34; ++n) {
    for (double r : {0.05, 0.5, 0.9, 0.97, 2.0}) {
      for (double angle : {0.0, 0.7, 3.0, -1.3}) {
        const Complex z = std::polar(r, angle);
        if (angle == 0.0 && r >= 1.0) continue;
        EXPECT_LT(rel_diff(lerch_phi(n, z), testing::lerch_log_form_mp(n, z)), 1e-12) << n << " " << z;
      }
    }
  }
}

TEST(Lerch, BranchCut) {
  EXPECT_THROW(lerch_phi(2, 1.0), BranchCutError);
  EXPECT_THROW(lerch_phi(2, 3.5), BranchCutError);
  EXPECT_NO_THROW(lerch_phi(2, Complex(3.5, 1e-3)));
}

TEST(Lerch, NearOneWarns) {
  std::vector<std::string> seen;
  auto previous = set_diagnostic_sink([&](Severity, std::string_view msg) { seen.emplace_back(msg); });
  lerch_phi(1, Complex(1.0, 1e-9));
  set_diagnostic_sink(previous);
  ASSERT_EQ(seen.size(), 1u);
  EXPECT_NE(seen[0].find("branch point"), std::string::npos);
}

TEST(SkewPolyEven, ConstantPolynomial) {
  for (int N = 1; N <= 10; ++N) EXPECT_EQ(skew_poly_even(0, N, Complex(2.7, -1.0)), Complex(1.0, 0.0));
}

TEST(SkewPolyEven, DegreeTwoAtNTwo) {
  const auto& c = skew_poly_even_coeffs(1, 2);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_NEAR(c[0], 2.0 / 3.0, 1e-15);
  EXPECT_EQ(c[1], 1.0);
  EXPECT_LT(rel_diff(skew_poly_even(1, 2, 1.0), 5.0 / 3.0), 1e-15);
}

TEST(SkewPolyEven, Even) {
  const Complex x{0.4, 1.3};
  for (int N = 1; N <= 8; ++N) {
    for (int n = 0; n <= N; ++n) EXPECT_EQ(skew_poly_even(n, N, x), skew_poly_even(n, N, -x));
  }
}

TEST(SkewPolyEven, CoefficientGuardHoldsUpTo64) {
  for (int N = 1; N <= 64; ++N) {
    for (int n = 0; n <= N; ++n) {
      const auto& c = skew_poly_even_coeffs(n, N);
      ASSERT_EQ(c.back(), 1.0);
      for (double v : c) ASSERT_GT(v, 0.0);
    }
  }
}

TEST(SkewPolyEven, CoefficientsAreNotMonotone) {
  // c_m / c_{m+1} = (m+1) / (N-m-1/2) exceeds one near m = N.
  const auto& c = skew_poly_even_coeffs(2, 3);
  EXPECT_GT(c[1], c[2]);
}

TEST(SkewPolyEven, HomogeneousFormMatchesDivision) {
  const Complex x{0.8, -0.3}, d{0.2, 0.9};
  for (int N = 1; N <= 12; ++N) {
    const Complex direct = std::pow(d, 2 * N) * skew_poly_even(N, N + 1, x / d);
    EXPECT_LT(rel_diff(skew_poly_even_homogeneous(N, N + 1, x, d).value(), direct), 1e-10);
  }
  EXPECT_LT(rel_diff(skew_poly_even_homogeneous(2, 3, x, 0.0).value(), std::pow(x, 4)), 1e-14);
}

TEST(SkewPolyEven, RangeChecked) {
  EXPECT_THROW(skew_poly_even(3, 2, 1.0), DomainError);
  EXPECT_THROW(skew_poly_even(0, 0, 1.0), DomainError);
}

TEST(SkewPolyEven, CacheIsSafeForConcurrentReaders) {
  std::vector<std::thread> threads;
  std::vector<double> sums(8, 0.0);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([t, &sums] {
      for (int N = 70; N < 90; ++N) sums[t] += skew_poly_even(N - 1, N, 0.5).real();
    });
  }
  for (auto& th : threads) th.join();
  for (double s : sums) EXPECT_EQ(s, sums[0]);
}

TEST(SkewPolyOdd, Monomials) {
  EXPECT_EQ(skew_poly_odd(0, 2.0), Complex(2.0, 0.0));
  EXPECT_LT(std::abs(skew_poly_odd(1, Complex(0.0, 1.0)) - Complex(0.0, -1.0)), 1e-15);
  EXPECT_EQ(skew_poly_odd(2, 0.0), Complex(0.0, 0.0));
}

TEST(SkewNorm, HandValues) {
  EXPECT_NEAR(skew_norm(0, 2), kPi / 20.0, 1e-15);
  for (int N = 1; N <= 64; ++N) {
    EXPECT_NEAR(skew_norm(0, N), kPi / (2.0 * N * (2.0 * N + 1.0)), 1e-13 * skew_norm(0, N));
    for (int j = 0; j < N; ++j) EXPECT_GT(skew_norm(j, N), 0.0);
  }
  EXPECT_THROW(skew_norm(2, 2), DomainError);
  EXPECT_THROW(skew_norm(-1, 2), DomainError);
}

TEST(MonomialSkewProduct, Values) {
  EXPECT_NEAR(monomial_skew_product(1, 2, 2), 2.0 * kPi / 20.0, 1e-15);
  for (int a = 1; a <= 6; ++a) {
    EXPECT_EQ(monomial_skew_product(a, a, 3), 0.0);
    for (int b = 1; b <= 6; ++b) EXPECT_EQ(monomial_skew_product(a, b, 3), -monomial_skew_product(b, a, 3));
  }
  EXPECT_EQ(monomial_skew_product(1, 3, 2), 0.0);
  EXPECT_THROW(monomial_skew_product(8, 9, 2), DomainError);
}

// <f|g> for polynomials given by monomial coefficients (index i <-> z^i).
double skew_bilinear(const std::vector<double>& f, const std::vector<double>& g, int N) {
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (f[i] == 0.0 || g[j] == 0.0) continue;
      acc += f[i] * g[j] * 0.5 * monomial_skew_product(static_cast<int>(i) + 1, static_cast<int>(j) + 1, N);
    }
  }
  return acc;
}

std::vector<double> even_poly(int n, int N) {
  std::vector<double> out(2 * n + 1, 0.0);
  const auto& c = skew_poly_even_coeffs(n, N);
  for (int m = 0; m <= n; ++m) out[2 * m] = c[m];
  return out;
}

std::vector<double> odd_poly(int n) {
  std::vector<double> out(2 * n + 2, 0.0);
  out[2 * n + 1] = 1.0;
  return out;
}

TEST(SkewOrthogonality, RelationsHoldUpToSixteen) {
  for (int N = 1; N <= 16; ++N) {
    for (int j = 0; j < N; ++j) {
      const double h = skew_norm(j, N);
      for (int l = 0; l < N; ++l) {
        EXPECT_EQ(skew_bilinear(even_poly(j, N), even_poly(l, N), N), 0.0);
        EXPECT_EQ(skew_bilinear(odd_poly(j), odd_poly(l), N), 0.0);
        const double mixed = skew_bilinear(even_poly(j, N), odd_poly(l), N);
        if (j == l) {
          EXPECT_LT(std::abs(mixed - h), 1e-10 * h) << "N=" << N << " j=" << j;
        } else {
          EXPECT_LT(std::abs(mixed), 1e-10 * h) << "N=" << N << " j=" << j << " l=" << l;
        }
      }
    }
  }
}

}  // namespace
}  // namespace chiral
