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

#include "chiral/specfun.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>

#include <boost/math/special_functions/gamma.hpp>

#include "chiral/diagnostics.hpp"
#include "chiral/errors.hpp"

namespace chiral {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesRadius = 0.95;
constexpr int kMaxSeriesTerms = 20000;

void check_lerch_args(int n, Complex z) {
  if (n < 0) throw DomainError("lerch_phi: n must be nonnegative");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("lerch_phi: argument is not finite");
  }
  if (z.imag() == 0.0 && z.real() >= 1.0) {
    throw BranchCutError("lerch_phi: argument " + std::to_string(z.real()) +
                         " lies on the branch cut [1, inf)");
  }
  if (std::abs(1.0 - z) < 1e-8) warn("lerch_phi: argument within 1e-8 of the branch point z = 1");
}

struct CoeffCache {
  std::shared_mutex mutex;
  std::map<std::pair<int, int>, std::unique_ptr<const std::vector<double>>> table;
};

CoeffCache& coeff_cache() {
  static CoeffCache cache;
  return cache;
}

std::vector<double> compute_coeffs(int n, int N) {
  const double lead = log_beta(n + 1.0, N - n + 0.5);
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m < n; ++m) {
    c[static_cast<std::size_t>(m)] = std::exp(lead - log_beta(m + 1.0, N - m + 0.5));
  }
  c[static_cast<std::size_t>(n)] = 1.0;

  // Guard: positive, monic, and c_m / c_{m+1} = (m+1) / (N-m-1/2).
  for (int m = 0; m < n; ++m) {
    const double cm = c[static_cast<std::size_t>(m)];
    const double ratio = cm / c[static_cast<std::size_t>(m) + 1];
    const double expect = (m + 1.0) / (N - m - 0.5);
    if (!(cm > 0.0) || std::abs(ratio - expect) > 1e-12 * expect) {
      throw ConsistencyError("skew_poly_even: coefficient recurrence violated at (n, N, m) = (" +
                             std::to_string(n) + ", " + std::to_string(N) + ", " +
                             std::to_string(m) + ")");
    }
  }
  return c;
}

}  // namespace

double log_beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("log_beta: arguments must be positive");
  return boost::math::lgamma(x) + boost::math::lgamma(y) - boost::math::lgamma(x + y);
}

namespace {

Complex series_unchecked(int n, Complex z, int terms) {
  if (terms <= 0 && std::abs(z) >= 1.0) {
    throw DomainError("lerch_phi_series: series diverges for |z| >= 1");
  }
  const int limit = terms > 0 ? terms : kMaxSeriesTerms;
  Complex sum{0.0, 0.0};
  Complex power{1.0, 0.0};
  for (int k = 0; k < limit; ++k) {
    const Complex term = power / static_cast<double>(n + 1 + k);
    sum += term;
    if (terms <= 0 && std::abs(term) <= 1e-18 * std::abs(sum)) break;
    power *= z;
  }
  return sum;
}

Complex log_form_unchecked(int n, Complex z) {
  if (z == Complex{0.0, 0.0}) return 1.0 / (n + 1.0);
  Complex partial{0.0, 0.0};
  Complex power{1.0, 0.0};
  for (int j = 1; j <= n; ++j) {
    power *= z;
    partial += power / static_cast<double>(j);
  }
  return -(std::log(1.0 - z) + partial) / (power * z);
}

}  // namespace

Complex lerch_phi_series(int n, Complex z, int terms) {
  check_lerch_args(n, z);
  return series_unchecked(n, z, terms);
}

Complex lerch_phi_log(int n, Complex z) {
  check_lerch_args(n, z);
  return log_form_unchecked(n, z);
}

Complex lerch_phi(int n, Complex z) {
  check_lerch_args(n, z);
  if (std::abs(z) <= kSeriesRadius) return series_unchecked(n, z, 0);
  return log_form_unchecked(n, z);
}

const std::vector<double>& skew_poly_even_coeffs(int n, int N) {
  if (N < 1) throw DomainError("skew_poly_even: N must be positive");
  if (n < 0 || n > N) throw DomainError("skew_poly_even: need 0 <= n <= N");
  auto& cache = coeff_cache();
  const auto key = std::make_pair(n, N);
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.table.find(key);
    if (it != cache.table.end()) return *it->second;
  }
  auto fresh = std::make_unique<const std::vector<double>>(compute_coeffs(n, N));
  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.table.try_emplace(key, std::move(fresh));
  return *it->second;
}

Complex skew_poly_even(int n, int N, Complex x) {
  const auto& c = skew_poly_even_coeffs(n, N);
  const Complex x2 = x * x;
  Complex acc{0.0, 0.0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x2 + *it;
  return acc;
}

LogScalar skew_poly_even_homogeneous(int n, int N, Complex x, Complex d) {
  const auto& c = skew_poly_even_coeffs(n, N);
  const LogScalar lx2 = pow(x, 2);
  const LogScalar ld2 = pow(d, 2);
  std::vector<LogScalar> terms;
  terms.reserve(c.size());
  for (int m = 0; m <= n; ++m) {
    LogScalar t{std::log(c[static_cast<std::size_t>(m)]), 0.0};
    t *= pow(lx2, m);
    t *= pow(ld2, n - m);
    terms.push_back(t);
  }
  return log_sum(terms);
}

Complex skew_poly_odd(int n, Complex x) {
  if (n < 0) throw DomainError("skew_poly_odd: n must be nonnegative");
  return pow(x, 2 * n + 1).value();
}

double skew_norm(int j, int N) {
  if (N < 1 || j < 0 || j > N - 1) throw DomainError("skew_norm: need 0 <= j <= N-1");
  return kPi * std::exp(log_beta(2.0 * j + 2.0, 2.0 * N - 2.0 * j));
}

double monomial_skew_product(int a, int b, int N) {
  if (a < 1 || b < 1 || N < 1) throw DomainError("monomial_skew_product: a, b, N must be positive");
  double sign = 0.0;
  if (a == b - 1) sign = 1.0;
  if (a - 1 == b) sign = -1.0;
  if (sign == 0.0) return 0.0;
  const double half = (a + b + 1) / 2.0;
  const double first = 2.0 * N + 2.0 - half;
  if (!(first > 0.0)) throw DomainError("monomial_skew_product: skew product diverges for these degrees");
  return sign * 2.0 * kPi * std::exp(log_beta(first, half));
}

}  // namespace chiral
