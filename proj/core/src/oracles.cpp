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

#include "chiral/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <queue>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "chiral/errors.hpp"
#include "chiral/specfun.hpp"

namespace chiral {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kNodes = 15;

// Full 15-point Kronrod rule on [-1, 1] with the embedded 7-point Gauss weights.
struct Rule {
  std::array<double, kNodes> x{};
  std::array<double, kNodes> wk{};
  std::array<double, kNodes> wg{};
};

const Rule& rule() {
  static const Rule r = [] {
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    using G = boost::math::quadrature::gauss<double, 7>;
    const auto& ka = GK::abscissa();
    const auto& kw = GK::weights();
    const auto& ga = G::abscissa();
    const auto& gw = G::weights();
    Rule out;
    int idx = 0;
    auto gauss_weight = [&](double x) {
      for (std::size_t i = 0; i < ga.size(); ++i) {
        if (std::abs(ga[i] - x) < 1e-14) return gw[i];
      }
      return 0.0;
    };
    for (std::size_t i = ka.size(); i-- > 1;) {
      out.x[idx] = -ka[i];
      out.wk[idx] = kw[i];
      out.wg[idx] = gauss_weight(ka[i]);
      ++idx;
    }
    for (std::size_t i = 0; i < ka.size(); ++i) {
      out.x[idx] = ka[i];
      out.wk[idx] = kw[i];
      out.wg[idx] = gauss_weight(ka[i]);
      ++idx;
    }
    return out;
  }();
  return r;
}

using Integrand2D = std::function<Complex(double, double)>;

struct Cell {
  double u0, u1, v0, v1;
  Complex value;
  double error;
  bool split_u;
};

struct CellOrder {
  bool operator()(const Cell& a, const Cell& b) const { return a.error < b.error; }
};

Cell evaluate_cell(const Integrand2D& f, double u0, double u1, double v0, double v1, long& evals) {
  const Rule& r = rule();
  const double hu = 0.5 * (u1 - u0), cu = 0.5 * (u1 + u0);
  const double hv = 0.5 * (v1 - v0), cv = 0.5 * (v1 + v0);
  Complex kk{0.0, 0.0}, gk{0.0, 0.0}, kg{0.0, 0.0};
  for (int i = 0; i < kNodes; ++i) {
    const double u = cu + hu * r.x[i];
    for (int j = 0; j < kNodes; ++j) {
      const Complex fv = f(u, cv + hv * r.x[j]);
      kk += r.wk[i] * r.wk[j] * fv;
      gk += r.wg[i] * r.wk[j] * fv;
      kg += r.wk[i] * r.wg[j] * fv;
    }
  }
  evals += kNodes * kNodes;
  const double area = hu * hv;
  const double eu = std::abs(kk - gk) * area;
  const double ev = std::abs(kk - kg) * area;
  return {u0, u1, v0, v1, kk * area, eu + ev, eu >= ev};
}

std::vector<double> sorted_breaks(std::vector<double> pts, double lo, double hi) {
  pts.push_back(lo);
  pts.push_back(hi);
  std::vector<double> out;
  for (double p : pts) {
    if (p >= lo && p <= hi) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(), [](double a, double b) { return std::abs(a - b) < 1e-15; }),
            out.end());
  return out;
}

// Global adaptive product Gauss-Kronrod over [0,1] x [0, 2 pi] in (t, theta).
QuadratureResult adaptive_2d(const Integrand2D& f, const std::vector<double>& t_points,
                             const std::vector<double>& theta_points, const QuadOptions& options) {
  const auto ub = sorted_breaks(t_points, 0.0, 1.0);
  const auto vb = sorted_breaks(theta_points, 0.0, kTwoPi);
  long evals = 0;
  std::priority_queue<Cell, std::vector<Cell>, CellOrder> queue;
  for (std::size_t i = 0; i + 1 < ub.size(); ++i) {
    for (std::size_t j = 0; j + 1 < vb.size(); ++j) {
      queue.push(evaluate_cell(f, ub[i], ub[i + 1], vb[j], vb[j + 1], evals));
    }
  }

  auto totals = [&queue] {
    auto copy = queue;
    Complex value{0.0, 0.0};
    double error = 0.0;
    while (!copy.empty()) {
      value += copy.top().value;
      error += copy.top().error;
      copy.pop();
    }
    return std::make_pair(value, error);
  };
  auto [value, error] = totals();
  long since_resum = 0;
  while (error > options.rel_tol * std::abs(value)) {
    if (evals + 2 * kNodes * kNodes > options.max_evaluations) {
      if (options.throw_on_budget) {
        throw BudgetExceededError("quadrature: budget of " + std::to_string(options.max_evaluations) +
                                  " evaluations exhausted (estimated error " + std::to_string(error) + ")");
      }
      break;
    }
    const Cell worst = queue.top();
    queue.pop();
    Cell a, b;
    if (worst.split_u) {
      const double m = 0.5 * (worst.u0 + worst.u1);
      a = evaluate_cell(f, worst.u0, m, worst.v0, worst.v1, evals);
      b = evaluate_cell(f, m, worst.u1, worst.v0, worst.v1, evals);
    } else {
      const double m = 0.5 * (worst.v0 + worst.v1);
      a = evaluate_cell(f, worst.u0, worst.u1, worst.v0, m, evals);
      b = evaluate_cell(f, worst.u0, worst.u1, m, worst.v1, evals);
    }
    value += a.value + b.value - worst.value;
    error += a.error + b.error - worst.error;
    queue.push(a);
    queue.push(b);
    if (++since_resum == 4096) {
      std::tie(value, error) = totals();
      since_resum = 0;
    }
  }
  std::tie(value, error) = totals();
  return {value, error, evals};
}

void check_small_N(int N, const char* name) {
  if (N < 1 || N > 4) throw DomainError(std::string(name) + ": N must be in 1..4");
}

double to_t(double r) { return r / (1.0 + r); }

double to_angle(Complex z) {
  double a = std::arg(z);
  return a < 0.0 ? a + kTwoPi : a;
}

}  // namespace

Complex j_integral_closed_form(Complex k1, Complex k2, int N) {
  const double denom = (1.0 + std::norm(k1)) * (1.0 + std::norm(k2));
  const Complex base = (1.0 + std::conj(k1) * std::conj(k2)) / denom;
  const double arg = std::norm(1.0 + k1 * k2) / denom;
  return kPi * (pow(base, 2 * N + 2) * LogScalar::from_complex(lerch_phi(2 * N + 1, Complex{arg, 0.0}))).value();
}

QuadratureResult quad_J(Complex k1, Complex k2, int N, const QuadOptions& options) {
  check_small_N(N, "quad_J");
  if (k1 == k2) throw CoincidentPointsError("quad_J: kappa1 and kappa2 must differ");
  const double nk1 = 1.0 + std::norm(k1);
  const Complex ck1 = std::conj(k1);
  auto f = [&](double t, double theta) {
    const double r = t / (1.0 - t);
    const Complex z = std::polar(r, theta);
    const double jac = r / ((1.0 - t) * (1.0 - t));
    const double weight = std::pow(1.0 + r * r, -(2.0 * N + 2.0));
    const Complex tail = pow((1.0 - ck1 * z) / nk1, 2 * N + 1).value();
    return jac * weight * tail / ((z + k1) * (std::conj(z) + k2));
  };
  // Poles at z = -k1 and z = -k2^*.
  return adaptive_2d(f, {to_t(std::abs(k1)), to_t(std::abs(k2))}, {to_angle(-k1), to_angle(-std::conj(k2))},
                     options);
}

QuadratureResult quad_skew_product(int a, int b, int N, const QuadOptions& options) {
  if (a < 1 || b < 1 || N < 1) throw DomainError("quad_skew_product: a, b, N must be positive");
  if (a > 2 * N + 1 || b > 2 * N + 1) throw DomainError("quad_skew_product: need a, b <= 2N+1");
  // z^{a-1} z^{*(b-1)} (z - z^*) = r^{a+b-1} (e^{i(a-b+1)theta} - e^{i(a-b-1)theta}).
  double angular = 0.0;
  if (b == a + 1) angular = kTwoPi;
  if (a == b + 1) angular = -kTwoPi;
  if (angular == 0.0) return {Complex{0.0, 0.0}, 0.0, 0};

  long evals = 0;
  auto radial = [&](double t) {
    ++evals;
    if (t >= 1.0) return 0.0;
    const double r = t / (1.0 - t);
    return std::pow(r, a + b) * std::pow(1.0 + r * r, -(2.0 * N + 2.0)) / ((1.0 - t) * (1.0 - t));
  };
  // A depth-d bisection tree costs at most 15 (2^{d+1} - 1) evaluations.
  unsigned max_depth = 0;
  while (max_depth < 40 && 15.0 * (std::ldexp(1.0, static_cast<int>(max_depth) + 2) - 1.0) <=
                               static_cast<double>(options.max_evaluations)) {
    ++max_depth;
  }
  double err = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      radial, 0.0, 1.0, max_depth, options.rel_tol * 1e-3, &err);
  if (err > options.rel_tol * std::abs(value) && options.throw_on_budget) {
    throw BudgetExceededError("quad_skew_product: evaluation budget of " +
                              std::to_string(options.max_evaluations) + " exhausted");
  }
  return {Complex{angular * value, 0.0}, std::abs(angular) * err, evals};
}

QuadratureResult heine_q2_check(int N, double x, const QuadOptions& options) {
  check_small_N(N, "heine_q2_check");
  // Delta_2(z, z^*) g(z) = -|z - z^*|^2 / (1+|z|^2)^{2N+2}; the sign cancels in the ratio.
  auto weight = [N](double t, double theta, double& r_out) {
    const double r = t / (1.0 - t);
    r_out = r;
    const double im = r * std::sin(theta);
    return 4.0 * im * im * std::pow(1.0 + r * r, -(2.0 * N + 2.0)) * r / ((1.0 - t) * (1.0 - t));
  };
  auto num = [&](double t, double theta) {
    double r = 0.0;
    const double w = weight(t, theta, r);
    const Complex z = std::polar(r, theta);
    return w * (z - x) * (std::conj(z) - x);
  };
  auto den = [&](double t, double theta) {
    double r = 0.0;
    return Complex{weight(t, theta, r), 0.0};
  };
  const std::vector<double> quarter = {0.5 * kPi, kPi, 1.5 * kPi};
  const QuadratureResult n = adaptive_2d(num, {}, quarter, options);
  const QuadratureResult d = adaptive_2d(den, {}, quarter, options);
  const Complex ratio = n.value / d.value;
  const double err = n.est_error / std::abs(d.value) + std::abs(ratio) * d.est_error / std::abs(d.value);
  return {ratio, err, n.evaluations + d.evaluations};
}

}  // namespace chiral
