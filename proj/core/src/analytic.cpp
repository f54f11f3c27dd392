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

#include "chiral/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "chiral/diagnostics.hpp"
#include "chiral/errors.hpp"
#include "chiral/specfun.hpp"

namespace chiral {

namespace {

constexpr double kPi = std::numbers::pi;

LogScalar ls(Complex z) { return LogScalar::from_complex(z); }
LogScalar ls_real(double x) { return ls(Complex{x, 0.0}); }

void check_N(int N) {
  if (N < 1) throw DomainError("N must be positive");
}

bool coincident(const Vec2& v, const Vec2& w) {
  return !(std::abs(skew(v, w)) > kCoincidenceTolerance * v.norm() * w.norm());
}

// Builds the matrix with entries exp(log_abs - row max) e^{i phase} and returns
// its determinant in log form with the row scales restored. An exactly
// singular matrix has determinant zero.
LogScalar scaled_logdet(const std::vector<LogScalar>& entries, Eigen::Index k) {
  ComplexMatrix m(k, k);
  double shift = 0.0;
  for (Eigen::Index r = 0; r < k; ++r) {
    double row_max = -std::numeric_limits<double>::infinity();
    for (Eigen::Index c = 0; c < k; ++c) row_max = std::max(row_max, entries[static_cast<std::size_t>(r * k + c)].log_abs);
    if (row_max == -std::numeric_limits<double>::infinity()) return LogScalar::zero();
    for (Eigen::Index c = 0; c < k; ++c) {
      const LogScalar& e = entries[static_cast<std::size_t>(r * k + c)];
      m(r, c) = e.is_zero() ? Complex{0.0, 0.0} : std::polar(std::exp(e.log_abs - row_max), e.phase);
    }
    shift += row_max;
  }
  LogScalar det;
  try {
    det = LuDecomposition(std::move(m)).logdet();
  } catch (const SingularMatrixError&) {
    return LogScalar::zero();
  }
  det.log_abs += shift;
  return det;
}

Complex kernel_1_results(int N, const Vec2& vm, const Vec2& vn) {
  const Complex d = skew(vn, vm);
  const Complex x = bilinear(vm, vn);
  const LogScalar v = ls_real(2.0 * N * (2.0 * N + 1.0)) * ls(d) *
                      skew_poly_even_homogeneous(N - 1, N, x, d);
  return v.value();
}

Complex kernel_1_derivation(int N, const Vec2& vm, const Vec2& vn) {
  const Complex x = bilinear(vm, vn);
  const Complex e = vm(1) * vn(0) - vm(0) * vn(1);
  const double log_front = boost::math::lgamma(N + 1.0) + std::log(2.0 * N + 1.0);
  std::vector<LogScalar> terms;
  terms.reserve(static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j) {
    LogScalar t{log_front - boost::math::lgamma(j + 1.0) - boost::math::lgamma(N - j + 0.5), 0.0};
    t *= pow(x, 2 * j);
    t *= pow(e, 2 * N - 1 - 2 * j);
    terms.push_back(t);
  }
  const LogScalar sum = log_sum(terms);
  return (ls(vm(1) * vn(1) / (2.0 * std::sqrt(kPi))) * sum).value();
}

void check_kernel_2_points(const Vec2& vp, const Vec2& vq) {
  if (coincident(vq, vp)) throw CoincidentPointsError("cii_kernel_2: p and q coincide");
}

Complex kernel_2_results(int N, const Vec2& vp, const Vec2& vq) {
  const Complex d = skew(vq, vp);
  const Complex x = bilinear(vq, vp);
  const Complex xs = inner(vq, vp);
  const Complex ds = skew(vq.conjugate(), vp);
  const Complex s = bilinear(vp, vp);
  // d d_* + x x_* = |v_q|^2 s exactly.
  const Complex sum = vq.squaredNorm() * s;
  if (std::abs(sum) < 1e-8 * std::abs(d * ds)) {
    warn("cii_kernel_2: |1 + khat khat_*| < 1e-8, result is numerically unreliable");
  }
  const LogScalar t1 = pow(xs, 2 * N + 1) * ls(x);
  const LogScalar t2 = ls((2.0 * N + 1.0) * d * ds) * skew_poly_even_homogeneous(N, N + 1, xs, ds);
  const LogScalar terms[] = {t1, t2};
  const LogScalar bracket = log_sum(terms);
  return (pow(s, 2 * N) * bracket / (ls(d) * pow(sum, 2 * N + 1))).value();
}

Complex kernel_2_derivation(int N, const Vec2& vp, const Vec2& vq) {
  const Complex ap = vp(0), bp = vp(1), aq = vq(0), bq = vq(1);
  const Complex kh = (ap * aq + bp * bq) / (bp * aq - ap * bq);
  const Complex ks = (ap * std::conj(aq) + bp * std::conj(bq)) / (bp * std::conj(aq) - ap * std::conj(bq));
  const Complex one_plus = 1.0 + kh * ks;
  if (std::abs(one_plus) < 1e-8) {
    warn("cii_kernel_2: |1 + khat khat_*| < 1e-8, result is numerically unreliable");
  }
  const LogScalar t1 = pow(ks, 2 * N + 1) * ls(kh);
  const LogScalar t2 = ls_real(2.0 * N + 1.0) * skew_poly_even_homogeneous(N, N + 1, ks, 1.0);
  const LogScalar terms[] = {t1, t2};
  const LogScalar front = ls(bp * bq / (aq * bp - bq * ap)) * pow((ap * ap + bp * bp) / (bp * aq - ap * bq), 2 * N);
  return (front * log_sum(terms) / pow(one_plus, 2 * N + 1)).value();
}

Complex kernel_3_results(int N, const Vec2& vm, const Vec2& vn) {
  const double norms = vm.squaredNorm() * vn.squaredNorm();
  const Complex x = bilinear(vm, vn);
  const double arg = std::norm(x) / norms;
  const Complex y = std::conj(x);
  const Complex w = skew(vn.conjugate(), vm.conjugate());
  const LogScalar lnorms = ls_real(norms);
  const LogScalar lerch_term =
      ls(skew(vn, vm)) * pow(ls(y) / lnorms, 2 * N + 2) * ls(lerch_phi(2 * N + 1, Complex{arg, 0.0}));
  const LogScalar poly_term =
      ls(w) * skew_poly_even_homogeneous(N, N + 1, y, w) / pow(lnorms, 2 * N + 1);
  const LogScalar terms[] = {lerch_term, poly_term};
  return log_sum(terms).value();
}

Complex kernel_3_derivation(int N, const Vec2& vm, const Vec2& vn) {
  const Complex am = vm(0), bm = vm(1), an = vn(0), bn = vn(1);
  const double norms = (std::norm(am) + std::norm(bm)) * (std::norm(an) + std::norm(bn));
  const Complex wp = std::conj(bm) * std::conj(an) - std::conj(am) * std::conj(bn);
  const Complex yp = std::conj(am) * std::conj(an) + std::conj(bm) * std::conj(bn);
  const double arg = std::norm(am * an + bm * bn) / norms;
  const LogScalar poly = pow(wp / norms, 2 * N + 1) * skew_poly_even_homogeneous(N, N + 1, yp / wp, 1.0);
  const LogScalar lerch = pow(yp / norms, 2 * N + 2) * ls(bn * am - an * bm) *
                          ls(lerch_phi(2 * N + 1, Complex{arg, 0.0}));
  return 2.0 * kPi * bm * bn * (poly.value() - lerch.value());
}

}  // namespace

std::string_view to_string(KernelGauge gauge) {
  return gauge == KernelGauge::Derivation ? "derivation" : "results";
}

void validate_points(std::span<const Vec2> vq, std::span<const Vec2> vp) {
  if (vq.size() != vp.size()) {
    throw DimensionError("point sets must have equal length (got " + std::to_string(vq.size()) +
                         " q and " + std::to_string(vp.size()) + " p)");
  }
  const std::size_t k = vq.size();
  for (std::size_t m = 0; m < k; ++m) {
    for (std::size_t n = 0; n < k; ++n) {
      if (coincident(vq[m], vp[n])) {
        throw CoincidentPointsError("points q_" + std::to_string(m + 1) + " and p_" +
                                    std::to_string(n + 1) + " coincide");
      }
      if (n > m && coincident(vq[m], vq[n])) {
        throw CoincidentPointsError("points q_" + std::to_string(m + 1) + " and q_" +
                                    std::to_string(n + 1) + " coincide");
      }
      if (n > m && coincident(vp[m], vp[n])) {
        throw CoincidentPointsError("points p_" + std::to_string(m + 1) + " and p_" +
                                    std::to_string(n + 1) + " coincide");
      }
    }
  }
}

Complex aiii_z11(int N, const Vec2& vq, const Vec2& vp) {
  check_N(N);
  return pow(ls(inner(vq, vp)) / ls_real(vq.squaredNorm()), N).value();
}

Complex aiii_zkk(int N, std::span<const Vec2> vq, std::span<const Vec2> vp) {
  check_N(N);
  validate_points(vq, vp);
  const auto k = static_cast<Eigen::Index>(vq.size());
  if (k == 0) return {1.0, 0.0};
  std::vector<LogScalar> num(static_cast<std::size_t>(k * k));
  std::vector<LogScalar> den(static_cast<std::size_t>(k * k));
  for (Eigen::Index m = 0; m < k; ++m) {
    const Vec2& q = vq[static_cast<std::size_t>(m)];
    const LogScalar norm = ls_real(q.squaredNorm());
    for (Eigen::Index n = 0; n < k; ++n) {
      const Vec2& p = vp[static_cast<std::size_t>(n)];
      const LogScalar cauchy = LogScalar{} / ls(skew(q, p));
      den[static_cast<std::size_t>(m * k + n)] = cauchy;
      num[static_cast<std::size_t>(m * k + n)] = cauchy * pow(ls(inner(q, p)) / norm, N);
    }
  }
  const LogScalar d = scaled_logdet(den, k);
  if (d.is_zero()) throw CoincidentPointsError("aiii_zkk: Cauchy determinant vanishes");
  return (scaled_logdet(num, k) / d).value();
}

Complex cii_kernel_1(int N, const Vec2& vm, const Vec2& vn, KernelGauge gauge) {
  check_N(N);
  return gauge == KernelGauge::Results ? kernel_1_results(N, vm, vn) : kernel_1_derivation(N, vm, vn);
}

Complex cii_kernel_2(int N, const Vec2& vp, const Vec2& vq, KernelGauge gauge) {
  check_N(N);
  check_kernel_2_points(vp, vq);
  return gauge == KernelGauge::Results ? kernel_2_results(N, vp, vq) : kernel_2_derivation(N, vp, vq);
}

Complex cii_kernel_3(int N, const Vec2& vm, const Vec2& vn, KernelGauge gauge) {
  check_N(N);
  return gauge == KernelGauge::Results ? kernel_3_results(N, vm, vn) : kernel_3_derivation(N, vm, vn);
}

ComplexMatrix cii_kernel_matrix(int N, std::span<const Vec2> vq, std::span<const Vec2> vp,
                                KernelGauge gauge) {
  check_N(N);
  validate_points(vq, vp);
  const auto k = static_cast<Eigen::Index>(vq.size());
  ComplexMatrix a = ComplexMatrix::Zero(2 * k, 2 * k);
  for (Eigen::Index m = 0; m < k; ++m) {
    const Vec2& pm = vp[static_cast<std::size_t>(m)];
    const Vec2& qm = vq[static_cast<std::size_t>(m)];
    for (Eigen::Index n = 0; n < k; ++n) {
      const Vec2& pn = vp[static_cast<std::size_t>(n)];
      const Vec2& qn = vq[static_cast<std::size_t>(n)];
      if (m != n) {
        a(2 * m, 2 * n) = cii_kernel_1(N, pm, pn, gauge);
        a(2 * m + 1, 2 * n + 1) = cii_kernel_3(N, qm, qn, gauge);
      }
      a(2 * m, 2 * n + 1) = cii_kernel_2(N, pm, qn, gauge);
      a(2 * m + 1, 2 * n) = -cii_kernel_2(N, pn, qm, gauge);
    }
  }
  return a;
}

Complex cii_zkk(int N, std::span<const Vec2> vq, std::span<const Vec2> vp, KernelGauge gauge) {
  const ComplexMatrix a = cii_kernel_matrix(N, vq, vp, gauge);
  const auto k = static_cast<Eigen::Index>(vq.size());
  if (k == 0) return {1.0, 0.0};
  std::vector<LogScalar> den(static_cast<std::size_t>(k * k));
  for (Eigen::Index m = 0; m < k; ++m) {
    const Vec2& q = vq[static_cast<std::size_t>(m)];
    for (Eigen::Index n = 0; n < k; ++n) {
      const Vec2& p = vp[static_cast<std::size_t>(n)];
      LogScalar e = LogScalar{} / ls(skew(q, p));
      if (gauge == KernelGauge::Derivation) e *= ls(q(1) * p(1));
      den[static_cast<std::size_t>(m * k + n)] = e;
    }
  }
  const LogScalar d = scaled_logdet(den, k);
  if (d.is_zero()) {
    throw CoincidentPointsError(gauge == KernelGauge::Derivation
                                    ? "cii_zkk: denominator vanishes (derivation gauge needs b != 0)"
                                    : "cii_zkk: Cauchy determinant vanishes");
  }
  return (ls(pfaffian(a)) / d).value();
}

std::vector<Vec2> eval_points(const CoefficientField& field, std::span<const double> angles) {
  std::vector<Vec2> out;
  out.reserve(angles.size());
  for (double p : angles) out.push_back(field.v(p));
  return out;
}

Complex aiii_z11(const CoefficientField& field, double q, double p) {
  return aiii_z11(field.N(), field.v(q), field.v(p));
}

Complex aiii_zkk(const CoefficientField& field, const PointSets& points) {
  return aiii_zkk(field.N(), eval_points(field, points.q), eval_points(field, points.p));
}

Complex cii_kernel_1(const CoefficientField& field, double pm, double pn, KernelGauge gauge) {
  return cii_kernel_1(field.N(), field.v(pm), field.v(pn), gauge);
}

Complex cii_kernel_2(const CoefficientField& field, double p, double q, KernelGauge gauge) {
  return cii_kernel_2(field.N(), field.v(p), field.v(q), gauge);
}

Complex cii_kernel_3(const CoefficientField& field, double qm, double qn, KernelGauge gauge) {
  return cii_kernel_3(field.N(), field.v(qm), field.v(qn), gauge);
}

Complex cii_zkk(const CoefficientField& field, const PointSets& points, KernelGauge gauge) {
  return cii_zkk(field.N(), eval_points(field, points.q), eval_points(field, points.p), gauge);
}

Complex analytic_zkk(const CoefficientField& field, const PointSets& points) {
  return field.cls() == SymmetryClass::CII ? cii_zkk(field, points) : aiii_zkk(field, points);
}

}  // namespace chiral
