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

#include "chiral/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "chiral/errors.hpp"

namespace chiral {

namespace {
constexpr double kPi = std::numbers::pi;
}

double wrap_phase(double phase) {
  if (phase > -kPi && phase <= kPi) return phase;
  double r = std::remainder(phase, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

LogScalar LogScalar::from_complex(Complex z) {
  if (z == Complex{0.0, 0.0}) return zero();
  return {std::log(std::abs(z)), wrap_phase(std::arg(z))};
}

Complex LogScalar::value() const {
  if (is_zero()) return {0.0, 0.0};
  return std::polar(std::exp(log_abs), phase);
}

LogScalar& LogScalar::operator*=(const LogScalar& rhs) {
  if (is_zero() || rhs.is_zero()) {
    *this = zero();
    return *this;
  }
  log_abs += rhs.log_abs;
  phase = wrap_phase(phase + rhs.phase);
  return *this;
}

LogScalar& LogScalar::operator/=(const LogScalar& rhs) {
  if (rhs.is_zero()) throw DomainError("LogScalar: division by zero");
  if (is_zero()) return *this;
  log_abs -= rhs.log_abs;
  phase = wrap_phase(phase - rhs.phase);
  return *this;
}

LogScalar operator*(LogScalar lhs, const LogScalar& rhs) { return lhs *= rhs; }
LogScalar operator/(LogScalar lhs, const LogScalar& rhs) { return lhs /= rhs; }

LogScalar conj(const LogScalar& x) { return {x.log_abs, x.is_zero() ? 0.0 : wrap_phase(-x.phase)}; }

LogScalar pow(const LogScalar& x, int n) {
  if (n == 0) return {};
  if (x.is_zero()) {
    if (n < 0) throw DomainError("LogScalar: negative power of zero");
    return x;
  }
  return {n * x.log_abs, wrap_phase(n * x.phase)};
}

LogScalar log_sum(std::span<const LogScalar> terms) {
  double scale = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms) scale = std::max(scale, t.log_abs);
  if (scale == -std::numeric_limits<double>::infinity()) return LogScalar::zero();
  Complex acc{0.0, 0.0};
  for (const auto& t : terms) {
    if (!t.is_zero()) acc += std::polar(std::exp(t.log_abs - scale), t.phase);
  }
  LogScalar out = LogScalar::from_complex(acc);
  if (!out.is_zero()) out.log_abs += scale;
  return out;
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

LuDecomposition::LuDecomposition(ComplexMatrix a) : lu_(std::move(a)) {
  if (lu_.rows() != lu_.cols()) throw DimensionError("LU: matrix must be square");
  const Eigen::Index n = lu_.rows();
  perm_.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) perm_[static_cast<std::size_t>(i)] = i;

  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    double best = std::abs(lu_(k, k));
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const double v = std::abs(lu_(i, k));
      if (v > best) {
        best = v;
        pivot = i;
      }
    }
    if (!(best >= kPivotThreshold)) {
      throw SingularMatrixError("LU: pivot " + std::to_string(k) + " below singularity threshold");
    }
    if (pivot != k) {
      lu_.row(k).swap(lu_.row(pivot));
      std::swap(perm_[static_cast<std::size_t>(k)], perm_[static_cast<std::size_t>(pivot)]);
      odd_permutation_ = !odd_permutation_;
    }
    const Complex inv = 1.0 / lu_(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const Complex f = lu_(i, k) * inv;
      lu_(i, k) = f;
      if (f != Complex{0.0, 0.0}) {
        lu_.row(i).tail(n - k - 1) -= f * lu_.row(k).tail(n - k - 1);
      }
    }
  }
}

LogDet LuDecomposition::logdet() const {
  double log_abs = 0.0;
  double phase = odd_permutation_ ? kPi : 0.0;
  for (Eigen::Index i = 0; i < lu_.rows(); ++i) {
    const Complex d = lu_(i, i);
    log_abs += std::log(std::abs(d));
    phase += std::arg(d);
  }
  return {log_abs, wrap_phase(phase)};
}

ComplexMatrix LuDecomposition::solve(const ComplexMatrix& rhs) const {
  const Eigen::Index n = lu_.rows();
  if (rhs.rows() != n) throw DimensionError("LU solve: right-hand side has wrong row count");
  ComplexMatrix x(n, rhs.cols());
  for (Eigen::Index i = 0; i < n; ++i) x.row(i) = rhs.row(perm_[static_cast<std::size_t>(i)]);
  for (Eigen::Index i = 1; i < n; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) x.row(i) -= lu_(i, j) * x.row(j);
  }
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    for (Eigen::Index j = i + 1; j < n; ++j) x.row(i) -= lu_(i, j) * x.row(j);
    x.row(i) /= lu_(i, i);
  }
  return x;
}

Complex LuDecomposition::trace_of_solve(const ComplexMatrix& b) const {
  return solve(b).trace();
}

LogDet logdet(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("logdet: matrix must be square");
  if (m.rows() == 0) return {};
  return LuDecomposition(m).logdet();
}

std::vector<Complex> eigvals(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("eigvals: matrix must be square");
  const Eigen::Index n = m.rows();
  if (n == 0) return {};
  Eigen::ComplexEigenSolver<ComplexMatrix> solver;
  solver.setMaxIterations(100 * n);
  solver.compute(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw NoConvergenceError("eigvals: QR iteration did not converge within 100*dim sweeps");
  }
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + n};
}

Complex pfaffian(ComplexMatrix a) {
  if (a.rows() != a.cols()) throw DimensionError("pfaffian: matrix must be square");
  const Eigen::Index n = a.rows();
  if (n % 2 != 0) throw DimensionError("pfaffian: dimension must be even");
  if (n == 0) return {1.0, 0.0};

  const double scale = max_abs(a);
  const double asym = max_abs(a + a.transpose());
  if (asym > 1e-10 * scale) {
    throw AsymmetryError("pfaffian: matrix is not skew-symmetric (max|A+A^T| = " +
                         std::to_string(asym) + ")");
  }

  Complex result{1.0, 0.0};
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    // Bring the largest entry of column k below the diagonal into row k+1.
    Eigen::Index kp = k + 1;
    double best = std::abs(a(k + 1, k));
    for (Eigen::Index i = k + 2; i < n; ++i) {
      const double v = std::abs(a(i, k));
      if (v > best) {
        best = v;
        kp = i;
      }
    }
    if (kp != k + 1) {
      a.row(k + 1).swap(a.row(kp));
      a.col(k + 1).swap(a.col(kp));
      result = -result;
    }
    if (a(k + 1, k) == Complex{0.0, 0.0}) return {0.0, 0.0};

    result *= a(k, k + 1);
    if (k + 2 < n) {
      const Eigen::Index m = n - k - 2;
      const ComplexVector tau = a.row(k).tail(m).transpose() / a(k, k + 1);
      const ComplexVector col = a.col(k + 1).tail(m);
      a.bottomRightCorner(m, m) += tau * col.transpose() - col * tau.transpose();
    }
  }
  return result;
}

}  // namespace chiral
