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
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace chiral {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Pivots with magnitude below this are treated as exact zeros.
inline constexpr double kPivotThreshold = 1e-300;

/// Wraps an angle into the principal range (-pi, pi].
double wrap_phase(double phase);

/// A complex number stored as (log|z|, arg z). Zero has log_abs == -inf.
///
/// Products, quotients and integer powers never leave log space, so values
/// like x^(2N+1) with N = 64 can be combined before a single final exp.
struct LogScalar {
  double log_abs = 0.0;
  double phase = 0.0;

  static LogScalar from_complex(Complex z);
  static LogScalar zero() { return {-std::numeric_limits<double>::infinity(), 0.0}; }

  bool is_zero() const { return log_abs == -std::numeric_limits<double>::infinity(); }
  Complex value() const;

  LogScalar& operator*=(const LogScalar& rhs);
  LogScalar& operator/=(const LogScalar& rhs);
};

using LogDet = LogScalar;

LogScalar operator*(LogScalar lhs, const LogScalar& rhs);
LogScalar operator/(LogScalar lhs, const LogScalar& rhs);
LogScalar conj(const LogScalar& x);
LogScalar pow(const LogScalar& x, int n);
inline LogScalar pow(Complex z, int n) { return pow(LogScalar::from_complex(z), n); }

/// Sum of values given in log form, scaled by the largest magnitude.
LogScalar log_sum(std::span<const LogScalar> terms);

/// LU factorization with partial pivoting.
class LuDecomposition {
 public:
  /// Throws DimensionError for non-square input and SingularMatrixError when a
  /// pivot falls below kPivotThreshold.
  explicit LuDecomposition(ComplexMatrix a);

  Eigen::Index size() const { return lu_.rows(); }
  LogDet logdet() const;
  ComplexMatrix solve(const ComplexMatrix& rhs) const;

  /// tr(A^{-1} B) without forming the inverse.
  Complex trace_of_solve(const ComplexMatrix& b) const;

 private:
  ComplexMatrix lu_;
  std::vector<Eigen::Index> perm_;
  bool odd_permutation_ = false;
};

/// log|det M| and arg det M. Exact for triangular input.
LogDet logdet(const ComplexMatrix& m);

/// All eigenvalues with multiplicity, in solver order.
std::vector<Complex> eigvals(const ComplexMatrix& m);

/// Pfaffian of a complex skew-symmetric matrix, normalized so that
/// Pf[[0, a], [-a, 0]] = a. Parlett-Reid elimination with pivoting, O(n^3).
/// Throws AsymmetryError when max|A + A^T| > 1e-10 max|A|, DimensionError on
/// odd or non-square input.
Complex pfaffian(ComplexMatrix a);

double max_abs(const ComplexMatrix& m);

}  // namespace chiral
