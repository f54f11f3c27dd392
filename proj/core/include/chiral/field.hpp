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

#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "chiral/ensembles.hpp"
#include "chiral/numerics.hpp"

namespace chiral {

/// v(p) = (a(p), b(p)).
using Vec2 = Eigen::Vector2cd;
using Mat2 = Eigen::Matrix2cd;

/// v^T w.
inline Complex bilinear(const Vec2& v, const Vec2& w) { return v(0) * w(0) + v(1) * w(1); }
/// i v^T tau_2 w = a_v b_w - b_v a_w.
inline Complex skew(const Vec2& v, const Vec2& w) { return v(0) * w(1) - v(1) * w(0); }
/// v^dag w.
inline Complex inner(const Vec2& v, const Vec2& w) {
  return std::conj(v(0)) * w(0) + std::conj(v(1)) * w(1);
}

enum class FieldForm { Trig, TrigTr, Fourier };

std::string_view to_string(FieldForm form);
/// Accepts "trig", "trig-tr" or "fourier".
FieldForm parse_field_form(std::string_view name);

/// One term c e^{i n p} of a truncated Fourier series.
struct FourierTerm {
  int n = 0;
  Complex c;
};

/// The coefficient pair (a(p), b(p)) of K(p) = a(p) K1 + b(p) K2.
///
/// Builtin forms: trig (cos p, sin p) and trig-tr (cos p, i sin p). A general
/// form is a pair of truncated Fourier series. An optional constant 2x2
/// transform T maps v -> T v; it is the identity unless set by transformed().
/// Immutable after construction.
class CoefficientField {
 public:
  static CoefficientField trig(SymmetryClass cls, int N);
  static CoefficientField trig_tr(SymmetryClass cls, int N);
  static CoefficientField fourier(SymmetryClass cls, int N, std::vector<FourierTerm> a,
                                  std::vector<FourierTerm> b);

  /// Same field with v(p) replaced by t v(p).
  CoefficientField transformed(const Mat2& t) const;

  SymmetryClass cls() const { return cls_; }
  int N() const { return N_; }
  FieldForm form() const { return form_; }
  const std::vector<FourierTerm>& fourier_a() const { return a_; }
  const std::vector<FourierTerm>& fourier_b() const { return b_; }
  const Mat2& transform() const { return transform_; }

  Vec2 v(double p) const;
  /// (a'(p), b'(p)), analytic.
  Vec2 dv(double p) const;

 private:
  CoefficientField(SymmetryClass cls, int N, FieldForm form);

  SymmetryClass cls_;
  int N_;
  FieldForm form_;
  std::vector<FourierTerm> a_;
  std::vector<FourierTerm> b_;
  Mat2 transform_ = Mat2::Identity();
};

/// K(p) = a(p) K1 + b(p) K2. Throws DimensionError on class or size mismatch.
ComplexMatrix eval_K(const CoefficientField& field, const EnsembleSample& sample, double p);
ComplexMatrix eval_dK(const CoefficientField& field, const EnsembleSample& sample, double p);

/// [[0, K(p)], [K(p)^dag, 0]].
ComplexMatrix eval_H(const CoefficientField& field, const EnsembleSample& sample, double p);

/// S(p, q) = v^dag(p) v(q).
Complex eval_covariance(const CoefficientField& field, double p, double q);

struct TimeReversalReport {
  bool holds = false;
  /// max over the test points of |a^*(p) - a(-p)| and |b^*(p) - b(-p)|.
  double max_deviation = 0.0;
  int points = 0;
  /// Set only when a sample was supplied.
  std::optional<bool> k0_quaternion_real;
};

/// Tests v^*(p) = v(-p) at 64 equispaced points to 1e-12 and, if a sample is
/// given, that K(0) is quaternion-real.
TimeReversalReport check_time_reversal(const CoefficientField& field,
                                       const EnsembleSample* sample = nullptr);

/// Mixes (K1, K2) -> (T^T)^{-1} (K1, K2) so that the pair
/// (field.transformed(t), mix_sample(s, t)) yields the same K(p) as (field, s).
EnsembleSample mix_sample(const EnsembleSample& sample, const Mat2& t);

}  // namespace chiral
