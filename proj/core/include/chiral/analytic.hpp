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

#include <span>
#include <string_view>
#include <vector>

#include "chiral/field.hpp"

namespace chiral {

/// Normalization of the CII kernels.
///
/// Results: the hatted kernels, with det[1 / (i v^T(q_m) tau_2 v(p_n))] as
/// denominator. Derivation: K1 = b_m b_n/(2 pi) K1hat, K2 = b_p b_q K2hat,
/// K3 = 2 pi b_m b_n K3hat, with det[b_q b_p / (a_q b_p - b_q a_p)] as
/// denominator. The per-point factors cancel in the partition function; the
/// derivation gauge needs b != 0 at every point.
enum class KernelGauge { Results, Derivation };

std::string_view to_string(KernelGauge gauge);

/// The two point lists of Z_{k|k}: q enters the denominator, p the numerator.
struct PointSets {
  std::vector<double> q;
  std::vector<double> p;
};

/// Relative tolerance below which two points count as coincident.
inline constexpr double kCoincidenceTolerance = 1e-8;

/// Throws CoincidentPointsError unless every q-p, q-q and p-p pair satisfies
/// |a_1 b_2 - b_1 a_2| > 1e-8 |v_1| |v_2|; DimensionError on size mismatch.
void validate_points(std::span<const Vec2> vq, std::span<const Vec2> vp);

// Vector-level forms. N is the matrix size parameter; inputs are v(q), v(p).

Complex aiii_z11(int N, const Vec2& vq, const Vec2& vp);
Complex aiii_zkk(int N, std::span<const Vec2> vq, std::span<const Vec2> vp);

Complex cii_kernel_1(int N, const Vec2& vm, const Vec2& vn, KernelGauge gauge = KernelGauge::Results);
/// Warns when |1 + khat khat_*| < 1e-8, where the printed form is 0/0.
Complex cii_kernel_2(int N, const Vec2& vp, const Vec2& vq, KernelGauge gauge = KernelGauge::Results);
Complex cii_kernel_3(int N, const Vec2& vm, const Vec2& vn, KernelGauge gauge = KernelGauge::Results);

/// The 2k x 2k skew matrix, rows/columns interleaved as (p_1, q_1, p_2, q_2, ...).
ComplexMatrix cii_kernel_matrix(int N, std::span<const Vec2> vq, std::span<const Vec2> vp,
                                KernelGauge gauge = KernelGauge::Results);
Complex cii_zkk(int N, std::span<const Vec2> vq, std::span<const Vec2> vp,
                KernelGauge gauge = KernelGauge::Results);

// Field-level forms; N is field.N().

Complex aiii_z11(const CoefficientField& field, double q, double p);
Complex aiii_zkk(const CoefficientField& field, const PointSets& points);
Complex cii_kernel_1(const CoefficientField& field, double pm, double pn,
                     KernelGauge gauge = KernelGauge::Results);
Complex cii_kernel_2(const CoefficientField& field, double p, double q,
                     KernelGauge gauge = KernelGauge::Results);
Complex cii_kernel_3(const CoefficientField& field, double qm, double qn,
                     KernelGauge gauge = KernelGauge::Results);
Complex cii_zkk(const CoefficientField& field, const PointSets& points,
                KernelGauge gauge = KernelGauge::Results);

/// Dispatches on field.cls().
Complex analytic_zkk(const CoefficientField& field, const PointSets& points);

std::vector<Vec2> eval_points(const CoefficientField& field, std::span<const double> angles);

}  // namespace chiral
