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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "chiral/analytic.hpp"
#include "chiral/errors.hpp"
#include "support/reference.hpp"

namespace chiral {
namespace {

Vec2 random_vec(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec2 v;
  v << Complex{g(rng), g(rng)}, Complex{g(rng), g(rng)};
  return v;
}

std::vector<Vec2> random_vecs(std::mt19937_64& rng, int n) {
  std::vector<Vec2> out;
  for (int i = 0; i < n; ++i) out.push_back(random_vec(rng));
  return out;
}

std::vector<Vec2> transform_all(const Mat2& m, std::vector<Vec2> vs) {
  for (auto& v : vs) v = m * v;
  return vs;
}

TEST(AIIIZ11, EqualPointsGiveOne) {
  const auto f = testing::generic_fourier_field(SymmetryClass::AIII, 3);
  std::mt19937_64 rng(1);
  const Vec2 v = random_vec(rng);
  EXPECT_LT(std::abs(aiii_z11(3, v, v) - 1.0), 1e-14);
  EXPECT_LT(std::abs(aiii_z11(f, 0.4, 0.4) - 1.0), 1e-14);
}

TEST(AIIIZ11, TrigFieldIsCosPower) {
  for (int N : {1, 2, 5}) {
    const auto f = CoefficientField::trig(SymmetryClass::AIII, N);
    for (auto [q, p] : {std::pair{0.5, 0.9}, std::pair{0.1, 2.3}, std::pair{-1.0, 0.2}}) {
      EXPECT_NEAR(std::abs(aiii_z11(f, q, p) - std::pow(std::cos(q - p), N)), 0.0, 1e-14);
    }
  }
}

TEST(AIIIZkk, SingleRowEqualsZ11) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto vq = random_vecs(rng, 1);
    const auto vp = random_vecs(rng, 1);
    EXPECT_LT(testing::rel_diff(aiii_zkk(3, vq, vp), aiii_z11(3, vq[0], vp[0])), 1e-13);
  }
}

TEST(AIIIZkk, PermutationInvariant) {
  std::mt19937_64 rng(3);
  const auto vq = random_vecs(rng, 3);
  const auto vp = random_vecs(rng, 3);
  const Complex base = aiii_zkk(2, vq, vp);
  const std::vector<Vec2> q2 = {vq[2], vq[0], vq[1]};
  const std::vector<Vec2> p2 = {vp[1], vp[0], vp[2]};
  EXPECT_LT(testing::rel_diff(aiii_zkk(2, q2, vp), base), 1e-12);
  EXPECT_LT(testing::rel_diff(aiii_zkk(2, vq, p2), base), 1e-12);
  EXPECT_LT(testing::rel_diff(aiii_zkk(2, q2, p2), base), 1e-12);
}

TEST(AIIIZkk, GroupInvariance) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto vq = random_vecs(rng, 2);
    const auto vp = random_vecs(rng, 2);
    const Mat2 u = testing::random_su2(rng).transpose();
    const Complex scale = Complex{0.3, -1.7};
    const Complex base = aiii_zkk(3, vq, vp);
    EXPECT_LT(testing::rel_diff(aiii_zkk(3, transform_all(u, vq), transform_all(u, vp)), base), 1e-12);
    EXPECT_LT(testing::rel_diff(aiii_zkk(3, transform_all(scale * u, vq), transform_all(scale * u, vp)), base), 1e-10);
  }
}

TEST(AIIIZkk, NormalizationLimit) {
  std::mt19937_64 rng(5);
  const int N = 2;
  const auto vq = random_vecs(rng, 2);
  const auto vp = random_vecs(rng, 2);
  Mat2 stretch = Mat2::Identity();
  stretch(0, 0) = 1e6;
  const auto sq = transform_all(stretch, vq);
  const auto sp = transform_all(stretch, vp);
  Complex ratio{1.0, 0.0};
  for (int j = 0; j < 2; ++j) ratio *= sq[j](0) / sp[j](0);
  EXPECT_LT(std::abs(std::pow(ratio, N) * aiii_zkk(N, sq, sp) - 1.0), 1e-4);
}

TEST(AIIIZkk, CoincidenceLimit) {
  const auto f = testing::generic_fourier_field(SymmetryClass::AIII, 2);
  const std::vector<double> q = {0.2, 1.1};
  std::vector<double> dev;
  for (double eps : {1e-3, 1e-4}) {
    const PointSets pts{q, {q[0] + eps, q[1] + eps}};
    dev.push_back(std::abs(aiii_zkk(f, pts) - 1.0));
  }
  EXPECT_LT(dev[1] / dev[0], 0.2);
  EXPECT_LT(dev[1], 1e-3);
}

TEST(AIIIZkk, CoincidentPointsRejected) {
  std::mt19937_64 rng(6);
  const auto vq = random_vecs(rng, 2);
  std::vector<Vec2> vp = {random_vec(rng), Complex{2.0, 1.0} * vq[0]};
  EXPECT_THROW(aiii_zkk(2, vq, vp), CoincidentPointsError);
  std::vector<Vec2> dup_q = {vq[0], Complex{-3.0, 0.0} * vq[0]};
  EXPECT_THROW(aiii_zkk(2, dup_q, random_vecs(rng, 2)), CoincidentPointsError);
  EXPECT_THROW(aiii_zkk(2, vq, random_vecs(rng, 3)), DimensionError);
}

TEST(AIIIZ11, LargeNIsFinite) {
  std::mt19937_64 rng(7);
  const Vec2 vq = random_vec(rng), vp = random_vec(rng);
  const Complex z = aiii_z11(64, vq, vp);
  EXPECT_TRUE(std::isfinite(std::abs(z)));
  EXPECT_LT(testing::rel_diff(z, std::pow(aiii_z11(1, vq, vp), 64)), 1e-12);
}

TEST(CIIKernels, AntisymmetricWithZeroDiagonal) {
  std::mt19937_64 rng(8);
  for (int N : {1, 2, 4, 9}) {
    for (auto gauge : {KernelGauge::Results, KernelGauge::Derivation}) {
      const Vec2 a = random_vec(rng), b = random_vec(rng);
      EXPECT_LT(testing::rel_diff(cii_kernel_1(N, a, b, gauge), -cii_kernel_1(N, b, a, gauge)), 1e-10);
      EXPECT_LT(testing::rel_diff(cii_kernel_3(N, a, b, gauge), -cii_kernel_3(N, b, a, gauge)), 1e-10);
      EXPECT_EQ(cii_kernel_1(N, a, a, gauge), Complex(0.0, 0.0));
    }
  }
}

TEST(CIIKernels, MatrixIsAntisymmetric) {
  std::mt19937_64 rng(9);
  const auto vq = random_vecs(rng, 3);
  const auto vp = random_vecs(rng, 3);
  for (auto gauge : {KernelGauge::Results, KernelGauge::Derivation}) {
    const ComplexMatrix a = cii_kernel_matrix(2, vq, vp, gauge);
    ASSERT_EQ(a.rows(), 6);
    EXPECT_LT(max_abs(a + a.transpose()), 1e-10 * max_abs(a));
    for (Eigen::Index i = 0; i < 6; ++i) EXPECT_EQ(a(i, i), Complex(0.0, 0.0));
  }
}

TEST(CIIZkk, SingleRowIsCornerEntry) {
  std::mt19937_64 rng(10);
  for (int N : {1, 2, 3}) {
    const Vec2 vq = random_vec(rng), vp = random_vec(rng);
    const std::vector<Vec2> q = {vq}, p = {vp};
    EXPECT_LT(testing::rel_diff(cii_zkk(N, q, p), skew(vq, vp) * cii_kernel_2(N, vp, vq)), 1e-12);
  }
}

TEST(CIIZkk, GaugesAgree) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 1 + trial % 3;
    const int N = 1 + trial % 4;
    const auto vq = random_vecs(rng, k);
    const auto vp = random_vecs(rng, k);
    EXPECT_LT(testing::rel_diff(cii_zkk(N, vq, vp, KernelGauge::Results),
                                cii_zkk(N, vq, vp, KernelGauge::Derivation)),
              1e-9);
  }
}

TEST(CIIZkk, PermutationInvariant) {
  std::mt19937_64 rng(12);
  const auto vq = random_vecs(rng, 3);
  const auto vp = random_vecs(rng, 3);
  const Complex base = cii_zkk(2, vq, vp);
  const std::vector<Vec2> q2 = {vq[1], vq[2], vq[0]};
  const std::vector<Vec2> p2 = {vp[0], vp[2], vp[1]};
  EXPECT_LT(testing::rel_diff(cii_zkk(2, q2, p2), base), 1e-10);
}

TEST(CIIZkk, GroupInvariance) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int trial = 0; trial < 20; ++trial) {
    const auto vq = random_vecs(rng, 2);
    const auto vp = random_vecs(rng, 2);
    const Mat2 o = -2.5 * testing::rotation(angle(rng));
    const Complex base = cii_zkk(2, vq, vp);
    EXPECT_LT(testing::rel_diff(cii_zkk(2, transform_all(o, vq), transform_all(o, vp)), base), 1e-9);
  }
}

TEST(CIIZkk, CoincidenceLimit) {
  const auto f = testing::generic_fourier_field(SymmetryClass::CII, 2);
  const std::vector<double> q = {0.4, 1.3};
  std::vector<double> dev;
  for (double eps : {1e-3, 1e-4}) {
    const PointSets pts{q, {q[0] + eps, q[1] + eps}};
    dev.push_back(std::abs(cii_zkk(f, pts) - 1.0));
  }
  EXPECT_LT(dev[1] / dev[0], 0.2);
  EXPECT_LT(dev[1], 1e-3);
}

TEST(CIIZkk, LargeNIsFinite) {
  // Real vectors keep every term of the kernel sums the same sign.
  std::mt19937_64 rng(15);
  std::normal_distribution<double> g;
  std::vector<Vec2> vq(2), vp(2);
  for (auto* list : {&vq, &vp}) {
    for (auto& v : *list) v << g(rng), g(rng);
  }
  for (auto gauge : {KernelGauge::Results, KernelGauge::Derivation}) {
    const Complex z = cii_zkk(64, vq, vp, gauge);
    EXPECT_TRUE(std::isfinite(z.real()) && std::isfinite(z.imag()));
  }
  EXPECT_LT(testing::rel_diff(cii_zkk(64, vq, vp, KernelGauge::Results),
                              cii_zkk(64, vq, vp, KernelGauge::Derivation)),
            1e-9);
}

TEST(CIIZkk, EmptyPointSetsGiveOne) {
  const std::vector<Vec2> none;
  EXPECT_EQ(cii_zkk(3, none, none), Complex(1.0, 0.0));
  EXPECT_EQ(aiii_zkk(3, none, none), Complex(1.0, 0.0));
}

TEST(AnalyticZkk, DispatchesOnClass) {
  const PointSets pts{{0.4, 1.3}, {0.2, 0.9}};
  const auto fa = CoefficientField::trig(SymmetryClass::AIII, 2);
  const auto fc = CoefficientField::trig_tr(SymmetryClass::CII, 2);
  EXPECT_EQ(analytic_zkk(fa, pts), aiii_zkk(fa, pts));
  EXPECT_EQ(analytic_zkk(fc, pts), cii_zkk(fc, pts));
}

}  // namespace
}  // namespace chiral
