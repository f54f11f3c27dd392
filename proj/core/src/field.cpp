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

#include "chiral/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/LU>

#include "chiral/errors.hpp"

namespace chiral {

namespace {

constexpr double kPi = std::numbers::pi;

Complex fourier_value(const std::vector<FourierTerm>& terms, double p) {
  Complex acc{0.0, 0.0};
  for (const auto& t : terms) acc += t.c * std::polar(1.0, t.n * p);
  return acc;
}

Complex fourier_derivative(const std::vector<FourierTerm>& terms, double p) {
  Complex acc{0.0, 0.0};
  for (const auto& t : terms) acc += Complex{0.0, static_cast<double>(t.n)} * t.c * std::polar(1.0, t.n * p);
  return acc;
}

void check_sample(const CoefficientField& field, const EnsembleSample& sample) {
  if (sample.cls != field.cls()) throw DimensionError("field and sample have different symmetry classes");
  const int dim = matrix_dim(field.cls(), field.N());
  if (sample.K1.rows() != dim || sample.K1.cols() != dim || sample.K2.rows() != dim ||
      sample.K2.cols() != dim) {
    throw DimensionError("sample matrices must be " + std::to_string(dim) + "x" + std::to_string(dim));
  }
}

}  // namespace

std::string_view to_string(FieldForm form) {
  switch (form) {
    case FieldForm::Trig:
      return "trig";
    case FieldForm::TrigTr:
      return "trig-tr";
    case FieldForm::Fourier:
      return "fourier";
  }
  return "trig";
}

FieldForm parse_field_form(std::string_view name) {
  if (name == "trig") return FieldForm::Trig;
  if (name == "trig-tr") return FieldForm::TrigTr;
  if (name == "fourier") return FieldForm::Fourier;
  throw DomainError("unknown field form '" + std::string(name) + "' (expected trig, trig-tr or fourier)");
}

CoefficientField::CoefficientField(SymmetryClass cls, int N, FieldForm form)
    : cls_(cls), N_(N), form_(form) {
  if (N < 1) throw DomainError("field: N must be positive");
}

CoefficientField CoefficientField::trig(SymmetryClass cls, int N) {
  return CoefficientField(cls, N, FieldForm::Trig);
}

CoefficientField CoefficientField::trig_tr(SymmetryClass cls, int N) {
  return CoefficientField(cls, N, FieldForm::TrigTr);
}

CoefficientField CoefficientField::fourier(SymmetryClass cls, int N, std::vector<FourierTerm> a,
                                           std::vector<FourierTerm> b) {
  if (a.empty() && b.empty()) throw DomainError("field: Fourier form needs at least one term");
  for (const auto* list : {&a, &b}) {
    for (const auto& t : *list) {
      if (!std::isfinite(t.c.real()) || !std::isfinite(t.c.imag())) {
        throw DomainError("field: Fourier coefficient is not finite");
      }
    }
  }
  CoefficientField f(cls, N, FieldForm::Fourier);
  f.a_ = std::move(a);
  f.b_ = std::move(b);
  return f;
}

CoefficientField CoefficientField::transformed(const Mat2& t) const {
  CoefficientField f = *this;
  f.transform_ = t * transform_;
  return f;
}

Vec2 CoefficientField::v(double p) const {
  Vec2 base;
  switch (form_) {
    case FieldForm::Trig:
      base << std::cos(p), std::sin(p);
      break;
    case FieldForm::TrigTr:
      base << std::cos(p), Complex{0.0, std::sin(p)};
      break;
    case FieldForm::Fourier:
      base << fourier_value(a_, p), fourier_value(b_, p);
      break;
  }
  return transform_ * base;
}

Vec2 CoefficientField::dv(double p) const {
  Vec2 base;
  switch (form_) {
    case FieldForm::Trig:
      base << -std::sin(p), std::cos(p);
      break;
    case FieldForm::TrigTr:
      base << -std::sin(p), Complex{0.0, std::cos(p)};
      break;
    case FieldForm::Fourier:
      base << fourier_derivative(a_, p), fourier_derivative(b_, p);
      break;
  }
  return transform_ * base;
}

ComplexMatrix eval_K(const CoefficientField& field, const EnsembleSample& sample, double p) {
  check_sample(field, sample);
  const Vec2 v = field.v(p);
  return v(0) * sample.K1 + v(1) * sample.K2;
}

ComplexMatrix eval_dK(const CoefficientField& field, const EnsembleSample& sample, double p) {
  check_sample(field, sample);
  const Vec2 dv = field.dv(p);
  return dv(0) * sample.K1 + dv(1) * sample.K2;
}

ComplexMatrix eval_H(const CoefficientField& field, const EnsembleSample& sample, double p) {
  const ComplexMatrix k = eval_K(field, sample, p);
  const Eigen::Index n = k.rows();
  ComplexMatrix h = ComplexMatrix::Zero(2 * n, 2 * n);
  h.topRightCorner(n, n) = k;
  h.bottomLeftCorner(n, n) = k.adjoint();
  return h;
}

Complex eval_covariance(const CoefficientField& field, double p, double q) {
  return inner(field.v(p), field.v(q));
}

TimeReversalReport check_time_reversal(const CoefficientField& field, const EnsembleSample* sample) {
  constexpr int kPoints = 64;
  TimeReversalReport report;
  report.points = kPoints;
  for (int j = 0; j < kPoints; ++j) {
    const double p = 2.0 * kPi * j / kPoints;
    const Vec2 dev = field.v(p).conjugate() - field.v(-p);
    report.max_deviation = std::max(report.max_deviation, dev.cwiseAbs().maxCoeff());
  }
  report.holds = report.max_deviation <= 1e-12;
  if (sample != nullptr) {
    report.k0_quaternion_real = is_quaternion_real(eval_K(field, *sample, 0.0), 1e-12);
  }
  return report;
}

EnsembleSample mix_sample(const EnsembleSample& sample, const Mat2& t) {
  const Mat2 m = t.transpose().inverse();
  EnsembleSample out = sample;
  out.K1 = m(0, 0) * sample.K1 + m(0, 1) * sample.K2;
  out.K2 = m(1, 0) * sample.K1 + m(1, 1) * sample.K2;
  return out;
}

}  // namespace chiral
