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

#include "chiral/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "chiral/diagnostics.hpp"
#include "chiral/errors.hpp"
#include "chiral/specfun.hpp"

namespace chiral {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x63686972u};
  return std::mt19937_64(seq);
}

void check_size(int N) {
  if (N < 1) throw DomainError("ensemble size N must be positive");
}

double log_abs_or_throw(Complex z) {
  const double a = std::abs(z);
  if (a == 0.0) throw CoincidentPointsError("log_jpdf_spherical: coincident eigenvalues");
  return std::log(a);
}

}  // namespace

std::string_view to_string(SymmetryClass cls) {
  return cls == SymmetryClass::CII ? "CII" : "AIII";
}

SymmetryClass parse_symmetry_class(std::string_view name) {
  if (name == "AIII") return SymmetryClass::AIII;
  if (name == "CII") return SymmetryClass::CII;
  throw DomainError("unknown symmetry class '" + std::string(name) + "' (expected AIII or CII)");
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(make_engine(seed, stream)) {}

Complex RandomStream::complex_gaussian() {
  constexpr double kScale = 0.70710678118654752440;
  const double re = normal();
  const double im = normal();
  return {kScale * re, kScale * im};
}

ComplexMatrix sample_ginibre_complex(int N, RandomStream& rng) {
  check_size(N);
  ComplexMatrix k(N, N);
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < N; ++i) k(i, j) = rng.complex_gaussian();
  }
  return k;
}

ComplexMatrix sample_ginibre_quaternion(int N, RandomStream& rng) {
  check_size(N);
  ComplexMatrix k(2 * N, 2 * N);
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < N; ++i) {
      const Complex alpha = rng.complex_gaussian();
      const Complex beta = rng.complex_gaussian();
      k(i, j) = alpha;
      k(i, N + j) = beta;
      k(N + i, j) = -std::conj(beta);
      k(N + i, N + j) = std::conj(alpha);
    }
  }
  return k;
}

ComplexMatrix sample_ginibre(SymmetryClass cls, int N, RandomStream& rng) {
  return cls == SymmetryClass::CII ? sample_ginibre_quaternion(N, rng)
                                   : sample_ginibre_complex(N, rng);
}

EnsembleSample sample_pair(SymmetryClass cls, int N, RandomStream& rng) {
  EnsembleSample s;
  s.cls = cls;
  s.seed = rng.seed();
  s.stream = rng.stream();
  s.K1 = sample_ginibre(cls, N, rng);
  s.K2 = sample_ginibre(cls, N, rng);
  return s;
}

bool is_quaternion_real(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) return false;
  const Eigen::Index n = m.rows() / 2;
  const double d1 = max_abs(m.bottomRightCorner(n, n) - m.topLeftCorner(n, n).conjugate());
  const double d2 = max_abs(m.bottomLeftCorner(n, n) + m.topRightCorner(n, n).conjugate());
  return d1 <= tol && d2 <= tol;
}

SphericalSpectrum spherical_sample(SymmetryClass cls, int N, RandomStream& rng) {
  SphericalSpectrum out;
  out.cls = cls;
  for (;;) {
    ComplexMatrix k1 = sample_ginibre(cls, N, rng);
    ComplexMatrix k2 = sample_ginibre(cls, N, rng);
    try {
      const LuDecomposition lu(std::move(k1));
      out.eigenvalues = eigvals(lu.solve(k2));
      return out;
    } catch (const SingularMatrixError&) {
      ++out.resamples;
      report(Severity::Info, "spherical_sample: singular K1 resampled (count " +
                                 std::to_string(out.resamples) + ")");
    }
  }
}

std::vector<Complex> canonical_upper_half(std::span<const Complex> spectrum) {
  if (spectrum.size() % 2 != 0) throw DimensionError("canonical_upper_half: odd spectrum size");
  std::vector<Complex> sorted(spectrum.begin(), spectrum.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](Complex a, Complex b) { return a.imag() > b.imag(); });
  sorted.resize(sorted.size() / 2);
  return sorted;
}

double log_spherical_norm(SymmetryClass cls, int N) {
  check_size(N);
  const double log_pi = std::log(std::numbers::pi);
  double acc = boost::math::lgamma(N + 1.0);
  if (cls == SymmetryClass::AIII) {
    acc += N * log_pi;
    for (int j = 1; j <= N; ++j) acc += log_beta(j, N + 1.0 - j);
  } else {
    acc += N * (std::log(2.0) + log_pi);
    for (int j = 1; j <= N; ++j) acc += log_beta(2.0 * j, 2.0 * N + 2.0 - 2.0 * j);
  }
  return acc;
}

double log_jpdf_spherical(SymmetryClass cls, int N, std::span<const Complex> z) {
  check_size(N);
  if (static_cast<int>(z.size()) != N) {
    throw DimensionError("log_jpdf_spherical: expected " + std::to_string(N) + " eigenvalues");
  }
  double acc = -log_spherical_norm(cls, N);
  if (cls == SymmetryClass::AIII) {
    for (int a = 0; a < N; ++a) {
      for (int b = a + 1; b < N; ++b) acc += 2.0 * log_abs_or_throw(z[b] - z[a]);
      acc -= (N + 1.0) * std::log1p(std::norm(z[a]));
    }
    return acc;
  }
  for (int a = 0; a < N; ++a) {
    acc += 2.0 * log_abs_or_throw(z[a] - std::conj(z[a]));
    for (int b = a + 1; b < N; ++b) {
      acc += 2.0 * (log_abs_or_throw(z[b] - z[a]) + log_abs_or_throw(z[b] - std::conj(z[a])));
    }
    acc -= (2.0 * N + 2.0) * std::log1p(std::norm(z[a]));
  }
  return acc;
}

}  // namespace chiral
