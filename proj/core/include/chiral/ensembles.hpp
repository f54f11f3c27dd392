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

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "chiral/numerics.hpp"

namespace chiral {

enum class SymmetryClass { AIII, CII };

std::string_view to_string(SymmetryClass cls);
/// Accepts "AIII" or "CII"; throws DomainError otherwise.
SymmetryClass parse_symmetry_class(std::string_view name);

/// Deterministic random stream identified by (seed, stream index).
///
/// Parallel work derives one stream per chunk; there is no global generator.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  double normal() { return normal_(engine_); }
  /// Real and imaginary parts independent with variance 1/2, so E|z|^2 = 1.
  Complex complex_gaussian();
  double uniform() { return uniform_(engine_); }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
  std::uniform_real_distribution<double> uniform_;
};

/// N x N, i.i.d. entries with E|K_ij|^2 = 1 (density ~ exp(-tr K^dag K)).
ComplexMatrix sample_ginibre_complex(int N, RandomStream& rng);

/// 2N x 2N in the layout [[A, B], [-B^*, A^*]] with A, B complex Ginibre, so
/// that [tau_2 x 1] K^* [tau_2 x 1] = K holds exactly
/// (density ~ exp(-tr K^dag K / 2)).
ComplexMatrix sample_ginibre_quaternion(int N, RandomStream& rng);

ComplexMatrix sample_ginibre(SymmetryClass cls, int N, RandomStream& rng);

/// Dimension of K for the given class: N for AIII, 2N for CII.
inline int matrix_dim(SymmetryClass cls, int N) { return cls == SymmetryClass::CII ? 2 * N : N; }

struct EnsembleSample {
  SymmetryClass cls = SymmetryClass::AIII;
  ComplexMatrix K1;
  ComplexMatrix K2;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

EnsembleSample sample_pair(SymmetryClass cls, int N, RandomStream& rng);

/// Checks the block structure [[A, B], [-B^*, A^*]] with max deviation <= tol.
bool is_quaternion_real(const ComplexMatrix& m, double tol = 0.0);

struct SphericalSpectrum {
  SymmetryClass cls = SymmetryClass::AIII;
  /// N values for AIII, 2N values in conjugate pairs for CII.
  std::vector<Complex> eigenvalues;
  /// Draws discarded because K1 was numerically singular.
  int resamples = 0;
};

/// Eigenvalues of Y = K1^{-1} K2 for a fresh Ginibre pair.
SphericalSpectrum spherical_sample(SymmetryClass cls, int N, RandomStream& rng);

/// The N eigenvalues with the largest imaginary part; the representatives of
/// the conjugate pairs of a CII spectrum.
std::vector<Complex> canonical_upper_half(std::span<const Complex> spectrum);

/// log c^{(2)}_N and log c^{(4)}_N, the normalizations of the spherical jpdfs.
double log_spherical_norm(SymmetryClass cls, int N);

/// log G^{(2)}(z) or log G^{(4)}(z). CII input is the N upper-half-plane
/// representatives. Throws CoincidentPointsError when the density vanishes.
double log_jpdf_spherical(SymmetryClass cls, int N, std::span<const Complex> z);

}  // namespace chiral
