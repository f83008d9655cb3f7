// Copyright 2026 The Gravphase Authors
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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "gravphase/density_matrix.hpp"
#include "gravphase/errors.hpp"
#include "gravphase/statevector.hpp"
#include "support.hpp"

namespace {

using namespace gravphase;
using namespace gravphase::sv;
using Matrix = DensityMatrix::Matrix;

// Random mixed state: normalized W W^dagger.
DensityMatrix random_rho(std::mt19937_64 &rng, int n) {
  const int d = 1 << n;
  std::normal_distribution<double> dist;
  Matrix w(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      w(i, j) = {dist(rng), dist(rng)};
    }
  }
  Matrix rho = w * w.adjoint();
  rho /= rho.trace();
  return DensityMatrix::from_matrix(rho);
}

// Kraus operator of the channel: diagonal phase over register bits 1..n-1.
Matrix kraus(const gravity::DephasingAngles &angles, int n) {
  const int d = 1 << n;
  Matrix k = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    double phase = 0;
    for (int q = 1; q < n; ++q) {
      if (i >> q & 1) {
        phase += angles[q - 1];
      }
    }
    k(i, i) = std::polar(1.0, phase);
  }
  return k;
}

TEST(DensityMatrix, Validation) {
  Matrix bad = Matrix::Identity(2, 2);
  EXPECT_THROW(DensityMatrix::from_matrix(bad), std::invalid_argument);
  Matrix nonherm = Matrix::Zero(2, 2);
  nonherm(0, 0) = 1;
  nonherm(0, 1) = 0.3;
  EXPECT_THROW(DensityMatrix::from_matrix(nonherm), std::invalid_argument);
  Matrix neg = Matrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix::from_matrix(neg), std::invalid_argument);
  EXPECT_THROW(DensityMatrix::pure(init_zero(kMaxDensityQubits + 1)),
               ResourceLimitError);
}

TEST(DensityMatrix, PureStateProperties) {
  auto s = init_zero(3);
  apply_gate(s, Hadamard{0});
  apply_gate(s, ControlledX{0, {1, 2}});
  const auto rho = DensityMatrix::pure(s);
  EXPECT_NEAR(rho.trace().real(), 1.0, 1e-15);
  EXPECT_NEAR(rho.purity(), 1.0, 1e-14);
  EXPECT_GT(rho.min_eigenvalue(), -1e-12);
}

TEST(Channel, MatchesKrausConjugation) {
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 4; ++n) {
    const auto rho = random_rho(rng, n);
    const auto angles = support::random_angles(rng, n - 1, 3.0);
    const auto out = apply_channel(rho, angles);
    const Matrix k = kraus(angles, n);
    const Matrix expected = k * rho.matrix() * k.adjoint();
    EXPECT_LT((out.matrix() - expected).cwiseAbs().maxCoeff(), 1e-13);
  }
}

TEST(Channel, AgreesWithStatevectorOnPureStates) {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> dist;
  for (int n = 2; n <= 5; ++n) {
    std::vector<Complex> amps(std::size_t{1} << n);
    double norm = 0;
    for (auto &a : amps) {
      a = {dist(rng), dist(rng)};
      norm += std::norm(a);
    }
    for (auto &a : amps) {
      a /= std::sqrt(norm);
    }
    auto psi = StateVector::from_amplitudes(amps);
    const auto angles = support::random_angles(rng, n - 1);
    const auto via_channel = apply_channel(DensityMatrix::pure(psi), angles);
    apply_diagonal_phase(psi, angles);
    const auto via_state = DensityMatrix::pure(psi);
    EXPECT_LT((via_channel.matrix() - via_state.matrix()).cwiseAbs().maxCoeff(),
              1e-13);
  }
}

TEST(Channel, PreservesTraceDiagonalAndMagnitudes) {
  std::mt19937_64 rng(29);
  for (int n = 1; n <= 4; ++n) {
    const auto rho = random_rho(rng, n);
    const auto out = apply_channel(rho, support::random_angles(rng, n - 1, 5.0));
    EXPECT_NEAR(std::abs(out.trace() - rho.trace()), 0.0, 1e-12);
    const int d = 1 << n;
    for (int i = 0; i < d; ++i) {
      EXPECT_EQ(out.matrix()(i, i), rho.matrix()(i, i));
      for (int j = 0; j < d; ++j) {
        EXPECT_NEAR(std::abs(out.matrix()(i, j)), std::abs(rho.matrix()(i, j)),
                    1e-12);
      }
    }
    EXPECT_NEAR(out.purity(), rho.purity(), 1e-12);
  }
}

TEST(Channel, SemigroupInTime) {
  std::mt19937_64 rng(31);
  const auto rho = random_rho(rng, 4);
  const auto rate = support::random_angles(rng, 3);
  auto scaled = [&](double t) {
    auto a = rate;
    for (auto &v : a.angles) {
      v *= t;
    }
    a.time = t;
    return a;
  };
  const auto twice = apply_channel(apply_channel(rho, scaled(0.3)), scaled(1.1));
  const auto once = apply_channel(rho, scaled(1.4));
  EXPECT_LT((twice.matrix() - once.matrix()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Channel, RejectsWrongAngleCount) {
  std::mt19937_64 rng(37);
  const auto rho = random_rho(rng, 2);
  EXPECT_THROW(apply_channel(rho, support::angles_of({1.0, 2.0})),
               std::invalid_argument);
}

} // namespace
