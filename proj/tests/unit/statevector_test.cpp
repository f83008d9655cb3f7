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

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "gravphase/errors.hpp"
#include "gravphase/rng.hpp"
#include "gravphase/statevector.hpp"
#include "support.hpp"

namespace {

using namespace gravphase;
using namespace gravphase::sv;
using Mat2 = std::array<std::array<Complex, 2>, 2>;

// Reference single-qubit update written directly from the definition.
std::vector<Complex> apply_reference(const std::vector<Complex> &in, int q,
                                     const Mat2 &u) {
  std::vector<Complex> out(in.size());
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < in.size(); ++i) {
    const int row = (i & bit) ? 1 : 0;
    out[i] = u[row][0] * in[i & ~bit] + u[row][1] * in[i | bit];
  }
  return out;
}

StateVector random_state(std::mt19937_64 &rng, int n) {
  std::normal_distribution<double> dist;
  std::vector<Complex> amps(std::size_t{1} << n);
  double norm = 0;
  for (auto &a : amps) {
    a = {dist(rng), dist(rng)};
    norm += std::norm(a);
  }
  for (auto &a : amps) {
    a /= std::sqrt(norm);
  }
  return StateVector::from_amplitudes(std::move(amps));
}

std::vector<Complex> copy(const StateVector &s) {
  return {s.amplitudes().begin(), s.amplitudes().end()};
}

void expect_close(const StateVector &s, const std::vector<Complex> &ref,
                  double tol = 1e-13) {
  ASSERT_EQ(s.dimension(), ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    EXPECT_NEAR(std::abs(s[i] - ref[i]), 0.0, tol) << "index " << i;
  }
}

const double r = 1 / std::sqrt(2.0);
const Mat2 kH = {{{r, r}, {r, -r}}};
const Mat2 kS = {{{1, 0}, {0, Complex(0, 1)}}};
const Mat2 kX = {{{0, 1}, {1, 0}}};

TEST(StateVector, ZeroState) {
  const auto s = init_zero(3);
  EXPECT_EQ(s.dimension(), 8u);
  EXPECT_EQ(s[0], Complex(1, 0));
  EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
  EXPECT_THROW(init_zero(0), std::invalid_argument);
  EXPECT_THROW(init_zero(kMaxQubits + 1), ResourceLimitError);
}

TEST(StateVector, FromAmplitudesValidates) {
  EXPECT_THROW(StateVector::from_amplitudes({1, 0, 0}), std::invalid_argument);
  EXPECT_THROW(StateVector::from_amplitudes({1, 1}), std::invalid_argument);
  EXPECT_NO_THROW(StateVector::from_amplitudes({r, r}));
}

TEST(Gates, SingleQubitGatesMatchReference) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 5; ++n) {
    for (int q = 0; q < n; ++q) {
      auto s = random_state(rng, n);
      auto ref = copy(s);
      apply_gate(s, Hadamard{q});
      ref = apply_reference(ref, q, kH);
      expect_close(s, ref);
      apply_gate(s, PhaseS{q});
      ref = apply_reference(ref, q, kS);
      expect_close(s, ref);
      apply_gate(s, PauliX{q});
      ref = apply_reference(ref, q, kX);
      expect_close(s, ref);
    }
  }
}

TEST(Gates, HadamardIsInvolution) {
  std::mt19937_64 rng(3);
  auto s = random_state(rng, 4);
  const auto before = copy(s);
  apply_gate(s, Hadamard{2});
  apply_gate(s, Hadamard{2});
  expect_close(s, before, 1e-14);
}

TEST(Gates, ControlledXFlipsOnlyWhenControlSet) {
  auto s = init_zero(3);
  apply_gate(s, ControlledX{0, {1, 2}});
  EXPECT_EQ(s[0], Complex(1, 0));
  apply_gate(s, PauliX{0});
  apply_gate(s, ControlledX{0, {1, 2}});
  EXPECT_NEAR(std::abs(s[0b111]), 1.0, 1e-15);
}

TEST(Gates, MultiTargetEqualsSingles) {
  std::mt19937_64 rng(5);
  auto a = random_state(rng, 5);
  auto b = a;
  apply_gate(a, ControlledX{0, {1, 3, 4}});
  for (int t : {1, 3, 4}) {
    apply_gate(b, ControlledX{0, {t}});
  }
  expect_close(a, copy(b), 0.0);
}

TEST(Gates, RejectsBadQubits) {
  auto s = init_zero(2);
  EXPECT_THROW(apply_gate(s, Hadamard{2}), std::out_of_range);
  EXPECT_THROW(apply_gate(s, ControlledX{0, {0}}), std::invalid_argument);
}

TEST(Gates, NormPreservedOverRandomCircuits) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 6;
    auto s = random_state(rng, n);
    for (int step = 0; step < 40; ++step) {
      const int q = pick(rng) % n;
      switch (pick(rng)) {
      case 0: apply_gate(s, Hadamard{q}); break;
      case 1: apply_gate(s, PhaseS{q}); break;
      case 2: apply_gate(s, PauliX{q}); break;
      default: apply_gate(s, ControlledX{q, {(q + 1) % n}}); break;
      }
    }
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
  }
}

TEST(DiagonalPhase, MatchesProductOfSiteRotations) {
  std::mt19937_64 rng(13);
  const int n = 6;
  auto s = random_state(rng, n);
  const auto angles = support::random_angles(rng, n - 1, 2.0);
  const auto before = copy(s);
  apply_diagonal_phase(s, angles);
  for (std::size_t i = 0; i < before.size(); ++i) {
    double phase = 0;
    for (int k = 1; k < n; ++k) {
      if (i >> k & 1) {
        phase += angles[k - 1];
      }
    }
    EXPECT_NEAR(std::abs(s[i] - before[i] * std::polar(1.0, phase)), 0.0,
                1e-13);
  }
}

TEST(DiagonalPhase, ComposesAdditively) {
  std::mt19937_64 rng(17);
  auto a = random_state(rng, 5);
  auto b = a;
  const auto t1 = support::random_angles(rng, 4);
  const auto t2 = support::random_angles(rng, 4);
  std::vector<double> sum(4);
  for (int k = 0; k < 4; ++k) {
    sum[k] = t1[k] + t2[k];
  }
  apply_diagonal_phase(a, t1);
  apply_diagonal_phase(a, t2);
  apply_diagonal_phase(b, support::angles_of(sum));
  expect_close(a, copy(b), 1e-13);
  EXPECT_THROW(apply_diagonal_phase(a, support::angles_of({1.0})),
               std::invalid_argument);
}

TEST(Measurement, ProbabilityOfAndCollapse) {
  auto s = init_zero(2);
  apply_gate(s, Hadamard{0});
  EXPECT_NEAR(probability_of(s, 0, 1), 0.5, 1e-15);
  EXPECT_NEAR(probability_of(s, 1, 1), 0.0, 1e-15);
  ShotStream stream(1, 0);
  const int bit = measure_qubit(s, 0, stream);
  EXPECT_NEAR(probability_of(s, 0, bit), 1.0, 1e-15);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
}

TEST(Measurement, HadamardStatistics) {
  auto s = init_zero(1);
  apply_gate(s, Hadamard{0});
  const std::uint64_t shots = 1'000'000;
  std::uint64_t ones = 0;
  for (std::uint64_t i = 0; i < shots; ++i) {
    ShotStream stream(2024, i);
    ones += sample_qubit(s, 0, stream);
  }
  EXPECT_NEAR(double(ones) / double(shots), 0.5, 0.002);
}

TEST(Rng, StreamsAreReproducibleAndDistinct) {
  ShotStream a(1, 5), b(1, 5), c(1, 6), d(2, 5);
  const auto x = a.next_u64();
  EXPECT_EQ(x, b.next_u64());
  EXPECT_NE(x, c.next_u64());
  EXPECT_NE(x, d.next_u64());
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

} // namespace
