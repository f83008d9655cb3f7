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
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "gravphase/branch.hpp"
#include "gravphase/protocol.hpp"
#include "gravphase/statevector.hpp"
#include "support.hpp"

namespace {

using namespace gravphase;
using namespace gravphase::branch;

TEST(Branch, EntangledStateIsBalanced) {
  const auto s = init_entangled();
  EXPECT_NEAR(std::norm(s.amp_minus()), 0.5, 1e-15);
  EXPECT_NEAR(std::norm(s.amp_plus()), 0.5, 1e-15);
  EXPECT_NEAR(std::arg(s.amp_plus()) - std::arg(s.amp_minus()),
              std::numbers::pi / 2, 1e-15);
  const auto p = ancilla_probabilities(s);
  EXPECT_NEAR(p.p0, 0.5, 1e-15);
  EXPECT_NEAR(p.p1, 0.5, 1e-15);
}

TEST(Branch, LinearSignature) {
  for (double dphi : {-1.2, -0.1, 0.0, 1e-9, 0.1, 0.7, 1.5, 2.5}) {
    const auto p = ancilla_probabilities(accumulate(init_entangled(), dphi, 0.0));
    EXPECT_NEAR(p.p1, 0.5 + 0.5 * std::sin(dphi), 1e-15);
    EXPECT_NEAR(p.p0 + p.p1, 1.0, 1e-15);
  }
  const auto p = ancilla_probabilities(accumulate(init_entangled(), 0.1, 0.0));
  EXPECT_NEAR(p.p1, 0.549917, 1e-6);
}

TEST(Branch, DependsOnlyOnDifference) {
  const auto a = ancilla_probabilities(accumulate(init_entangled(), 0.4, 0.1));
  const auto b = ancilla_probabilities(accumulate(init_entangled(), 1.3, 1.0));
  EXPECT_NEAR(a.p1, b.p1, 1e-15);
  EXPECT_NEAR(a.p1, 0.5 + 0.5 * std::sin(0.3), 1e-15);
}

TEST(Branch, TinyPhaseKeepsRelativePrecision) {
  const double dphi = 1e-14;
  const auto p = ancilla_probabilities(accumulate(init_entangled(), dphi, 0.0));
  EXPECT_NEAR((p.p1 - 0.5) / dphi, 0.5, 0.01);
}

TEST(Branch, FiniteDifferenceSlopeIsOneHalf) {
  const double h = 1e-6;
  auto p1 = [](double d) {
    return ancilla_probabilities(accumulate(init_entangled(), d, 0.0)).p1;
  };
  EXPECT_NEAR((p1(h) - p1(-h)) / (2 * h), 0.5, 1e-6);
}

TEST(Branch, FromAmplitudes) {
  const double r = 1 / std::sqrt(2.0);
  EXPECT_THROW(BranchState::from_amplitudes({1, 0}, {1, 0}),
               std::invalid_argument);
  const auto s = BranchState::from_amplitudes({r, 0}, {r, 0});
  const auto p = ancilla_probabilities(s);
  EXPECT_NEAR(p.p0 + p.p1, 1.0, 1e-15);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
}

TEST(Branch, PhasesFromPartition) {
  const auto angles = support::angles_of({0.1, -0.2, 0.3, -0.4});
  const std::vector<int> plus = {1, 3};
  const std::vector<int> minus = {2, 4};
  const auto ph = branch_phases(angles, plus, minus);
  EXPECT_NEAR(ph.plus, 0.4, 1e-15);
  EXPECT_NEAR(ph.minus, -0.6, 1e-15);
  EXPECT_NEAR(ph.difference(), 1.0, 1e-15);
  const std::vector<int> bad = {5};
  EXPECT_THROW(branch_phases(angles, bad, minus), std::out_of_range);
}

// The two-branch model must reproduce the full simulation exactly: the
// circuit never leaves span{|0>|->, |1>|+>} before the decode layer.
TEST(Branch, SubspaceExactAgainstStatevector) {
  std::mt19937_64 rng(41);
  for (std::size_t n = 1; n <= 12; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto angles = support::random_angles(rng, n);
      const double sv = protocol::ancilla_probabilities(
                            angles, protocol::Backend::kStatevector)
                            .p1;
      const double br =
          protocol::ancilla_probabilities(angles, protocol::Backend::kBranch).p1;
      EXPECT_NEAR(sv, br, 1e-12) << "n=" << n;
    }
  }
}

} // namespace
