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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "gravphase/errors.hpp"
#include "gravphase/protocol.hpp"
#include "gravphase/statevector.hpp"
#include "support.hpp"

namespace {

using namespace gravphase;
using namespace gravphase::protocol;
using support::angles_of;

constexpr double kPi = std::numbers::pi;

double circuit_p1(const sv::Circuit &c) {
  auto s = sv::init_zero(c.qubit_count);
  sv::run_gates(s, c);
  return sv::probability_of(s, c.measured_qubit, 1);
}

TEST(Partition, SplitsBySign) {
  const auto p = partition_by_sign(angles_of({0.3, -0.1, 0.0, -2.0, 1.0}));
  EXPECT_EQ(p.plus_sites, (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(p.minus_sites, (std::vector<int>{2, 4}));
  const auto all_plus = partition_by_sign(angles_of({0.0, 0.0}));
  EXPECT_EQ(all_plus.plus_sites.size(), 2u);
  EXPECT_TRUE(all_plus.minus_sites.empty());
}

TEST(Circuit, GateListShape) {
  const auto angles = angles_of({0.1, -0.2, 0.3, -0.4, -0.5});
  const auto part = partition_by_sign(angles);
  const auto c = build_circuit(part, angles);
  EXPECT_EQ(c.qubit_count, 6);
  EXPECT_EQ(c.measured_qubit, 0);
  const std::size_t n = 5, minus = 3;
  EXPECT_EQ(c.gates.size(), 3 + minus + 2 * n + 1);
  EXPECT_TRUE(std::holds_alternative<sv::Hadamard>(c.gates.front()));
  EXPECT_TRUE(std::holds_alternative<sv::Hadamard>(c.gates.back()));
  const auto phases = std::ranges::count_if(c.gates, [](const sv::Gate &g) {
    return std::holds_alternative<sv::DiagonalPhase>(g);
  });
  EXPECT_EQ(phases, 1);
}

TEST(Circuit, RejectsMismatchedPartition) {
  const auto angles = angles_of({0.1, 0.2});
  SignPartition p{{1}, {}};
  EXPECT_THROW(build_circuit(p, angles), std::invalid_argument);
  SignPartition dup{{1, 1}, {2}};
  EXPECT_THROW(build_circuit(dup, angles), std::invalid_argument);
}

TEST(Circuit, LinearSignatureExact) {
  std::mt19937_64 rng(43);
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto angles = support::random_angles(rng, n);
    const auto c = build_circuit(partition_by_sign(angles), angles);
    const double dphi = expected_delta_phi(angles);
    EXPECT_NEAR(circuit_p1(c), 0.5 + 0.5 * std::sin(dphi), 1e-12);
  }
}

// Without the second controlled-X layer the two branches remain orthogonal
// register states and the ancilla carries no phase information.
TEST(Circuit, WithoutDecodeLayerAncillaIsBlind) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const auto angles = support::random_angles(rng, 4);
    auto c = build_circuit(partition_by_sign(angles), angles);
    const auto phase = std::ranges::find_if(c.gates, [](const sv::Gate &g) {
      return std::holds_alternative<sv::DiagonalPhase>(g);
    });
    const auto last = std::prev(c.gates.end());
    c.gates.erase(std::next(phase), last);
    EXPECT_NEAR(circuit_p1(c), 0.5, 1e-12);
  }
}

TEST(Circuit, SignPartitionIsOptimal) {
  std::mt19937_64 rng(53);
  const std::size_t n = 8;
  const auto angles = support::random_angles(rng, n, 0.1);
  const double best = expected_delta_phi(angles);
  const double best_p1 = circuit_p1(build_circuit(partition_by_sign(angles), angles));
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 100; ++trial) {
    SignPartition p;
    double diff = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (coin(rng)) {
        p.plus_sites.push_back(int(k));
        diff += angles[k - 1];
      } else {
        p.minus_sites.push_back(int(k));
        diff -= angles[k - 1];
      }
    }
    const double p1 = circuit_p1(build_circuit(p, angles));
    EXPECT_NEAR(p1, 0.5 + 0.5 * std::sin(diff), 1e-12);
    EXPECT_LE(diff, best + 1e-15);
    EXPECT_LE(p1, best_p1 + 1e-12);
  }
}

TEST(Protocol, ExpectedDeltaPhiIsSumOfMagnitudes) {
  EXPECT_DOUBLE_EQ(expected_delta_phi(angles_of({0.1, -0.2, 0.3})), 0.6);
}

TEST(Protocol, SignFlipLeavesReadoutUnchanged) {
  std::mt19937_64 rng(59);
  const auto angles = support::random_angles(rng, 7);
  auto flipped = angles;
  for (auto &v : flipped.angles) {
    v = -v;
  }
  for (auto backend : {Backend::kStatevector, Backend::kBranch}) {
    EXPECT_NEAR(ancilla_probabilities(angles, backend).p1,
                ancilla_probabilities(flipped, backend).p1, 1e-12);
  }
  // A fixed partition sees the opposite phase.
  const auto part = partition_by_sign(angles);
  const double p = circuit_p1(build_circuit(part, angles));
  const double q = circuit_p1(build_circuit(part, flipped));
  EXPECT_NEAR(p - 0.5, -(q - 0.5), 1e-12);
}

TEST(Protocol, BackendsAgreeAndShotsMatch) {
  std::mt19937_64 rng(61);
  for (std::size_t n : {1u, 5u, 12u}) {
    const auto angles = support::random_angles(rng, n, 0.3);
    RunOptions sv_opts{2000, 99, Backend::kStatevector, 1};
    RunOptions br_opts{2000, 99, Backend::kBranch, 1};
    EXPECT_EQ(shot_outcomes(angles, sv_opts), shot_outcomes(angles, br_opts));
  }
}

TEST(Protocol, ThreadCountDoesNotChangeResult) {
  const auto angles = angles_of({0.05, -0.02, 0.01});
  RunOptions one{100001, 5, Backend::kBranch, 1};
  RunOptions four = one;
  four.threads = 4;
  const auto a = run_protocol(angles, one);
  const auto b = run_protocol(angles, four);
  EXPECT_EQ(a.count_one, b.count_one);
  const auto seq = shot_outcomes(angles, one);
  EXPECT_EQ(a.count_one,
            std::uint64_t(std::ranges::count(seq, std::uint8_t{1})));
}

TEST(Protocol, StatevectorCapIsReported) {
  const auto angles = angles_of(std::vector<double>(sv::kMaxQubits, 0.01));
  EXPECT_THROW(ancilla_probabilities(angles, Backend::kStatevector),
               ResourceLimitError);
  EXPECT_NO_THROW(ancilla_probabilities(angles, Backend::kBranch));
}

TEST(Estimator, InvertsLinearSignature) {
  const auto e = estimate(549917, 1000000);
  EXPECT_NEAR(e.delta_phi_hat, std::asin(2 * 0.549917 - 1), 1e-15);
  EXPECT_NEAR(e.std_error, 1e-3, 1e-12);
  EXPECT_FALSE(e.saturated);
}

TEST(Estimator, Saturation) {
  const auto hi = estimate(10, 10);
  EXPECT_TRUE(hi.saturated);
  EXPECT_DOUBLE_EQ(hi.delta_phi_hat, kPi / 2);
  EXPECT_TRUE(std::isinf(hi.std_error));
  const auto lo = estimate(0, 10);
  EXPECT_TRUE(lo.saturated);
  EXPECT_DOUBLE_EQ(lo.delta_phi_hat, -kPi / 2);
  EXPECT_THROW(estimate(1, 0), std::invalid_argument);
  EXPECT_THROW(estimate(11, 10), std::invalid_argument);
}

TEST(Estimator, OutOfRangeFlag) {
  RunOptions opts{100, 1, Backend::kBranch, 1};
  EXPECT_TRUE(run_protocol(angles_of({1.0, -1.0}), opts).out_of_range);
  EXPECT_FALSE(run_protocol(angles_of({0.5, -0.5}), opts).out_of_range);
  opts.shots = 0;
  EXPECT_THROW(run_protocol(angles_of({0.1}), opts), std::invalid_argument);
}

TEST(StandardReadout, CosineSignature) {
  const auto p = standard_pea_probabilities(0.3);
  EXPECT_NEAR(p.p0, 0.5 + 0.5 * std::cos(0.3), 1e-15);
  const double h = 1e-6;
  const double slope = (standard_pea_probabilities(h).p1 -
                        standard_pea_probabilities(-h).p1) / (2 * h);
  EXPECT_NEAR(slope, 0.0, 1e-6);
}

TEST(CumulativePhase, ClosedFormMatchesSiteSum) {
  const PhysicalConstants k;
  const auto chip = gravity::ChipGeometry::line(100000, 1e-3, 2 * kPi * 10e9);
  const auto phase = cumulative_phase_1d(chip, 1e-3, k);
  EXPECT_NEAR(phase.closed_form, 0.01714, 1e-5);
  EXPECT_NEAR(phase.exact, phase.closed_form, 1e-12 * phase.closed_form);
}

TEST(CumulativePhase, AgreesWithRotationScenario) {
  const PhysicalConstants k;
  const auto chip = gravity::ChipGeometry::line(10, 1e-3, 2 * kPi * 10e9);
  const auto angles = gravity::dephasing_angles(
      {chip, gravity::VerticalRotation{kPi / 2}, k}, 2.0);
  EXPECT_NEAR(cumulative_phase_1d(chip, 2.0, k).exact,
              expected_delta_phi(angles), 1e-24);
}

TEST(CumulativePhase, Preconditions) {
  const auto odd = gravity::ChipGeometry::line(3, 1e-3, 1.0);
  EXPECT_THROW(cumulative_phase_1d(odd, 1.0), std::domain_error);
  const auto grid = gravity::ChipGeometry::grid(4, 1e-3, 1.0);
  EXPECT_THROW(cumulative_phase_1d(grid, 1.0), std::domain_error);
}

TEST(Backend, Names) {
  EXPECT_EQ(parse_backend("branch"), Backend::kBranch);
  EXPECT_EQ(parse_backend("statevector"), Backend::kStatevector);
  EXPECT_EQ(to_string(Backend::kBranch), "branch");
  EXPECT_THROW(parse_backend("gpu"), std::invalid_argument);
}

} // namespace
