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

#include "gravphase/branch.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gravphase/compensated_sum.hpp"

namespace gravphase::branch {

namespace {

double sum_sites(const gravity::DephasingAngles &angles,
                 std::span<const int> sites) {
  CompensatedSum acc;
  for (int k : sites) {
    if (k < 1 || std::size_t(k) > angles.size()) {
      throw std::out_of_range("register site " + std::to_string(k) +
                              " outside 1.." + std::to_string(angles.size()));
    }
    acc += angles[std::size_t(k) - 1];
  }
  return acc.value();
}

} // namespace

BranchState BranchState::entangled() {
  return BranchState((std::numbers::sqrt2 / 2), 0.0, (std::numbers::sqrt2 / 2),
                     std::numbers::pi / 2);
}

BranchState BranchState::from_amplitudes(Complex minus, Complex plus) {
  const double norm = std::norm(minus) + std::norm(plus);
  if (std::abs(norm - 1.0) > 1e-12) {
    throw std::invalid_argument("branch amplitudes are not normalized");
  }
  return BranchState(std::abs(minus), std::arg(minus), std::abs(plus),
                     std::arg(plus));
}

BranchState BranchState::accumulate(double phi_plus, double phi_minus) const {
  BranchState next = *this;
  next.phi_plus_ += phi_plus;
  next.phi_minus_ += phi_minus;
  return next;
}

ProbabilityPair ancilla_probabilities(const BranchState &state) {
  // Decode maps |1>|+> back onto |1>|->, leaving the ancilla in
  // a_minus|0> + a_plus|1>; the Hadamard then gives
  // P(1) = |a_minus - a_plus|^2 / 2
  //      = 1/2 + visibility/2 * sin(dphi + offset),
  // where offset = 0 for the entangled preparation. Splitting the preparation
  // phases from the accumulated ones keeps sin() accurate for tiny dphi.
  const double norm = state.norm_squared();
  const double visibility = 2.0 * state.mag_minus_ * state.mag_plus_ / norm;
  const double offset =
      (state.base_plus_ - state.base_minus_) - std::numbers::pi / 2;
  const double dphi = state.phi_plus() - state.phi_minus();
  const double half_signal = 0.5 * visibility * std::sin(dphi + offset);
  return {0.5 - half_signal, 0.5 + half_signal};
}

BranchPhases branch_phases(const gravity::DephasingAngles &angles,
                           std::span<const int> plus_sites,
                           std::span<const int> minus_sites) {
  return {sum_sites(angles, plus_sites), sum_sites(angles, minus_sites)};
}

} // namespace gravphase::branch
