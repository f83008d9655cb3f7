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

#pragma once

#include <complex>
#include <cstddef>
#include <span>

#include "gravphase/gravity_model.hpp"

/// Closed-form simulation of the protocol's two-dimensional invariant
/// subspace span{|0>|->, |1>|+>}. Cost is O(n) in the register size, so it
/// handles registers far beyond the statevector cap.
namespace gravphase::branch {

using Complex = std::complex<double>;

struct ProbabilityPair {
  double p0 = 0.0;
  double p1 = 0.0;
};

class BranchState;
ProbabilityPair ancilla_probabilities(const BranchState &state);

/// Amplitudes of |0>|-> (minus branch) and |1>|+> (plus branch), kept in
/// polar form so that tiny accumulated phases keep full relative precision.
class BranchState {
public:
  /// (|0>|-> + i|1>|+>) / sqrt(2), the state after the entangling steps.
  static BranchState entangled();

  /// Arbitrary normalized pair. Throws std::invalid_argument if
  /// |minus|^2 + |plus|^2 differs from 1 by more than 1e-12.
  static BranchState from_amplitudes(Complex minus, Complex plus);

  Complex amp_minus() const { return std::polar(mag_minus_, base_minus_ + phi_minus_); }
  Complex amp_plus() const { return std::polar(mag_plus_, base_plus_ + phi_plus_); }

  /// Phases accumulated since preparation.
  double phi_minus() const { return phi_minus_; }
  double phi_plus() const { return phi_plus_; }

  double norm_squared() const {
    return mag_minus_ * mag_minus_ + mag_plus_ * mag_plus_;
  }

  /// Multiplies the plus branch by e^{i phi_plus} and the minus branch by
  /// e^{i phi_minus}.
  BranchState accumulate(double phi_plus, double phi_minus) const;

private:
  friend ProbabilityPair ancilla_probabilities(const BranchState &state);

  BranchState(double mag_minus, double base_minus, double mag_plus,
              double base_plus)
      : mag_minus_(mag_minus), base_minus_(base_minus), mag_plus_(mag_plus),
        base_plus_(base_plus) {}

  double mag_minus_;
  double base_minus_;
  double mag_plus_;
  double base_plus_;
  double phi_minus_ = 0.0;
  double phi_plus_ = 0.0;
};

inline BranchState init_entangled() { return BranchState::entangled(); }

inline BranchState accumulate(const BranchState &state, double phi_plus,
                              double phi_minus) {
  return state.accumulate(phi_plus, phi_minus);
}

/// Ancilla readout after the decode layer and the final Hadamard. For the
/// entangled preparation this is exactly (1/2 - sin(dphi)/2, 1/2 + sin(dphi)/2)
/// with dphi = phi_plus - phi_minus.
ProbabilityPair ancilla_probabilities(const BranchState &state);

struct BranchPhases {
  double plus = 0.0;
  double minus = 0.0;
  double difference() const { return plus - minus; }
};

/// Sums theta_k over each excited set with compensated summation. Site
/// indices are 1-based register sites.
BranchPhases branch_phases(const gravity::DephasingAngles &angles,
                           std::span<const int> plus_sites,
                           std::span<const int> minus_sites);

} // namespace gravphase::branch
