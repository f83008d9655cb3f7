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

#include <cstdint>
#include <string_view>
#include <vector>

#include "gravphase/branch.hpp"
#include "gravphase/gravity_model.hpp"
#include "gravphase/statevector.hpp"

/// The linear-signature phase measurement: prepare a sign-partitioned
/// GHZ-like state entangled with an ancilla, let gravity dephase it, then
/// read the phase difference off the ancilla.
namespace gravphase::protocol {

/// Register sites (1-based) split by the sign of their dephasing angle.
/// Sites with theta == 0 go to the plus set.
struct SignPartition {
  std::vector<int> plus_sites;
  std::vector<int> minus_sites;
};

SignPartition partition_by_sign(const gravity::DephasingAngles &angles);

/// Gate list, in order:
///   H(ancilla); X on each minus site; S(ancilla);
///   ancilla-controlled X on every site (prepares |0>|-> + i|1>|+>);
///   DiagonalPhase(angles);
///   ancilla-controlled X on every site again (decode);
///   H(ancilla); then measure the ancilla.
///
/// The decode layer maps |1>|+> back to |1>|-> so the ancilla disentangles
/// from the register. Without it the two branches stay orthogonal and the
/// ancilla reads 1/2 regardless of the phase.
///
/// Throws std::invalid_argument if the partition does not cover exactly the
/// sites of `angles`.
sv::Circuit build_circuit(const SignPartition &partition,
                          const gravity::DephasingAngles &angles);

/// Sum over plus sites minus sum over minus sites, i.e. sum |theta_k|.
double expected_delta_phi(const gravity::DephasingAngles &angles);

enum class Backend { kStatevector, kBranch };

std::string_view to_string(Backend backend);
/// Accepts "statevector" or "branch"; throws std::invalid_argument otherwise.
Backend parse_backend(std::string_view name);

struct RunOptions {
  std::uint64_t shots = 1000;
  std::uint64_t seed = 0;
  Backend backend = Backend::kBranch;
  /// Worker threads for the shot loop. Results do not depend on it.
  unsigned threads = 1;
};

struct ProtocolOutcome {
  std::uint64_t shots = 0;
  std::uint64_t count_one = 0;
  double p_hat = 0.0;
  double delta_phi_hat = 0.0;
  double std_error = 0.0;
  Backend backend = Backend::kBranch;
  double analytic_delta_phi = 0.0;
  double analytic_p1 = 0.0;
  /// p_hat is 0 or 1; delta_phi_hat pinned to -pi/2 or +pi/2 and std_error
  /// is infinite.
  bool saturated = false;
  /// |analytic_delta_phi| > pi/2, outside the estimator's unwrapped range.
  bool out_of_range = false;
};

/// Exact ancilla probabilities from the chosen backend.
branch::ProbabilityPair ancilla_probabilities(
    const gravity::DephasingAngles &angles, Backend backend);

/// Ancilla outcome of each shot. Shot i draws one uniform u from
/// ShotStream(seed, i) and reads 1 iff u < P(1).
std::vector<std::uint8_t> shot_outcomes(const gravity::DephasingAngles &angles,
                                        const RunOptions &options);

/// p_hat = count_one / shots, delta_phi_hat = asin(2 p_hat - 1),
/// std_error = sqrt(p_hat (1 - p_hat) / shots) / |dP/dphi at delta_phi_hat|.
ProtocolOutcome estimate(std::uint64_t count_one, std::uint64_t shots);

/// Throws std::invalid_argument for shots == 0 and ResourceLimitError when
/// the statevector backend cannot hold the register.
ProtocolOutcome run_protocol(const gravity::DephasingAngles &angles,
                             const RunOptions &options);

ProtocolOutcome run_protocol(const gravity::GravScenario &scenario,
                             double time, const RunOptions &options);

/// Textbook phase-estimation readout without the S gate:
/// (1/2 + cos(dphi)/2, 1/2 - cos(dphi)/2).
branch::ProbabilityPair standard_pea_probabilities(double delta_phi);

struct CumulativePhase {
  double exact = 0.0;       // g t / c^2 * sum_k omega_k |x_k|
  double closed_form = 0.0; // g omega_bar l n^2 t / (4 c^2)
};

/// Phase difference of a line chip rotated from horizontal to vertical.
/// Throws std::domain_error unless the geometry is a line with an even
/// number of sites.
CumulativePhase cumulative_phase_1d(const gravity::ChipGeometry &geometry,
                                    double time,
                                    const PhysicalConstants &constants = {});

} // namespace gravphase::protocol
