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

#include "gravphase/constants.hpp"

/// Figures of merit for gravimetry and strain sensing with the phase
/// measurement protocol.
namespace gravphase::sensing {

struct SensingConfig {
  double n = 1000.0;                // qubit count
  double mean_frequency = angular_from_ghz(10.0); // rad/s
  double coherence_time = 1e-3;     // s
  double spacing = 1e-3;            // m
  double phase_resolution = 0.1;    // rad
  PhysicalConstants constants{};

  /// Throws std::invalid_argument naming the first non-positive field.
  void validate() const;
};

enum class ChipDimension { k1D, k2D };

std::string_view to_string(ChipDimension dim);
/// Accepts "1d" or "2d".
ChipDimension parse_dimension(std::string_view text);

/// x_earth * delta_g * t * omega_bar * n / c^2.
double gravimeter_phase(const SensingConfig &config, double delta_g,
                        double time);

struct GravimeterSensitivity {
  double delta_g = 0.0;          // m/s^2
  double relative = 0.0;         // delta_g / g
};

/// Smallest delta_g that accumulates phase_resolution within the
/// coherence time.
GravimeterSensitivity gravimeter_sensitivity(const SensingConfig &config);

struct QubitRequirement {
  double exact = 0.0;            // real-valued solution of phase(n) = phi_res
  std::uint64_t n = 0;           // ceil(exact)
  double linear_dimension = 0.0; // n l (1D) or sqrt(n) l (2D), m
};

/// Qubits needed for a rotated chip to reach phase_resolution within the
/// coherence time. `config.n` is ignored.
QubitRequirement required_qubits(const SensingConfig &config,
                                 ChipDimension dim);

/// g omega_bar l n^2 t / (4 c^2): horizontal-to-vertical rotation of a line.
double line_rotation_phase(const SensingConfig &config, double time);

/// g omega_bar l n^{3/2} t / (4 c^2): sqrt(n) columns of sqrt(n) sites, each
/// rotated like a line.
double grid_rotation_phase(const SensingConfig &config, double time);

/// (g l omega_bar n t / c^2) (1 + strain). Throws std::domain_error for
/// |strain| >= 1.
double strain_phase(const SensingConfig &config, double time, double strain);

/// phase_resolution / strain_phase(config, T_c, 0).
double min_detectable_strain(const SensingConfig &config);

} // namespace gravphase::sensing
