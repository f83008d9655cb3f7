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

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "gravphase/constants.hpp"

/// Weak-field gravity: potentials, redshift factors, per-qubit frequency
/// shifts and the dephasing angles they induce on a qubit register.
namespace gravphase::gravity {

enum class Layout { kLine, kGrid };

std::string_view to_string(Layout layout);

struct QubitSite {
  int index = 1;            // 1-based register site
  double frequency = 0.0;   // angular frequency, rad/s
  std::array<double, 2> chip_position{}; // (along-axis, across-axis), m
};

/// Qubits on a uniformly spaced line or square grid, centered on the chip's
/// center of gravity.
///
/// Site k (1-based) of a line sits at along-axis coordinate
/// (n + 1 - 2k) * spacing / 2, so site 1 is the top when the chip is vertical.
/// A grid of n = m^2 sites is filled row-major; the along-axis coordinate is
/// set by the row, the across-axis coordinate by the column.
///
/// `orientation` is the tilt of the chip axis away from horizontal, in
/// radians. 0 is horizontal, pi/2 is vertical.
class ChipGeometry {
public:
  /// Uniform frequency for every site.
  static ChipGeometry line(std::size_t n, double spacing, double frequency,
                           double orientation = 0.0);
  static ChipGeometry grid(std::size_t n, double spacing, double frequency,
                           double orientation = 0.0);
  /// Per-site frequencies; `frequencies.size()` fixes n.
  static ChipGeometry line(std::span<const double> frequencies, double spacing,
                           double orientation = 0.0);
  static ChipGeometry grid(std::span<const double> frequencies, double spacing,
                           double orientation = 0.0);

  Layout layout() const { return layout_; }
  std::size_t qubit_count() const { return sites_.size(); }
  double spacing() const { return spacing_; }
  double orientation() const { return orientation_; }
  std::span<const QubitSite> sites() const { return sites_; }

  /// Sites per row: n for a line, sqrt(n) for a grid.
  std::size_t row_length() const;

  std::vector<double> frequencies() const;
  double mean_frequency() const;

  ChipGeometry with_orientation(double orientation) const;
  ChipGeometry with_spacing(double spacing) const;

private:
  ChipGeometry(Layout layout, std::span<const double> frequencies,
               double spacing, double orientation);

  Layout layout_;
  double spacing_;
  double orientation_;
  std::vector<QubitSite> sites_;
};

/// Chip tilted from its calibrated orientation by `angle` (rad) about the
/// center of gravity.
struct VerticalRotation {
  double angle = 0.0;
};

/// Local acceleration change g -> g + delta_g, Earth's radius unchanged.
struct UniformDeltaG {
  double delta_g = 0.0; // m/s^2
};

/// A point mass at distance `distance` from the (point-like) chip.
struct ProximalMass {
  double mass = 0.0;     // kg
  double distance = 0.0; // m
};

/// The whole chip moved vertically by `delta_x` (positive is up).
struct VerticalTranslation {
  double delta_x = 0.0; // m
};

/// Rotation by `angle` with every qubit spacing stretched by (1 + strain).
struct UniformStrain {
  double strain = 0.0;
  double angle = 0.0;
};

using Perturbation = std::variant<VerticalRotation, UniformDeltaG, ProximalMass,
                                  VerticalTranslation, UniformStrain>;

std::string_view perturbation_kind(const Perturbation &perturbation);

struct GravScenario {
  ChipGeometry geometry;
  Perturbation perturbation;
  PhysicalConstants constants{};

  /// Throws std::invalid_argument for d <= 0, |strain| >= 1, or invalid
  /// constants.
  void validate() const;
};

/// Per-qubit channel angles theta_k accumulated over `time` seconds.
struct DephasingAngles {
  std::vector<double> angles;
  double time = 0.0;

  std::size_t size() const { return angles.size(); }
  double operator[](std::size_t i) const { return angles[i]; }
};

/// -G * mass / distance. Throws std::domain_error for distance <= 0.
double newtonian_potential(double mass, double distance,
                           const PhysicalConstants &k = {});

/// First-order weak-field clock rate 1 + potential / c^2.
double redshift_factor(double potential, const PhysicalConstants &k = {});

/// delta_omega / omega = g * delta_x / c^2 for a vertical move.
double fractional_shift_vertical(double delta_x,
                                 const PhysicalConstants &k = {});

/// delta_omega / omega = -G M / (d c^2). Throws std::domain_error for d <= 0.
double fractional_shift_mass(double mass, double distance,
                             const PhysicalConstants &k = {});

/// Rate of the gravitational Aharonov-Bohm phase, g * omega * dx / c^2.
double phase_rate(double delta_x, double omega,
                  const PhysicalConstants &k = {});

/// N * g / c, the dephasing rate when the qubit separation is N c / omega.
double universal_rate(double engineering_factor = 1.0,
                      const PhysicalConstants &k = {});

/// Heights x_k of each site relative to the center of gravity at the
/// geometry's current orientation.
std::vector<double> vertical_displacements(const ChipGeometry &geometry);

/// Change of potential at each site since calibration.
std::vector<double> potential_changes(const GravScenario &scenario);

/// theta_k = -(t / c^2) * delta_Phi_k * omega_k. Throws std::domain_error for
/// t < 0.
DephasingAngles dephasing_angles(const GravScenario &scenario, double time);

} // namespace gravphase::gravity
