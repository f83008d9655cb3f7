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

#include <numbers>

namespace gravphase {

/// Physical constants used throughout the model. All values are SI.
///
/// Defaults are CODATA/IAU-style values; every field may be overridden per
/// run so that round-number estimates (g = 9.8, g = 10) can be reproduced.
struct PhysicalConstants {
  double c = 299792458.0;        // m/s
  double G = 6.6743e-11;         // m^3 / (kg s^2)
  double g0 = 9.80665;           // m/s^2, local surface acceleration
  double earth_mass = 5.972e24;  // kg
  double earth_radius = 6.371e6; // m

  double c_squared() const { return c * c; }

  /// Throws std::invalid_argument naming the first non-positive or
  /// non-finite field.
  void validate() const;

  friend bool operator==(const PhysicalConstants &,
                         const PhysicalConstants &) = default;
};

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Converts an ordinary frequency in GHz to angular frequency in rad/s.
constexpr double angular_from_ghz(double ghz) { return kTwoPi * ghz * 1e9; }

/// Converts an ordinary frequency in Hz to angular frequency in rad/s.
constexpr double angular_from_hz(double hz) { return kTwoPi * hz; }

constexpr double ghz_from_angular(double omega) {
  return omega / (kTwoPi * 1e9);
}

} // namespace gravphase
