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
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gravphase/constants.hpp"
#include "gravphase/gravity_model.hpp"
#include "gravphase/protocol.hpp"
#include "json.hpp"

namespace gravphase::cli {

/// Bad user input: malformed files, unknown keys, out-of-range values.
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Unreadable or unwritable files.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Version 1 scenario file.
///
///   {
///     "version": 1,
///     "geometry": {"layout": "line", "n": 8, "spacing_m": 1e-3,
///                  "orientation_deg": 0},
///     "qubits": {"frequency_ghz": 10},
///     "perturbation": {"kind": "rotation",
///                      "parameters": {"angle_rad": 1.5707963267948966}},
///     "constants": {"g0": 9.8},
///     "run": {"time_s": 1e-3, "shots": 100000, "seed": 42,
///             "backend": "branch"}
///   }
///
/// `frequency_ghz` is a number or a per-site list. Perturbation parameters:
/// rotation {angle_rad}, delta_g {delta_g}, mass {mass_kg, distance_m},
/// translation {delta_x_m}, strain {strain, angle_rad}. `constants` and
/// `orientation_deg`, `seed`, `backend` are optional.
struct ScenarioDocument {
  struct Geometry {
    gravity::Layout layout = gravity::Layout::kLine;
    std::uint64_t n = 0;
    double spacing_m = 0.0;
    double orientation_deg = 0.0;
  };
  struct Run {
    double time_s = 0.0;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    protocol::Backend backend = protocol::Backend::kBranch;
  };

  int version = 1;
  Geometry geometry;
  std::vector<double> frequency_ghz;
  gravity::Perturbation perturbation;
  PhysicalConstants constants;
  Run run;

  /// Builds and validates the gravity-model scenario.
  gravity::GravScenario to_scenario() const;
};

/// Throws ValidationError naming the offending field (dotted path).
ScenarioDocument parse_scenario(std::string_view text);
ScenarioDocument load_scenario(const std::filesystem::path &path);

/// Applies the keys of a constants object (c, G, g0, earth_mass,
/// earth_radius) over `base`. Unknown keys are rejected.
PhysicalConstants parse_constants(const nlohmann::json &object,
                                  PhysicalConstants base,
                                  std::string_view path = "constants");
PhysicalConstants load_constants(const std::filesystem::path &path,
                                 PhysicalConstants base = {});

std::string read_file(const std::filesystem::path &path);

} // namespace gravphase::cli
