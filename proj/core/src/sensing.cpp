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

#include "gravphase/sensing.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gravphase::sensing {

namespace {

void require_positive(double value, const char *name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw std::invalid_argument(std::string(name) + " must be finite and > 0");
  }
}

// 4 phi_res c^2 / (g omega_bar l T_c): the n-power a rotated chip must reach.
double rotation_target(const SensingConfig &c) {
  const auto &k = c.constants;
  return 4.0 * c.phase_resolution * k.c_squared() /
         (k.g0 * c.mean_frequency * c.spacing * c.coherence_time);
}

} // namespace

void SensingConfig::validate() const {
  require_positive(n, "n");
  require_positive(mean_frequency, "mean_frequency");
  require_positive(coherence_time, "coherence_time");
  require_positive(spacing, "spacing");
  require_positive(phase_resolution, "phase_resolution");
  constants.validate();
}

std::string_view to_string(ChipDimension dim) {
  return dim == ChipDimension::k1D ? "1d" : "2d";
}

ChipDimension parse_dimension(std::string_view text) {
  if (text == "1d" || text == "1D") {
    return ChipDimension::k1D;
  }
  if (text == "2d" || text == "2D") {
    return ChipDimension::k2D;
  }
  throw std::invalid_argument("geometry must be 1d or 2d, got '" +
                              std::string(text) + "'");
}

double gravimeter_phase(const SensingConfig &config, double delta_g,
                        double time) {
  const auto &k = config.constants;
  return k.earth_radius * delta_g * time * config.mean_frequency * config.n /
         k.c_squared();
}

GravimeterSensitivity gravimeter_sensitivity(const SensingConfig &config) {
  config.validate();
  const auto &k = config.constants;
  GravimeterSensitivity out;
  out.delta_g = config.phase_resolution * k.c_squared() /
                (k.earth_radius * config.coherence_time *
                 config.mean_frequency * config.n);
  out.relative = out.delta_g / k.g0;
  return out;
}

QubitRequirement required_qubits(const SensingConfig &config,
                                 ChipDimension dim) {
  config.validate();
  const double target = rotation_target(config);
  QubitRequirement out;
  if (dim == ChipDimension::k1D) {
    out.exact = std::sqrt(target);
    out.n = static_cast<std::uint64_t>(std::ceil(out.exact));
    out.linear_dimension = double(out.n) * config.spacing;
  } else {
    out.exact = std::pow(target, 2.0 / 3.0);
    out.n = static_cast<std::uint64_t>(std::ceil(out.exact));
    out.linear_dimension = std::sqrt(double(out.n)) * config.spacing;
  }
  return out;
}

double line_rotation_phase(const SensingConfig &config, double time) {
  const auto &k = config.constants;
  return k.g0 * config.mean_frequency * config.spacing * config.n * config.n *
         time / (4.0 * k.c_squared());
}

double grid_rotation_phase(const SensingConfig &config, double time) {
  const auto &k = config.constants;
  return k.g0 * config.mean_frequency * config.spacing *
         std::pow(config.n, 1.5) * time / (4.0 * k.c_squared());
}

double strain_phase(const SensingConfig &config, double time, double strain) {
  if (!(std::abs(strain) < 1.0)) {
    throw std::domain_error("strain magnitude must be < 1");
  }
  const auto &k = config.constants;
  return k.g0 * config.spacing * config.mean_frequency * config.n * time /
         k.c_squared() * (1.0 + strain);
}

double min_detectable_strain(const SensingConfig &config) {
  config.validate();
  return config.phase_resolution /
         strain_phase(config, config.coherence_time, 0.0);
}

} // namespace gravphase::sensing
