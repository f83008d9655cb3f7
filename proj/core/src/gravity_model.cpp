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

#include "gravphase/gravity_model.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gravphase/compensated_sum.hpp"

namespace gravphase::gravity {

namespace {

std::size_t exact_sqrt(std::size_t n) {
  auto root = static_cast<std::size_t>(std::llround(std::sqrt(double(n))));
  while (root * root > n) {
    --root;
  }
  while ((root + 1) * (root + 1) <= n) {
    ++root;
  }
  return root;
}

// Along-axis coordinate of a 1-based position in a row of `length` sites.
double axis_coordinate(std::size_t position, std::size_t length,
                       double spacing) {
  return (double(length) + 1.0 - 2.0 * double(position)) * spacing / 2.0;
}

// Vertical height of each site for a chip tilted by `orientation` and with the
// given spacing; shared by rotation and strain so both use the same lattice.
std::vector<double> heights(const ChipGeometry &geometry, double orientation,
                            double spacing) {
  const double s = std::sin(orientation);
  const double scale = spacing / geometry.spacing();
  std::vector<double> out;
  out.reserve(geometry.qubit_count());
  for (const QubitSite &site : geometry.sites()) {
    out.push_back(s * site.chip_position[0] * scale);
  }
  return out;
}

} // namespace

std::string_view to_string(Layout layout) {
  return layout == Layout::kLine ? "line" : "grid";
}

ChipGeometry::ChipGeometry(Layout layout, std::span<const double> frequencies,
                           double spacing, double orientation)
    : layout_(layout), spacing_(spacing), orientation_(orientation) {
  const std::size_t n = frequencies.size();
  if (n == 0) {
    throw std::invalid_argument("chip geometry needs at least one qubit");
  }
  if (!std::isfinite(spacing) || spacing <= 0.0) {
    throw std::invalid_argument("qubit spacing must be finite and > 0");
  }
  if (!std::isfinite(orientation)) {
    throw std::invalid_argument("orientation must be finite");
  }
  std::size_t row = n;
  if (layout == Layout::kGrid) {
    row = exact_sqrt(n);
    if (row * row != n) {
      throw std::invalid_argument("grid layout needs a perfect-square qubit "
                                  "count, got " + std::to_string(n));
    }
  }
  sites_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double f = frequencies[i];
    if (!std::isfinite(f) || f <= 0.0) {
      throw std::invalid_argument("qubit " + std::to_string(i + 1) +
                                  " frequency must be finite and > 0");
    }
    QubitSite site;
    site.index = static_cast<int>(i + 1);
    site.frequency = f;
    if (layout == Layout::kLine) {
      site.chip_position = {axis_coordinate(i + 1, n, spacing), 0.0};
    } else {
      const std::size_t r = i / row;
      const std::size_t c = i % row;
      site.chip_position = {axis_coordinate(r + 1, row, spacing),
                            -axis_coordinate(c + 1, row, spacing)};
    }
    sites_.push_back(site);
  }
}

ChipGeometry ChipGeometry::line(std::size_t n, double spacing,
                                double frequency, double orientation) {
  const std::vector<double> f(n, frequency);
  return ChipGeometry(Layout::kLine, f, spacing, orientation);
}

ChipGeometry ChipGeometry::grid(std::size_t n, double spacing,
                                double frequency, double orientation) {
  const std::vector<double> f(n, frequency);
  return ChipGeometry(Layout::kGrid, f, spacing, orientation);
}

ChipGeometry ChipGeometry::line(std::span<const double> frequencies,
                                double spacing, double orientation) {
  return ChipGeometry(Layout::kLine, frequencies, spacing, orientation);
}

ChipGeometry ChipGeometry::grid(std::span<const double> frequencies,
                                double spacing, double orientation) {
  return ChipGeometry(Layout::kGrid, frequencies, spacing, orientation);
}

std::size_t ChipGeometry::row_length() const {
  return layout_ == Layout::kLine ? sites_.size() : exact_sqrt(sites_.size());
}

std::vector<double> ChipGeometry::frequencies() const {
  std::vector<double> out;
  out.reserve(sites_.size());
  for (const QubitSite &s : sites_) {
    out.push_back(s.frequency);
  }
  return out;
}

double ChipGeometry::mean_frequency() const {
  return compensated_sum(frequencies()) / double(sites_.size());
}

ChipGeometry ChipGeometry::with_orientation(double orientation) const {
  const auto f = frequencies();
  return ChipGeometry(layout_, f, spacing_, orientation);
}

ChipGeometry ChipGeometry::with_spacing(double spacing) const {
  const auto f = frequencies();
  return ChipGeometry(layout_, f, spacing, orientation_);
}

std::string_view perturbation_kind(const Perturbation &perturbation) {
  struct Visitor {
    std::string_view operator()(const VerticalRotation &) { return "rotation"; }
    std::string_view operator()(const UniformDeltaG &) { return "delta_g"; }
    std::string_view operator()(const ProximalMass &) { return "mass"; }
    std::string_view operator()(const VerticalTranslation &) {
      return "translation";
    }
    std::string_view operator()(const UniformStrain &) { return "strain"; }
  };
  return std::visit(Visitor{}, perturbation);
}

void GravScenario::validate() const {
  constants.validate();
  if (const auto *m = std::get_if<ProximalMass>(&perturbation)) {
    if (!(m->distance > 0.0) || !std::isfinite(m->distance)) {
      throw std::invalid_argument("proximal mass distance must be > 0");
    }
    if (!std::isfinite(m->mass)) {
      throw std::invalid_argument("proximal mass must be finite");
    }
  } else if (const auto *s = std::get_if<UniformStrain>(&perturbation)) {
    if (!(std::abs(s->strain) < 1.0)) {
      throw std::invalid_argument("strain magnitude must be < 1");
    }
    if (!std::isfinite(s->angle)) {
      throw std::invalid_argument("strain rotation angle must be finite");
    }
  } else if (const auto *r = std::get_if<VerticalRotation>(&perturbation)) {
    if (!std::isfinite(r->angle)) {
      throw std::invalid_argument("rotation angle must be finite");
    }
  } else if (const auto *d = std::get_if<UniformDeltaG>(&perturbation)) {
    if (!std::isfinite(d->delta_g)) {
      throw std::invalid_argument("delta_g must be finite");
    }
  } else if (const auto *t = std::get_if<VerticalTranslation>(&perturbation)) {
    if (!std::isfinite(t->delta_x)) {
      throw std::invalid_argument("delta_x must be finite");
    }
  }
}

double newtonian_potential(double mass, double distance,
                           const PhysicalConstants &k) {
  if (!(distance > 0.0)) {
    throw std::domain_error("newtonian_potential: distance must be > 0");
  }
  return -k.G * mass / distance;
}

double redshift_factor(double potential, const PhysicalConstants &k) {
  return 1.0 + potential / k.c_squared();
}

double fractional_shift_vertical(double delta_x, const PhysicalConstants &k) {
  return k.g0 * delta_x / k.c_squared();
}

double fractional_shift_mass(double mass, double distance,
                             const PhysicalConstants &k) {
  if (!(distance > 0.0)) {
    throw std::domain_error("fractional_shift_mass: distance must be > 0");
  }
  return -k.G * mass / (distance * k.c_squared());
}

double phase_rate(double delta_x, double omega, const PhysicalConstants &k) {
  return k.g0 * omega * delta_x / k.c_squared();
}

double universal_rate(double engineering_factor, const PhysicalConstants &k) {
  return engineering_factor * k.g0 / k.c;
}

std::vector<double> vertical_displacements(const ChipGeometry &geometry) {
  return heights(geometry, geometry.orientation(), geometry.spacing());
}

std::vector<double> potential_changes(const GravScenario &scenario) {
  scenario.validate();
  const ChipGeometry &geo = scenario.geometry;
  const PhysicalConstants &k = scenario.constants;
  const std::size_t n = geo.qubit_count();

  struct Visitor {
    const ChipGeometry &geo;
    const PhysicalConstants &k;
    std::size_t n;

    std::vector<double> relative_heights(double angle, double stretch) const {
      const auto before = vertical_displacements(geo);
      const auto after =
          heights(geo, geo.orientation() + angle, geo.spacing() * stretch);
      std::vector<double> out(n);
      for (std::size_t i = 0; i < n; ++i) {
        out[i] = k.g0 * (after[i] - before[i]);
      }
      return out;
    }

    std::vector<double> operator()(const VerticalRotation &r) const {
      return relative_heights(r.angle, 1.0);
    }
    std::vector<double> operator()(const UniformStrain &s) const {
      return relative_heights(s.angle, 1.0 + s.strain);
    }
    std::vector<double> operator()(const VerticalTranslation &t) const {
      return std::vector<double>(n, k.g0 * t.delta_x);
    }
    std::vector<double> operator()(const UniformDeltaG &d) const {
      return std::vector<double>(n, -k.earth_radius * d.delta_g);
    }
    std::vector<double> operator()(const ProximalMass &m) const {
      return std::vector<double>(n, newtonian_potential(m.mass, m.distance, k));
    }
  };
  return std::visit(Visitor{geo, k, n}, scenario.perturbation);
}

DephasingAngles dephasing_angles(const GravScenario &scenario, double time) {
  if (!(time >= 0.0) || !std::isfinite(time)) {
    throw std::domain_error("dephasing_angles: time must be finite and >= 0");
  }
  const auto dphi = potential_changes(scenario);
  const double c2 = scenario.constants.c_squared();
  DephasingAngles out;
  out.time = time;
  out.angles.resize(dphi.size());
  const auto sites = scenario.geometry.sites();
  for (std::size_t i = 0; i < dphi.size(); ++i) {
    out.angles[i] = -(time / c2) * dphi[i] * sites[i].frequency;
  }
  return out;
}

} // namespace gravphase::gravity
