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

#include "scenario_document.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace gravphase::cli {

namespace {

using nlohmann::json;

// Reads typed fields from one JSON object and rejects any key it was not
// asked about.
class ObjectReader {
public:
  ObjectReader(const json &object, std::string path)
      : object_(object), path_(std::move(path)) {
    if (!object_.is_object()) {
      throw ValidationError(path_ + ": expected an object");
    }
  }

  std::string field_path(std::string_view key) const {
    return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
  }

  bool has(std::string_view key) const {
    return object_.contains(std::string(key));
  }

  const json &raw(std::string_view key) {
    seen_.insert(std::string(key));
    const auto it = object_.find(std::string(key));
    if (it == object_.end()) {
      throw ValidationError(field_path(key) + ": missing required field");
    }
    return *it;
  }

  double number(std::string_view key) {
    const json &v = raw(key);
    if (!v.is_number()) {
      throw ValidationError(field_path(key) + ": expected a number");
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
      throw ValidationError(field_path(key) + ": must be finite");
    }
    return d;
  }

  double number_or(std::string_view key, double fallback) {
    return has(key) ? number(key) : fallback;
  }

  double positive(std::string_view key) {
    const double d = number(key);
    if (d <= 0.0) {
      throw ValidationError(field_path(key) + ": must be > 0");
    }
    return d;
  }

  std::uint64_t count(std::string_view key) {
    const json &v = raw(key);
    if (v.is_number_unsigned()) {
      return v.get<std::uint64_t>();
    }
    if (v.is_number_float()) {
      const double d = v.get<double>();
      if (d >= 0.0 && d <= 9.0e15 && std::floor(d) == d) {
        return static_cast<std::uint64_t>(d);
      }
    }
    throw ValidationError(field_path(key) +
                          ": expected a non-negative integer");
  }

  std::string text(std::string_view key) {
    const json &v = raw(key);
    if (!v.is_string()) {
      throw ValidationError(field_path(key) + ": expected a string");
    }
    return v.get<std::string>();
  }

  ObjectReader object(std::string_view key) {
    return ObjectReader(raw(key), field_path(key));
  }

  /// Throws if the object holds keys nobody read.
  void finish() const {
    for (const auto &[key, value] : object_.items()) {
      if (!seen_.contains(key)) {
        throw ValidationError(field_path(key) + ": unknown field");
      }
    }
  }

private:
  const json &object_;
  std::string path_;
  std::set<std::string> seen_;
};

gravity::Perturbation parse_perturbation(ObjectReader &reader) {
  const std::string kind = reader.text("kind");
  ObjectReader params = reader.object("parameters");
  gravity::Perturbation out;
  if (kind == "rotation") {
    out = gravity::VerticalRotation{params.number("angle_rad")};
  } else if (kind == "delta_g") {
    out = gravity::UniformDeltaG{params.number("delta_g")};
  } else if (kind == "mass") {
    const double mass = params.number("mass_kg");
    out = gravity::ProximalMass{mass, params.positive("distance_m")};
  } else if (kind == "translation") {
    out = gravity::VerticalTranslation{params.number("delta_x_m")};
  } else if (kind == "strain") {
    const double strain = params.number("strain");
    if (!(std::abs(strain) < 1.0)) {
      throw ValidationError(params.field_path("strain") +
                            ": magnitude must be < 1");
    }
    out = gravity::UniformStrain{strain, params.number("angle_rad")};
  } else {
    throw ValidationError(reader.field_path("kind") + ": unknown kind '" +
                          kind +
                          "' (rotation, delta_g, mass, translation, strain)");
  }
  params.finish();
  return out;
}

json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
}

} // namespace

gravity::GravScenario ScenarioDocument::to_scenario() const {
  std::vector<double> omegas;
  if (frequency_ghz.size() == 1) {
    omegas.assign(geometry.n, angular_from_ghz(frequency_ghz.front()));
  } else {
    for (double f : frequency_ghz) {
      omegas.push_back(angular_from_ghz(f));
    }
  }
  const double orientation = geometry.orientation_deg * std::numbers::pi / 180;
  try {
    auto chip = geometry.layout == gravity::Layout::kLine
                    ? gravity::ChipGeometry::line(omegas, geometry.spacing_m,
                                                  orientation)
                    : gravity::ChipGeometry::grid(omegas, geometry.spacing_m,
                                                  orientation);
    gravity::GravScenario scenario{std::move(chip), perturbation, constants};
    scenario.validate();
    return scenario;
  } catch (const std::invalid_argument &e) {
    throw ValidationError(std::string("scenario: ") + e.what());
  }
}

PhysicalConstants parse_constants(const json &object, PhysicalConstants base,
                                  std::string_view path) {
  ObjectReader reader(object, std::string(path));
  base.c = reader.has("c") ? reader.positive("c") : base.c;
  base.G = reader.has("G") ? reader.positive("G") : base.G;
  base.g0 = reader.has("g0") ? reader.positive("g0") : base.g0;
  base.earth_mass =
      reader.has("earth_mass") ? reader.positive("earth_mass") : base.earth_mass;
  base.earth_radius = reader.has("earth_radius")
                          ? reader.positive("earth_radius")
                          : base.earth_radius;
  reader.finish();
  return base;
}

ScenarioDocument parse_scenario(std::string_view text) {
  const json root = parse_json(text, "scenario");
  ObjectReader top(root, "");
  ScenarioDocument doc;

  const std::uint64_t version = top.count("version");
  if (version != 1) {
    throw ValidationError("version: unsupported version " +
                          std::to_string(version) + " (expected 1)");
  }
  doc.version = 1;

  {
    ObjectReader geo = top.object("geometry");
    const std::string layout = geo.text("layout");
    if (layout == "line") {
      doc.geometry.layout = gravity::Layout::kLine;
    } else if (layout == "grid") {
      doc.geometry.layout = gravity::Layout::kGrid;
    } else {
      throw ValidationError("geometry.layout: expected \"line\" or \"grid\"");
    }
    doc.geometry.n = geo.count("n");
    if (doc.geometry.n == 0) {
      throw ValidationError("geometry.n: must be >= 1");
    }
    doc.geometry.spacing_m = geo.positive("spacing_m");
    doc.geometry.orientation_deg = geo.number_or("orientation_deg", 0.0);
    geo.finish();
  }

  {
    ObjectReader qubits = top.object("qubits");
    const json &f = qubits.raw("frequency_ghz");
    if (f.is_number()) {
      doc.frequency_ghz = {qubits.positive("frequency_ghz")};
    } else if (f.is_array()) {
      if (f.size() != doc.geometry.n) {
        throw ValidationError("qubits.frequency_ghz: list has " +
                              std::to_string(f.size()) + " entries for n = " +
                              std::to_string(doc.geometry.n));
      }
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (!f[i].is_number() || !(f[i].get<double>() > 0.0) ||
            !std::isfinite(f[i].get<double>())) {
          throw ValidationError("qubits.frequency_ghz[" + std::to_string(i) +
                                "]: expected a positive number");
        }
        doc.frequency_ghz.push_back(f[i].get<double>());
      }
    } else {
      throw ValidationError(
          "qubits.frequency_ghz: expected a number or a list of numbers");
    }
    qubits.finish();
  }

  {
    ObjectReader pert = top.object("perturbation");
    doc.perturbation = parse_perturbation(pert);
    pert.finish();
  }

  if (top.has("constants")) {
    doc.constants = parse_constants(top.raw("constants"), {}, "constants");
  }

  {
    ObjectReader run = top.object("run");
    doc.run.time_s = run.number("time_s");
    if (doc.run.time_s < 0.0) {
      throw ValidationError("run.time_s: must be >= 0");
    }
    doc.run.shots = run.count("shots");
    if (doc.run.shots == 0) {
      throw ValidationError("run.shots: must be >= 1");
    }
    if (run.has("seed")) {
      doc.run.seed = run.count("seed");
    }
    if (run.has("backend")) {
      try {
        doc.run.backend = protocol::parse_backend(run.text("backend"));
      } catch (const ValidationError &) {
        throw;
      } catch (const std::invalid_argument &e) {
        throw ValidationError(std::string("run.backend: ") + e.what());
      }
    }
    run.finish();
  }

  top.finish();
  return doc;
}

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "' for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ScenarioDocument load_scenario(const std::filesystem::path &path) {
  return parse_scenario(read_file(path));
}

PhysicalConstants load_constants(const std::filesystem::path &path,
                                 PhysicalConstants base) {
  const json root = parse_json(read_file(path), "constants file");
  return parse_constants(root, base, "constants");
}

} // namespace gravphase::cli
