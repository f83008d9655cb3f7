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

#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <thread>
#include <unistd.h>

#include "CLI11.hpp"
#include "gravphase/errors.hpp"
#include "gravphase/gravity_model.hpp"
#include "scenario_document.hpp"

#ifndef GRAVPHASE_VERSION
#define GRAVPHASE_VERSION "0.0.0"
#endif

namespace gravphase::cli {

namespace {

using nlohmann::ordered_json;

PhysicalConstants resolve_constants(const GlobalOptions &g,
                                    PhysicalConstants base = {}) {
  if (g.constants_file) {
    return load_constants(*g.constants_file, base);
  }
  return base;
}

std::string describe_constants(const PhysicalConstants &k) {
  return "c:" + format_double(k.c) + ";G:" + format_double(k.G) +
         ";g0:" + format_double(k.g0) +
         ";earth_mass:" + format_double(k.earth_mass) +
         ";earth_radius:" + format_double(k.earth_radius);
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void stamp(ResultTable &table, const GlobalOptions &g, std::string_view command,
           const PhysicalConstants &k, std::optional<std::uint64_t> seed) {
  table.add_provenance("tool", "gravphase");
  table.add_provenance("version", GRAVPHASE_VERSION);
  table.add_provenance("command", std::string(command));
  if (seed) {
    table.add_provenance("seed", std::to_string(*seed));
  }
  table.add_provenance("constants", describe_constants(k));
  if (!g.reproducible) {
    table.add_provenance("timestamp", utc_timestamp());
  }
}

void require_positive(double value, const char *flag) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw ValidationError(std::string(flag) + " must be finite and > 0");
  }
}

std::uint64_t require_count(double value, const char *flag) {
  if (!std::isfinite(value) || value < 1.0 || std::floor(value) != value ||
      value > 9.0e15) {
    throw ValidationError(std::string(flag) + " must be a positive integer");
  }
  return static_cast<std::uint64_t>(value);
}

ordered_json sensing_inputs(const SensingArgs &a) {
  ordered_json in = ordered_json::object();
  in["n"] = a.n;
  in["tc_s"] = a.tc;
  in["freq_ghz"] = a.freq_ghz;
  in["ell_m"] = a.ell;
  in["phase_res_rad"] = a.phase_res;
  return in;
}

// Evaluated outputs of one sensing-style calculation.
struct Outputs {
  std::vector<std::string> columns;
  std::vector<Cell> values;
};

Outputs gravimeter_outputs(const SensingArgs &a, const PhysicalConstants &k) {
  const auto config = a.config(k);
  const auto sens = sensing::gravimeter_sensitivity(config);
  const double t = a.time.value_or(a.tc);
  return {{"delta_g_m_s2", "delta_g_over_g", "phase_rad"},
          {sens.delta_g, sens.relative,
           sensing::gravimeter_phase(config, a.delta_g, t)}};
}

Outputs strain_outputs(const SensingArgs &a, const PhysicalConstants &k) {
  const auto config = a.config(k);
  if (!(std::abs(a.strain) < 1.0)) {
    throw ValidationError("--strain magnitude must be < 1");
  }
  const double t = a.time.value_or(a.tc);
  return {{"baseline_phase_rad", "strained_phase_rad",
           "min_detectable_strain"},
          {sensing::strain_phase(config, t, 0.0),
           sensing::strain_phase(config, t, a.strain),
           sensing::min_detectable_strain(config)}};
}

Outputs required_outputs(const SensingArgs &a, const PhysicalConstants &k) {
  const auto config = a.config(k);
  const auto req = sensing::required_qubits(config, a.geometry);
  sensing::SensingConfig at_n = config;
  at_n.n = double(req.n);
  const double phase = a.geometry == sensing::ChipDimension::k1D
                           ? sensing::line_rotation_phase(at_n, a.tc)
                           : sensing::grid_rotation_phase(at_n, a.tc);
  return {{"geometry", "n_exact", "n_required", "linear_dimension_m",
           "phase_at_n_rad"},
          {std::string(sensing::to_string(a.geometry)), req.exact,
           static_cast<std::int64_t>(req.n), req.linear_dimension, phase}};
}

Outputs line_phase_outputs(const SensingArgs &a, const PhysicalConstants &k) {
  require_positive(a.n, "--n");
  require_positive(a.freq_ghz, "--freq-ghz");
  require_positive(a.ell, "--ell");
  // Nearest even count, at least 2.
  const auto even = std::max<std::uint64_t>(
      2, 2 * static_cast<std::uint64_t>(std::llround(a.n / 2.0)));
  const auto chip = gravity::ChipGeometry::line(
      even, a.ell, angular_from_ghz(a.freq_ghz));
  const double t = a.time.value_or(a.tc);
  const auto phase = protocol::cumulative_phase_1d(chip, t, k);
  return {{"n_used", "phase_exact_rad", "phase_closed_form_rad"},
          {static_cast<std::int64_t>(even), phase.exact, phase.closed_form}};
}

Outputs grid_phase_outputs(const SensingArgs &a, const PhysicalConstants &k) {
  const auto config = a.config(k);
  return {{"phase_rad"},
          {sensing::grid_rotation_phase(config, a.time.value_or(a.tc))}};
}

struct ProtocolRun {
  ScenarioDocument doc;
  protocol::ProtocolOutcome outcome;
  std::uint64_t seed = 0;
};

ProtocolRun run_scenario(ScenarioDocument doc, const ProtocolArgs &args,
                         const GlobalOptions &g, unsigned threads) {
  if (args.shots) {
    if (*args.shots == 0) {
      throw ValidationError("--shots must be >= 1");
    }
    doc.run.shots = *args.shots;
  }
  if (args.time) {
    if (!(*args.time >= 0.0)) {
      throw ValidationError("--time must be >= 0");
    }
    doc.run.time_s = *args.time;
  }
  if (args.backend) {
    doc.run.backend = *args.backend;
  }
  if (g.seed) {
    doc.run.seed = *g.seed;
  }
  doc.constants = resolve_constants(g, doc.constants);
  const auto scenario = doc.to_scenario();
  protocol::RunOptions opts;
  opts.shots = doc.run.shots;
  opts.seed = doc.run.seed;
  opts.backend = doc.run.backend;
  opts.threads = threads;
  ProtocolRun run{doc, {}, doc.run.seed};
  run.outcome = protocol::run_protocol(scenario, doc.run.time_s, opts);
  return run;
}

std::vector<std::string> protocol_warnings(const protocol::ProtocolOutcome &o) {
  std::vector<std::string> w;
  if (o.saturated) {
    w.push_back("estimate saturated: every shot gave the same outcome, "
                "delta_phi_hat pinned to +-pi/2");
  }
  if (o.out_of_range) {
    w.push_back("analytic delta_phi exceeds pi/2; the arcsin estimate is "
                "not unwrapped");
  }
  return w;
}

} // namespace

sensing::SensingConfig SensingArgs::config(const PhysicalConstants &k) const {
  require_positive(n, "--n");
  require_positive(tc, "--tc");
  require_positive(freq_ghz, "--freq-ghz");
  require_positive(ell, "--ell");
  require_positive(phase_res, "--phase-res");
  if (time) {
    require_positive(*time, "--time");
  }
  sensing::SensingConfig c;
  c.n = n;
  c.coherence_time = tc;
  c.mean_frequency = angular_from_ghz(freq_ghz);
  c.spacing = ell;
  c.phase_resolution = phase_res;
  c.constants = k;
  return c;
}

CommandResult cmd_redshift(const RedshiftArgs &args, const GlobalOptions &g) {
  const PhysicalConstants k = resolve_constants(g);
  require_positive(args.freq_ghz, "--freq-ghz");
  const double omega = angular_from_ghz(args.freq_ghz);

  const bool vertical = args.delta_x.has_value();
  const bool massive = args.mass.has_value() || args.distance.has_value();
  if (vertical == massive) {
    throw ValidationError(
        "give exactly one of --delta-x or --mass with --distance");
  }
  if (massive && !(args.mass && args.distance)) {
    throw ValidationError("--mass and --distance must be given together");
  }

  CommandResult r;
  r.inputs["freq_ghz"] = args.freq_ghz;
  double dphi = 0.0;
  double fractional = 0.0;
  double rate = 0.0;
  std::string scenario;
  if (vertical) {
    scenario = "vertical";
    r.inputs["delta_x_m"] = *args.delta_x;
    dphi = k.g0 * *args.delta_x;
    fractional = gravity::fractional_shift_vertical(*args.delta_x, k);
    rate = gravity::phase_rate(*args.delta_x, omega, k);
  } else {
    scenario = "mass";
    r.inputs["mass_kg"] = *args.mass;
    r.inputs["distance_m"] = *args.distance;
    if (!(*args.distance > 0.0)) {
      throw ValidationError("--distance must be > 0");
    }
    dphi = gravity::newtonian_potential(*args.mass, *args.distance, k);
    fractional = gravity::fractional_shift_mass(*args.mass, *args.distance, k);
    rate = fractional * omega;
  }

  r.table = ResultTable({"scenario", "delta_potential_m2_s2", "redshift_factor",
                         "fractional_shift", "delta_omega_rad_s",
                         "phase_rate_rad_s"});
  r.table.add_row({scenario, dphi, gravity::redshift_factor(dphi, k),
                   fractional, fractional * omega, rate});
  stamp(r.table, g, "redshift", k, std::nullopt);
  return r;
}

CommandResult cmd_protocol(const ProtocolArgs &args, const GlobalOptions &g) {
  const auto run =
      run_scenario(load_scenario(args.scenario), args, g, g.threads);
  const auto &o = run.outcome;
  const auto &doc = run.doc;

  CommandResult r;
  r.inputs["scenario"] = args.scenario.filename().string();
  r.inputs["layout"] = std::string(gravity::to_string(doc.geometry.layout));
  r.inputs["n"] = doc.geometry.n;
  r.inputs["perturbation"] =
      std::string(gravity::perturbation_kind(doc.perturbation));
  r.inputs["time_s"] = doc.run.time_s;
  r.inputs["shots"] = doc.run.shots;
  r.inputs["seed"] = doc.run.seed;
  r.inputs["backend"] = std::string(protocol::to_string(doc.run.backend));

  r.table = ResultTable({"n", "time_s", "backend", "analytic_delta_phi",
                         "analytic_p1", "shots", "count_one", "p_hat",
                         "delta_phi_hat", "std_error", "saturated",
                         "out_of_range"});
  r.table.add_row({static_cast<std::int64_t>(doc.geometry.n), doc.run.time_s,
                   std::string(protocol::to_string(o.backend)),
                   o.analytic_delta_phi, o.analytic_p1,
                   static_cast<std::int64_t>(o.shots),
                   static_cast<std::int64_t>(o.count_one), o.p_hat,
                   o.delta_phi_hat, o.std_error,
                   static_cast<std::int64_t>(o.saturated),
                   static_cast<std::int64_t>(o.out_of_range)});
  r.warnings = protocol_warnings(o);
  stamp(r.table, g, "protocol", doc.constants, run.seed);
  return r;
}

CommandResult cmd_gravimeter(const SensingArgs &args, const GlobalOptions &g) {
  const PhysicalConstants k = resolve_constants(g);
  CommandResult r;
  r.inputs = sensing_inputs(args);
  r.inputs["delta_g_m_s2"] = args.delta_g;
  r.inputs["time_s"] = args.time.value_or(args.tc);
  auto out = gravimeter_outputs(args, k);
  r.table = ResultTable(out.columns);
  r.table.add_row(out.values);
  if (args.time && *args.time > args.tc) {
    r.warnings.push_back("accumulation time exceeds the coherence time");
  }
  stamp(r.table, g, "gravimeter", k, std::nullopt);
  return r;
}

CommandResult cmd_strain(const SensingArgs &args, const GlobalOptions &g) {
  const PhysicalConstants k = resolve_constants(g);
  CommandResult r;
  r.inputs = sensing_inputs(args);
  r.inputs["strain"] = args.strain;
  r.inputs["time_s"] = args.time.value_or(args.tc);
  auto out = strain_outputs(args, k);
  r.table = ResultTable(out.columns);
  r.table.add_row(out.values);
  stamp(r.table, g, "strain", k, std::nullopt);
  return r;
}

CommandResult cmd_required_qubits(const SensingArgs &args,
                                  const GlobalOptions &g) {
  const PhysicalConstants k = resolve_constants(g);
  CommandResult r;
  r.inputs = sensing_inputs(args);
  r.inputs.erase("n");
  r.inputs["geometry"] = std::string(sensing::to_string(args.geometry));
  auto out = required_outputs(args, k);
  r.table = ResultTable(out.columns);
  r.table.add_row(out.values);
  stamp(r.table, g, "required-qubits", k, std::nullopt);
  return r;
}

std::vector<double> sweep_values(double from, double to, std::uint64_t steps,
                                 bool log) {
  if (steps < 2) {
    throw ValidationError("--steps must be >= 2");
  }
  if (!std::isfinite(from) || !std::isfinite(to)) {
    throw ValidationError("--from and --to must be finite");
  }
  if (log && (from <= 0.0 || to <= 0.0)) {
    throw ValidationError("--log needs positive --from and --to");
  }
  std::vector<double> out(steps);
  const double span = double(steps - 1);
  for (std::uint64_t i = 0; i < steps; ++i) {
    const double f = double(i) / span;
    out[i] = log ? std::exp(std::log(from) + f * (std::log(to) - std::log(from)))
                 : from + f * (to - from);
  }
  out.front() = from;
  out.back() = to;
  return out;
}

void write_atomically(const std::filesystem::path &path,
                      const std::string &contents) {
  namespace fs = std::filesystem;
  const fs::path tmp =
      path.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) {
      throw IoError("cannot open '" + tmp.string() + "' for writing");
    }
    f << contents;
    f.flush();
    if (!f) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw IoError("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at '" + path.string() + "'");
  }
}

CommandResult cmd_sweep(const SweepArgs &args, const GlobalOptions &g) {
  static const std::vector<std::pair<std::string, std::vector<std::string>>>
      kAllowed = {
          {"gravimeter", {"n", "tc", "freq", "time"}},
          {"strain", {"n", "tc", "freq", "ell", "time"}},
          {"required-qubits", {"tc", "freq", "ell"}},
          {"line-phase", {"n", "freq", "ell", "time"}},
          {"grid-phase", {"n", "freq", "ell", "time"}},
          {"protocol", {"n", "freq", "ell", "shots", "time"}},
      };
  const auto calc = std::ranges::find(kAllowed, args.calc,
                                      &decltype(kAllowed)::value_type::first);
  if (calc == kAllowed.end()) {
    throw ValidationError("unknown --calc '" + args.calc + "'");
  }
  if (std::ranges::find(calc->second, args.param) == calc->second.end()) {
    throw ValidationError("--param " + args.param + " has no effect on " +
                          args.calc);
  }
  const auto values = sweep_values(args.from, args.to, args.steps, args.log);

  std::optional<ScenarioDocument> doc;
  PhysicalConstants k;
  if (args.calc == "protocol") {
    if (args.protocol.scenario.empty()) {
      throw ValidationError("--calc protocol needs --scenario");
    }
    doc = load_scenario(args.protocol.scenario);
    k = resolve_constants(g, doc->constants);
  } else {
    k = resolve_constants(g);
  }

  auto evaluate = [&](double v) -> Outputs {
    SensingArgs a = args.base;
    ProtocolArgs p = args.protocol;
    std::optional<ScenarioDocument> d = doc;
    if (args.param == "n") {
      a.n = double(require_count(std::round(v), "swept n"));
      if (d) {
        d->geometry.n = static_cast<std::uint64_t>(a.n);
      }
    } else if (args.param == "tc") {
      a.tc = v;
    } else if (args.param == "freq") {
      a.freq_ghz = v;
      if (d) {
        require_positive(v, "swept freq");
        d->frequency_ghz = {v};
      }
    } else if (args.param == "ell") {
      a.ell = v;
      if (d) {
        require_positive(v, "swept ell");
        d->geometry.spacing_m = v;
      }
    } else if (args.param == "shots") {
      p.shots = require_count(std::round(v), "swept shots");
    } else if (args.param == "time") {
      a.time = v;
      p.time = v;
    }
    if (args.calc == "gravimeter") {
      return gravimeter_outputs(a, k);
    }
    if (args.calc == "strain") {
      return strain_outputs(a, k);
    }
    if (args.calc == "required-qubits") {
      return required_outputs(a, k);
    }
    if (args.calc == "line-phase") {
      return line_phase_outputs(a, k);
    }
    if (args.calc == "grid-phase") {
      return grid_phase_outputs(a, k);
    }
    if (d->frequency_ghz.size() != 1 && args.param == "n") {
      throw ValidationError("sweeping n needs a single scenario frequency");
    }
    GlobalOptions inner = g;
    inner.constants_file.reset();
    d->constants = k;
    const auto run = run_scenario(*d, p, inner, 1);
    const auto &o = run.outcome;
    return {{"n", "analytic_delta_phi", "analytic_p1", "shots", "count_one",
             "p_hat", "delta_phi_hat", "std_error"},
            {static_cast<std::int64_t>(run.doc.geometry.n),
             o.analytic_delta_phi, o.analytic_p1,
             static_cast<std::int64_t>(o.shots),
             static_cast<std::int64_t>(o.count_one), o.p_hat, o.delta_phi_hat,
             o.std_error}};
  };

  // Points are independent; workers pull indices and write into their own
  // slot, so the table order is the sweep order whatever the schedule.
  std::vector<Outputs> results(values.size());
  std::vector<std::exception_ptr> errors(values.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < values.size(); i = next++) {
      try {
        results[i] = evaluate(values[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    const unsigned workers =
        std::clamp<unsigned>(g.threads, 1, unsigned(values.size()));
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) {
      pool.emplace_back(worker);
    }
    worker();
  }
  for (const auto &e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }

  std::vector<std::string> columns = {"index", args.param};
  columns.insert(columns.end(), results.front().columns.begin(),
                 results.front().columns.end());
  CommandResult r;
  r.table = ResultTable(columns);
  for (std::size_t i = 0; i < values.size(); ++i) {
    Cell swept = values[i];
    if (args.param == "n" || args.param == "shots") {
      swept = static_cast<std::int64_t>(std::llround(values[i]));
    }
    std::vector<Cell> row = {static_cast<std::int64_t>(i), swept};
    row.insert(row.end(), results[i].values.begin(), results[i].values.end());
    r.table.add_row(std::move(row));
  }
  r.inputs["calc"] = args.calc;
  r.inputs["param"] = args.param;
  r.inputs["from"] = args.from;
  r.inputs["to"] = args.to;
  r.inputs["steps"] = args.steps;
  r.inputs["log"] = args.log;
  r.inputs["out"] = args.out.string();
  std::optional<std::uint64_t> seed;
  if (doc) {
    seed = g.seed.value_or(doc->run.seed);
  }
  stamp(r.table, g, "sweep", k, seed);
  write_atomically(args.out, r.table.to_csv());
  return r;
}

namespace {

void emit(const CommandResult &r, const GlobalOptions &g, std::ostream &out,
          std::ostream &err) {
  for (const auto &w : r.warnings) {
    err << "warning: " << w << "\n";
  }
  if (g.format == OutputFormat::kJson) {
    out << r.table.to_json(r.inputs).dump(2) << "\n";
  } else {
    out << r.table.to_csv();
  }
}

void add_sensing_flags(CLI::App *cmd, SensingArgs &a, bool with_n) {
  if (with_n) {
    cmd->add_option("--n", a.n, "Qubit count")->capture_default_str();
  }
  cmd->add_option("--tc", a.tc, "Coherence time, s")->capture_default_str();
  cmd->add_option("--freq-ghz", a.freq_ghz, "Mean qubit frequency, GHz")
      ->capture_default_str();
  cmd->add_option("--ell", a.ell, "Qubit spacing, m")->capture_default_str();
  cmd->add_option("--phase-res", a.phase_res, "Phase resolution, rad")
      ->capture_default_str();
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Gravitational dephasing of qubit registers: redshift, "
               "phase-measurement protocol and sensing estimates"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  std::string format = "csv";
  std::string constants_file;
  std::uint64_t seed = 0;
  auto *seed_opt = app.add_option("--seed", seed, "Master RNG seed");
  auto *cf_opt = app.add_option("--constants-file", constants_file,
                                "JSON object overriding c, G, g0, earth_mass, "
                                "earth_radius");
  app.add_option("--out", format, "Output format (before the subcommand)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--reproducible", g.reproducible,
               "Omit the timestamp from provenance");
  app.add_option("--threads", g.threads, "Worker threads")
      ->check(CLI::Range(1u, 256u));

  RedshiftArgs redshift;
  auto *c_red = app.add_subcommand("redshift", "Single-qubit redshift");
  auto *dx = c_red->add_option("--delta-x", redshift.delta_x,
                               "Vertical displacement, m");
  auto *mass = c_red->add_option("--mass", redshift.mass, "Proximal mass, kg");
  auto *dist = c_red->add_option("--distance", redshift.distance,
                                 "Distance to the mass, m");
  dx->excludes(mass)->excludes(dist);
  mass->needs(dist);
  dist->needs(mass);
  c_red->add_option("--freq-ghz", redshift.freq_ghz, "Qubit frequency, GHz")
      ->capture_default_str();

  ProtocolArgs proto;
  std::string backend;
  auto *c_proto = app.add_subcommand("protocol", "Run the phase measurement");
  c_proto->add_option("scenario", proto.scenario, "Scenario JSON file")
      ->required();
  c_proto->add_option("--shots", proto.shots, "Override run.shots");
  c_proto->add_option("--time", proto.time, "Override run.time_s");
  auto *backend_opt = c_proto->add_option("--backend", backend,
                                          "statevector or branch")
                          ->check(CLI::IsMember({"statevector", "branch"}));

  SensingArgs grav;
  auto *c_grav = app.add_subcommand("gravimeter", "Gravimeter sensitivity");
  add_sensing_flags(c_grav, grav, true);
  c_grav->add_option("--delta-g", grav.delta_g,
                     "delta g for the phase column, m/s^2");
  c_grav->add_option("--time", grav.time, "Accumulation time (default tc)");

  SensingArgs strain;
  auto *c_strain = app.add_subcommand("strain", "Strain-gauge response");
  add_sensing_flags(c_strain, strain, true);
  c_strain->add_option("--strain", strain.strain, "Relative strain dl/l");
  c_strain->add_option("--time", strain.time, "Accumulation time (default tc)");

  SensingArgs req;
  std::string req_geometry = "1d";
  auto *c_req = app.add_subcommand("required-qubits",
                                   "Qubits needed for a rotated chip");
  add_sensing_flags(c_req, req, false);
  c_req->add_option("--geometry", req_geometry, "1d or 2d")
      ->check(CLI::IsMember({"1d", "2d"}))
      ->capture_default_str();

  SweepArgs sweep;
  std::string sweep_geometry = "1d";
  std::string sweep_backend;
  auto *c_sweep = app.add_subcommand("sweep", "Parameter sweep to CSV");
  c_sweep->add_option("--calc", sweep.calc)
      ->required()
      ->check(CLI::IsMember({"gravimeter", "strain", "required-qubits",
                             "line-phase", "grid-phase", "protocol"}));
  c_sweep->add_option("--param", sweep.param)
      ->required()
      ->check(CLI::IsMember({"n", "tc", "freq", "ell", "shots", "time"}));
  c_sweep->add_option("--from", sweep.from)->required();
  c_sweep->add_option("--to", sweep.to)->required();
  c_sweep->add_option("--steps", sweep.steps)->required();
  c_sweep->add_flag("--log", sweep.log, "Logarithmic spacing");
  c_sweep->add_option("--out", sweep.out, "Destination CSV file")->required();
  add_sensing_flags(c_sweep, sweep.base, true);
  c_sweep->add_option("--time", sweep.base.time);
  c_sweep->add_option("--delta-g", sweep.base.delta_g);
  c_sweep->add_option("--strain", sweep.base.strain);
  c_sweep->add_option("--geometry", sweep_geometry)
      ->check(CLI::IsMember({"1d", "2d"}));
  c_sweep->add_option("--scenario", sweep.protocol.scenario,
                      "Scenario file for --calc protocol");
  c_sweep->add_option("--shots", sweep.protocol.shots);
  auto *sweep_backend_opt =
      c_sweep->add_option("--backend", sweep_backend)
          ->check(CLI::IsMember({"statevector", "branch"}));

  std::vector<std::string> argv_storage = args;
  std::reverse(argv_storage.begin(), argv_storage.end());
  try {
    app.parse(argv_storage);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  if (*seed_opt) {
    g.seed = seed;
  }
  if (*cf_opt) {
    g.constants_file = constants_file;
  }
  g.format = format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;

  try {
    if (*c_red) {
      emit(cmd_redshift(redshift, g), g, out, err);
    } else if (*c_proto) {
      if (*backend_opt) {
        proto.backend = protocol::parse_backend(backend);
      }
      emit(cmd_protocol(proto, g), g, out, err);
    } else if (*c_grav) {
      emit(cmd_gravimeter(grav, g), g, out, err);
    } else if (*c_strain) {
      emit(cmd_strain(strain, g), g, out, err);
    } else if (*c_req) {
      req.geometry = sensing::parse_dimension(req_geometry);
      emit(cmd_required_qubits(req, g), g, out, err);
    } else if (*c_sweep) {
      sweep.base.geometry = sensing::parse_dimension(sweep_geometry);
      if (*sweep_backend_opt) {
        sweep.protocol.backend = protocol::parse_backend(sweep_backend);
      }
      const auto r = cmd_sweep(sweep, g);
      for (const auto &w : r.warnings) {
        err << "warning: " << w << "\n";
      }
      err << "wrote " << r.table.rows().size() << " rows to "
          << sweep.out.string() << "\n";
    }
  } catch (const ResourceLimitError &e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const IoError &e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::domain_error &e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}

} // namespace gravphase::cli
