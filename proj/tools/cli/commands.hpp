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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gravphase/constants.hpp"
#include "gravphase/protocol.hpp"
#include "gravphase/sensing.hpp"
#include "json.hpp"
#include "result_table.hpp"

namespace gravphase::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitIo = 4;

enum class OutputFormat { kCsv, kJson };

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> constants_file;
  OutputFormat format = OutputFormat::kCsv;
  bool reproducible = false;
  unsigned threads = 1;
};

/// A table plus the inputs that produced it (echoed in JSON output).
struct CommandResult {
  ResultTable table;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  std::vector<std::string> warnings;
};

struct RedshiftArgs {
  std::optional<double> delta_x;
  std::optional<double> mass;
  std::optional<double> distance;
  double freq_ghz = 10.0;
};

struct SensingArgs {
  double n = 1000.0;
  double tc = 1e-3;
  double freq_ghz = 10.0;
  double ell = 1e-3;
  double phase_res = 0.1;
  std::optional<double> time;    // defaults to tc
  double delta_g = 0.0;          // gravimeter phase input
  double strain = 0.0;           // strain phase input
  sensing::ChipDimension geometry = sensing::ChipDimension::k1D;

  sensing::SensingConfig config(const PhysicalConstants &k) const;
};

struct ProtocolArgs {
  std::filesystem::path scenario;
  std::optional<std::uint64_t> shots;
  std::optional<double> time;
  std::optional<protocol::Backend> backend;
};

struct SweepArgs {
  std::string calc;              // gravimeter, strain, required-qubits,
                                 // line-phase, grid-phase, protocol
  std::string param;             // n, tc, freq, ell, shots, time
  double from = 0.0;
  double to = 0.0;
  std::uint64_t steps = 0;
  bool log = false;
  std::filesystem::path out;
  SensingArgs base;
  ProtocolArgs protocol;         // protocol calc only
};

CommandResult cmd_redshift(const RedshiftArgs &args, const GlobalOptions &g);
CommandResult cmd_protocol(const ProtocolArgs &args, const GlobalOptions &g);
CommandResult cmd_gravimeter(const SensingArgs &args, const GlobalOptions &g);
CommandResult cmd_strain(const SensingArgs &args, const GlobalOptions &g);
CommandResult cmd_required_qubits(const SensingArgs &args,
                                  const GlobalOptions &g);
/// Evaluates every sweep point (concurrently when g.threads > 1) and writes
/// the CSV to args.out atomically. Row order follows the sweep index.
CommandResult cmd_sweep(const SweepArgs &args, const GlobalOptions &g);

/// Sweep values: linear or logarithmic, `steps` points including both ends.
std::vector<double> sweep_values(double from, double to, std::uint64_t steps,
                                 bool log);

/// Writes `contents` to a sibling temporary file, then renames it over
/// `path`. Throws IoError on failure.
void write_atomically(const std::filesystem::path &path,
                      const std::string &contents);

/// Full command-line entry point. Returns the process exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace gravphase::cli
