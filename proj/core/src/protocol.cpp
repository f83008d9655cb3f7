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

#include "gravphase/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "gravphase/compensated_sum.hpp"
#include "gravphase/errors.hpp"

namespace gravphase::protocol {

namespace {

std::vector<int> all_sites(std::size_t n) {
  std::vector<int> sites(n);
  for (std::size_t i = 0; i < n; ++i) {
    sites[i] = static_cast<int>(i + 1);
  }
  return sites;
}

void check_partition(const SignPartition &partition, std::size_t n) {
  std::vector<char> seen(n + 1, 0);
  auto mark = [&](int k) {
    if (k < 1 || std::size_t(k) > n || seen[k]) {
      throw std::invalid_argument("partition site " + std::to_string(k) +
                                  " is out of range or repeated");
    }
    seen[k] = 1;
  };
  std::ranges::for_each(partition.plus_sites, mark);
  std::ranges::for_each(partition.minus_sites, mark);
  if (partition.plus_sites.size() + partition.minus_sites.size() != n) {
    throw std::invalid_argument("partition does not cover every register site");
  }
}

// Calls fn(first, last) over contiguous shot ranges, one per worker, and
// returns the sum of the per-range results.
template <typename Fn>
std::uint64_t parallel_count(std::uint64_t shots, unsigned threads, Fn fn) {
  const std::uint64_t workers =
      std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(shots, 1));
  if (workers == 1) {
    return fn(0, shots);
  }
  std::vector<std::uint64_t> partial(workers, 0);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t first = shots * w / workers;
      const std::uint64_t last = shots * (w + 1) / workers;
      pool.emplace_back([&, w, first, last] { partial[w] = fn(first, last); });
    }
  }
  std::uint64_t total = 0;
  for (auto p : partial) {
    total += p;
  }
  return total;
}

} // namespace

SignPartition partition_by_sign(const gravity::DephasingAngles &angles) {
  SignPartition out;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const int site = static_cast<int>(i + 1);
    if (angles[i] >= 0.0) {
      out.plus_sites.push_back(site);
    } else {
      out.minus_sites.push_back(site);
    }
  }
  return out;
}

sv::Circuit build_circuit(const SignPartition &partition,
                          const gravity::DephasingAngles &angles) {
  const std::size_t n = angles.size();
  check_partition(partition, n);

  sv::Circuit circuit;
  circuit.qubit_count = static_cast<int>(n + 1);
  circuit.measured_qubit = 0;
  auto &gates = circuit.gates;
  gates.reserve(4 + partition.minus_sites.size() + 2 * n);

  gates.emplace_back(sv::Hadamard{0});
  for (int k : partition.minus_sites) {
    gates.emplace_back(sv::PauliX{k});
  }
  gates.emplace_back(sv::PhaseS{0});
  for (int k : all_sites(n)) {
    gates.emplace_back(sv::ControlledX{0, {k}});
  }
  gates.emplace_back(sv::DiagonalPhase{angles});
  for (int k : all_sites(n)) {
    gates.emplace_back(sv::ControlledX{0, {k}});
  }
  gates.emplace_back(sv::Hadamard{0});
  return circuit;
}

double expected_delta_phi(const gravity::DephasingAngles &angles) {
  const auto partition = partition_by_sign(angles);
  return branch::branch_phases(angles, partition.plus_sites,
                               partition.minus_sites)
      .difference();
}

std::string_view to_string(Backend backend) {
  return backend == Backend::kBranch ? "branch" : "statevector";
}

Backend parse_backend(std::string_view name) {
  if (name == "branch") {
    return Backend::kBranch;
  }
  if (name == "statevector") {
    return Backend::kStatevector;
  }
  throw std::invalid_argument("unknown backend '" + std::string(name) +
                              "' (expected statevector or branch)");
}

branch::ProbabilityPair ancilla_probabilities(
    const gravity::DephasingAngles &angles, Backend backend) {
  const auto partition = partition_by_sign(angles);
  if (backend == Backend::kBranch) {
    const auto phases = branch::branch_phases(angles, partition.plus_sites,
                                              partition.minus_sites);
    const auto state =
        branch::init_entangled().accumulate(phases.plus, phases.minus);
    return branch::ancilla_probabilities(state);
  }
  if (angles.size() + 1 > std::size_t(sv::kMaxQubits)) {
    throw ResourceLimitError(
        "statevector backend holds at most " +
        std::to_string(sv::kMaxQubits - 1) + " register qubits (requested " +
        std::to_string(angles.size()) + "); use the branch backend");
  }
  const auto circuit = build_circuit(partition, angles);
  auto state = sv::init_zero(circuit.qubit_count);
  sv::run_gates(state, circuit);
  const double p1 = sv::probability_of(state, circuit.measured_qubit, 1);
  return {1.0 - p1, p1};
}

std::vector<std::uint8_t> shot_outcomes(const gravity::DephasingAngles &angles,
                                        const RunOptions &options) {
  const double p1 = ancilla_probabilities(angles, options.backend).p1;
  std::vector<std::uint8_t> out(options.shots);
  for (std::uint64_t i = 0; i < options.shots; ++i) {
    ShotStream stream(options.seed, i);
    out[i] = stream.uniform() < p1 ? 1 : 0;
  }
  return out;
}

ProtocolOutcome estimate(std::uint64_t count_one, std::uint64_t shots) {
  if (shots == 0) {
    throw std::invalid_argument("shots must be >= 1");
  }
  if (count_one > shots) {
    throw std::invalid_argument("count_one exceeds shots");
  }
  ProtocolOutcome out;
  out.shots = shots;
  out.count_one = count_one;
  out.p_hat = double(count_one) / double(shots);
  const double signal = std::clamp(2.0 * out.p_hat - 1.0, -1.0, 1.0);
  out.delta_phi_hat = std::asin(signal);
  out.saturated = count_one == 0 || count_one == shots;
  if (out.saturated) {
    out.std_error = std::numeric_limits<double>::infinity();
  } else {
    const double slope = 0.5 * std::cos(out.delta_phi_hat);
    out.std_error =
        std::sqrt(out.p_hat * (1.0 - out.p_hat) / double(shots)) / slope;
  }
  return out;
}

ProtocolOutcome run_protocol(const gravity::DephasingAngles &angles,
                             const RunOptions &options) {
  if (options.shots == 0) {
    throw std::invalid_argument("shots must be >= 1");
  }
  const double p1 = ancilla_probabilities(angles, options.backend).p1;
  const std::uint64_t ones = parallel_count(
      options.shots, options.threads,
      [&](std::uint64_t first, std::uint64_t last) {
        std::uint64_t count = 0;
        for (std::uint64_t i = first; i < last; ++i) {
          ShotStream stream(options.seed, i);
          count += stream.uniform() < p1 ? 1 : 0;
        }
        return count;
      });

  ProtocolOutcome out = estimate(ones, options.shots);
  out.backend = options.backend;
  out.analytic_delta_phi = expected_delta_phi(angles);
  out.analytic_p1 = p1;
  out.out_of_range = std::abs(out.analytic_delta_phi) > std::numbers::pi / 2;
  return out;
}

ProtocolOutcome run_protocol(const gravity::GravScenario &scenario,
                             double time, const RunOptions &options) {
  return run_protocol(gravity::dephasing_angles(scenario, time), options);
}

branch::ProbabilityPair standard_pea_probabilities(double delta_phi) {
  const double half = 0.5 * std::cos(delta_phi);
  return {0.5 + half, 0.5 - half};
}

CumulativePhase cumulative_phase_1d(const gravity::ChipGeometry &geometry,
                                    double time,
                                    const PhysicalConstants &constants) {
  if (geometry.layout() != gravity::Layout::kLine) {
    throw std::domain_error("cumulative_phase_1d needs a line geometry");
  }
  const std::size_t n = geometry.qubit_count();
  if (n % 2 != 0) {
    throw std::domain_error("cumulative_phase_1d needs an even qubit count, "
                            "got " + std::to_string(n));
  }
  const auto vertical =
      gravity::vertical_displacements(geometry.with_orientation(
          std::numbers::pi / 2));
  const auto sites = geometry.sites();
  CompensatedSum weighted;
  for (std::size_t i = 0; i < n; ++i) {
    weighted += sites[i].frequency * std::abs(vertical[i]);
  }
  const double scale = constants.g0 * time / constants.c_squared();
  const double nn = double(n);
  CumulativePhase out;
  out.exact = scale * weighted.value();
  out.closed_form = scale * geometry.mean_frequency() * geometry.spacing() *
                    nn * nn / 4.0;
  return out;
}

} // namespace gravphase::protocol
