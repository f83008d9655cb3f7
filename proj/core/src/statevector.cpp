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

#include "gravphase/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gravphase/compensated_sum.hpp"
#include "gravphase/errors.hpp"

namespace gravphase::sv {

namespace {

void check_qubit(const StateVector &state, int qubit) {
  if (qubit < 0 || qubit >= state.qubit_count()) {
    throw std::out_of_range("qubit index " + std::to_string(qubit) +
                            " outside register of " +
                            std::to_string(state.qubit_count()) + " qubits");
  }
}

std::size_t bit_of(int qubit) { return std::size_t{1} << qubit; }

// Phase factor table for the qubits [first, first + count): entry m holds
// exp(i * sum of theta over the bits set in m). Angles are indexed by qubit,
// with the ancilla (qubit 0) pinned to zero.
std::vector<Complex> phase_table(std::span<const double> qubit_angles,
                                 int first, int count) {
  const std::size_t size = std::size_t{1} << count;
  std::vector<Complex> table(size);
  std::vector<double> sum(size, 0.0);
  for (std::size_t m = 1; m < size; ++m) {
    const int low = std::countr_zero(m);
    sum[m] = sum[m & (m - 1)] + qubit_angles[first + low];
  }
  for (std::size_t m = 0; m < size; ++m) {
    table[m] = std::polar(1.0, sum[m]);
  }
  return table;
}

void apply_hadamard(StateVector &state, int qubit) {
  const std::size_t stride = bit_of(qubit);
  auto amps = state.amplitudes();
  const double r = (std::numbers::sqrt2 / 2);
  for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const Complex a0 = amps[i];
      const Complex a1 = amps[i + stride];
      amps[i] = r * (a0 + a1);
      amps[i + stride] = r * (a0 - a1);
    }
  }
}

void apply_s(StateVector &state, int qubit) {
  const std::size_t mask = bit_of(qubit);
  auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & mask) {
      amps[i] = Complex(-amps[i].imag(), amps[i].real());
    }
  }
}

// X on every qubit in `flip` for the indices matching `control_mask`; the
// permutation pairs i with i ^ flip, and each pair is swapped once.
void apply_flip(StateVector &state, std::size_t control_mask,
                std::size_t flip) {
  auto amps = state.amplitudes();
  const std::size_t top = std::size_t{1} << (std::bit_width(flip) - 1);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & control_mask) != control_mask || (i & top)) {
      continue;
    }
    std::swap(amps[i], amps[i ^ flip]);
  }
}

} // namespace

StateVector StateVector::zero(int qubit_count) {
  if (qubit_count < 1) {
    throw std::invalid_argument("statevector needs at least one qubit");
  }
  if (qubit_count > kMaxQubits) {
    throw ResourceLimitError(
        "statevector limited to " + std::to_string(kMaxQubits) +
        " qubits (requested " + std::to_string(qubit_count) +
        "); use the branch backend for larger registers");
  }
  std::vector<Complex> amps(std::size_t{1} << qubit_count);
  amps[0] = 1.0;
  return StateVector(qubit_count, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw std::invalid_argument("amplitude count must be a power of two >= 2");
  }
  const int count = std::countr_zero(dim);
  if (count > kMaxQubits) {
    throw ResourceLimitError("statevector limited to " +
                             std::to_string(kMaxQubits) + " qubits");
  }
  StateVector state(count, std::move(amplitudes));
  if (std::abs(state.norm_squared() - 1.0) > 1e-10) {
    throw std::invalid_argument("amplitudes are not normalized");
  }
  return state;
}

double StateVector::norm_squared() const {
  CompensatedSum acc;
  for (const Complex &a : amplitudes_) {
    acc += std::norm(a);
  }
  return acc.value();
}

void apply_gate(StateVector &state, const Gate &gate) {
  struct Visitor {
    StateVector &state;

    void operator()(const Hadamard &g) const {
      check_qubit(state, g.qubit);
      apply_hadamard(state, g.qubit);
    }
    void operator()(const PhaseS &g) const {
      check_qubit(state, g.qubit);
      apply_s(state, g.qubit);
    }
    void operator()(const PauliX &g) const {
      check_qubit(state, g.qubit);
      apply_flip(state, 0, bit_of(g.qubit));
    }
    void operator()(const ControlledX &g) const {
      check_qubit(state, g.control);
      std::size_t flip = 0;
      for (int t : g.targets) {
        check_qubit(state, t);
        if (t == g.control) {
          throw std::invalid_argument("controlled-X target equals control");
        }
        if (flip & bit_of(t)) {
          throw std::invalid_argument("controlled-X has repeated target " +
                                      std::to_string(t));
        }
        flip |= bit_of(t);
      }
      if (flip != 0) {
        apply_flip(state, bit_of(g.control), flip);
      }
    }
    void operator()(const DiagonalPhase &g) const {
      apply_diagonal_phase(state, g.angles);
    }
  };
  std::visit(Visitor{state}, gate);
}

void apply_diagonal_phase(StateVector &state,
                          const gravity::DephasingAngles &angles) {
  const int n = state.qubit_count();
  if (angles.size() != std::size_t(n - 1)) {
    throw std::invalid_argument(
        "diagonal phase has " + std::to_string(angles.size()) +
        " angles for a register of " + std::to_string(n - 1) + " sites");
  }
  std::vector<double> qubit_angles(n, 0.0);
  std::copy(angles.angles.begin(), angles.angles.end(),
            qubit_angles.begin() + 1);

  // Split the index into low and high halves so each amplitude needs two
  // table lookups instead of one exp per amplitude.
  const int low_bits = n / 2;
  const int high_bits = n - low_bits;
  const auto low = phase_table(qubit_angles, 0, low_bits);
  const auto high = phase_table(qubit_angles, low_bits, high_bits);
  const std::size_t low_mask = (std::size_t{1} << low_bits) - 1;

  auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    amps[i] *= low[i & low_mask] * high[i >> low_bits];
  }
}

void run_gates(StateVector &state, const Circuit &circuit) {
  if (circuit.qubit_count != state.qubit_count()) {
    throw std::invalid_argument("circuit and state qubit counts differ");
  }
  for (const Gate &g : circuit.gates) {
    apply_gate(state, g);
  }
}

double probability_of(const StateVector &state, int qubit, int bit) {
  check_qubit(state, qubit);
  if (bit != 0 && bit != 1) {
    throw std::invalid_argument("bit must be 0 or 1");
  }
  const std::size_t mask = bit_of(qubit);
  CompensatedSum ones;
  CompensatedSum total;
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    total += p;
    if (i & mask) {
      ones += p;
    }
  }
  const double p1 = ones.value() / total.value();
  return bit == 1 ? p1 : 1.0 - p1;
}

int sample_qubit(const StateVector &state, int qubit, ShotStream &stream) {
  const double p1 = probability_of(state, qubit, 1);
  return stream.uniform() < p1 ? 1 : 0;
}

int measure_qubit(StateVector &state, int qubit, ShotStream &stream) {
  const double p1 = probability_of(state, qubit, 1);
  const int outcome = stream.uniform() < p1 ? 1 : 0;
  const double keep = outcome == 1 ? p1 : 1.0 - p1;
  const double scale = 1.0 / std::sqrt(keep);
  const std::size_t mask = bit_of(qubit);
  auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const bool set = (i & mask) != 0;
    amps[i] = set == (outcome == 1) ? amps[i] * scale : Complex{};
  }
  return outcome;
}

} // namespace gravphase::sv
