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

#include <complex>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "gravphase/gravity_model.hpp"
#include "gravphase/rng.hpp"

/// Dense statevector simulation of an ancilla plus an n-qubit register.
///
/// Qubit 0 is the ancilla and is the least significant bit of the amplitude
/// index; register site k (1-based) is qubit k.
namespace gravphase::sv {

using Complex = std::complex<double>;

/// Largest register (ancilla included) that init_zero will allocate.
inline constexpr int kMaxQubits = 24;

class StateVector {
public:
  /// |0...0> on `qubit_count` qubits. Throws ResourceLimitError above
  /// kMaxQubits and std::invalid_argument below 1.
  static StateVector zero(int qubit_count);

  /// Takes ownership of explicit amplitudes; the size must be a power of two
  /// and the norm 1 within 1e-10.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);

  int qubit_count() const { return qubit_count_; }
  std::size_t dimension() const { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> amplitudes() { return amplitudes_; }
  const Complex &operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm_squared() const;

private:
  StateVector(int qubit_count, std::vector<Complex> amplitudes)
      : qubit_count_(qubit_count), amplitudes_(std::move(amplitudes)) {}

  int qubit_count_;
  std::vector<Complex> amplitudes_;
};

inline StateVector init_zero(int qubit_count) {
  return StateVector::zero(qubit_count);
}

struct Hadamard {
  int qubit = 0;
};

/// S = |0><0| + i|1><1|.
struct PhaseS {
  int qubit = 0;
};

struct PauliX {
  int qubit = 0;
};

/// X on every target when `control` is |1>; a basis-index permutation.
struct ControlledX {
  int control = 0;
  std::vector<int> targets;
};

/// The gravitational Kraus operator diag(1, e^{i theta_k}) on every register
/// site; the ancilla is left untouched.
struct DiagonalPhase {
  gravity::DephasingAngles angles;
};

using Gate = std::variant<Hadamard, PhaseS, PauliX, ControlledX, DiagonalPhase>;

/// A gate list followed by a computational-basis measurement of one qubit.
struct Circuit {
  int qubit_count = 1;
  std::vector<Gate> gates;
  int measured_qubit = 0;
};

/// Throws std::out_of_range for indices outside the register and
/// std::invalid_argument for repeated targets or a target equal to the
/// control.
void apply_gate(StateVector &state, const Gate &gate);

/// Multiplies each amplitude by exp(i * sum of theta_k over set register
/// bits). Throws std::invalid_argument unless angles.size() equals
/// qubit_count - 1.
void apply_diagonal_phase(StateVector &state,
                          const gravity::DephasingAngles &angles);

/// Applies every gate of the circuit; the measurement is left to the caller.
void run_gates(StateVector &state, const Circuit &circuit);

/// Exact marginal probability that `qubit` reads `bit`.
double probability_of(const StateVector &state, int qubit, int bit);

/// Draws one outcome without collapsing. The outcome is 1 iff the next
/// uniform from `stream` is below P(1).
int sample_qubit(const StateVector &state, int qubit, ShotStream &stream);

/// Projective measurement: draws like sample_qubit, then projects and
/// renormalizes the state in place. Returns the outcome bit.
int measure_qubit(StateVector &state, int qubit, ShotStream &stream);

} // namespace gravphase::sv
