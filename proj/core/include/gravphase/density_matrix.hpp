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

#include <Eigen/Dense>

#include "gravphase/gravity_model.hpp"
#include "gravphase/statevector.hpp"

namespace gravphase::sv {

/// Density-matrix cap; 2^6 x 2^6 complex entries.
inline constexpr int kMaxDensityQubits = 6;

/// Mixed state over the same qubit layout as StateVector (qubit 0 is the
/// ancilla). Only used to cross-check the channel algebra on small registers.
class DensityMatrix {
public:
  using Matrix = Eigen::MatrixXcd;

  /// Validates Hermiticity and unit trace within 1e-10 and positivity
  /// (smallest eigenvalue >= -1e-8). Throws ResourceLimitError above
  /// kMaxDensityQubits.
  static DensityMatrix from_matrix(Matrix entries);

  /// |psi><psi|.
  static DensityMatrix pure(const StateVector &state);

  int qubit_count() const { return qubit_count_; }
  const Matrix &matrix() const { return entries_; }

  Complex trace() const { return entries_.trace(); }
  double purity() const { return (entries_ * entries_).trace().real(); }
  double min_eigenvalue() const;

private:
  DensityMatrix(int qubit_count, Matrix entries)
      : qubit_count_(qubit_count), entries_(std::move(entries)) {}

  int qubit_count_;
  Matrix entries_;
};

/// Lambda: rho -> Sigma rho Sigma^dagger with Sigma the tensor product of
/// diag(1, e^{i theta_k}) over register sites. Entry (j, l) picks up
/// exp(i (phi_j - phi_l)); the diagonal is copied unchanged.
DensityMatrix apply_channel(const DensityMatrix &rho,
                            const gravity::DephasingAngles &angles);

} // namespace gravphase::sv
