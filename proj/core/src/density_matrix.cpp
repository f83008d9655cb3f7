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

#include "gravphase/density_matrix.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gravphase/errors.hpp"

namespace gravphase::sv {

DensityMatrix DensityMatrix::from_matrix(Matrix entries) {
  const auto dim = static_cast<std::size_t>(entries.rows());
  if (entries.rows() != entries.cols() || dim < 2 || !std::has_single_bit(dim)) {
    throw std::invalid_argument(
        "density matrix must be square with power-of-two dimension >= 2");
  }
  const int count = std::countr_zero(dim);
  if (count > kMaxDensityQubits) {
    throw ResourceLimitError("density matrix limited to " +
                             std::to_string(kMaxDensityQubits) + " qubits");
  }
  if ((entries - entries.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(entries.trace() - Complex(1.0)) > 1e-10) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
  DensityMatrix rho(count, std::move(entries));
  if (rho.min_eigenvalue() < -1e-8) {
    throw std::invalid_argument("density matrix is not positive semidefinite");
  }
  return rho;
}

DensityMatrix DensityMatrix::pure(const StateVector &state) {
  if (state.qubit_count() > kMaxDensityQubits) {
    throw ResourceLimitError("density matrix limited to " +
                             std::to_string(kMaxDensityQubits) + " qubits");
  }
  const auto amps = state.amplitudes();
  const Eigen::Map<const Eigen::VectorXcd> psi(
      amps.data(), static_cast<Eigen::Index>(amps.size()));
  return DensityMatrix(state.qubit_count(), psi * psi.adjoint());
}

double DensityMatrix::min_eigenvalue() const {
  const Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_,
                                                     Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

DensityMatrix apply_channel(const DensityMatrix &rho,
                            const gravity::DephasingAngles &angles) {
  const int n = rho.qubit_count();
  if (angles.size() != std::size_t(n - 1)) {
    throw std::invalid_argument(
        "channel has " + std::to_string(angles.size()) +
        " angles for a register of " + std::to_string(n - 1) + " sites");
  }
  const Eigen::Index dim = rho.matrix().rows();

  // phi_j = sum of theta_k over register bits set in j; bit 0 is the ancilla.
  std::vector<double> phi(static_cast<std::size_t>(dim), 0.0);
  for (Eigen::Index j = 1; j < dim; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    const int low = std::countr_zero(uj);
    phi[uj] = phi[uj & (uj - 1)] + (low == 0 ? 0.0 : angles[low - 1]);
  }

  DensityMatrix::Matrix out = rho.matrix();
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index l = 0; l < dim; ++l) {
      if (j != l) {
        out(j, l) *= std::polar(1.0, phi[j] - phi[l]);
      }
    }
  }
  return DensityMatrix::from_matrix(std::move(out));
}

} // namespace gravphase::sv
