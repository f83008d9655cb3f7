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

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "gravphase/gravity_model.hpp"

namespace gravphase::support {

inline gravity::DephasingAngles angles_of(std::vector<double> values,
                                          double time = 1.0) {
  return {std::move(values), time};
}

inline gravity::DephasingAngles random_angles(std::mt19937_64 &rng,
                                              std::size_t n,
                                              double scale = 1.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  std::vector<double> values(n);
  for (auto &v : values) {
    v = dist(rng);
  }
  return angles_of(std::move(values));
}

/// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<double> &x,
                           const std::vector<double> &y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = double(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

} // namespace gravphase::support
