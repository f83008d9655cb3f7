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

#include "gravphase/constants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gravphase {

namespace {

void require_positive(double value, const char *name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw std::invalid_argument(std::string("constant '") + name +
                                "' must be finite and > 0");
  }
}

} // namespace

void PhysicalConstants::validate() const {
  require_positive(c, "c");
  require_positive(G, "G");
  require_positive(g0, "g0");
  require_positive(earth_mass, "earth_mass");
  require_positive(earth_radius, "earth_radius");
}

} // namespace gravphase
