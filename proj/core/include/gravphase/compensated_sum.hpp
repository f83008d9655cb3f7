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
#include <ranges>

namespace gravphase {

/// Neumaier's variant of Kahan summation. Keeps the running error term so
/// that summing 10^5..10^7 angles of mixed magnitude stays at the few-ulp
/// level of the result.
class CompensatedSum {
public:
  constexpr CompensatedSum() = default;
  constexpr explicit CompensatedSum(double initial) : sum_(initial) {}

  constexpr CompensatedSum &operator+=(double value) {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  constexpr double value() const { return sum_ + compensation_; }

private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

template <std::ranges::input_range R>
double compensated_sum(const R &values) {
  CompensatedSum acc;
  for (double v : values) {
    acc += v;
  }
  return acc.value();
}

} // namespace gravphase
