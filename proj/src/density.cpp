// Copyright 2026 The bayesphase Authors
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

#include "bayesphase/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bayesphase/errors.hpp"

namespace bayesphase {

void validate_grid_size(std::size_t grid_size) {
  if (grid_size < 64 || (grid_size & (grid_size - 1)) != 0) {
    throw Error(ErrorKind::Configuration,
                "grid size must be a power of two >= 64, got " + std::to_string(grid_size));
  }
}

CircularDensity CircularDensity::from_values(std::vector<double> values) {
  validate_grid_size(values.size());
  double sum = 0.0;
  for (auto& v : values) {
    if (!std::isfinite(v) || v < -1e-15) {
      throw Error(ErrorKind::Configuration, "density values must be finite and nonnegative");
    }
    v = std::max(v, 0.0);
    sum += v;
  }
  const double integral = sum * kTwoPi / static_cast<double>(values.size());
  if (!(integral > 0.0)) {
    throw Error(ErrorKind::DegeneratePosterior, "density vanishes on every grid node");
  }
  for (auto& v : values) v /= integral;
  return CircularDensity(std::move(values), std::nullopt);
}

CircularDensity CircularDensity::from_log_values(std::vector<double> log_values) {
  validate_grid_size(log_values.size());
  const double top = *std::max_element(log_values.begin(), log_values.end());
  if (!std::isfinite(top)) {
    throw Error(ErrorKind::DegeneratePosterior, "log-density is -inf on every grid node");
  }
  std::vector<double> values(log_values.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    values[k] = std::exp(log_values[k] - top);
    sum += values[k];
  }
  const double integral = sum * kTwoPi / static_cast<double>(values.size());
  for (auto& v : values) v /= integral;
  // Re-anchor the logs so that exp(log_values) == values.
  const double shift = top + std::log(integral);
  for (auto& l : log_values) l -= shift;
  return CircularDensity(std::move(values), std::move(log_values));
}

double CircularDensity::integral() const noexcept {
  double sum = 0.0;
  for (double v : values_) sum += v;
  return sum * cell_width();
}

}  // namespace bayesphase
