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

#pragma once

#include <cstdint>
#include <vector>

#include "bayesphase/density.hpp"
#include "bayesphase/rng.hpp"
#include "bayesphase/state.hpp"

namespace bayesphase {

/// Canonical phase density P(delta) = |sum_n c_n e^{i n delta}|^2 / 2pi,
/// where delta = phi - theta. 2pi-periodic in delta.
double likelihood_density(const StateVector& state, double delta);

/// Samples likelihood_density on the uniform grid phi_k = 2 pi k / G.
CircularDensity density_grid(const StateVector& state, std::size_t grid_size);

/// Wraps an angle into [0, 2pi).
double wrap_angle(double x);

struct MeasurementRecord {
  double true_phase = 0.0;
  std::vector<double> outcomes;
  std::uint64_t seed = 0;
};

/// Inverse-CDF sampler for the phase offset delta = phi - theta.
///
/// The cumulative distribution is tabulated once on the grid (trapezoid
/// cells, periodic) and inverted with linear interpolation inside a cell.
/// Outcomes for a true phase theta are theta + delta wrapped, so the
/// sampler is exactly covariant.
class PhaseSampler {
 public:
  PhaseSampler(const StateVector& state, std::size_t grid_size);

  double sample_offset(Engine& rng) const;
  double sample(Engine& rng, double true_phase) const {
    return wrap_angle(true_phase + sample_offset(rng));
  }

 private:
  std::vector<double> cdf_;  // cdf_[k] = mass of [0, phi_k); cdf_[G] = 1
  double cell_;
};

inline constexpr std::size_t kDefaultGridSize = 4096;

MeasurementRecord sample_outcomes(const StateVector& state, double true_phase,
                                  std::size_t count, std::uint64_t seed,
                                  std::size_t grid_size = kDefaultGridSize);

}  // namespace bayesphase
