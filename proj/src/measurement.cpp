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

#include "bayesphase/measurement.hpp"

#include <algorithm>
#include <cmath>

#include "bayesphase/errors.hpp"

namespace bayesphase {

namespace {

// sum_n c_n z^n by Horner's rule.
Amplitude amplitude_sum(const StateVector& state, Amplitude z) {
  const auto amps = state.amplitudes();
  Amplitude g = amps.back();
  for (std::size_t n = amps.size() - 1; n-- > 0;) g = g * z + amps[n];
  return g;
}

}  // namespace

double wrap_angle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double likelihood_density(const StateVector& state, double delta) {
  const Amplitude g = amplitude_sum(state, std::polar(1.0, wrap_angle(delta)));
  return std::norm(g) / kTwoPi;
}

CircularDensity density_grid(const StateVector& state, std::size_t grid_size) {
  validate_grid_size(grid_size);
  std::vector<double> values(grid_size);
  const double h = kTwoPi / static_cast<double>(grid_size);
  for (std::size_t k = 0; k < grid_size; ++k) {
    values[k] = likelihood_density(state, h * static_cast<double>(k));
  }
  return CircularDensity::from_values(std::move(values));
}

PhaseSampler::PhaseSampler(const StateVector& state, std::size_t grid_size) {
  const CircularDensity density = density_grid(state, grid_size);
  const auto p = density.values();
  cell_ = density.cell_width();
  cdf_.resize(grid_size + 1);
  cdf_[0] = 0.0;
  for (std::size_t k = 0; k < grid_size; ++k) {
    const double next = p[(k + 1) % grid_size];
    cdf_[k + 1] = cdf_[k] + 0.5 * (p[k] + next) * cell_;
  }
  const double total = cdf_.back();
  for (auto& c : cdf_) c /= total;
  cdf_.back() = 1.0;
}

double PhaseSampler::sample_offset(Engine& rng) const {
  const double u = uniform01(rng);
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  const auto k = static_cast<std::size_t>(std::distance(cdf_.begin(), it)) - 1;
  const double mass = cdf_[k + 1] - cdf_[k];
  const double frac = mass > 0.0 ? (u - cdf_[k]) / mass : 0.0;
  return wrap_angle((static_cast<double>(k) + frac) * cell_);
}

MeasurementRecord sample_outcomes(const StateVector& state, double true_phase,
                                  std::size_t count, std::uint64_t seed,
                                  std::size_t grid_size) {
  if (count < 1) {
    throw Error(ErrorKind::Configuration, "outcome count must be >= 1");
  }
  if (!std::isfinite(true_phase)) {
    throw Error(ErrorKind::Configuration, "true phase must be finite");
  }
  const PhaseSampler sampler(state, grid_size);
  Engine rng = substream(seed, 0);
  MeasurementRecord record;
  record.true_phase = wrap_angle(true_phase);
  record.seed = seed;
  record.outcomes.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    record.outcomes.push_back(sampler.sample(rng, record.true_phase));
  }
  return record;
}

}  // namespace bayesphase
