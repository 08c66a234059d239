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

#include <cstddef>

#include "bayesphase/density.hpp"
#include "bayesphase/state.hpp"

namespace bayesphase {

/// Constant density 1/(2pi); carries log-values so that subsequent
/// updates run in log space.
CircularDensity uniform_prior(std::size_t grid_size);

/// Bayes rule p(theta | phi) ~ p(theta) P(phi - theta) on the prior's grid.
/// Throws ErrorKind::DegeneratePosterior when the product vanishes on every
/// grid node.
CircularDensity posterior_update(const CircularDensity& prior,
                                 const StateVector& state, double outcome);

/// Differential entropy -sum p ln p * 2pi/G in nats, with 0 ln 0 = 0.
double entropy(const CircularDensity& density);

/// ln 2pi - H(P) for the canonical density of `state`: the information one
/// measurement carries about a uniformly distributed phase.
double mutual_information_single(const StateVector& state, std::size_t grid_size);

/// F = integral of P'^2 / P over the circle, by midpoint quadrature.
double fisher_information(const StateVector& state, std::size_t grid_size);

struct CircularMoments {
  double mean_resultant_length = 0.0;
  double mean_direction = 0.0;
  double circular_variance = 1.0;
  double holevo_variance = 0.0;  // +inf when the resultant length is < 1e-12
};

CircularMoments circular_moments(const CircularDensity& density);

struct InformationReport {
  double entropy = 0.0;
  double mutual_information = 0.0;
  double fisher_information = 0.0;
  double mean_resultant_length = 0.0;
  double mean_direction = 0.0;
  double circular_variance = 1.0;
  double holevo_variance = 0.0;
};

InformationReport information_report(const StateVector& state, std::size_t grid_size);

}  // namespace bayesphase
