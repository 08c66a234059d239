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
#include <cstdint>
#include <span>
#include <vector>

#include "bayesphase/measurement.hpp"
#include "bayesphase/state.hpp"

namespace bayesphase {

struct OptimizerConfig {
  int max_photon = 0;
  std::size_t grid_size = kDefaultGridSize;
  int starts = 16;
  double step_init = 0.1;
  double convergence_tol = 1e-10;
  int max_iters = 10000;
  std::uint64_t seed = 0;

  /// Throws ErrorKind::Configuration on an invalid field.
  void validate() const;
};

/// Wirtinger derivative dI/d(conj c_n) of I = ln 2pi - H(P), where P is
/// built from the amplitudes as given (no implicit normalization).
std::vector<Amplitude> objective_gradient(const StateVector& state,
                                          std::size_t grid_size);

/// Real gradient (as d/dRe + i d/dIm, i.e. twice the Wirtinger derivative)
/// projected onto the tangent space of the unit sphere at `state`.
std::vector<Amplitude> tangential_gradient(const StateVector& state,
                                           std::size_t grid_size);

/// Representative of the gauge orbit with zero mean direction of the
/// canonical density and the first nonzero amplitude real and positive.
StateVector gauge_fix(const StateVector& state);

/// Outcome of one projected-gradient ascent run.
struct AscentRun {
  StateVector state;
  double information = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> trace;  // objective after every accepted step, starting value first
};

/// Projected gradient ascent on the unit sphere from `start`: step along the
/// tangential gradient, renormalize, halve the step until the objective
/// increases. Stops when an accepted step gains less than convergence_tol.
AscentRun ascend(const StateVector& start, const OptimizerConfig& config);

struct OptimizationResult {
  StateVector best_state;
  double best_information = 0.0;
  std::vector<double> per_start_values;
  std::vector<int> iterations_used;
  std::vector<bool> per_start_converged;
  bool converged = false;  // of the winning start
  int best_start = 0;
};

/// Multi-start maximization of mutual_information_single over states with
/// the configured cutoff. Start s begins at random_state drawn from the
/// (seed, s) substream; the result does not depend on thread scheduling.
OptimizationResult optimize_state(const OptimizerConfig& config);

/// Same as optimize_state with extra deterministic starts appended after the
/// random ones (used by bound_sweep for warm starts).
OptimizationResult optimize_state(const OptimizerConfig& config,
                                  std::span<const StateVector> extra_starts);

struct SweepEntry {
  int max_photon = 0;
  double information = 0.0;
  bool converged = false;
  StateVector best_state;
};

/// I_opt(N) for N = 0..n_max. The optimum for N-1, padded with a zero
/// amplitude, is added as a start for N, so the curve is nondecreasing.
std::vector<SweepEntry> bound_sweep(int n_max, const OptimizerConfig& config_template);

}  // namespace bayesphase
