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
#include <optional>
#include <span>
#include <vector>

#include "bayesphase/measurement.hpp"
#include "bayesphase/state.hpp"

namespace bayesphase {

/// M * I_1: subadditivity bound for M conditionally independent outcomes.
double chain_upper_bound(const StateVector& state, int modes, std::size_t grid_size);

/// ln 2pi + 1/2 ln(M F / (2 pi e)). Throws ErrorKind::UndefinedAsymptote
/// for F <= 0.
double asymptotic_information(double fisher, int modes);

/// Throws ErrorKind::Guard when the grid is too coarse for M outcomes
/// (M > G/16).
void check_mode_guard(int modes, std::size_t grid_size);

struct MonteCarloEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  int trials = 0;
};

/// Estimates I_M = ln 2pi - E[H(posterior after M outcomes)] with theta
/// uniform. Trial t draws from the (seed, t) substream; the mean is reduced
/// in trial order.
MonteCarloEstimate monte_carlo_information(const StateVector& state, int modes,
                                           int trials, std::size_t grid_size,
                                           std::uint64_t seed);

struct BoundReport {
  int modes = 0;
  double mc_information = 0.0;
  double mc_stderr = 0.0;
  int mc_trials = 0;
  double chain_upper_bound = 0.0;
  std::optional<double> asymptotic_value;  // engaged iff fisher > 1e-12
  double fisher = 0.0;
  double single_info = 0.0;

  /// mc <= chain + 3 sigma
  bool within_chain_bound() const noexcept;
  /// mc <= ln 2pi + 1e-9. Only meaningful while the posterior differential
  /// entropy is nonnegative; it fails for sharp posteriors.
  bool within_prior_entropy() const noexcept;
};

BoundReport bound_report(const StateVector& state, int modes, int trials,
                         std::size_t grid_size, std::uint64_t seed);

/// One report per entry of `modes_list`, all sharing `seed`.
std::vector<BoundReport> bound_curve(const StateVector& state,
                                     std::span<const int> modes_list, int trials,
                                     std::size_t grid_size, std::uint64_t seed);

}  // namespace bayesphase
