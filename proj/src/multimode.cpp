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

#include "bayesphase/multimode.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bayesphase/circular.hpp"
#include "bayesphase/errors.hpp"
#include "bayesphase/rng.hpp"
#include "parallel.hpp"

namespace bayesphase {

double chain_upper_bound(const StateVector& state, int modes, std::size_t grid_size) {
  if (modes < 1) throw Error(ErrorKind::Configuration, "modes must be >= 1");
  return static_cast<double>(modes) * mutual_information_single(state, grid_size);
}

double asymptotic_information(double fisher, int modes) {
  if (!(fisher > 0.0)) {
    throw Error(ErrorKind::UndefinedAsymptote,
                "asymptote undefined for Fisher information " + std::to_string(fisher));
  }
  if (modes < 1) throw Error(ErrorKind::Configuration, "modes must be >= 1");
  const double two_pi_e = kTwoPi * std::numbers::e;
  return kLogTwoPi + 0.5 * std::log(static_cast<double>(modes) * fisher / two_pi_e);
}

void check_mode_guard(int modes, std::size_t grid_size) {
  if (modes < 1) throw Error(ErrorKind::Configuration, "modes must be >= 1");
  if (static_cast<std::size_t>(modes) * 16 > grid_size) {
    throw Error(ErrorKind::Guard,
                "M = " + std::to_string(modes) + " exceeds G/16 = " +
                    std::to_string(grid_size / 16) +
                    ": the posterior would be under-resolved; use a grid of at least " +
                    std::to_string(static_cast<std::size_t>(modes) * 16) + " points");
  }
}

MonteCarloEstimate monte_carlo_information(const StateVector& state, int modes, int trials,
                                           std::size_t grid_size, std::uint64_t seed) {
  validate_grid_size(grid_size);
  check_mode_guard(modes, grid_size);
  if (trials < 2) throw Error(ErrorKind::Configuration, "trials must be >= 2");

  const PhaseSampler sampler(state, grid_size);
  std::vector<double> info(static_cast<std::size_t>(trials));
  detail::parallel_for(info.size(), [&](std::size_t t) {
    Engine rng = substream(seed, t);
    const double theta = kTwoPi * uniform01(rng);
    CircularDensity posterior = uniform_prior(grid_size);
    try {
      for (int j = 0; j < modes; ++j) {
        posterior = posterior_update(posterior, state, sampler.sample(rng, theta));
      }
    } catch (const Error& e) {
      throw Error(e.kind(), "trial " + std::to_string(t) + ": " + e.what());
    }
    info[t] = kLogTwoPi - entropy(posterior);
  });

  double sum = 0.0;
  for (double x : info) sum += x;
  const double mean = sum / static_cast<double>(trials);
  double ss = 0.0;
  for (double x : info) ss += (x - mean) * (x - mean);
  const double variance = ss / static_cast<double>(trials - 1);
  return {mean, std::sqrt(variance / static_cast<double>(trials)), trials};
}

bool BoundReport::within_chain_bound() const noexcept {
  return mc_information <= chain_upper_bound + 3.0 * mc_stderr;
}

bool BoundReport::within_prior_entropy() const noexcept {
  return mc_information <= kLogTwoPi + 1e-9;
}

BoundReport bound_report(const StateVector& state, int modes, int trials,
                         std::size_t grid_size, std::uint64_t seed) {
  validate_grid_size(grid_size);
  check_mode_guard(modes, grid_size);
  BoundReport r;
  r.modes = modes;
  r.single_info = mutual_information_single(state, grid_size);
  r.chain_upper_bound = static_cast<double>(modes) * r.single_info;
  r.fisher = fisher_information(state, grid_size);
  if (r.fisher > 1e-12) r.asymptotic_value = asymptotic_information(r.fisher, modes);
  const auto mc = monte_carlo_information(state, modes, trials, grid_size, seed);
  r.mc_information = mc.mean;
  r.mc_stderr = mc.standard_error;
  r.mc_trials = mc.trials;
  return r;
}

std::vector<BoundReport> bound_curve(const StateVector& state, std::span<const int> modes_list,
                                     int trials, std::size_t grid_size, std::uint64_t seed) {
  for (int m : modes_list) check_mode_guard(m, grid_size);
  std::vector<BoundReport> out;
  out.reserve(modes_list.size());
  for (int m : modes_list) out.push_back(bound_report(state, m, trials, grid_size, seed));
  return out;
}

}  // namespace bayesphase
