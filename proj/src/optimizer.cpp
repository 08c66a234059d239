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

#include "bayesphase/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "bayesphase/circular.hpp"
#include "bayesphase/density.hpp"
#include "bayesphase/errors.hpp"
#include "bayesphase/rng.hpp"
#include "parallel.hpp"

namespace bayesphase {

namespace {

constexpr double kNegligibleDensity = 1e-300;
constexpr double kMinStep = 1e-16;
constexpr double kMaxStep = 1e3;

// Objective and gradient on a fixed grid, with the twiddles e^{i phi_k}
// tabulated once.
class Workspace {
 public:
  explicit Workspace(std::size_t grid_size) : twiddle_(grid_size), field_(grid_size) {
    validate_grid_size(grid_size);
    const double h = kTwoPi / static_cast<double>(grid_size);
    for (std::size_t k = 0; k < grid_size; ++k) {
      twiddle_[k] = std::polar(1.0, h * static_cast<double>(k));
    }
  }

  double cell() const { return kTwoPi / static_cast<double>(twiddle_.size()); }

  // g_k = sum_n c_n z_k^n
  void evaluate_field(std::span<const Amplitude> amps) {
    for (std::size_t k = 0; k < twiddle_.size(); ++k) {
      Amplitude g = amps.back();
      for (std::size_t n = amps.size() - 1; n-- > 0;) g = g * twiddle_[k] + amps[n];
      field_[k] = g;
    }
  }

  // ln 2pi + sum P ln P * h with P = |g|^2 / 2pi
  double information(std::span<const Amplitude> amps) {
    evaluate_field(amps);
    double sum = 0.0;
    for (const auto& g : field_) {
      const double p = std::norm(g) / kTwoPi;
      if (p > kNegligibleDensity) sum += p * std::log(p);
    }
    return kLogTwoPi + sum * cell();
  }

  // dI/d(conj c_n) = (h / 2pi) sum_k (1 + ln P_k) g_k conj(z_k)^n
  std::vector<Amplitude> wirtinger_gradient(std::span<const Amplitude> amps) {
    evaluate_field(amps);
    std::vector<Amplitude> grad(amps.size());
    for (std::size_t k = 0; k < twiddle_.size(); ++k) {
      const double p = std::norm(field_[k]) / kTwoPi;
      if (!(p > kNegligibleDensity)) continue;
      const Amplitude weight = (1.0 + std::log(p)) * field_[k];
      const Amplitude step = std::conj(twiddle_[k]);
      Amplitude power = 1.0;
      for (auto& w : grad) {
        w += weight * power;
        power *= step;
      }
    }
    const double scale = cell() / kTwoPi;
    for (auto& w : grad) w *= scale;
    return grad;
  }

  std::vector<Amplitude> tangential(std::span<const Amplitude> amps) {
    auto grad = wirtinger_gradient(amps);
    double radial = 0.0;
    for (std::size_t n = 0; n < grad.size(); ++n) {
      grad[n] *= 2.0;
      radial += (std::conj(amps[n]) * grad[n]).real();
    }
    for (std::size_t n = 0; n < grad.size(); ++n) grad[n] -= radial * amps[n];
    return grad;
  }

 private:
  std::vector<Amplitude> twiddle_;
  std::vector<Amplitude> field_;
};

double norm(std::span<const Amplitude> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

StateVector padded(const StateVector& state, int max_photon) {
  std::vector<Amplitude> amps(static_cast<std::size_t>(max_photon + 1));
  std::copy(state.amplitudes().begin(), state.amplitudes().end(), amps.begin());
  return normalize(amps);
}

}  // namespace

void OptimizerConfig::validate() const {
  PhotonConstraint{max_photon};
  validate_grid_size(grid_size);
  if (starts < 1) throw Error(ErrorKind::Configuration, "starts must be >= 1");
  if (max_iters < 1) throw Error(ErrorKind::Configuration, "max_iters must be >= 1");
  if (!(convergence_tol > 0.0)) {
    throw Error(ErrorKind::Configuration, "convergence_tol must be > 0");
  }
  if (!(step_init > 0.0) || !std::isfinite(step_init)) {
    throw Error(ErrorKind::Configuration, "step_init must be finite and > 0");
  }
}

std::vector<Amplitude> objective_gradient(const StateVector& state, std::size_t grid_size) {
  Workspace ws(grid_size);
  return ws.wirtinger_gradient(state.amplitudes());
}

std::vector<Amplitude> tangential_gradient(const StateVector& state, std::size_t grid_size) {
  Workspace ws(grid_size);
  return ws.tangential(state.amplitudes());
}

StateVector gauge_fix(const StateVector& state) {
  const auto c = state.amplitudes();
  // First trigonometric moment of the canonical density: sum_m c_m conj(c_{m+1}).
  Amplitude moment = 0.0;
  for (std::size_t m = 0; m + 1 < c.size(); ++m) moment += c[m] * std::conj(c[m + 1]);
  const double beta = std::abs(moment) > 1e-14 ? std::arg(moment) : 0.0;

  double alpha = 0.0;
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (std::abs(c[n]) > 1e-12) {
      alpha = -(std::arg(c[n]) + static_cast<double>(n) * beta);
      break;
    }
  }
  return gauge_transform(state, alpha, beta);
}

AscentRun ascend(const StateVector& start, const OptimizerConfig& config) {
  config.validate();
  if (start.max_photon() != config.max_photon) {
    throw Error(ErrorKind::Configuration, "start state cutoff does not match max_photon");
  }
  Workspace ws(config.grid_size);
  StateVector current = start;
  double value = ws.information(current.amplitudes());
  AscentRun run{current, value, 0, false, {value}};

  double step = config.step_init;
  std::vector<Amplitude> trial(current.size());
  for (int it = 1; it <= config.max_iters; ++it) {
    run.iterations = it;
    const auto grad = ws.tangential(current.amplitudes());
    if (!(norm(grad) > 0.0)) {
      run.converged = true;
      break;
    }
    bool accepted = false;
    double candidate_value = value;
    std::optional<StateVector> candidate;
    for (double s = step; s >= kMinStep; s *= 0.5) {
      for (std::size_t n = 0; n < trial.size(); ++n) trial[n] = current[n] + s * grad[n];
      candidate = normalize(trial);
      candidate_value = ws.information(candidate->amplitudes());
      if (candidate_value > value) {
        accepted = true;
        step = s;
        break;
      }
    }
    if (!accepted) {
      // No increase at any step length: stationary to working precision.
      run.converged = true;
      break;
    }
    const double gain = candidate_value - value;
    current = *candidate;
    value = candidate_value;
    run.trace.push_back(value);
    step = std::min(2.0 * step, kMaxStep);
    if (gain < config.convergence_tol) {
      run.converged = true;
      break;
    }
  }
  run.state = current;
  run.information = value;
  return run;
}

OptimizationResult optimize_state(const OptimizerConfig& config) {
  return optimize_state(config, {});
}

OptimizationResult optimize_state(const OptimizerConfig& config,
                                  std::span<const StateVector> extra_starts) {
  config.validate();
  const std::size_t random_starts = static_cast<std::size_t>(config.starts);
  const std::size_t total = random_starts + extra_starts.size();
  std::vector<std::optional<AscentRun>> runs(total);
  detail::parallel_for(total, [&](std::size_t s) {
    StateVector start = [&] {
      if (s < random_starts) {
        Engine rng = substream(config.seed, s);
        return random_state(config.max_photon, rng);
      }
      return extra_starts[s - random_starts];
    }();
    runs[s] = ascend(start, config);
  });

  // Every start is reported by the value of its gauge-fixed final state, which is
  // the state a caller receives. The gauge shift moves the density off the
  // quadrature nodes and perturbs the sum at the 1e-10 level, so the values are
  // re-evaluated rather than carried over from the ascent. With N = 0 the only
  // feasible state is [1], whose information is exactly zero.
  std::vector<StateVector> fixed;
  std::vector<double> values;
  for (const auto& run : runs) {
    fixed.push_back(gauge_fix(run->state));
    values.push_back(config.max_photon == 0
                         ? 0.0
                         : mutual_information_single(fixed.back(), config.grid_size));
  }
  std::size_t best = 0;
  for (std::size_t s = 1; s < total; ++s) {
    if (values[s] > values[best]) best = s;
  }
  OptimizationResult result{.best_state = fixed[best],
                            .best_information = values[best],
                            .per_start_values = values,
                            .iterations_used = {},
                            .per_start_converged = {}};
  for (const auto& run : runs) {
    result.iterations_used.push_back(run->iterations);
    result.per_start_converged.push_back(run->converged);
  }
  result.converged = runs[best]->converged;
  result.best_start = static_cast<int>(best);
  return result;
}

std::vector<SweepEntry> bound_sweep(int n_max, const OptimizerConfig& config_template) {
  if (n_max < 0) throw Error(ErrorKind::Configuration, "n_max must be >= 0");
  std::vector<SweepEntry> entries;
  for (int n = 0; n <= n_max; ++n) {
    OptimizerConfig config = config_template;
    config.max_photon = n;
    std::vector<StateVector> warm;
    if (!entries.empty()) warm.push_back(padded(entries.back().best_state, n));
    auto result = optimize_state(config, warm);
    entries.push_back({n, result.best_information, result.converged,
                       std::move(result.best_state)});
  }
  return entries;
}

}  // namespace bayesphase
