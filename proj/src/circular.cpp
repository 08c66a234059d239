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

#include "bayesphase/circular.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "bayesphase/errors.hpp"
#include "bayesphase/measurement.hpp"

namespace bayesphase {

namespace {

constexpr double kNegligibleDensity = 1e-300;
constexpr double kFisherZeroGuard = 1e-14;
constexpr double kNegligibleMoment = 1e-9;

// Rotates the state so that its density is sampled at nodes fixed relative to
// the density itself rather than to the phase origin. A gauge change
// c_n -> e^{i(alpha + n beta)} c_n shifts the density rigidly by beta and
// rotates the k-th trigonometric moment sum_m c_m conj(c_{m+k}) by e^{-ik beta},
// so anchoring at arg(moment_k) / k (first k with a non-negligible moment) makes
// the quadrature sums for I and F identical across a gauge orbit. Without it,
// sub-cell shifts move the sums by up to 1e-10 (exact zeros, where p ln p is
// not smooth) or more (Fisher integrands with unresolved near-zero dips).
// States with real nonnegative amplitudes have anchor 0 and are unchanged.
StateVector quadrature_frame(const StateVector& state) {
  const auto c = state.amplitudes();
  for (std::size_t k = 1; k < c.size(); ++k) {
    Amplitude moment = 0.0;
    for (std::size_t m = 0; m + k < c.size(); ++m) moment += c[m] * std::conj(c[m + k]);
    if (std::abs(moment) > kNegligibleMoment) {
      const double anchor = std::arg(moment) / static_cast<double>(k);
      return anchor == 0.0 ? state : gauge_transform(state, 0.0, anchor);
    }
  }
  return state;  // flat density (Fock state): every shift is equivalent
}

}  // namespace

CircularDensity uniform_prior(std::size_t grid_size) {
  validate_grid_size(grid_size);
  return CircularDensity::from_log_values(std::vector<double>(grid_size, -kLogTwoPi));
}

CircularDensity posterior_update(const CircularDensity& prior, const StateVector& state,
                                 double outcome) {
  const std::size_t g = prior.grid_size();
  try {
    if (const auto& logs = prior.log_values()) {
      std::vector<double> next(g);
      for (std::size_t k = 0; k < g; ++k) {
        const double like = likelihood_density(state, outcome - prior.node(k));
        next[k] = (*logs)[k] + (like > 0.0 ? std::log(like)
                                           : -std::numeric_limits<double>::infinity());
      }
      return CircularDensity::from_log_values(std::move(next));
    }
    std::vector<double> next(g);
    const auto p = prior.values();
    for (std::size_t k = 0; k < g; ++k) {
      next[k] = p[k] * likelihood_density(state, outcome - prior.node(k));
    }
    return CircularDensity::from_values(std::move(next));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegeneratePosterior) throw;
    std::ostringstream msg;
    msg.precision(17);
    msg << "posterior vanishes on the grid after outcome " << outcome;
    throw Error(ErrorKind::DegeneratePosterior, msg.str());
  }
}

double entropy(const CircularDensity& density) {
  double sum = 0.0;
  for (double p : density.values()) {
    if (p > kNegligibleDensity) sum -= p * std::log(p);
  }
  return sum * density.cell_width();
}

double mutual_information_single(const StateVector& state, std::size_t grid_size) {
  return kLogTwoPi - entropy(density_grid(quadrature_frame(state), grid_size));
}

double fisher_information(const StateVector& state, std::size_t grid_size) {
  validate_grid_size(grid_size);
  const StateVector framed = quadrature_frame(state);
  const auto amps = framed.amplitudes();
  const double h = kTwoPi / static_cast<double>(grid_size);
  double sum = 0.0;
  for (std::size_t k = 0; k < grid_size; ++k) {
    const Amplitude z = std::polar(1.0, h * static_cast<double>(k));
    // f = g / sqrt(2 pi) and f' = g' / sqrt(2 pi), both by Horner's rule.
    Amplitude g = amps.back();
    Amplitude dg = Amplitude(0.0, static_cast<double>(amps.size() - 1)) * amps.back();
    for (std::size_t n = amps.size() - 1; n-- > 0;) {
      g = g * z + amps[n];
      dg = dg * z + Amplitude(0.0, static_cast<double>(n)) * amps[n];
    }
    const double modulus = std::norm(g) / kTwoPi;
    if (modulus < kFisherZeroGuard) {
      sum += 4.0 * std::norm(dg) / kTwoPi;
    } else {
      const double re = (std::conj(g) * dg).real();
      sum += 4.0 * re * re / std::norm(g) / kTwoPi;
    }
  }
  return sum * h;
}

CircularMoments circular_moments(const CircularDensity& density) {
  std::complex<double> z = 0.0;
  const auto p = density.values();
  for (std::size_t k = 0; k < p.size(); ++k) {
    z += p[k] * std::polar(1.0, density.node(k));
  }
  z *= density.cell_width();
  CircularMoments m;
  m.mean_resultant_length = std::abs(z);
  m.mean_direction = wrap_angle(std::arg(z));
  m.circular_variance = 1.0 - m.mean_resultant_length;
  m.holevo_variance = m.mean_resultant_length < 1e-12
                          ? std::numeric_limits<double>::infinity()
                          : 1.0 / (m.mean_resultant_length * m.mean_resultant_length) - 1.0;
  return m;
}

InformationReport information_report(const StateVector& state, std::size_t grid_size) {
  const CircularDensity density = density_grid(state, grid_size);
  const CircularMoments m = circular_moments(density);
  InformationReport r;
  r.entropy = kLogTwoPi - mutual_information_single(state, grid_size);
  r.mutual_information = kLogTwoPi - r.entropy;
  r.fisher_information = fisher_information(state, grid_size);
  r.mean_resultant_length = m.mean_resultant_length;
  r.mean_direction = m.mean_direction;
  r.circular_variance = m.circular_variance;
  r.holevo_variance = m.holevo_variance;
  return r;
}

}  // namespace bayesphase
