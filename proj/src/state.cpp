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

#include "bayesphase/state.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bayesphase/errors.hpp"
#include "bayesphase/rng.hpp"

namespace bayesphase {

PhotonConstraint::PhotonConstraint(int n) : max_photon(n) {
  if (n < 0) {
    throw Error(ErrorKind::Configuration,
                "max_photon must be >= 0, got " + std::to_string(n));
  }
}

StateVector StateVector::normalize(std::span<const Amplitude> raw) {
  if (raw.empty()) {
    throw Error(ErrorKind::InvalidState, "state has no amplitudes");
  }
  double norm2 = 0.0;
  for (std::size_t n = 0; n < raw.size(); ++n) {
    if (!std::isfinite(raw[n].real()) || !std::isfinite(raw[n].imag())) {
      throw Error(ErrorKind::InvalidState,
                  "amplitude " + std::to_string(n) + " is not finite");
    }
    norm2 += std::norm(raw[n]);
  }
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw Error(ErrorKind::InvalidState, "state amplitudes are all zero");
  }
  std::vector<Amplitude> amps(raw.begin(), raw.end());
  // Leave already-normalized input untouched so serialized states re-read
  // bit-identically.
  if (std::abs(norm2 - 1.0) > 1e-14) {
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto& c : amps) c *= scale;
  }
  return StateVector(std::move(amps));
}

double StateVector::norm_squared() const noexcept {
  double s = 0.0;
  for (const auto& c : amplitudes_) s += std::norm(c);
  return s;
}

StateVector normalize(std::span<const Amplitude> raw) {
  return StateVector::normalize(raw);
}

StateVector fock_state(int n, int max_photon) {
  const PhotonConstraint constraint(max_photon);
  if (n < 0 || n > max_photon) {
    throw Error(ErrorKind::Index, "Fock index " + std::to_string(n) +
                                      " outside [0, " + std::to_string(max_photon) + "]");
  }
  std::vector<Amplitude> amps(static_cast<std::size_t>(constraint.dimension()));
  amps[static_cast<std::size_t>(n)] = 1.0;
  return StateVector::normalize(amps);
}

StateVector sine_state(int max_photon) {
  const PhotonConstraint constraint(max_photon);
  const double denom = static_cast<double>(max_photon + 2);
  const double scale = std::sqrt(2.0 / denom);
  std::vector<Amplitude> amps(static_cast<std::size_t>(constraint.dimension()));
  for (std::size_t n = 0; n < amps.size(); ++n) {
    amps[n] = scale * std::sin(std::numbers::pi * static_cast<double>(n + 1) / denom);
  }
  return StateVector::normalize(amps);
}

StateVector random_state(int max_photon, std::uint64_t seed) {
  Engine rng = substream(seed, 0);
  return random_state(max_photon, rng);
}

StateVector random_state(int max_photon, Engine& rng) {
  const PhotonConstraint constraint(max_photon);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Amplitude> amps(static_cast<std::size_t>(constraint.dimension()));
  for (auto& c : amps) {
    const double re = normal(rng);
    const double im = normal(rng);
    c = Amplitude(re, im);
  }
  return StateVector::normalize(amps);
}

StateVector gauge_transform(const StateVector& state, double alpha, double beta) {
  std::vector<Amplitude> amps(state.amplitudes().begin(), state.amplitudes().end());
  for (std::size_t n = 0; n < amps.size(); ++n) {
    amps[n] *= std::polar(1.0, alpha + static_cast<double>(n) * beta);
  }
  return StateVector::normalize(amps);
}

double distance(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::InvalidState, "states have different cutoffs");
  }
  double s = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) s += std::norm(a[n] - b[n]);
  return std::sqrt(s);
}

}  // namespace bayesphase
