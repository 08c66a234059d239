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

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace bayesphase {

using Amplitude = std::complex<double>;

/// Hard cutoff on photon number; the feasible set is span{|0>, ..., |N>}.
struct PhotonConstraint {
  int max_photon = 0;

  explicit PhotonConstraint(int n);
  int dimension() const noexcept { return max_photon + 1; }
};

/// Pure single-mode state truncated to the Fock basis |0>..|N>.
///
/// Always unit norm: the only ways to obtain one are the factory functions
/// below, each of which normalizes.
class StateVector {
 public:
  static StateVector normalize(std::span<const Amplitude> raw);

  int max_photon() const noexcept {
    return static_cast<int>(amplitudes_.size()) - 1;
  }
  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
  const Amplitude& operator[](std::size_t n) const { return amplitudes_[n]; }
  std::size_t size() const noexcept { return amplitudes_.size(); }

  double norm_squared() const noexcept;

 private:
  explicit StateVector(std::vector<Amplitude> amps) : amplitudes_(std::move(amps)) {}

  std::vector<Amplitude> amplitudes_;
};

StateVector normalize(std::span<const Amplitude> raw);
StateVector fock_state(int n, int max_photon);

// c_n = sqrt(2/(N+2)) sin(pi (n+1)/(N+2)), the minimum Holevo-variance profile.
StateVector sine_state(int max_photon);

// I.i.d. complex standard normal amplitudes, normalized. Bit-identical for
// equal (max_photon, seed).
StateVector random_state(int max_photon, std::uint64_t seed);
StateVector random_state(int max_photon, std::mt19937_64& rng);

/// c_n -> exp(i (alpha + n beta)) c_n. The canonical phase density becomes
/// P'(delta) = P(delta + beta): a rigid shift, shape unchanged.
StateVector gauge_transform(const StateVector& state, double alpha, double beta);

/// Euclidean distance sqrt(sum |a_n - b_n|^2); states must share a cutoff.
double distance(const StateVector& a, const StateVector& b);

}  // namespace bayesphase
