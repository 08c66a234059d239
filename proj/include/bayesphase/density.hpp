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
#include <optional>
#include <span>
#include <vector>

namespace bayesphase {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kLogTwoPi = 1.8378770664093454835606594728112;

/// Throws a configuration error unless g is a power of two >= 64.
void validate_grid_size(std::size_t grid_size);

/// Probability density on [0, 2pi) sampled at phi_k = 2 pi k / G.
///
/// Values are normalized under the periodic midpoint rule. When log_values
/// is engaged it holds the log-density up to an additive constant and is the
/// authoritative representation for repeated Bayesian updates.
class CircularDensity {
 public:
  /// Normalizes `values` (midpoint rule). Negative round-off above -1e-15
  /// is clamped to zero; anything more negative is rejected.
  static CircularDensity from_values(std::vector<double> values);

  /// exp(log_values - max) followed by normalization; keeps the logs.
  static CircularDensity from_log_values(std::vector<double> log_values);

  std::size_t grid_size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  const std::optional<std::vector<double>>& log_values() const noexcept {
    return log_values_;
  }
  double cell_width() const noexcept {
    return kTwoPi / static_cast<double>(values_.size());
  }
  double node(std::size_t k) const noexcept {
    return kTwoPi * static_cast<double>(k) / static_cast<double>(values_.size());
  }
  /// sum(values) * 2 pi / G
  double integral() const noexcept;

 private:
  CircularDensity(std::vector<double> values,
                  std::optional<std::vector<double>> log_values)
      : values_(std::move(values)), log_values_(std::move(log_values)) {}

  std::vector<double> values_;
  std::optional<std::vector<double>> log_values_;
};

}  // namespace bayesphase
