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

// Test-only reference computations. Everything here is written from the
// defining formulas with plain loops and std::exp, sharing no code with the
// library, so library results can be checked against it.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double density(const std::vector<cplx>& c, double phi) {
  cplx g = 0.0;
  double norm = 0.0;
  for (std::size_t n = 0; n < c.size(); ++n) {
    g += c[n] * std::exp(cplx(0.0, static_cast<double>(n) * phi));
    norm += std::norm(c[n]);
  }
  return std::norm(g) / (kTwoPi * norm);
}

/// ln 2pi + integral P ln P by the midpoint rule.
inline double information(const std::vector<cplx>& c, int grid) {
  double sum = 0.0;
  for (int k = 0; k < grid; ++k) {
    const double p = density(c, kTwoPi * k / grid);
    if (p > 1e-300) sum += p * std::log(p);
  }
  return std::log(kTwoPi) + sum * kTwoPi / grid;
}

inline double information_real(std::initializer_list<double> amps, int grid) {
  std::vector<cplx> c(amps.begin(), amps.end());
  return information(c, grid);
}

/// Maximum of I over (cos t, sin t), t on a uniform 10^4-step scan of
/// [0, pi/2]. Returns (value, t).
inline std::pair<double, double> n1_angle_scan(int grid = 4096, int steps = 10000) {
  std::pair<double, double> best{-1.0, 0.0};
  for (int i = 0; i <= steps; ++i) {
    const double t = 0.5 * std::numbers::pi * i / steps;
    const double v = information_real({std::cos(t), std::sin(t)}, grid);
    if (v > best.first) best = {v, t};
  }
  return best;
}

inline std::vector<cplx> spherical3(double t, double s) {
  return {std::cos(t), std::sin(t) * std::cos(s), std::sin(t) * std::sin(s)};
}

/// Maximum of I over real nonnegative amplitudes on the octant of S^2:
/// 300x300 angle grid (coarse quadrature), then compass search at full grid.
inline double n2_grid_refine(int grid = 4096) {
  const double quarter = 0.5 * std::numbers::pi;
  double best = -1.0, bt = 0.0, bs = 0.0;
  for (int i = 0; i < 300; ++i) {
    for (int j = 0; j < 300; ++j) {
      const double t = quarter * i / 299.0, s = quarter * j / 299.0;
      const double v = information(spherical3(t, s), 512);
      if (v > best) best = v, bt = t, bs = s;
    }
  }
  best = information(spherical3(bt, bs), grid);
  for (double step = quarter / 299.0; step > 1e-9; step *= 0.5) {
    bool improved = true;
    while (improved) {
      improved = false;
      const double moves[4][2] = {{step, 0}, {-step, 0}, {0, step}, {0, -step}};
      for (const auto& m : moves) {
        const double v = information(spherical3(bt + m[0], bs + m[1]), grid);
        if (v > best) {
          best = v, bt += m[0], bs += m[1];
          improved = true;
        }
      }
    }
  }
  return best;
}

/// Central finite-difference gradient of I(c/|c|) (density() normalizes) with respect to
/// (Re c_n, Im c_n), returned as d/dRe + i d/dIm.
inline std::vector<cplx> fd_gradient(const std::vector<cplx>& c, int grid, double h = 1e-6) {
  std::vector<cplx> grad(c.size());
  for (std::size_t n = 0; n < c.size(); ++n) {
    for (int part = 0; part < 2; ++part) {
      const cplx dir = part == 0 ? cplx(h, 0.0) : cplx(0.0, h);
      auto plus = c, minus = c;
      plus[n] += dir;
      minus[n] -= dir;
      const double d = (information(plus, grid) - information(minus, grid)) / (2 * h);
      grad[n] += part == 0 ? cplx(d, 0.0) : cplx(0.0, d);
    }
  }
  return grad;
}

/// One-sample Kolmogorov-Smirnov statistic against Uniform[0, 2pi).
inline double ks_uniform(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = xs[i] / kTwoPi;
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

}  // namespace oracle
