// Copyright 2026 The tlsg authors
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

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tlsg {

// Frequencies are angular (rad/us); 2*pi*MHz values feed in directly.

inline constexpr double kTwoPi = 6.283185307179586;
/// Van der Waals coefficient, 2*pi x 862690 MHz um^6.
inline constexpr double kC6 = kTwoPi * 862690.0;
/// Paper-default maximum Rabi frequency, 2*pi x 4 MHz.
inline constexpr double kDefaultOmegaMax = kTwoPi * 4.0;

/// Piecewise-linear annealing pulse: Omega ramps 0 -> Omega_max -> 0 while
/// the detuning sweeps -Delta_max -> +Delta_max over the total time T.
struct PulseSchedule {
  double total_time = 1.0;  // us
  double omega_max = kDefaultOmegaMax;
  double delta_max = 5.0 * kDefaultOmegaMax;
  std::vector<std::pair<double, double>> omega_points;  // (t, Omega)
  std::vector<std::pair<double, double>> delta_points;  // (t, Delta)

  /// Ebadi-style default ramps: Omega up over the first tenth, flat, down
  /// over the last tenth; Delta swept linearly between the holds. The
  /// breakpoint fractions are digitized conventions, exposed here so
  /// configurations can override them.
  static PulseSchedule standard(double T, double omega_max = kDefaultOmegaMax,
                                double delta_factor = 5.0,
                                double ramp_fraction = 0.1) {
    PulseSchedule p;
    p.total_time = T;
    p.omega_max = omega_max;
    p.delta_max = delta_factor * omega_max;
    double r = ramp_fraction * T;
    p.omega_points = {{0.0, 0.0}, {r, omega_max}, {T - r, omega_max}, {T, 0.0}};
    p.delta_points = {{0.0, -p.delta_max}, {r, -p.delta_max},
                      {T - r, p.delta_max}, {T, p.delta_max}};
    p.validate();
    return p;
  }

  void validate() const {
    if (!(total_time > 0)) throw std::invalid_argument("pulse needs T > 0");
    for (const auto* pts : {&omega_points, &delta_points}) {
      if (pts->size() < 2) throw std::invalid_argument("need >= 2 breakpoints");
      for (std::size_t i = 1; i < pts->size(); ++i)
        if ((*pts)[i].first < (*pts)[i - 1].first)
          throw std::invalid_argument("breakpoints must be time-ordered");
    }
    if (std::abs(omega_points.front().second) > 1e-12 ||
        std::abs(omega_points.back().second) > 1e-12)
      throw std::invalid_argument("Omega must vanish at both ends");
    if (delta_points.front().second > delta_points.back().second)
      throw std::invalid_argument("Delta must sweep upward");
  }

  static double interp(const std::vector<std::pair<double, double>>& pts, double t) {
    if (t <= pts.front().first) return pts.front().second;
    if (t >= pts.back().first) return pts.back().second;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (t <= pts[i].first) {
        double t0 = pts[i - 1].first, t1 = pts[i].first;
        double v0 = pts[i - 1].second, v1 = pts[i].second;
        if (t1 == t0) return v1;
        return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
      }
    }
    return pts.back().second;
  }

  double omega(double t) const { return interp(omega_points, t); }
  double delta(double t) const { return interp(delta_points, t); }
};

}  // namespace tlsg
