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

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "tlsg/geometry.hpp"
#include "tlsg/graph.hpp"
#include "tlsg/pulse.hpp"
#include "tlsg/util.hpp"

namespace tlsg {

// Exact dense state-vector simulation of the Rydberg Hamiltonian
//
//   H = sum_v (Omega/2) X_v - sum_v Delta_v n_v + sum_{u<v} C6/r_uv^6 n_u n_v
//
// with the full 1/r^6 tail on every pair (no blockade truncation: the
// long-tail effect is exactly what separates the triangular and king
// encodings). Per-atom detunings scale with the relative weights.
//
// Hamiltonian application may parallelize over basis blocks; evolution of a
// single state is sequential in time. Distinct (instance, schedule) runs
// are embarrassingly parallel.

inline constexpr int kStateVectorCap = 18;

struct RydbergInstance {
  std::vector<PhysicalCoord> coords;  // um
  std::vector<double> rel_weight;     // detuning ratio per atom
  std::vector<std::pair<int, int>> edges;  // unit-disk edges of the layout
  double blockade_radius = 0.0;       // um
  double spacing = 0.0;               // um
  double omega_max = kDefaultOmegaMax;
  LatticeKind family = LatticeKind::triangular;

  int n() const { return static_cast<int>(coords.size()); }

  /// Blockade-radius calibration: C6 / R_b^6 = Omega_max, and the spacing
  /// puts R_b at the geometric mean of the blockade bounds,
  /// R_b = sqrt(R_min * r_max), i.e. a = 3^(-1/4) R_b (triangular) or
  /// a = 2^(-3/4) R_b (king).
  static RydbergInstance from_layout(const GridLayout& layout,
                                     double omega_max = kDefaultOmegaMax,
                                     double weight_norm = 2.0) {
    if (layout.sites.size() > kStateVectorCap)
      throw size_limit_error("layout exceeds the dense state-vector cap",
                             layout.sites.size(), kStateVectorCap);
    RydbergInstance inst;
    inst.family = layout.family.kind;
    inst.omega_max = omega_max;
    inst.blockade_radius = std::pow(kC6 / omega_max, 1.0 / 6.0);
    double exponent = layout.family.kind == LatticeKind::triangular
                          ? std::pow(3.0, -0.25)
                          : std::pow(2.0, -0.75);
    inst.spacing = exponent * inst.blockade_radius;
    for (const auto& s : layout.sites) {
      inst.coords.push_back(to_physical(s.pos, layout.family, inst.spacing));
      inst.rel_weight.push_back(static_cast<double>(s.weight) / weight_norm);
    }
    inst.edges = derive_edges(layout);
    return inst;
  }

  double pair_interaction(int i, int j) const {
    double dx = coords[i].X - coords[j].X;
    double dy = coords[i].Y - coords[j].Y;
    double r2 = dx * dx + dy * dy;
    return kC6 / (r2 * r2 * r2);
  }
};

struct StateVector {
  int n_atoms = 0;
  std::vector<std::complex<double>> amps;

  static StateVector ground(int n) {
    StateVector s;
    s.n_atoms = n;
    s.amps.assign(std::size_t{1} << n, {0.0, 0.0});
    s.amps[0] = 1.0;
    return s;
  }
  double norm() const {
    double t = 0;
    for (const auto& a : amps) t += std::norm(a);
    return std::sqrt(t);
  }
};

/// Matrix-free Hamiltonian action at fixed (Omega, Delta_global).
class HamiltonianAction {
 public:
  HamiltonianAction(const RydbergInstance& inst, double omega, double delta_global)
      : inst_(inst), omega_(omega), delta_(delta_global) {
    if (inst.n() > kStateVectorCap)
      throw size_limit_error("atom count exceeds the dense state-vector cap",
                             inst.n(), kStateVectorCap);
    build_tables();
  }

  int n() const { return inst_.n(); }
  double diagonal(std::uint32_t basis) const {
    return pairsum_[basis] - delta_ * wsum_[basis];
  }

  void apply(const StateVector& in, StateVector& out) const {
    const std::size_t dim = in.amps.size();
    out.n_atoms = in.n_atoms;
    out.amps.assign(dim, {0.0, 0.0});
    for (std::size_t s = 0; s < dim; ++s)
      out.amps[s] = diagonal(static_cast<std::uint32_t>(s)) * in.amps[s];
    const double half = 0.5 * omega_;
    for (int v = 0; v < in.n_atoms; ++v) {
      const std::size_t bit = std::size_t{1} << v;
      for (std::size_t s = 0; s < dim; ++s)
        out.amps[s] += half * in.amps[s ^ bit];
    }
  }

  double energy(const StateVector& psi) const {
    StateVector tmp;
    apply(psi, tmp);
    std::complex<double> e = 0;
    for (std::size_t s = 0; s < psi.amps.size(); ++s)
      e += std::conj(psi.amps[s]) * tmp.amps[s];
    return e.real();
  }

  /// Basis states minimizing the diagonal (the classical ground set at
  /// Omega = 0).
  std::vector<std::uint32_t> diagonal_ground_set(double tol = 1e-9) const {
    double best = diagonal(0);
    for (std::size_t s = 1; s < pairsum_.size(); ++s)
      best = std::min(best, diagonal(static_cast<std::uint32_t>(s)));
    std::vector<std::uint32_t> out;
    for (std::size_t s = 0; s < pairsum_.size(); ++s)
      if (diagonal(static_cast<std::uint32_t>(s)) <= best + tol)
        out.push_back(static_cast<std::uint32_t>(s));
    return out;
  }

  const std::vector<double>& pair_sums() const { return pairsum_; }
  const std::vector<double>& weight_sums() const { return wsum_; }

 private:
  void build_tables() {
    const int n = inst_.n();
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> vmat(n * n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        vmat[i * n + j] = vmat[j * n + i] = inst_.pair_interaction(i, j);
    pairsum_.assign(dim, 0.0);
    wsum_.assign(dim, 0.0);
    for (std::size_t s = 1; s < dim; ++s) {
      int b = std::countr_zero(s);
      std::size_t rest = s & (s - 1);
      double add = 0.0;
      std::size_t it = rest;
      while (it) {
        int v = std::countr_zero(it);
        it &= it - 1;
        add += vmat[b * n + v];
      }
      pairsum_[s] = pairsum_[rest] + add;
      wsum_[s] = wsum_[rest] + inst_.rel_weight[b];
    }
  }

  const RydbergInstance& inst_;
  double omega_;
  double delta_;
  std::vector<double> pairsum_;
  std::vector<double> wsum_;
};

inline HamiltonianAction build_hamiltonian(const RydbergInstance& inst,
                                           double omega, double delta_global) {
  return HamiltonianAction(inst, omega, delta_global);
}

struct EvolveResult {
  StateVector state;
  bool step_size_warning = false;
  long long steps = 0;
};

namespace detail {

/// In-place phase rotation by the diagonal part over time tau.
inline void apply_diagonal(StateVector& psi, const std::vector<double>& pairsum,
                           const std::vector<double>& wsum, double delta,
                           double tau) {
  const std::size_t dim = psi.amps.size();
  for (std::size_t s = 0; s < dim; ++s) {
    double phi = (pairsum[s] - delta * wsum[s]) * tau;
    psi.amps[s] *= std::complex<double>(std::cos(phi), -std::sin(phi));
  }
}

/// In-place uniform transverse-field rotation exp(-i (Omega tau / 2) sum X).
inline void apply_transverse(StateVector& psi, double omega, double tau) {
  const double theta = 0.5 * omega * tau;
  const double c = std::cos(theta);
  const std::complex<double> ms(0.0, -std::sin(theta));
  const std::size_t dim = psi.amps.size();
  for (int v = 0; v < psi.n_atoms; ++v) {
    const std::size_t bit = std::size_t{1} << v;
    for (std::size_t s = 0; s < dim; ++s) {
      if (s & bit) continue;
      auto a0 = psi.amps[s];
      auto a1 = psi.amps[s | bit];
      psi.amps[s] = c * a0 + ms * a1;
      psi.amps[s | bit] = c * a1 + ms * a0;
    }
  }
}

}  // namespace detail

/// Time-ordered evolution from |0...0> under the pulse schedule, with
/// coefficients frozen at step midpoints and a 4th-order (Forest-Ruth)
/// splitting between the diagonal and transverse parts within each step.
/// Unitary by construction: norm is preserved to rounding.
inline EvolveResult evolve(const RydbergInstance& inst,
                           const PulseSchedule& schedule, double dt) {
  if (inst.n() > kStateVectorCap)
    throw size_limit_error("atom count exceeds the dense state-vector cap",
                           inst.n(), kStateVectorCap);
  if (!(dt > 0)) throw std::invalid_argument("dt must be positive");
  schedule.validate();

  EvolveResult result;
  result.step_size_warning = dt > 0.1 / schedule.omega_max * (1 + 1e-9);
  StateVector psi = StateVector::ground(inst.n());

  // Static tables: the diagonal's pair part and weight part never change.
  HamiltonianAction base(inst, 0.0, 0.0);
  const auto& pairsum = base.pair_sums();
  const auto& wsum = base.weight_sums();

  const double w1 = 1.0 / (2.0 - std::cbrt(2.0));
  const double w0 = 1.0 - 2.0 * w1;

  const double T = schedule.total_time;
  long long steps = static_cast<long long>(std::ceil(T / dt - 1e-12));
  for (long long k = 0; k < steps; ++k) {
    double t0 = k * dt;
    double tau = std::min(dt, T - t0);
    if (tau <= 0) break;
    double tm = t0 + 0.5 * tau;
    double omega = schedule.omega(tm);
    double delta = schedule.delta(tm);
    for (double w : {w1, w0, w1}) {
      detail::apply_diagonal(psi, pairsum, wsum, delta, 0.5 * w * tau);
      detail::apply_transverse(psi, omega, w * tau);
      detail::apply_diagonal(psi, pairsum, wsum, delta, 0.5 * w * tau);
    }
  }
  result.steps = steps;
  result.state = std::move(psi);
  return result;
}

/// Per-bond violation probability of the final state, computed exactly from
/// amplitudes (no sampling noise).
inline double violation_rate(const RydbergInstance& inst,
                             const std::vector<std::pair<int, int>>& edges,
                             const StateVector& psi) {
  if (edges.empty()) throw std::invalid_argument("violation rate needs >= 1 edge");
  const std::size_t dim = psi.amps.size();
  double total = 0.0;
  for (std::size_t s = 0; s < dim; ++s) {
    double p = std::norm(psi.amps[s]);
    if (p == 0.0) continue;
    int viol = 0;
    for (const auto& [u, v] : edges)
      if (((s >> u) & 1) && ((s >> v) & 1)) ++viol;
    total += p * viol;
  }
  return total / static_cast<double>(edges.size());
}

/// i.i.d. projective-measurement draws from |psi|^2; deterministic per seed.
inline std::vector<Configuration> sample_bitstrings(const StateVector& psi,
                                                    int shots,
                                                    std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  std::vector<double> cum(psi.amps.size());
  double acc = 0.0;
  for (std::size_t s = 0; s < psi.amps.size(); ++s) {
    acc += std::norm(psi.amps[s]);
    cum[s] = acc;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, acc);
  std::vector<Configuration> out;
  out.reserve(shots);
  for (int k = 0; k < shots; ++k) {
    double r = uni(rng);
    std::size_t idx =
        std::lower_bound(cum.begin(), cum.end(), r) - cum.begin();
    if (idx >= psi.amps.size()) idx = psi.amps.size() - 1;
    Configuration c(psi.n_atoms);
    for (int v = 0; v < psi.n_atoms; ++v) c.bits[v] = (idx >> v) & 1;
    out.push_back(std::move(c));
  }
  return out;
}

/// Squared overlap of psi with the degenerate classical ground space of the
/// final Hamiltonian (Omega = 0, Delta at its terminal value).
inline double ground_space_overlap(const RydbergInstance& inst,
                                   double delta_final, const StateVector& psi) {
  HamiltonianAction h(inst, 0.0, delta_final);
  double p = 0.0;
  for (auto s : h.diagonal_ground_set()) p += std::norm(psi.amps[s]);
  return p;
}

}  // namespace tlsg
