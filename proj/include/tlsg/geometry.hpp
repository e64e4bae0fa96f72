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
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tlsg {

// Lattice layouts live on an integer grid; physical coordinates are always
// derived from grid coordinates, never stored as the source of truth.
//
// Triangular convention: odd columns are shifted up by half a spacing and
// the column pitch is sqrt(3)/2, i.e.
//   (X, Y) = (sqrt(3)/2 * a * x,  a * (y + (x mod 2) / 2)).
// Gadget masks and the encoder both rely on this column-parity convention.

struct GridCoord {
  int x = 0;
  int y = 0;
  friend bool operator==(const GridCoord&, const GridCoord&) = default;
  friend auto operator<=>(const GridCoord& a, const GridCoord& b) {
    return std::pair(a.x, a.y) <=> std::pair(b.x, b.y);
  }
};

struct PhysicalCoord {
  double X = 0.0;
  double Y = 0.0;
};

enum class LatticeKind { triangular, king };

struct LatticeFamily {
  LatticeKind kind = LatticeKind::triangular;
  double r_max = 1.0;       // longest adjacent distance, units of a
  double R_min = 1.7320508; // shortest non-adjacent distance, units of a

  static LatticeFamily triangular() {
    return {LatticeKind::triangular, 1.0, std::sqrt(3.0)};
  }
  static LatticeFamily king() {
    return {LatticeKind::king, std::sqrt(2.0), 2.0};
  }
  const char* name() const {
    return kind == LatticeKind::triangular ? "triangular" : "king";
  }
};

/// Q = R_min / r_max and its sixth power (the interaction-scale separation
/// under the 1/r^6 Rydberg tail).
inline std::pair<double, double> quality_metrics(const LatticeFamily& f) {
  double q = f.R_min / f.r_max;
  double q2 = q * q;
  return {q, q2 * q2 * q2};
}

inline PhysicalCoord to_physical(const GridCoord& c, const LatticeFamily& family,
                                 double a) {
  if (!(a > 0.0)) throw std::invalid_argument("lattice spacing must be positive");
  if (family.kind == LatticeKind::triangular) {
    return {0.5 * std::sqrt(3.0) * a * c.x,
            a * (c.y + 0.5 * ((c.x % 2 + 2) % 2))};
  }
  return {a * c.x, a * c.y};
}

/// Relative tolerance on distance comparisons. sqrt(3)/2 is irrational;
/// exact equality on reals is unsafe.
inline constexpr double kGeomTolerance = 1e-6;

/// Grid-stencil neighbor offsets. For triangular lattices the stencil
/// depends on column parity (offsets listed for even x; odd x flips the
/// diagonal pair). Exactly the 6-/8-neighbor adjacency of the family.
inline std::array<GridCoord, 8> neighbor_stencil(const LatticeFamily& f, int x,
                                                 int* count) {
  if (f.kind == LatticeKind::triangular) {
    *count = 6;
    if (((x % 2) + 2) % 2 == 0) {
      return {{{0, 1}, {0, -1}, {1, 0}, {-1, 0}, {1, -1}, {-1, -1}, {}, {}}};
    }
    return {{{0, 1}, {0, -1}, {1, 0}, {-1, 0}, {1, 1}, {-1, 1}, {}, {}}};
  }
  *count = 8;
  return {{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
}

inline bool grid_adjacent(const LatticeFamily& f, const GridCoord& a,
                          const GridCoord& b) {
  int count = 0;
  auto st = neighbor_stencil(f, a.x, &count);
  for (int i = 0; i < count; ++i)
    if (a.x + st[i].x == b.x && a.y + st[i].y == b.y) return true;
  return false;
}

struct Site {
  GridCoord pos;
  long long weight = 1;
};

/// Vertices placed on the integer grid with positive integer weights.
/// Immutable after construction; shares safely across threads.
struct GridLayout {
  LatticeFamily family;
  std::vector<Site> sites;
  std::optional<double> unit;  // spacing a in micrometers, set for simulation

  void validate() const {
    std::map<std::pair<int, int>, int> seen;
    for (const auto& s : sites) {
      if (s.weight < 1) throw std::invalid_argument("site weights must be >= 1");
      if (s.pos.x < 0 || s.pos.y < 0)
        throw std::invalid_argument("placed vertices need x >= 0 and y >= 0");
      if (!seen.emplace(std::pair(s.pos.x, s.pos.y), 1).second)
        throw std::invalid_argument("duplicate grid coordinate in layout");
    }
  }

  std::size_t size() const { return sites.size(); }

  std::optional<std::size_t> find(const GridCoord& c) const {
    for (std::size_t i = 0; i < sites.size(); ++i)
      if (sites[i].pos == c) return i;
    return std::nullopt;
  }
};

/// Unit-disk edges: (u,v) is an edge iff the physical distance is at most
/// r_max * a (relative tolerance kGeomTolerance). With a = 1 this equals the
/// family's grid neighbor stencil restricted to occupied sites.
inline std::vector<std::pair<int, int>> derive_edges(const GridLayout& layout) {
  const double a = 1.0;  // edges are scale-invariant; derive at unit spacing
  std::vector<PhysicalCoord> p;
  p.reserve(layout.sites.size());
  for (const auto& s : layout.sites) p.push_back(to_physical(s.pos, layout.family, a));
  const double cut = layout.family.r_max * a * (1.0 + kGeomTolerance);
  const double cut2 = cut * cut;
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      double dx = p[i].X - p[j].X;
      double dy = p[i].Y - p[j].Y;
      if (dx * dx + dy * dy <= cut2)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return edges;
}

inline double physical_distance(const GridLayout& layout, std::size_t i,
                                std::size_t j, double a = 1.0) {
  auto pi = to_physical(layout.sites[i].pos, layout.family, a);
  auto pj = to_physical(layout.sites[j].pos, layout.family, a);
  return std::hypot(pi.X - pj.X, pi.Y - pj.Y);
}

}  // namespace tlsg
