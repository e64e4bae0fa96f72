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
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "tlsg/geometry.hpp"
#include "tlsg/graph.hpp"
#include "tlsg/util.hpp"

namespace tlsg {

// Candidate-graph generation for gadget search: Boolean masks over a small
// lattice window, streamed connected-first and deduplicated up to the exact
// lattice symmetries expressible on the grid representation (translations,
// the two mirrors and the 180-degree rotation; the full dihedral group for
// the king lattice).

/// A rows x cols window with per-site adjacency bitmasks (<= 64 sites).
struct PatchWindow {
  LatticeFamily family;
  int rows = 0;
  int cols = 0;
  std::vector<std::uint64_t> adj;  // adjacency within the window

  PatchWindow(LatticeFamily f, int r, int c) : family(f), rows(r), cols(c) {
    if (r < 1 || c < 1 || r * c > 64)
      throw std::invalid_argument("patch window limited to 64 sites");
    adj.assign(r * c, 0);
    for (int y = 0; y < rows; ++y)
      for (int x = 0; x < cols; ++x) {
        int count = 0;
        auto st = neighbor_stencil(family, x, &count);
        for (int i = 0; i < count; ++i) {
          int nx = x + st[i].x, ny = y + st[i].y;
          if (nx >= 0 && nx < cols && ny >= 0 && ny < rows)
            adj[idx(x, y)] |= std::uint64_t{1} << idx(nx, ny);
        }
      }
  }

  int idx(int x, int y) const { return y * cols + x; }
  GridCoord coord(int i) const { return {i % cols, i / cols}; }

  bool connected(std::uint64_t mask) const {
    if (mask == 0) return false;
    std::uint64_t seen = mask & (~mask + 1);  // lowest bit
    while (true) {
      std::uint64_t frontier = 0;
      std::uint64_t cur = seen;
      while (cur) {
        int v = std::countr_zero(cur);
        cur &= cur - 1;
        frontier |= adj[v] & mask;
      }
      std::uint64_t grown = seen | frontier;
      if (grown == seen) break;
      seen = grown;
    }
    return seen == mask;
  }
};

namespace detail {

/// Point symmetries exact on the grid representation, as coordinate maps.
inline std::vector<std::function<GridCoord(GridCoord)>> point_ops(
    const LatticeFamily& f) {
  std::vector<std::function<GridCoord(GridCoord)>> ops;
  ops.push_back([](GridCoord c) { return c; });
  if (f.kind == LatticeKind::triangular) {
    ops.push_back([](GridCoord c) { return GridCoord{-c.x, c.y}; });
    ops.push_back([](GridCoord c) { return GridCoord{c.x, -c.y - (c.x & 1)}; });
    ops.push_back([](GridCoord c) { return GridCoord{-c.x, -c.y - (c.x & 1)}; });
  } else {
    ops.push_back([](GridCoord c) { return GridCoord{-c.x, c.y}; });
    ops.push_back([](GridCoord c) { return GridCoord{c.x, -c.y}; });
    ops.push_back([](GridCoord c) { return GridCoord{-c.x, -c.y}; });
    ops.push_back([](GridCoord c) { return GridCoord{c.y, c.x}; });
    ops.push_back([](GridCoord c) { return GridCoord{-c.y, c.x}; });
    ops.push_back([](GridCoord c) { return GridCoord{c.y, -c.x}; });
    ops.push_back([](GridCoord c) { return GridCoord{-c.y, -c.x}; });
  }
  return ops;
}

/// Normalizes a site set: exact lattice translation bringing min x to 0
/// (parity-aware on the triangular grid), then min y to 0.
inline std::vector<GridCoord> normalize_sites(const LatticeFamily& f,
                                              std::vector<GridCoord> sites) {
  int minx = sites[0].x;
  for (const auto& c : sites) minx = std::min(minx, c.x);
  int a = -minx;
  for (auto& c : sites) {
    if (f.kind == LatticeKind::triangular && (a & 1))
      c = {c.x + a, c.y + (c.x & 1) + (a - 1) / 2};
    else
      c = {c.x + a, c.y};
  }
  int miny = sites[0].y;
  for (const auto& c : sites) miny = std::min(miny, c.y);
  for (auto& c : sites) c.y -= miny;
  std::sort(sites.begin(), sites.end());
  return sites;
}

/// Canonical key of an occupied-site set under the lattice symmetry group.
inline std::vector<GridCoord> canonical_sites(const LatticeFamily& f,
                                              const std::vector<GridCoord>& sites) {
  std::optional<std::vector<GridCoord>> best;
  for (const auto& op : point_ops(f)) {
    std::vector<GridCoord> img;
    img.reserve(sites.size());
    for (const auto& c : sites) img.push_back(op(c));
    auto norm = normalize_sites(f, std::move(img));
    if (!best || norm < *best) best = std::move(norm);
  }
  return *best;
}

}  // namespace detail

struct PatchStreamOptions {
  std::size_t stream_cap = std::size_t{1} << 22;  // masks examined
  bool dedup_symmetry = true;
  int min_size = 1;
  int max_size = 32;
};

/// Streams every connected occupancy mask of the window, smallest first,
/// deduplicated up to lattice symmetry. The sink returns false to stop.
/// Throws budget_error when 2^(rows*cols) exceeds the stream cap.
inline void stream_patch_masks(const PatchWindow& w, const PatchStreamOptions& opt,
                               const std::function<bool(std::uint64_t)>& sink) {
  int cells = w.rows * w.cols;
  if (cells < 63 && (std::uint64_t{1} << cells) > opt.stream_cap)
    throw budget_error("patch mask stream exceeds the configured cap");
  std::set<std::vector<GridCoord>> seen;
  // Enumerate by size, numeric order within a size: deterministic stream.
  for (int size = std::max(1, opt.min_size);
       size <= std::min(cells, opt.max_size); ++size) {
    std::uint64_t mask = (size == 64) ? ~0ull : ((std::uint64_t{1} << size) - 1);
    std::uint64_t limit = (cells == 64) ? ~0ull : ((std::uint64_t{1} << cells) - 1);
    while (mask <= limit) {
      if (w.connected(mask)) {
        bool fresh = true;
        if (opt.dedup_symmetry) {
          std::vector<GridCoord> sites;
          for (int i = 0; i < cells; ++i)
            if ((mask >> i) & 1) sites.push_back(w.coord(i));
          fresh = seen.insert(detail::canonical_sites(w.family, sites)).second;
        }
        if (fresh && !sink(mask)) return;
      }
      // Next mask with the same popcount (Gosper's hack).
      std::uint64_t c = mask & (~mask + 1);
      std::uint64_t r = mask + c;
      if (r == 0) break;
      std::uint64_t next = (((r ^ mask) >> 2) / c) | r;
      if (next < mask) break;
      mask = next;
      if (std::popcount(mask) != size) break;
    }
  }
}

/// Every nonempty connected occupancy mask of the patch as a unit-weight
/// GridLayout, deduplicated up to the patch's lattice symmetries.
inline std::vector<GridLayout> generate_patch_graphs(
    const LatticeFamily& family, int rows, int cols, PatchStreamOptions opt = {}) {
  if (rows * cols > 16)
    throw std::invalid_argument("patch enumeration is budgeted at rows*cols <= 16");
  PatchWindow w(family, rows, cols);
  std::vector<GridLayout> out;
  stream_patch_masks(w, opt, [&](std::uint64_t mask) {
    GridLayout layout{family, {}, std::nullopt};
    for (int i = 0; i < rows * cols; ++i)
      if ((mask >> i) & 1) layout.sites.push_back({w.coord(i), 1});
    out.push_back(std::move(layout));
    return true;
  });
  return out;
}

/// Sites that can host pins: at least one lattice-neighbor position is
/// unoccupied, so an external wire can attach without touching ancillas.
inline std::vector<int> open_pin_candidates(const GridLayout& layout) {
  if (layout.sites.empty()) throw std::invalid_argument("layout is empty");
  std::vector<int> open;
  for (std::size_t i = 0; i < layout.sites.size(); ++i) {
    int count = 0;
    auto st = neighbor_stencil(layout.family, layout.sites[i].pos.x, &count);
    bool has_free = false;
    for (int k = 0; k < count && !has_free; ++k) {
      GridCoord q{layout.sites[i].pos.x + st[k].x, layout.sites[i].pos.y + st[k].y};
      if (!layout.find(q)) has_free = true;
    }
    if (has_free) open.push_back(static_cast<int>(i));
  }
  return open;
}

}  // namespace tlsg
