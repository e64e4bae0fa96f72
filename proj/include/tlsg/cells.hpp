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

#include <map>
#include <string>
#include <vector>

#include "tlsg/gadget.hpp"
#include "tlsg/search.hpp"

namespace tlsg {

// Crossing-lattice cells. Every interaction between two wires happens inside
// a fixed-size cell on the lattice: a 5x5 box with pins at the edge
// midpoints. Wires enter through pins; between the pins of adjacent cells
// runs a 3-site connector (triangular lattice, cells 6 apart) or the pin is
// shared outright (king lattice, cells 4 apart).
//
// Cell gadgets state their constraints over true wire values: a passing wire
// presents equal bits on its two pins, a terminating wire presents its bit
// on the single pin of its arm, and an `edge` cell additionally forbids both
// wire values being 1. Internal polarity bookkeeping stays inside the
// certified gadget.

enum class CellKind {
  cross,       // both wires pass, no source edge
  cross_edge,  // both wires pass, source edge between them
  tee_n,       // horizontal passes, vertical arrives from below and ends (edge)
  tee_s,       // horizontal passes, vertical arrives from above and ends (edge)
  tee_e,       // vertical passes, horizontal arrives from the west and ends (edge)
  end_end_s,   // horizontal ends from west, vertical hangs south (edge)
  end_end_n,   // horizontal ends from west, vertical arrives from north (edge)
  corner,      // a single wire bends north -> east
};

inline const char* cell_kind_name(CellKind k) {
  switch (k) {
    case CellKind::cross: return "cross";
    case CellKind::cross_edge: return "cross_edge";
    case CellKind::tee_n: return "tee_n";
    case CellKind::tee_s: return "tee_s";
    case CellKind::tee_e: return "tee_e";
    case CellKind::end_end_s: return "end_end_s";
    case CellKind::end_end_n: return "end_end_n";
    case CellKind::corner: return "corner";
  }
  return "?";
}

/// Arms present per kind, as WENS flags.
struct CellArms {
  bool w = false, e = false, n = false, s = false;
};

inline CellArms cell_arms(CellKind k) {
  switch (k) {
    case CellKind::cross:
    case CellKind::cross_edge: return {true, true, true, true};
    case CellKind::tee_n: return {true, true, false, true};
    case CellKind::tee_s: return {true, true, true, false};
    case CellKind::tee_e: return {true, false, true, true};
    case CellKind::end_end_s: return {true, false, false, true};
    case CellKind::end_end_n: return {true, false, true, false};
    case CellKind::corner: return {false, true, true, false};
  }
  return {};
}

/// Pin order per kind; each entry is one of 'W','E','N','S'.
inline std::vector<char> cell_pin_arms(CellKind k) {
  switch (k) {
    case CellKind::cross:
    case CellKind::cross_edge: return {'W', 'E', 'N', 'S'};
    case CellKind::tee_n: return {'W', 'E', 'S'};
    case CellKind::tee_s: return {'W', 'E', 'N'};
    case CellKind::tee_e: return {'N', 'S', 'W'};
    case CellKind::end_end_s: return {'W', 'S'};
    case CellKind::end_end_n: return {'W', 'N'};
    case CellKind::corner: return {'N', 'E'};
  }
  return {};
}

/// Constraint over the kind's pin order. Passing wires copy; edge cells
/// exclude simultaneous 1s of the two wire values.
inline LogicalConstraint cell_constraint(CellKind k) {
  switch (k) {
    case CellKind::cross:
      return LogicalConstraint(4, {0b0000, 0b0011, 0b1100, 0b1111});
    case CellKind::cross_edge:
      return LogicalConstraint(4, {0b0000, 0b0011, 0b1100});
    case CellKind::tee_n:
    case CellKind::tee_s:
    case CellKind::tee_e:
      return LogicalConstraint(3, {0b000, 0b011, 0b100});
    case CellKind::end_end_s:
    case CellKind::end_end_n:
      return LogicalConstraint(2, {0b00, 0b01, 0b10});
    case CellKind::corner:
      return LogicalConstraint(2, {0b00, 0b11});
  }
  throw std::logic_error("unreachable");
}

/// Pin position inside the 5x5 box for an arm letter.
inline GridCoord cell_pin_pos(char arm) {
  switch (arm) {
    case 'W': return {0, 2};
    case 'E': return {4, 2};
    case 'N': return {2, 0};
    case 'S': return {2, 4};
  }
  throw std::logic_error("bad arm");
}

/// Search space for a cell gadget of the given kind. Forbidden sites keep
/// connector mid-sites adjacent to nothing but their two pins (triangular)
/// or reserve the whole shared boundary ring for pins (king).
inline SearchSpace cell_search_space(const LatticeFamily& family, CellKind kind) {
  SearchSpace space;
  space.family = family;
  space.rows = 5;
  space.cols = 5;
  space.dedup_symmetry = false;
  auto arms = cell_arms(kind);
  std::vector<GridCoord> pins;
  for (char a : cell_pin_arms(kind)) pins.push_back(cell_pin_pos(a));
  space.fixed_pins = pins;
  space.required = pins;
  if (family.kind == LatticeKind::triangular) {
    if (arms.w) space.forbidden.push_back({0, 3});
    if (arms.e) space.forbidden.push_back({4, 3});
    if (arms.s) {
      space.forbidden.push_back({1, 4});
      space.forbidden.push_back({3, 4});
    }
  } else {
    // King cells tile with shared pins: the boundary ring carries pins only.
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y) {
        if (x > 0 && x < 4 && y > 0 && y < 4) continue;
        GridCoord c{x, y};
        bool is_pin = false;
        for (const auto& p : pins)
          if (p == c) is_pin = true;
        if (!is_pin) space.forbidden.push_back(c);
      }
  }
  return space;
}

/// The corner cell is a fixed bent path, not a searched gadget.
inline Gadget make_corner_cell(const LatticeFamily& family) {
  GridLayout lay{family, {}, std::nullopt};
  if (family.kind == LatticeKind::triangular) {
    lay.sites = {{{2, 0}, 1}, {{2, 1}, 2}, {{2, 2}, 2}, {{3, 2}, 2}, {{4, 2}, 1}};
  } else {
    lay.sites = {{{2, 0}, 1}, {{3, 1}, 2}, {{4, 2}, 1}};
  }
  Gadget g{WeightedGraph::from_layout(lay),
           lay,
           {0, static_cast<int>(lay.sites.size()) - 1},
           cell_constraint(CellKind::corner),
           static_cast<long long>(lay.sites.size()) - 1,
           std::string("corner/") + family.name()};
  return g;
}

/// A certified gadget per (family, kind). Entries are produced by the cell
/// search (tools/cellgen regenerates them) and frozen here as data.
class CellLibrary {
 public:
  struct Entry {
    CellKind kind;
    std::vector<Site> sites;  // 5x5-box coordinates with weights
    std::vector<int> pins;    // indices into sites, kind pin order
  };

  static const CellLibrary& builtin();

  bool has(LatticeKind family, CellKind kind) const {
    return entries_.count(key(family, kind)) > 0;
  }

  const Gadget& get(LatticeKind family, CellKind kind) const {
    auto it = entries_.find(key(family, kind));
    if (it == entries_.end())
      throw library_miss_error(std::string("no certified cell gadget for ") +
                               (family == LatticeKind::triangular ? "triangular/"
                                                                  : "king/") +
                               cell_kind_name(kind));
    return it->second;
  }

  void insert(LatticeKind family, CellKind kind, Gadget g) {
    entries_.insert_or_assign(key(family, kind), std::move(g));
  }

  std::vector<std::pair<LatticeKind, CellKind>> keys() const {
    std::vector<std::pair<LatticeKind, CellKind>> out;
    for (const auto& [k, v] : entries_) out.push_back(k);
    return out;
  }

 private:
  static std::pair<LatticeKind, CellKind> key(LatticeKind f, CellKind k) {
    return {f, k};
  }
  std::map<std::pair<LatticeKind, CellKind>, Gadget> entries_;
};

namespace detail {

struct RawCell {
  LatticeKind family;
  CellKind kind;
  // x, y, weight triplets followed by pin indices.
  std::vector<int> site_data;
  std::vector<int> pins;
};

const std::vector<RawCell>& builtin_cell_data();

}  // namespace detail
}  // namespace tlsg

// Frozen output of tools/cellgen; defines detail::builtin_cell_data().
#include "tlsg/cells_data.hpp"

namespace tlsg {

inline const CellLibrary& CellLibrary::builtin() {
  static CellLibrary lib = [] {
    CellLibrary l;
    for (const auto& raw : detail::builtin_cell_data()) {
      LatticeFamily fam = raw.family == LatticeKind::triangular
                              ? LatticeFamily::triangular()
                              : LatticeFamily::king();
      GridLayout lay{fam, {}, std::nullopt};
      for (std::size_t i = 0; i + 2 < raw.site_data.size(); i += 3)
        lay.sites.push_back(
            {{raw.site_data[i], raw.site_data[i + 1]}, raw.site_data[i + 2]});
      Gadget g{WeightedGraph::from_layout(lay),
               lay,
               raw.pins,
               cell_constraint(raw.kind),
               0,
               std::string(cell_kind_name(raw.kind)) + "/" + fam.name()};
      auto res = solve_mwis(g.graph);
      g.mwis_energy = res.weight;
      l.insert(raw.family, raw.kind, std::move(g));
    }
    for (auto fam : {LatticeKind::triangular, LatticeKind::king}) {
      LatticeFamily f = fam == LatticeKind::triangular ? LatticeFamily::triangular()
                                                       : LatticeFamily::king();
      l.insert(fam, CellKind::corner, make_corner_cell(f));
    }
    return l;
  }();
  return lib;
}

}  // namespace tlsg
