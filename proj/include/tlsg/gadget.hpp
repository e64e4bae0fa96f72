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
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tlsg/constraint.hpp"
#include "tlsg/graph.hpp"
#include "tlsg/mwis.hpp"

namespace tlsg {

/// A weighted graph with an ordered pin list whose MWIS ground states,
/// projected onto the pins, realize a Boolean constraint (one ground state
/// per satisfying assignment).
struct Gadget {
  WeightedGraph graph;
  std::optional<GridLayout> layout;  // grid placement when lattice-constrained
  std::vector<int> pins;             // ordered vertex indices
  LogicalConstraint constraint;
  long long mwis_energy = 0;
  std::string name;
};

struct CertifyReport {
  bool ok = false;
  long long mwis_energy = 0;
  std::vector<std::string> spurious;  // projected ground states outside L
  std::vector<std::string> missing;   // rows of L with no ground state
  std::vector<std::string> degenerate;  // rows of L with > 1 preimage

  std::string message() const {
    if (ok) return "certified";
    std::ostringstream os;
    os << "not logically equivalent:";
    for (const auto& s : spurious) os << " spurious=" << s;
    for (const auto& s : missing) os << " missing=" << s;
    for (const auto& s : degenerate) os << " degenerate=" << s;
    return os.str();
  }
};

inline std::uint32_t project_pins(const Configuration& c,
                                  const std::vector<int>& pins) {
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < pins.size(); ++i)
    if (c.bits[pins[i]]) v |= 1u << i;
  return v;
}

/// Recomputes the MWIS solution set from scratch and checks logical
/// equivalence with the gadget's constraint plus non-degeneracy (exactly one
/// ground state per satisfying assignment).
inline CertifyReport certify(const Gadget& g) {
  CertifyReport rep;
  auto res = solve_mwis(g.graph);
  rep.mwis_energy = res.weight;
  std::map<std::uint32_t, int> preimages;
  for (const auto& c : res.solutions) ++preimages[project_pins(c, g.pins)];
  auto bits_of = [&](std::uint32_t v) {
    std::string s(g.pins.size(), '0');
    for (std::size_t i = 0; i < g.pins.size(); ++i)
      if ((v >> i) & 1) s[i] = '1';
    return s;
  };
  rep.ok = true;
  for (const auto& [proj, count] : preimages) {
    if (!g.constraint.satisfies(proj)) {
      rep.spurious.push_back(bits_of(proj));
      rep.ok = false;
    } else if (count > 1) {
      rep.degenerate.push_back(bits_of(proj));
      rep.ok = false;
    }
  }
  for (auto row : g.constraint.rows()) {
    if (!preimages.count(row)) {
      rep.missing.push_back(bits_of(row));
      rep.ok = false;
    }
  }
  if (rep.ok && g.mwis_energy != 0 && g.mwis_energy != res.weight) rep.ok = false;
  return rep;
}

/// Merges two gadgets at pin pairs that represent the same logical variable.
/// Merged vertices take the sum of the two pin weights; the composite
/// constraint is the conjunction. Pin-pair entries index into the pin lists.
/// When both gadgets carry layouts, the merge is validated geometrically: a
/// rigid grid translation must align the merged pins, and the union layout
/// must not introduce unit-disk edges beyond the two edge sets.
inline Gadget compose(const Gadget& g1, const Gadget& g2,
                      const std::vector<std::pair<int, int>>& merge_pairs) {
  if (merge_pairs.empty()) throw std::invalid_argument("merge list is empty");
  const int n1 = g1.graph.n();
  const int n2 = g2.graph.n();

  // Vertex map for g2: merged pins land on g1 vertices, the rest re-index.
  std::vector<int> map2(n2, -1);
  std::vector<bool> merged2(n2, false), merged1(n1, false);
  for (auto [p1, p2] : merge_pairs) {
    int v1 = g1.pins.at(p1);
    int v2 = g2.pins.at(p2);
    if (merged1[v1] || merged2[v2])
      throw std::invalid_argument("pin merged twice");
    merged1[v1] = true;
    merged2[v2] = true;
    map2[v2] = v1;
  }
  int next = n1;
  for (int v = 0; v < n2; ++v)
    if (map2[v] < 0) map2[v] = next++;
  const int n = next;

  std::vector<long long> weights(n, 0);
  for (int v = 0; v < n1; ++v) weights[v] = g1.graph.weight(v);
  for (int v = 0; v < n2; ++v) weights[map2[v]] += g2.graph.weight(v);

  std::set<std::pair<int, int>> edges;
  for (auto [u, v] : g1.graph.edges()) edges.emplace(std::min(u, v), std::max(u, v));
  for (auto [u, v] : g2.graph.edges()) {
    int a = map2[u], b = map2[v];
    edges.emplace(std::min(a, b), std::max(a, b));
  }

  // Composite pins: g1's pin list in place, then g2's unmerged pins.
  std::vector<int> pins = g1.pins;
  std::vector<int> slot_of_g2pin(g2.pins.size(), -1);
  for (std::size_t i = 0; i < g2.pins.size(); ++i) {
    int mapped = map2[g2.pins[i]];
    bool already = false;
    for (std::size_t j = 0; j < pins.size(); ++j)
      if (pins[j] == mapped) {
        slot_of_g2pin[i] = static_cast<int>(j);
        already = true;
        break;
      }
    if (!already) {
      pins.push_back(mapped);
      slot_of_g2pin[i] = static_cast<int>(pins.size() - 1);
    }
  }

  // Conjunction over the composite pin slots.
  int k = static_cast<int>(pins.size());
  if (k > 6) throw std::invalid_argument("composite arity exceeds 6");
  std::vector<std::uint32_t> rows;
  for (std::uint32_t a = 0; a < (1u << k); ++a) {
    std::uint32_t a1 = 0;
    for (std::size_t i = 0; i < g1.pins.size(); ++i)
      if ((a >> i) & 1) a1 |= 1u << i;  // g1 pins occupy the leading slots
    std::uint32_t a2 = 0;
    for (std::size_t i = 0; i < g2.pins.size(); ++i)
      if ((a >> slot_of_g2pin[i]) & 1) a2 |= 1u << i;
    if (g1.constraint.satisfies(a1) && g2.constraint.satisfies(a2)) rows.push_back(a);
  }
  if (rows.empty()) throw std::invalid_argument("conjunction is unsatisfiable");

  Gadget out{WeightedGraph(n, weights,
                           std::vector<std::pair<int, int>>(edges.begin(), edges.end())),
             std::nullopt,
             pins,
             LogicalConstraint(k, rows),
             0,
             g1.name.empty() ? g2.name : g1.name + "*" + g2.name};

  // Geometric merge when both sides carry layouts.
  if (g1.layout && g2.layout) {
    if (g1.layout->family.kind != g2.layout->family.kind)
      throw geometry_error("cannot merge layouts of different lattice families");
    auto [p1, p2] = merge_pairs[0];
    GridCoord a = g1.layout->sites[g1.pins[p1]].pos;
    GridCoord b = g2.layout->sites[g2.pins[p2]].pos;
    int dx = a.x - b.x, dy = a.y - b.y;
    if (g1.layout->family.kind == LatticeKind::triangular && (dx % 2) != 0)
      throw geometry_error("odd-column translation breaks the parity convention");
    for (auto [q1, q2] : merge_pairs) {
      GridCoord c1 = g1.layout->sites[g1.pins[q1]].pos;
      GridCoord c2 = g2.layout->sites[g2.pins[q2]].pos;
      if (c2.x + dx != c1.x || c2.y + dy != c1.y)
        throw geometry_error("no rigid translation aligns all merged pins");
    }
    GridLayout merged;
    merged.family = g1.layout->family;
    merged.sites.resize(n);
    for (int v = 0; v < n1; ++v)
      merged.sites[v] = {g1.layout->sites[v].pos, weights[v]};
    for (int v = 0; v < n2; ++v) {
      GridCoord c{g2.layout->sites[v].pos.x + dx, g2.layout->sites[v].pos.y + dy};
      int tgt = map2[v];
      if (tgt < n1) {
        if (!(merged.sites[tgt].pos == c))
          throw geometry_error("merged pin positions disagree");
      } else {
        merged.sites[tgt] = {c, weights[tgt]};
      }
    }
    {
      std::set<std::pair<int, int>> seen;
      for (const auto& s : merged.sites)
        if (!seen.emplace(s.pos.x, s.pos.y).second)
          throw geometry_error("layout merge collides at a grid coordinate");
    }
    merged.validate();
    auto derived = derive_edges(merged);
    std::set<std::pair<int, int>> derived_set(derived.begin(), derived.end());
    if (derived_set != edges)
      throw geometry_error("layout merge introduces unit-disk edges beyond the union");
    out.layout = std::move(merged);
  }

  auto res = solve_mwis(out.graph);
  out.mwis_energy = res.weight;
  auto rep = certify(out);
  if (!rep.ok)
    throw std::runtime_error("composition failed certification: " + rep.message());
  return out;
}

/// NOT gadget: two vertices with identical weights joined by one edge.
inline Gadget make_not_gadget(long long delta = 1) {
  Gadget g{WeightedGraph(2, {delta, delta}, {{0, 1}}),
           std::nullopt,
           {0, 1},
           gate_not(),
           delta,
           "NOT"};
  return g;
}

/// Copy wire: odd-length path with weights (d, 2d, ..., 2d, d) whose two
/// ground states are the alternating Z2 strings. Pins are the two ends.
inline Gadget make_copy_wire(int length, long long delta = 1) {
  if (length < 3 || length % 2 == 0)
    throw std::invalid_argument("copy wires have odd length >= 3");
  std::vector<long long> w(length, 2 * delta);
  w.front() = w.back() = delta;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < length; ++i) edges.emplace_back(i, i + 1);
  Gadget g{WeightedGraph(length, std::move(w), std::move(edges)),
           std::nullopt,
           {0, length - 1},
           LogicalConstraint::from_strings({"00", "11"}),
           static_cast<long long>(length - 1) * delta,
           "COPY"};
  return g;
}

}  // namespace tlsg
