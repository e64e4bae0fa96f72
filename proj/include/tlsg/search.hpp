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

#include <bit>
#include <functional>
#include <optional>
#include <vector>

#include "tlsg/constraint.hpp"
#include "tlsg/gadget.hpp"
#include "tlsg/ilp.hpp"
#include "tlsg/patches.hpp"

namespace tlsg {

// Gadget search: stream candidate masks over a lattice window, enumerate
// maximal independent sets, choose pin tuples and target sets, and solve the
// integer weight program. Every emitted gadget is re-certified from scratch
// before it leaves this module.
//
// Candidate (mask, pins, target-set) tasks are independent and side-effect
// free; the stream order (size, then numeric mask, then pin tuple, then
// choice function) makes first-hit results deterministic.

struct SearchSpace {
  LatticeFamily family = LatticeFamily::triangular();
  int rows = 3;
  int cols = 3;
  /// Sites that every candidate must occupy (cell-template pins).
  std::vector<GridCoord> required;
  /// Sites no candidate may occupy (keeps composed wires chord-free).
  std::vector<GridCoord> forbidden;
  /// When set, the pin tuple is fixed to these grid positions, in order.
  std::optional<std::vector<GridCoord>> fixed_pins;
  bool dedup_symmetry = true;
  int min_size = 1;
  int max_size = 32;
};

struct SearchOptions {
  long long weight_cap = 6;
  WeightObjective objective = WeightObjective::minimize_sum;
  std::size_t max_choice_functions = 4096;
  std::size_t max_mis_rows = 4096;
  long long ilp_node_budget = 2'000'000;
  std::uint64_t mask_budget = std::uint64_t{1} << 26;
};

namespace detail {

/// Bron-Kerbosch over <=64-vertex graphs in plain words.
inline void small_maximal_is(const std::vector<std::uint64_t>& adj, int n,
                             std::vector<std::uint64_t>& out) {
  std::vector<std::uint64_t> comp(n);
  std::uint64_t full = (n == 64) ? ~0ull : ((std::uint64_t{1} << n) - 1);
  for (int v = 0; v < n; ++v) comp[v] = full & ~adj[v] & ~(std::uint64_t{1} << v);
  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> expand =
      [&](std::uint64_t r, std::uint64_t p, std::uint64_t x) {
        if (!p && !x) {
          out.push_back(r);
          return;
        }
        std::uint64_t px = p | x;
        int pivot = -1, best = -1;
        std::uint64_t it = px;
        while (it) {
          int u = std::countr_zero(it);
          it &= it - 1;
          int c = std::popcount(p & comp[u]);
          if (c > best) {
            best = c;
            pivot = u;
          }
        }
        std::uint64_t cand = p & ~comp[pivot];
        while (cand) {
          int v = std::countr_zero(cand);
          cand &= cand - 1;
          expand(r | (std::uint64_t{1} << v), p & comp[v], x & comp[v]);
          p &= ~(std::uint64_t{1} << v);
          x |= std::uint64_t{1} << v;
        }
      };
  expand(0ull, full, 0ull);
}

}  // namespace detail

/// For each satisfying assignment s of the constraint, the candidate set
/// M_s of maximal independent sets whose pin projection equals s. Yields
/// every choice function picking exactly one element per M_s (indices into
/// the MIS matrix, ordered like constraint.rows()). Empty stream when some
/// M_s is empty.
inline void select_target_sets(
    const std::vector<Configuration>& mis_matrix, const std::vector<int>& pins,
    const LogicalConstraint& constraint,
    const std::function<bool(const std::vector<std::size_t>&)>& sink,
    std::size_t max_yield = 1u << 20) {
  for (std::size_t i = 1; i < pins.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (pins[i] == pins[j]) throw std::invalid_argument("pins must be distinct");
  const auto& rows = constraint.rows();
  std::vector<std::vector<std::size_t>> cands(rows.size());
  for (std::size_t m = 0; m < mis_matrix.size(); ++m) {
    std::uint32_t proj = project_pins(mis_matrix[m], pins);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (rows[r] == proj) cands[r].push_back(m);
  }
  for (const auto& c : cands)
    if (c.empty()) return;  // valid negative answer
  std::vector<std::size_t> odo(rows.size(), 0);
  std::size_t yielded = 0;
  while (true) {
    std::vector<std::size_t> choice(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) choice[r] = cands[r][odo[r]];
    if (!sink(choice)) return;
    if (++yielded >= max_yield) return;
    std::size_t k = rows.size();
    while (k > 0) {
      --k;
      if (++odo[k] < cands[k].size()) break;
      odo[k] = 0;
      if (k == 0) return;
    }
  }
}

namespace detail {

struct MaskContext {
  const PatchWindow* window;
  std::uint64_t mask;
  std::vector<int> vert_of_bit;   // window site index per graph vertex
  std::vector<int> bit_of_site;   // -1 when unoccupied
  std::vector<std::uint64_t> adj; // small-graph adjacency
  std::vector<std::uint64_t> mis; // maximal IS rows (small-graph packed)
  std::uint64_t open = 0;         // open sites (small-graph indices)
};

inline bool build_mask_context(const PatchWindow& w, std::uint64_t mask,
                               std::size_t max_mis, MaskContext& ctx) {
  ctx.window = &w;
  ctx.mask = mask;
  int cells = w.rows * w.cols;
  ctx.vert_of_bit.clear();
  ctx.bit_of_site.assign(cells, -1);
  for (int i = 0; i < cells; ++i)
    if ((mask >> i) & 1) {
      ctx.bit_of_site[i] = static_cast<int>(ctx.vert_of_bit.size());
      ctx.vert_of_bit.push_back(i);
    }
  int n = static_cast<int>(ctx.vert_of_bit.size());
  ctx.adj.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    std::uint64_t nb = w.adj[ctx.vert_of_bit[v]] & mask;
    while (nb) {
      int site = std::countr_zero(nb);
      nb &= nb - 1;
      ctx.adj[v] |= std::uint64_t{1} << ctx.bit_of_site[site];
    }
  }
  ctx.mis.clear();
  small_maximal_is(ctx.adj, n, ctx.mis);
  if (ctx.mis.size() > max_mis) return false;
  // Open sites: some lattice-neighbor position unoccupied (window borders
  // face the open lattice, so out-of-window neighbors count as free).
  ctx.open = 0;
  for (int v = 0; v < n; ++v) {
    GridCoord c = w.coord(ctx.vert_of_bit[v]);
    int cnt = 0;
    auto st = neighbor_stencil(w.family, c.x, &cnt);
    bool free_nb = false;
    for (int k = 0; k < cnt && !free_nb; ++k) {
      int nx = c.x + st[k].x, ny = c.y + st[k].y;
      if (nx < 0 || nx >= w.cols || ny < 0 || ny >= w.rows)
        free_nb = true;
      else if (!((mask >> w.idx(nx, ny)) & 1))
        free_nb = true;
    }
    if (free_nb) ctx.open |= std::uint64_t{1} << v;
  }
  return true;
}

}  // namespace detail

/// End-to-end search. Emits certified gadgets through the sink (return
/// false to stop, e.g. after the first hit). Deterministic stream order.
inline void search_gadgets(const SearchSpace& space,
                           const LogicalConstraint& constraint,
                           const SearchOptions& opt,
                           const std::function<bool(const Gadget&)>& sink) {
  PatchWindow window(space.family, space.rows, space.cols);
  const int cells = space.rows * space.cols;
  const int k = constraint.arity();

  std::uint64_t required = 0, forbidden = 0;
  for (const auto& c : space.required)
    required |= std::uint64_t{1} << window.idx(c.x, c.y);
  for (const auto& c : space.forbidden)
    forbidden |= std::uint64_t{1} << window.idx(c.x, c.y);
  std::vector<int> fixed_pin_sites;
  if (space.fixed_pins) {
    if (static_cast<int>(space.fixed_pins->size()) != k)
      throw std::invalid_argument("fixed pin count must match constraint arity");
    for (const auto& c : *space.fixed_pins) {
      int idx = window.idx(c.x, c.y);
      fixed_pin_sites.push_back(idx);
      required |= std::uint64_t{1} << idx;
    }
  }

  // Free sites, in index order; subsets enumerated smallest-first.
  std::vector<int> free_sites;
  for (int i = 0; i < cells; ++i)
    if (!((required >> i) & 1) && !((forbidden >> i) & 1)) free_sites.push_back(i);
  const int nfree = static_cast<int>(free_sites.size());
  const int base_count = std::popcount(required);

  auto aut = constraint.automorphisms();

  std::uint64_t masks_seen = 0;
  std::set<std::vector<GridCoord>> seen_canonical;
  bool stop = false;

  auto try_mask = [&](std::uint64_t mask) -> void {
    if (++masks_seen > opt.mask_budget)
      throw budget_error("gadget search exceeded its mask budget");
    if (!window.connected(mask)) return;
    if (space.dedup_symmetry && !space.fixed_pins) {
      std::vector<GridCoord> sites;
      for (int i = 0; i < cells; ++i)
        if ((mask >> i) & 1) sites.push_back(window.coord(i));
      if (!seen_canonical.insert(detail::canonical_sites(space.family, sites)).second)
        return;
    }
    detail::MaskContext ctx;
    if (!detail::build_mask_context(window, mask, opt.max_mis_rows, ctx)) return;
    const int n = static_cast<int>(ctx.vert_of_bit.size());
    if (static_cast<std::size_t>(std::popcount(ctx.open)) < static_cast<std::size_t>(k))
      return;
    if (ctx.mis.size() < constraint.rows().size()) return;

    // Pin tuples: fixed positions, or ordered k-tuples of open vertices
    // deduplicated by the constraint's slot automorphisms.
    std::vector<std::vector<int>> tuples;
    if (space.fixed_pins) {
      std::vector<int> t;
      for (int site : fixed_pin_sites) t.push_back(ctx.bit_of_site[site]);
      tuples.push_back(std::move(t));
    } else {
      std::vector<int> open_verts;
      for (int v = 0; v < n; ++v)
        if ((ctx.open >> v) & 1) open_verts.push_back(v);
      std::vector<int> t(k, -1);
      std::vector<bool> used(open_verts.size(), false);
      std::function<void(int)> rec = [&](int depth) {
        if (depth == k) {
          for (const auto& sigma : aut) {
            // Reject unless lexicographically minimal in its orbit.
            std::vector<int> img(k);
            for (int i = 0; i < k; ++i) img[sigma[i]] = t[i];
            if (img < t) return;
          }
          tuples.push_back(t);
          return;
        }
        for (std::size_t i = 0; i < open_verts.size(); ++i) {
          if (used[i]) continue;
          used[i] = true;
          t[depth] = open_verts[i];
          rec(depth + 1);
          used[i] = false;
        }
      };
      rec(0);
    }

    for (const auto& pins : tuples) {
      // Projection classes per satisfying assignment.
      const auto& rows = constraint.rows();
      std::vector<std::vector<std::size_t>> cands(rows.size());
      bool viable = true;
      for (std::size_t m = 0; m < ctx.mis.size(); ++m) {
        std::uint32_t proj = 0;
        for (int i = 0; i < k; ++i)
          if ((ctx.mis[m] >> pins[i]) & 1) proj |= 1u << i;
        for (std::size_t r = 0; r < rows.size(); ++r)
          if (rows[r] == proj) cands[r].push_back(m);
      }
      for (const auto& c : cands)
        if (c.empty()) {
          viable = false;
          break;
        }
      if (!viable) continue;

      // MIS matrix in Configuration form for the weight program.
      std::vector<Configuration> mis_rows;
      mis_rows.reserve(ctx.mis.size());
      for (auto m : ctx.mis) {
        Configuration c(n);
        for (int v = 0; v < n; ++v) c.bits[v] = (m >> v) & 1;
        mis_rows.push_back(std::move(c));
      }
      std::vector<long long> min_w(n, 0);
      for (int p : pins) min_w[p] = 1;

      std::size_t tried = 0;
      std::vector<std::size_t> odo(rows.size(), 0);
      bool done_mask = false;
      while (!done_mask) {
        std::vector<std::size_t> choice(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) choice[r] = cands[r][odo[r]];

        WeightProgramOptions wopt;
        wopt.objective = opt.objective;
        wopt.node_budget = opt.ilp_node_budget;
        std::optional<std::vector<long long>> weights;
        try {
          weights = formulate_and_solve(mis_rows, choice, opt.weight_cap, min_w,
                                        wopt);
        } catch (const budget_error&) {
          weights.reset();  // inconclusive candidate: skip, keep streaming
        }
        if (weights) {
          // Drop removable zero-weight vertices, rebuild, certify.
          std::vector<int> keep;
          for (int v = 0; v < n; ++v)
            if ((*weights)[v] > 0) keep.push_back(v);
          GridLayout lay{space.family, {}, std::nullopt};
          std::vector<int> new_id(n, -1);
          for (std::size_t i = 0; i < keep.size(); ++i) {
            new_id[keep[i]] = static_cast<int>(i);
            lay.sites.push_back(
                {window.coord(ctx.vert_of_bit[keep[i]]), (*weights)[keep[i]]});
          }
          std::vector<int> gpins;
          for (int p : pins) gpins.push_back(new_id[p]);
          Gadget cand{WeightedGraph::from_layout(lay), lay, gpins, constraint, 0,
                      ""};
          auto rep = certify(cand);
          if (rep.ok) {
            cand.mwis_energy = rep.mwis_energy;
            if (!sink(cand)) {
              stop = true;
              return;
            }
          }
        }
        if (++tried >= opt.max_choice_functions) break;
        std::size_t kk = rows.size();
        bool rolled = true;
        while (kk > 0) {
          --kk;
          if (++odo[kk] < cands[kk].size()) {
            rolled = false;
            break;
          }
          odo[kk] = 0;
        }
        if (rolled) done_mask = true;
      }
      if (stop) return;
    }
  };

  int lo = std::max(space.min_size - base_count, base_count > 0 ? 0 : 1);
  int hi = std::min(space.max_size - base_count, nfree);
  for (int size = lo; size <= hi && !stop; ++size) {
    if (size == 0) {
      try_mask(required);
      continue;
    }
    // Gosper over compacted free-site indices.
    std::uint64_t sub = (std::uint64_t{1} << size) - 1;
    std::uint64_t limit = (nfree >= 64) ? ~0ull : ((std::uint64_t{1} << nfree) - 1);
    while (sub <= limit && !stop) {
      std::uint64_t mask = required;
      std::uint64_t bits = sub;
      while (bits) {
        int b = std::countr_zero(bits);
        bits &= bits - 1;
        mask |= std::uint64_t{1} << free_sites[b];
      }
      try_mask(mask);
      std::uint64_t c = sub & (~sub + 1);
      std::uint64_t r = sub + c;
      if (r == 0) break;
      sub = (((r ^ sub) >> 2) / c) | r;
      if (std::popcount(sub) != size) break;
    }
  }
}

/// First certified gadget in deterministic stream order, if any.
inline std::optional<Gadget> search_first(const SearchSpace& space,
                                          const LogicalConstraint& constraint,
                                          const SearchOptions& opt = {}) {
  std::optional<Gadget> found;
  search_gadgets(space, constraint, opt, [&](const Gadget& g) {
    found = g;
    return false;
  });
  return found;
}

}  // namespace tlsg
