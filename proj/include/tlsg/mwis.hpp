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
#include <optional>
#include <vector>

#include "tlsg/graph.hpp"
#include "tlsg/util.hpp"

namespace tlsg {

// Exact maximal-independent-set enumeration and MWIS solving. This is the
// oracle every other module is verified against, so the two entry points use
// different algorithms on purpose: enumeration is Bron-Kerbosch on the
// complement graph, the optimizer is branch-and-bound with reductions.
//
// Solver instances are independent; solving distinct graphs in parallel is
// safe. A single solve call runs single-threaded, which makes results
// trivially deterministic regardless of caller thread count.

inline constexpr std::size_t kDefaultEnumerationCap = 30;

// ---------------------------------------------------------------------------
// Bron-Kerbosch with pivoting on the complement graph: maximal cliques of
// the complement are exactly the maximal independent sets.
// ---------------------------------------------------------------------------
namespace detail {

class BronKerbosch {
 public:
  explicit BronKerbosch(const WeightedGraph& g) : n_(g.n()) {
    comp_.assign(n_, Bitset(n_));
    for (int v = 0; v < n_; ++v) {
      for (int u = 0; u < n_; ++u)
        if (u != v && !g.has_edge(u, v)) comp_[v].set(u);
    }
  }

  std::vector<Bitset> run() {
    Bitset R(n_), P(n_), X(n_);
    for (int v = 0; v < n_; ++v) P.set(v);
    expand(R, P, X);
    return std::move(out_);
  }

 private:
  void expand(Bitset& R, Bitset P, Bitset X) {
    if (P.none() && X.none()) {
      out_.push_back(R);
      return;
    }
    // Pivot: maximize |P ∩ comp(u)| over u in P ∪ X.
    int pivot = -1;
    std::size_t best = 0;
    Bitset PX = P | X;
    for (std::size_t u = PX.first(); u < PX.size(); u = PX.next(u)) {
      std::size_t c = (P & comp_[u]).count();
      if (pivot < 0 || c > best) {
        pivot = static_cast<int>(u);
        best = c;
      }
    }
    Bitset cand = P;
    if (pivot >= 0) cand.andnot(comp_[pivot]);
    for (std::size_t v = cand.first(); v < cand.size(); v = cand.next(v)) {
      R.set(v);
      expand(R, P & comp_[v], X & comp_[v]);
      R.reset(v);
      P.reset(v);
      X.set(v);
    }
  }

  int n_;
  std::vector<Bitset> comp_;
  std::vector<Bitset> out_;
};

}  // namespace detail

/// All maximal independent sets of g, lexicographically sorted.
/// Throws size_limit_error beyond the enumeration cap (the count can grow as
/// 3^(n/3)); callers with larger graphs must use solve_mwis instead.
inline std::vector<Configuration> maximal_independent_sets(
    const WeightedGraph& g, std::size_t cap = kDefaultEnumerationCap) {
  if (g.n() < 1) throw std::invalid_argument("graph must have at least one vertex");
  if (static_cast<std::size_t>(g.n()) > cap)
    throw size_limit_error("graph exceeds the maximal-IS enumeration cap", g.n(), cap);
  detail::BronKerbosch bk(g);
  auto sets = bk.run();
  std::vector<Configuration> out;
  out.reserve(sets.size());
  for (const auto& s : sets) {
    Configuration c(g.n());
    for (std::size_t v = s.first(); v < s.size(); v = s.next(v)) c.bits[v] = 1;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Branch-and-bound MWIS.
// ---------------------------------------------------------------------------

struct SolveOptions {
  /// Collect the complete optimum set (slower: only reductions that preserve
  /// every optimum are applied). Default returns the full set too but may
  /// use weight-preserving folds when it can prove uniqueness is not needed.
  bool collect_all = true;
  long long node_budget = 200'000'000;
  /// Safety valve on the number of collected optima.
  std::size_t max_solutions = 1 << 20;
};

struct SolveResult {
  long long weight = 0;
  std::vector<Configuration> solutions;  // lexicographically sorted
  long long nodes = 0;
};

namespace detail {

class MwisSolver {
 public:
  MwisSolver(const WeightedGraph& g, const SolveOptions& opt)
      : g_(g), opt_(opt), n_(g.n()) {}

  SolveResult solve() {
    State st;
    st.alive = Bitset(n_);
    for (int v = 0; v < n_; ++v) st.alive.set(v);
    st.weights = g_.weights();
    st.adj.resize(n_);
    for (int v = 0; v < n_; ++v) st.adj[v] = g_.neighbors(v);

    best_ = -1;
    // Pass 1: optimum weight with the full reduction set.
    {
      State s = st;
      Bitset chosen(n_);
      std::vector<Record> trail;
      recurse_best(s, chosen, 0, trail);
    }
    SolveResult res;
    res.weight = best_;
    if (opt_.collect_all) {
      // Pass 2: enumerate every configuration attaining the optimum using
      // only optimum-set-preserving reductions.
      collect_mode_ = true;
      State s = st;
      Bitset chosen(n_);
      std::vector<Record> trail;
      recurse_all(s, chosen, 0, trail);
      std::sort(solutions_.begin(), solutions_.end());
      solutions_.erase(std::unique(solutions_.begin(), solutions_.end()),
                       solutions_.end());
      res.solutions = std::move(solutions_);
    } else if (best_sol_) {
      res.solutions.push_back(*best_sol_);
    }
    res.nodes = nodes_;
    return res;
  }

 private:
  struct State {
    Bitset alive;
    std::vector<long long> weights;
    std::vector<Bitset> adj;

    void remove(int v) {
      alive.reset(v);
      for (std::size_t u = adj[v].first(); u < adj[v].size(); u = adj[v].next(u))
        adj[u].reset(v);
      adj[v].clear();
    }
    Bitset live_neighbors(int v) const { return adj[v] & alive; }
  };

  enum class Kind { take, fold1, fold2, tri };
  struct Record {
    Kind kind;
    int v, u, w;
  };

  void tick() {
    if (++nodes_ > opt_.node_budget)
      throw budget_error("MWIS branch-and-bound exceeded its node budget", best_);
  }

  // Reconstruct a full configuration from the chosen set and the reduction
  // trail of the current recursion path (applied in reverse order).
  Configuration reconstruct(const Bitset& chosen,
                            const std::vector<Record>& trail) const {
    Configuration c(n_);
    for (std::size_t v = chosen.first(); v < chosen.size(); v = chosen.next(v))
      c.bits[v] = 1;
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
      switch (it->kind) {
        case Kind::take:
          c.bits[it->v] = 1;
          break;
        case Kind::fold1:  // v pendant on u, folded away
          if (!c.bits[it->u]) c.bits[it->v] = 1;
          break;
        case Kind::fold2:  // slot v holds the merge of {u,w}; v itself otherwise
          if (c.bits[it->v]) {
            c.bits[it->v] = 0;
            c.bits[it->u] = 1;
            c.bits[it->w] = 1;
          } else {
            c.bits[it->v] = 1;
          }
          break;
        case Kind::tri:  // v degree-2 in a triangle with u,w
          if (!c.bits[it->u] && !c.bits[it->w]) c.bits[it->v] = 1;
          break;
      }
    }
    return c;
  }

  // Greedy weighted clique cover upper bound: vertices in descending weight,
  // each assigned to the first clique it is fully adjacent to; a clique
  // contributes its heaviest member.
  long long upper_bound(const State& st, const Bitset& comp) const {
    std::vector<int> verts;
    for (std::size_t v = comp.first(); v < comp.size(); v = comp.next(v))
      verts.push_back(static_cast<int>(v));
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
      if (st.weights[a] != st.weights[b]) return st.weights[a] > st.weights[b];
      return a < b;
    });
    std::vector<Bitset> common;  // common live neighborhood of each clique
    long long ub = 0;
    for (int v : verts) {
      bool placed = false;
      for (auto& c : common) {
        if (c.test(v)) {
          c &= st.adj[v];
          placed = true;
          break;
        }
      }
      if (!placed) {
        common.push_back(st.adj[v] & comp);
        ub += st.weights[v];  // heaviest member: vertices arrive in desc order
      }
    }
    return ub;
  }

  // --- full reduction set (optimum weight only) -------------------------

  bool reduce_best(State& st, Bitset& chosen, long long& offset,
                   std::vector<Record>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t vi = st.alive.first(); vi < st.alive.size();
           vi = st.alive.next(vi)) {
        int v = static_cast<int>(vi);
        Bitset nb = st.live_neighbors(v);
        std::size_t deg = nb.count();
        long long nbw = 0;
        for (std::size_t u = nb.first(); u < nb.size(); u = nb.next(u))
          nbw += st.weights[u];
        if (deg == 0) {
          chosen.set(v);
          offset += st.weights[v];
          st.remove(v);
          changed = true;
          break;
        }
        if (st.weights[v] >= nbw) {  // neighborhood removal: take v
          chosen.set(v);
          offset += st.weights[v];
          std::vector<int> rm;
          for (std::size_t u = nb.first(); u < nb.size(); u = nb.next(u))
            rm.push_back(static_cast<int>(u));
          st.remove(v);
          for (int u : rm) st.remove(u);
          changed = true;
          break;
        }
        if (deg == 1) {  // pendant fold, w(v) < w(u) here
          int u = static_cast<int>(nb.first());
          offset += st.weights[v];
          st.weights[u] -= st.weights[v];
          trail.push_back({Kind::fold1, v, u, -1});
          st.remove(v);
          changed = true;
          break;
        }
        if (deg == 2) {
          int u = static_cast<int>(nb.first());
          int w = static_cast<int>(nb.next(u));
          if (st.adj[u].test(w)) {  // triangle
            offset += st.weights[v];
            st.weights[u] -= st.weights[v];
            st.weights[w] -= st.weights[v];
            trail.push_back({Kind::tri, v, u, w});
            st.remove(v);
            if (st.weights[u] <= 0) st.remove(u);
            if (st.weights[w] <= 0) st.remove(w);
            changed = true;
            break;
          }
          if (st.weights[v] >= std::max(st.weights[u], st.weights[w])) {
            // fold u,v,w into slot v (w(v) < w(u)+w(w) after the removal rule)
            long long merged = st.weights[u] + st.weights[w] - st.weights[v];
            offset += st.weights[v];
            Bitset nuw = (st.live_neighbors(u) | st.live_neighbors(w));
            nuw.reset(v);
            trail.push_back({Kind::fold2, v, u, w});
            st.remove(v);
            st.remove(u);
            st.remove(w);
            st.alive.set(v);
            st.weights[v] = merged;
            st.adj[v] = nuw;
            for (std::size_t x = nuw.first(); x < nuw.size(); x = nuw.next(x))
              st.adj[x].set(v);
            changed = true;
            break;
          }
        }
      }
    }
    return true;
  }

  void recurse_best(State& st, Bitset chosen, long long offset,
                    std::vector<Record> trail) {
    tick();
    reduce_best(st, chosen, offset, trail);
    if (st.alive.none()) {
      if (offset > best_) {
        best_ = offset;
        best_sol_ = reconstruct(chosen, trail);
      }
      return;
    }
    // Component split: solve components independently.
    auto comps = components(st);
    if (comps.size() > 1) {
      long long total = offset;
      Bitset combined = chosen;
      std::vector<Record> t = trail;
      for (const auto& comp : comps) {
        auto sub = solve_component_best(st, comp);
        total += sub.first;
        combined |= sub.second.first;
        for (auto& r : sub.second.second) t.push_back(r);
      }
      if (total > best_) {
        best_ = total;
        best_sol_ = reconstruct(combined, t);
      }
      return;
    }
    const Bitset& comp = comps[0];
    if (offset + upper_bound(st, comp) <= best_) return;
    int v = pick_branch_vertex(st, comp);
    {  // include v
      State s2 = st;
      Bitset c2 = chosen;
      c2.set(v);
      Bitset nb = s2.live_neighbors(v);
      std::vector<int> rm{v};
      for (std::size_t u = nb.first(); u < nb.size(); u = nb.next(u))
        rm.push_back(static_cast<int>(u));
      for (int u : rm) s2.remove(u);
      recurse_best(s2, std::move(c2), offset + st.weights[v], trail);
    }
    {  // exclude v
      State s2 = st;
      s2.remove(v);
      recurse_best(s2, chosen, offset, std::move(trail));
    }
  }

  // Component solve used by recurse_best; returns (weight, (chosen, trail)).
  std::pair<long long, std::pair<Bitset, std::vector<Record>>> solve_component_best(
      const State& st, const Bitset& comp) {
    State sub = st;
    Bitset dead = sub.alive;
    dead.andnot(comp);
    for (std::size_t v = dead.first(); v < dead.size(); v = dead.next(v))
      sub.remove(static_cast<int>(v));
    long long save_best = best_;
    auto save_sol = best_sol_;
    best_ = -1;
    best_sol_.reset();
    std::vector<Record> trail;
    recurse_best(sub, Bitset(n_), 0, trail);
    long long w = best_;
    // Recover the component's raw chosen set from the reconstructed config.
    Bitset chosen(n_);
    std::vector<Record> empty;
    if (best_sol_) {
      for (int v = 0; v < n_; ++v)
        if (best_sol_->bits[v]) chosen.set(v);
    }
    best_ = save_best;
    best_sol_ = save_sol;
    return {w, {chosen, empty}};
  }

  // --- optimum-set-preserving reductions (enumeration pass) -------------

  void reduce_all(State& st, Bitset& chosen, long long& offset) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t vi = st.alive.first(); vi < st.alive.size();
           vi = st.alive.next(vi)) {
        int v = static_cast<int>(vi);
        Bitset nb = st.live_neighbors(v);
        long long nbw = 0;
        for (std::size_t u = nb.first(); u < nb.size(); u = nb.next(u))
          nbw += st.weights[u];
        if (nb.none() || st.weights[v] > nbw) {
          // strict neighborhood removal: v lies in every optimum
          chosen.set(v);
          offset += st.weights[v];
          std::vector<int> rm;
          for (std::size_t u = nb.first(); u < nb.size(); u = nb.next(u))
            rm.push_back(static_cast<int>(u));
          st.remove(v);
          for (int u : rm) st.remove(u);
          changed = true;
          break;
        }
      }
    }
  }

  void recurse_all(State& st, Bitset chosen, long long offset,
                   std::vector<Record> trail) {
    tick();
    reduce_all(st, chosen, offset);
    if (st.alive.none()) {
      if (offset == best_) {
        if (solutions_.size() >= opt_.max_solutions)
          throw budget_error("optimum enumeration exceeded max_solutions", best_);
        solutions_.push_back(reconstruct(chosen, trail));
      }
      return;
    }
    if (offset + upper_bound(st, st.alive) < best_) return;
    int v = pick_branch_vertex(st, st.alive);
    {
      State s2 = st;
      Bitset c2 = chosen;
      c2.set(v);
      Bitset nb = s2.live_neighbors(v);
      std::vector<int> rm{v};
      for (std::size_t u = nb.first(); u < nb.size(); u = nb.next(u))
        rm.push_back(static_cast<int>(u));
      for (int u : rm) s2.remove(u);
      recurse_all(s2, std::move(c2), offset + st.weights[v], trail);
    }
    {
      State s2 = st;
      s2.remove(v);
      recurse_all(s2, std::move(chosen), offset, std::move(trail));
    }
  }

  // --- shared helpers ----------------------------------------------------

  int pick_branch_vertex(const State& st, const Bitset& comp) const {
    int best_v = -1;
    std::size_t best_deg = 0;
    long long best_w = -1;
    for (std::size_t v = comp.first(); v < comp.size(); v = comp.next(v)) {
      std::size_t d = (st.adj[v] & st.alive).count();
      long long w = st.weights[v];
      if (best_v < 0 || d > best_deg || (d == best_deg && w > best_w)) {
        best_v = static_cast<int>(v);
        best_deg = d;
        best_w = w;
      }
    }
    return best_v;
  }

  std::vector<Bitset> components(const State& st) const {
    std::vector<Bitset> comps;
    Bitset rest = st.alive;
    while (rest.any()) {
      Bitset comp(n_);
      std::vector<std::size_t> stack{rest.first()};
      comp.set(stack[0]);
      while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        Bitset nb = st.adj[v] & rest;
        for (std::size_t u = nb.first(); u < nb.size(); u = nb.next(u)) {
          if (!comp.test(u)) {
            comp.set(u);
            stack.push_back(u);
          }
        }
      }
      comps.push_back(comp);
      rest.andnot(comp);
    }
    return comps;
  }

  const WeightedGraph& g_;
  SolveOptions opt_;
  int n_;
  long long best_ = -1;
  std::optional<Configuration> best_sol_;
  std::vector<Configuration> solutions_;
  long long nodes_ = 0;
  bool collect_mode_ = false;
};

}  // namespace detail

/// Exact maximum-weighted-independent-set. Returns the optimum weight and
/// (by default) the complete, lexicographically sorted set of optimal
/// configurations. Throws budget_error (carrying the best bound found) if
/// branch-and-bound exceeds the node budget.
inline SolveResult solve_mwis(const WeightedGraph& g, SolveOptions opt = {}) {
  if (g.n() < 1) throw std::invalid_argument("graph must have at least one vertex");
  detail::MwisSolver solver(g, opt);
  return solver.solve();
}

/// Optimum weight plus a single witness configuration; the fast path for
/// large encoded instances where the full optimum set is not needed.
inline SolveResult solve_mwis_best(const WeightedGraph& g,
                                   long long node_budget = 200'000'000) {
  SolveOptions opt;
  opt.collect_all = false;
  opt.node_budget = node_budget;
  return solve_mwis(g, opt);
}

}  // namespace tlsg
