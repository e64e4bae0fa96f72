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
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "tlsg/graph.hpp"
#include "tlsg/util.hpp"

namespace tlsg {

// Integer weight program behind gadget search (the paper's Eq.-(2) shape):
//
//   min  sum_i w_i               (or: min max_i w_i)
//   s.t. n.w == n0.w             for every target row n      (equal energies)
//        n'.w <= n0.w - 1        for every non-target row n' (strict, integer)
//        lo_i <= w_i <= cap      integer
//
// Programs are tiny (<= 21 variables, small caps), so this is a dedicated
// solver: the equality system is fixed first by Gaussian elimination over
// rationals, then the free variables are enumerated by depth-first
// branch-and-bound with root domain tightening and per-constraint suffix
// interval tables. No external solver dependency.

enum class WeightObjective { minimize_sum, minimize_max };

struct WeightProgramOptions {
  long long node_budget = 2'000'000;
  WeightObjective objective = WeightObjective::minimize_sum;
};

namespace detail {

class WeightProgramSolver {
 public:
  WeightProgramSolver(const std::vector<Configuration>& rows,
                      const std::vector<std::size_t>& target_idx,
                      long long cap, std::vector<long long> lo,
                      const WeightProgramOptions& opt)
      : rows_(rows), cap_(cap), lo_(std::move(lo)), opt_(opt) {
    nvars_ = static_cast<int>(rows.at(0).size());
    if (static_cast<int>(lo_.size()) != nvars_)
      throw std::invalid_argument("min-weight vector size mismatch");
    is_target_.assign(rows.size(), false);
    for (auto i : target_idx) is_target_.at(i) = true;
    ref_ = target_idx.at(0);
  }

  std::optional<std::vector<long long>> solve() {
    build_elimination();
    build_forms();
    if (!tighten_root_domains()) return std::nullopt;
    order_free_vars();
    build_suffix_tables();
    assign_.assign(free_.size(), 0);
    activity_.assign(forms_.size(), 0);
    dfs(0, 0);
    return best_;
  }

 private:
  struct Constraint {
    std::vector<long long> coef;  // over free variables, ordered like free_
    long long den = 0;            // >0: pivot definition, value/den integral
    long long lo = 0;             // bounds on the form value (scaled by den)
    long long hi = 0;
    int pivot_var = -1;
  };

  void build_elimination() {
    std::vector<std::vector<Rational>> eq;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!is_target_[r] || r == ref_) continue;
      std::vector<Rational> row(nvars_);
      for (int j = 0; j < nvars_; ++j)
        row[j] = Rational(static_cast<long long>(rows_[r].bits[j]) -
                          static_cast<long long>(rows_[ref_].bits[j]));
      eq.push_back(std::move(row));
    }
    pivot_row_.assign(nvars_, -1);
    int rank = 0;
    for (int col = 0; col < nvars_ && rank < static_cast<int>(eq.size()); ++col) {
      int sel = -1;
      for (int r = rank; r < static_cast<int>(eq.size()); ++r)
        if (eq[r][col].num != 0) {
          sel = r;
          break;
        }
      if (sel < 0) continue;
      std::swap(eq[rank], eq[sel]);
      Rational p = eq[rank][col];
      for (int j = 0; j < nvars_; ++j) eq[rank][j] = eq[rank][j] / p;
      for (int r = 0; r < static_cast<int>(eq.size()); ++r) {
        if (r == rank || eq[r][col].num == 0) continue;
        Rational f = eq[r][col];
        for (int j = 0; j < nvars_; ++j) eq[r][j] = eq[r][j] - f * eq[rank][j];
      }
      pivot_row_[col] = rank;
      ++rank;
    }
    rref_ = std::move(eq);
    for (int j = 0; j < nvars_; ++j)
      if (pivot_row_[j] < 0) free_.push_back(j);
  }

  void build_forms() {
    pivot_expr_.assign(nvars_, {});
    for (int col = 0; col < nvars_; ++col) {
      if (pivot_row_[col] < 0) continue;
      std::vector<Rational> expr(free_.size());
      for (std::size_t fi = 0; fi < free_.size(); ++fi)
        expr[fi] = -rref_[pivot_row_[col]][free_[fi]];
      pivot_expr_[col] = std::move(expr);
    }
    // Pivot bound constraints: lo_p * den <= expr <= cap * den, integral.
    for (int col = 0; col < nvars_; ++col) {
      if (pivot_row_[col] < 0) continue;
      Constraint c;
      long long den = 1;
      for (const auto& q : pivot_expr_[col]) den = std::lcm(den, q.den);
      c.den = den;
      c.coef.resize(free_.size());
      for (std::size_t fi = 0; fi < free_.size(); ++fi)
        c.coef[fi] = pivot_expr_[col][fi].num * (den / pivot_expr_[col][fi].den);
      c.lo = lo_[col] * den;
      c.hi = cap_ * den;
      c.pivot_var = col;
      forms_.push_back(std::move(c));
    }
    // Dominance rows: (n' - n_ref) . w <= -1.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (is_target_[r]) continue;
      std::vector<Rational> expr(free_.size());
      for (int j = 0; j < nvars_; ++j) {
        long long cj = static_cast<long long>(rows_[r].bits[j]) -
                       static_cast<long long>(rows_[ref_].bits[j]);
        if (cj == 0) continue;
        if (pivot_row_[j] >= 0) {
          for (std::size_t fi = 0; fi < free_.size(); ++fi)
            expr[fi] = expr[fi] + Rational(cj) * pivot_expr_[j][fi];
        } else {
          for (std::size_t fi = 0; fi < free_.size(); ++fi)
            if (free_[fi] == j) expr[fi] = expr[fi] + Rational(cj);
        }
      }
      Constraint c;
      long long den = 1;
      for (const auto& q : expr) den = std::lcm(den, q.den);
      c.den = 0;
      c.coef.resize(free_.size());
      for (std::size_t fi = 0; fi < free_.size(); ++fi)
        c.coef[fi] = expr[fi].num * (den / expr[fi].den);
      c.lo = std::numeric_limits<long long>::min() / 4;
      c.hi = -den;
      forms_.push_back(std::move(c));
    }
  }

  // Interval (bounds-consistency) tightening of the free-variable domains.
  // Returns false when some domain empties: infeasible without search.
  bool tighten_root_domains() {
    dom_lo_.resize(free_.size());
    dom_hi_.resize(free_.size());
    for (std::size_t fi = 0; fi < free_.size(); ++fi) {
      dom_lo_[fi] = lo_[free_[fi]];
      dom_hi_[fi] = cap_;
      if (dom_lo_[fi] > dom_hi_[fi]) return false;
    }
    bool changed = true;
    int rounds = 0;
    while (changed && rounds++ < 50) {
      changed = false;
      for (const auto& c : forms_) {
        long long lo_sum = 0, hi_sum = 0;
        for (std::size_t fi = 0; fi < free_.size(); ++fi) {
          long long a = c.coef[fi];
          if (a == 0) continue;
          lo_sum += a > 0 ? a * dom_lo_[fi] : a * dom_hi_[fi];
          hi_sum += a > 0 ? a * dom_hi_[fi] : a * dom_lo_[fi];
        }
        if (lo_sum > c.hi || hi_sum < c.lo) return false;
        for (std::size_t fi = 0; fi < free_.size(); ++fi) {
          long long a = c.coef[fi];
          if (a == 0) continue;
          long long rest_lo = lo_sum - (a > 0 ? a * dom_lo_[fi] : a * dom_hi_[fi]);
          long long rest_hi = hi_sum - (a > 0 ? a * dom_hi_[fi] : a * dom_lo_[fi]);
          // a * x in [c.lo - rest_hi, c.hi - rest_lo]
          long long vlo = c.lo - rest_hi, vhi = c.hi - rest_lo;
          long long nlo = dom_lo_[fi], nhi = dom_hi_[fi];
          if (a > 0) {
            nlo = std::max(nlo, ceil_div(vlo, a));
            nhi = std::min(nhi, floor_div(vhi, a));
          } else {
            nlo = std::max(nlo, ceil_div(-vhi, -a));
            nhi = std::min(nhi, floor_div(-vlo, -a));
          }
          if (nlo > nhi) return false;
          if (nlo != dom_lo_[fi] || nhi != dom_hi_[fi]) {
            dom_lo_[fi] = nlo;
            dom_hi_[fi] = nhi;
            changed = true;
          }
        }
      }
    }
    return true;
  }

  static long long ceil_div(long long a, long long b) {
    return a / b + (((a ^ b) > 0) && (a % b != 0));
  }
  static long long floor_div(long long a, long long b) {
    return a / b - (((a ^ b) < 0) && (a % b != 0));
  }

  void order_free_vars() {
    std::vector<std::size_t> idx(free_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<long long> span(free_.size());
    std::vector<int> uses(free_.size(), 0);
    for (std::size_t fi = 0; fi < free_.size(); ++fi)
      span[fi] = dom_hi_[fi] - dom_lo_[fi];
    for (const auto& c : forms_)
      for (std::size_t fi = 0; fi < free_.size(); ++fi)
        if (c.coef[fi] != 0) ++uses[fi];
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      if (span[a] != span[b]) return span[a] < span[b];
      return uses[a] > uses[b];
    });
    auto permute_ll = [&](std::vector<long long>& v) {
      std::vector<long long> nv(v.size());
      for (std::size_t k = 0; k < idx.size(); ++k) nv[k] = v[idx[k]];
      v = std::move(nv);
    };
    std::vector<int> nfree(free_.size());
    for (std::size_t k = 0; k < idx.size(); ++k) nfree[k] = free_[idx[k]];
    free_ = std::move(nfree);
    permute_ll(dom_lo_);
    permute_ll(dom_hi_);
    for (auto& c : forms_) permute_ll(c.coef);
    for (auto& e : pivot_expr_) {
      if (e.empty()) continue;
      std::vector<Rational> ne(e.size());
      for (std::size_t k = 0; k < idx.size(); ++k) ne[k] = e[idx[k]];
      e = std::move(ne);
    }
  }

  // suffix_lo/hi[c][d]: extreme achievable contribution of variables d..end.
  void build_suffix_tables() {
    std::size_t nf = free_.size();
    suffix_lo_.assign(forms_.size(), std::vector<long long>(nf + 1, 0));
    suffix_hi_.assign(forms_.size(), std::vector<long long>(nf + 1, 0));
    for (std::size_t ci = 0; ci < forms_.size(); ++ci) {
      for (std::size_t d = nf; d-- > 0;) {
        long long a = forms_[ci].coef[d];
        long long add_lo = a > 0 ? a * dom_lo_[d] : a * dom_hi_[d];
        long long add_hi = a > 0 ? a * dom_hi_[d] : a * dom_lo_[d];
        suffix_lo_[ci][d] = suffix_lo_[ci][d + 1] + add_lo;
        suffix_hi_[ci][d] = suffix_hi_[ci][d + 1] + add_hi;
      }
    }
    obj_suffix_lo_.assign(nf + 1, 0);
    for (std::size_t d = nf; d-- > 0;)
      obj_suffix_lo_[d] = obj_suffix_lo_[d + 1] + dom_lo_[d];
    pivot_floor_ = 0;
    for (int j = 0; j < nvars_; ++j)
      if (pivot_row_[j] >= 0) pivot_floor_ += lo_[j];
  }

  long long objective_of(const std::vector<long long>& w) const {
    if (opt_.objective == WeightObjective::minimize_max) {
      long long mx = 0, sm = 0;
      for (auto v : w) {
        mx = std::max(mx, v);
        sm += v;
      }
      return mx * 100000 + sm;
    }
    long long s = 0;
    for (auto v : w) s += v;
    return s;
  }

  void dfs(std::size_t depth, long long assigned_sum) {
    if (++nodes_ > opt_.node_budget)
      throw budget_error("weight program exceeded its node budget");
    for (std::size_t ci = 0; ci < forms_.size(); ++ci) {
      long long lo = activity_[ci] + suffix_lo_[ci][depth];
      long long hi = activity_[ci] + suffix_hi_[ci][depth];
      if (hi < forms_[ci].lo || lo > forms_[ci].hi) return;
    }
    if (best_ && opt_.objective == WeightObjective::minimize_sum) {
      if (assigned_sum + obj_suffix_lo_[depth] + pivot_floor_ >= best_obj_) return;
    }
    if (depth == free_.size()) {
      finish_leaf();
      return;
    }
    for (long long v = dom_lo_[depth]; v <= dom_hi_[depth]; ++v) {
      assign_[depth] = v;
      for (std::size_t ci = 0; ci < forms_.size(); ++ci)
        activity_[ci] += forms_[ci].coef[depth] * v;
      dfs(depth + 1, assigned_sum + v);
      for (std::size_t ci = 0; ci < forms_.size(); ++ci)
        activity_[ci] -= forms_[ci].coef[depth] * v;
    }
  }

  void finish_leaf() {
    std::vector<long long> w(nvars_, 0);
    for (std::size_t fi = 0; fi < free_.size(); ++fi) w[free_[fi]] = assign_[fi];
    for (int col = 0; col < nvars_; ++col) {
      if (pivot_row_[col] < 0) continue;
      Rational val(0);
      for (std::size_t fi = 0; fi < free_.size(); ++fi)
        val = val + pivot_expr_[col][fi] * Rational(assign_[fi]);
      if (!val.is_integer()) return;
      if (val.num < lo_[col] || val.num > cap_) return;
      w[col] = val.num;
    }
    long long eref = 0;
    for (int j = 0; j < nvars_; ++j)
      if (rows_[ref_].bits[j]) eref += w[j];
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      long long e = 0;
      for (int j = 0; j < nvars_; ++j)
        if (rows_[r].bits[j]) e += w[j];
      if (is_target_[r] ? (e != eref) : (e > eref - 1)) return;
    }
    long long obj = objective_of(w);
    if (!best_ || obj < best_obj_) {
      best_ = w;
      best_obj_ = obj;
    }
  }

  const std::vector<Configuration>& rows_;
  long long cap_;
  std::vector<long long> lo_;
  WeightProgramOptions opt_;
  int nvars_ = 0;
  std::size_t ref_ = 0;
  std::vector<bool> is_target_;
  std::vector<std::vector<Rational>> rref_;
  std::vector<int> pivot_row_;
  std::vector<int> free_;
  std::vector<std::vector<Rational>> pivot_expr_;
  std::vector<Constraint> forms_;
  std::vector<long long> dom_lo_, dom_hi_;
  std::vector<std::vector<long long>> suffix_lo_, suffix_hi_;
  std::vector<long long> obj_suffix_lo_;
  long long pivot_floor_ = 0;
  std::vector<long long> assign_;
  std::vector<long long> activity_;
  std::optional<std::vector<long long>> best_;
  long long best_obj_ = 0;
  long long nodes_ = 0;
};

}  // namespace detail

/// Optimal integer weights for the target/non-target energy separation, or
/// nullopt if infeasible. `min_weight` pins per-vertex lower bounds (pins
/// must stay >= 1; interior vertices may reach 0, which flags them as
/// removable). Throws budget_error on node-budget exhaustion.
inline std::optional<std::vector<long long>> formulate_and_solve(
    const std::vector<Configuration>& mis_matrix,
    const std::vector<std::size_t>& target_indices, long long weight_cap,
    std::vector<long long> min_weight = {}, WeightProgramOptions opt = {}) {
  if (mis_matrix.empty() || target_indices.empty())
    throw std::invalid_argument("weight program needs rows and a target set");
  if (weight_cap < 1) throw std::invalid_argument("weight cap must be >= 1");
  if (min_weight.empty()) min_weight.assign(mis_matrix[0].size(), 0);
  detail::WeightProgramSolver s(mis_matrix, target_indices, weight_cap,
                                std::move(min_weight), opt);
  return s.solve();
}

}  // namespace tlsg
