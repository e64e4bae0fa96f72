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
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tlsg/geometry.hpp"
#include "tlsg/util.hpp"

namespace tlsg {

/// A binary assignment over the vertices of one graph. bits[v] == 1 means
/// vertex v is in the set.
struct Configuration {
  std::vector<std::uint8_t> bits;

  Configuration() = default;
  explicit Configuration(std::size_t n) : bits(n, 0) {}
  explicit Configuration(const std::string& s) {
    bits.reserve(s.size());
    for (char c : s) {
      if (c != '0' && c != '1') throw std::invalid_argument("bad bitstring");
      bits.push_back(c == '1');
    }
  }

  std::size_t size() const { return bits.size(); }
  std::string str() const {
    std::string s(bits.size(), '0');
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (bits[i]) s[i] = '1';
    return s;
  }
  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend bool operator<(const Configuration& a, const Configuration& b) {
    return a.bits < b.bits;
  }
};

/// Undirected simple graph with positive integer vertex weights. Adjacency
/// is kept as bitset rows for word-parallel set operations.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(int n, std::vector<long long> weights,
                std::vector<std::pair<int, int>> edges)
      : n_(n), weights_(std::move(weights)), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    if (static_cast<int>(weights_.size()) != n_)
      throw std::invalid_argument("weight list does not match vertex count");
    for (auto w : weights_)
      if (w < 1) throw std::invalid_argument("vertex weights must be >= 1");
    adj_.assign(n_, Bitset(static_cast<std::size_t>(n_)));
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges_) {
      if (u == v) throw std::invalid_argument("self-loop");
      if (u > v) std::swap(u, v);
      if (u < 0 || v >= n_) throw std::invalid_argument("edge endpoint out of range");
      if (!seen.emplace(u, v).second) throw std::invalid_argument("duplicate edge");
      adj_[u].set(v);
      adj_[v].set(u);
    }
    std::sort(edges_.begin(), edges_.end());
  }

  static WeightedGraph unweighted(int n, std::vector<std::pair<int, int>> edges) {
    return WeightedGraph(n, std::vector<long long>(n, 1), std::move(edges));
  }

  /// Graph induced by a layout: vertices in site order, unit-disk edges.
  static WeightedGraph from_layout(const GridLayout& layout) {
    std::vector<long long> w;
    w.reserve(layout.sites.size());
    for (const auto& s : layout.sites) w.push_back(s.weight);
    return WeightedGraph(static_cast<int>(layout.sites.size()), std::move(w),
                         derive_edges(layout));
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  long long weight(int v) const { return weights_[v]; }
  const std::vector<long long>& weights() const { return weights_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const Bitset& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  int degree(int v) const { return static_cast<int>(adj_[v].count()); }

  long long total_weight() const {
    long long s = 0;
    for (auto w : weights_) s += w;
    return s;
  }

  bool is_independent(const Configuration& c) const {
    for (const auto& [u, v] : edges_)
      if (c.bits[u] && c.bits[v]) return false;
    return true;
  }

  long long config_weight(const Configuration& c) const {
    long long s = 0;
    for (int v = 0; v < n_; ++v)
      if (c.bits[v]) s += weights_[v];
    return s;
  }

 private:
  int n_ = 0;
  std::vector<long long> weights_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Bitset> adj_;
};

/// Number of violated edges: sum over (u,v) in E of n_u * n_v.
inline long long violation_count(const WeightedGraph& g, const Configuration& c) {
  if (c.size() != static_cast<std::size_t>(g.n()))
    throw std::invalid_argument("configuration length does not match graph");
  long long viol = 0;
  for (const auto& [u, v] : g.edges())
    if (c.bits[u] && c.bits[v]) ++viol;
  return viol;
}

}  // namespace tlsg
