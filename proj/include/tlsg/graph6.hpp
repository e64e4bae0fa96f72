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

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tlsg/graph.hpp"

namespace tlsg {

// graph6 interchange format (McKay). Upper-triangle bits in column order
// (0,1),(0,2),(1,2),(0,3),... packed 6 bits per printable character.

inline std::string write_graph6(const WeightedGraph& g) {
  int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  } else {
    throw std::invalid_argument("graph too large for this graph6 writer");
  }
  int bit = 5;
  int cur = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(i, j)) cur |= 1 << bit;
      if (--bit < 0) {
        out.push_back(static_cast<char>(63 + cur));
        bit = 5;
        cur = 0;
      }
    }
  if (bit != 5) out.push_back(static_cast<char>(63 + cur));
  return out;
}

inline WeightedGraph read_graph6(const std::string& line) {
  std::size_t pos = 0;
  auto next6 = [&]() -> int {
    if (pos >= line.size()) throw std::invalid_argument("truncated graph6 string");
    int c = static_cast<unsigned char>(line[pos++]);
    if (c < 63 || c > 126) throw std::invalid_argument("invalid graph6 character");
    return c - 63;
  };
  // Optional header emitted by some tools.
  std::string body = line;
  if (body.rfind(">>graph6<<", 0) == 0) body = body.substr(10);
  pos = 0;
  const std::string& s = body;
  auto next6s = [&]() -> int {
    if (pos >= s.size()) throw std::invalid_argument("truncated graph6 string");
    int c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) throw std::invalid_argument("invalid graph6 character");
    return c - 63;
  };
  (void)next6;
  long long n;
  int c0 = next6s();
  if (c0 < 63) {
    n = c0;
  } else {
    long long a = next6s(), b = next6s(), c = next6s();
    n = (a << 12) | (b << 6) | c;
  }
  std::vector<std::pair<int, int>> edges;
  int bit = -1;
  int cur = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (bit < 0) {
        cur = next6s();
        bit = 5;
      }
      if ((cur >> bit) & 1) edges.emplace_back(i, j);
      --bit;
    }
  return WeightedGraph::unweighted(static_cast<int>(n), std::move(edges));
}

/// Reads every graph in a .g6 file (one graph per line, blank lines skipped).
inline std::vector<WeightedGraph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<WeightedGraph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    graphs.push_back(read_graph6(line));
  }
  return graphs;
}

inline void write_graph6_file(const std::string& path,
                              const std::vector<WeightedGraph>& graphs) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  for (const auto& g : graphs) out << write_graph6(g) << "\n";
}

}  // namespace tlsg
