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

// Maintenance tool: regenerates the built-in crossing-lattice cell library
// by running the gadget search over each cell template, and prints the
// frozen data table consumed by include/tlsg/cells.hpp.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "tlsg/cells.hpp"

using namespace tlsg;

int main(int argc, char** argv) {
  long long cap = 6;
  bool king_too = true;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--cap") && i + 1 < argc) cap = std::atoll(argv[++i]);
    if (!std::strcmp(argv[i], "--no-king")) king_too = false;
  }

  std::vector<LatticeFamily> families{LatticeFamily::triangular()};
  if (king_too) families.push_back(LatticeFamily::king());
  std::vector<CellKind> kinds{CellKind::cross,     CellKind::cross_edge,
                              CellKind::tee_n,     CellKind::tee_s,
                              CellKind::tee_e,     CellKind::end_end_s,
                              CellKind::end_end_n};

  std::printf("// generated by tools/cellgen --cap %lld\n", cap);
  for (const auto& fam : families) {
    for (auto kind : kinds) {
      auto space = cell_search_space(fam, kind);
      SearchOptions opt;
      opt.weight_cap = cap;
      auto t0 = std::chrono::steady_clock::now();
      std::optional<Gadget> found;
      try {
        found = search_first(space, cell_constraint(kind), opt);
      } catch (const std::exception& e) {
        std::fprintf(stderr, "%s/%s: search error: %s\n", fam.name(),
                     cell_kind_name(kind), e.what());
        continue;
      }
      auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
      if (!found) {
        std::fprintf(stderr, "%s/%s: NO GADGET in template space (%.1fs)\n",
                     fam.name(), cell_kind_name(kind), dt);
        continue;
      }
      long long maxw = 0;
      for (auto w : found->graph.weights()) maxw = std::max(maxw, w);
      std::fprintf(stderr, "%s/%s: %d vertices, energy %lld, max weight %lld (%.1fs)\n",
                   fam.name(), cell_kind_name(kind), found->graph.n(),
                   found->mwis_energy, maxw, dt);
      std::printf("    {LatticeKind::%s, CellKind::%s,\n     {", fam.name(),
                  cell_kind_name(kind));
      for (std::size_t i = 0; i < found->layout->sites.size(); ++i) {
        const auto& s = found->layout->sites[i];
        std::printf("%s%d,%d,%lld", i ? ", " : "", s.pos.x, s.pos.y, s.weight);
      }
      std::printf("},\n     {");
      for (std::size_t i = 0; i < found->pins.size(); ++i)
        std::printf("%s%d", i ? ", " : "", found->pins[i]);
      std::printf("}},\n");
      std::fflush(stdout);
    }
  }
  return 0;
}
