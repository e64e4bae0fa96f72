#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tlsg/graph.hpp"
#include "tlsg/graph6.hpp"

using namespace tlsg;

TEST_CASE("weighted graph construction and invariants") {
  WeightedGraph g(3, {1, 2, 3}, {{0, 1}, {1, 2}});
  CHECK(g.n() == 3);
  CHECK(g.m() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.total_weight() == 6);

  CHECK_THROWS_AS(WeightedGraph(2, {1, 1}, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedGraph(2, {1, 1}, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedGraph(2, {0, 1}, {}), std::invalid_argument);
}

TEST_CASE("violation count") {
  WeightedGraph not_gadget(2, {1, 1}, {{0, 1}});
  CHECK(violation_count(not_gadget, Configuration("11")) == 1);
  CHECK(violation_count(not_gadget, Configuration("10")) == 0);

  WeightedGraph triangle = WeightedGraph::unweighted(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(violation_count(triangle, Configuration("111")) == 3);

  WeightedGraph p3 = WeightedGraph::unweighted(3, {{0, 1}, {1, 2}});
  CHECK(violation_count(p3, Configuration("101")) == 0);

  CHECK_THROWS_AS(violation_count(p3, Configuration("10")), std::invalid_argument);
}

TEST_CASE("graph6 known strings") {
  // K4 is "C~", the 5-cycle is "Dhc".
  WeightedGraph k4 = WeightedGraph::unweighted(4, {{0, 1}, {0, 2}, {0, 3},
                                                   {1, 2}, {1, 3}, {2, 3}});
  CHECK(write_graph6(k4) == "C~");
  WeightedGraph c5 = WeightedGraph::unweighted(
      5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK(write_graph6(c5) == "Dhc");

  auto back = read_graph6("C~");
  CHECK(back.n() == 4);
  CHECK(back.m() == 6);
  auto c5b = read_graph6("Dhc");
  CHECK(c5b.n() == 5);
  CHECK(c5b.m() == 5);
  CHECK(c5b.has_edge(0, 4));
  CHECK_FALSE(c5b.has_edge(0, 2));
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 70);  // crosses the 62-vertex format edge
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 4 == 0) edges.emplace_back(i, j);
    auto g = WeightedGraph::unweighted(n, edges);
    auto h = read_graph6(write_graph6(g));
    REQUIRE(h.n() == g.n());
    REQUIRE(h.edges() == g.edges());
  }
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(read_graph6("C"), std::invalid_argument);    // truncated
  CHECK_THROWS_AS(read_graph6("C\x01"), std::invalid_argument); // bad byte
}

TEST_CASE("layout to graph carries weights and unit-disk edges") {
  GridLayout layout{LatticeFamily::triangular(),
                    {{{0, 0}, 2}, {{1, 0}, 3}, {{4, 4}, 5}},
                    std::nullopt};
  auto g = WeightedGraph::from_layout(layout);
  CHECK(g.n() == 3);
  CHECK(g.m() == 1);
  CHECK(g.weight(2) == 5);
}
