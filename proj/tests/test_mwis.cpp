#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracle.hpp"
#include "tlsg/mwis.hpp"

using namespace tlsg;

namespace {

WeightedGraph random_graph(std::mt19937& rng, int n, double p,
                           long long max_weight = 4) {
  std::vector<std::pair<int, int>> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < p) edges.emplace_back(i, j);
  std::vector<long long> w(n);
  for (auto& x : w) x = 1 + static_cast<long long>(rng() % max_weight);
  return WeightedGraph(n, std::move(w), std::move(edges));
}

}  // namespace

TEST_CASE("maximal independent sets on named small graphs") {
  WeightedGraph single(1, {1}, {});
  auto mis = maximal_independent_sets(single);
  REQUIRE(mis.size() == 1);
  CHECK(mis[0].str() == "1");

  WeightedGraph not_gadget(2, {1, 1}, {{0, 1}});
  mis = maximal_independent_sets(not_gadget);
  REQUIRE(mis.size() == 2);
  CHECK(mis[0].str() == "01");
  CHECK(mis[1].str() == "10");

  WeightedGraph p3 = WeightedGraph::unweighted(3, {{0, 1}, {1, 2}});
  mis = maximal_independent_sets(p3);
  REQUIRE(mis.size() == 2);
  CHECK(mis[0].str() == "010");
  CHECK(mis[1].str() == "101");
}

TEST_CASE("enumeration cap raises a size-limit error") {
  WeightedGraph big = WeightedGraph::unweighted(31, {});
  CHECK_THROWS_AS(maximal_independent_sets(big), size_limit_error);
  try {
    maximal_independent_sets(big);
  } catch (const size_limit_error& e) {
    CHECK(e.size() == 31);
    CHECK(e.cap() == 30);
  }
}

TEST_CASE("solve_mwis on named examples") {
  WeightedGraph not_gadget(2, {1, 1}, {{0, 1}});
  auto res = solve_mwis(not_gadget);
  CHECK(res.weight == 1);
  REQUIRE(res.solutions.size() == 2);
  CHECK(res.solutions[0].str() == "01");
  CHECK(res.solutions[1].str() == "10");

  // Copy wire of 5 vertices: two-fold degenerate Z2 pair.
  WeightedGraph wire(5, {1, 2, 2, 2, 1}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  res = solve_mwis(wire);
  CHECK(res.weight == 4);
  REQUIRE(res.solutions.size() == 2);
  CHECK(res.solutions[0].str() == "01010");
  CHECK(res.solutions[1].str() == "10101");

  WeightedGraph pair(2, {3, 5}, {});
  res = solve_mwis(pair);
  CHECK(res.weight == 8);
  REQUIRE(res.solutions.size() == 1);
  CHECK(res.solutions[0].str() == "11");
}

TEST_CASE("wire degeneracy across lengths 3..13") {
  for (int len = 3; len <= 13; len += 2) {
    std::vector<long long> w(len, 2);
    w.front() = w.back() = 1;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < len; ++i) edges.emplace_back(i, i + 1);
    auto res = solve_mwis(WeightedGraph(len, w, edges));
    CHECK(res.weight == len - 1);
    REQUIRE(res.solutions.size() == 2);
    std::string a(len, '0'), b(len, '0');
    for (int i = 1; i < len; i += 2) a[i] = '1';
    for (int i = 0; i < len; i += 2) b[i] = '1';
    CHECK(res.solutions[0].str() == a);
    CHECK(res.solutions[1].str() == b);
  }
}

TEST_CASE("oracle equivalence against brute force") {
  std::mt19937 rng(20260810);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 2 + static_cast<int>(rng() % 11);
    double p = (trial % 4) * 0.25 + 0.1;
    auto g = random_graph(rng, n, p);
    auto [bw, bsols] = oracle::brute_mwis(g);
    auto res = solve_mwis(g);
    REQUIRE(res.weight == bw);
    REQUIRE(res.solutions == bsols);
    // Every optimum is a violation-free maximal independent set.
    auto mis = maximal_independent_sets(g);
    for (const auto& s : res.solutions) {
      CHECK(violation_count(g, s) == 0);
      CHECK(std::binary_search(mis.begin(), mis.end(), s));
      for (int v = 0; v < g.n(); ++v) {
        if (s.bits[v]) continue;
        Configuration extended = s;
        extended.bits[v] = 1;
        CHECK_FALSE(g.is_independent(extended));  // MWIS is maximal
      }
    }
  }
}

TEST_CASE("maximal IS counts match brute force") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    auto g = random_graph(rng, n, 0.35);
    auto mine = maximal_independent_sets(g);
    auto brute = oracle::brute_maximal_is(g);
    REQUIRE(mine == brute);
  }
}

TEST_CASE("node budget raises budget_error with a bound") {
  std::mt19937 rng(5);
  auto g = random_graph(rng, 40, 0.15);
  SolveOptions opt;
  opt.collect_all = false;
  opt.node_budget = 3;
  CHECK_THROWS_AS(solve_mwis(g, opt), budget_error);
}

TEST_CASE("solver handles larger sparse instances") {
  // Chain of 161 vertices with wire-like weights: optimum is the alternating
  // string, found by reductions alone.
  int len = 161;
  std::vector<long long> w(len, 2);
  w.front() = w.back() = 1;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < len; ++i) edges.emplace_back(i, i + 1);
  auto res = solve_mwis_best(WeightedGraph(len, w, edges));
  CHECK(res.weight == len - 1);
  REQUIRE(res.solutions.size() == 1);
  CHECK(violation_count(WeightedGraph(len, w, edges), res.solutions[0]) == 0);
}
