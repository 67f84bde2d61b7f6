#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "expg/algorithms.hpp"
#include "expg/connectivity.hpp"
#include "expg/error.hpp"
#include "expg/generators.hpp"
#include "oracles.hpp"

using namespace expg;

TEST_CASE("kappa and lambda agree with subset oracles") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    Graph g = oracle::random_connected(5 + t % 9, 0.15 + 0.05 * (t % 6), rng);
    std::size_t k = vertex_connectivity(g);
    std::size_t l = edge_connectivity(g);
    CHECK(k == oracle::kappa(g));
    CHECK(l == static_cast<std::size_t>(oracle::boundary_min(g, false)));
    CHECK(k <= l);
    CHECK(l <= g.min_degree());
    ConnectivityOptions serial;
    serial.parallel = false;
    CHECK(vertex_connectivity(g, serial) == k);
    CHECK(edge_connectivity(g, serial) == l);
  }
}

TEST_CASE("restricted edge connectivity agrees with the oracle") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    Graph g = oracle::random_connected(5 + t % 10, 0.2 + 0.04 * (t % 5), rng);
    long want = oracle::boundary_min(g, true);
    ConnectivityOptions full;
    full.full_schedule = true;
    auto fast = restricted_edge_connectivity(g);
    auto slow = restricted_edge_connectivity(g, full);
    CHECK(fast == slow);
    if (want < 0) {
      CHECK(!fast.has_value());
    } else {
      REQUIRE(fast.has_value());
      CHECK(*fast == static_cast<std::size_t>(want));
    }
    ConnectivityOptions serial;
    serial.parallel = false;
    CHECK(restricted_edge_connectivity(g, serial) == fast);
  }
  CHECK(!restricted_edge_connectivity(complete_graph(3)).has_value());
  CHECK(restricted_edge_connectivity(cycle_graph(6)) == std::optional<std::size_t>(2));
}

TEST_CASE("frozen values from an independent library") {
  struct Row { Graph g, h; std::size_t n, m, diam, kappa, lambda; };
  std::vector<Row> rows{
      {cycle_graph(4), complete_graph(2), 32, 48, 6, 3, 3},
      {complete_graph(4), complete_graph(2), 32, 64, 4, 4, 4},
      {cycle_graph(5), complete_graph(2), 50, 75, 6, 3, 3},
      {path_graph(3), complete_graph(2), 18, 21, 6, 2, 2},
      {complete_graph(2), path_graph(3), 24, 28, 7, 2, 2},
      {complete_graph(3), cycle_graph(4), 324, 648, 8, 4, 4},
      {path_graph(3), complete_graph(3), 81, 135, 9, 3, 3},
      {cycle_graph(4), cycle_graph(4), 1024, 2048, 12, 4, 4},
      {complete_graph(2), complete_graph(3), 24, 36, 6, 3, 3},
  };
  for (auto& r : rows) {
    Graph x = exponential(r.g, r.h).graph;
    CHECK(x.order() == r.n);
    CHECK(x.size() == r.m);
    CHECK(diameter(x) == r.diam);
    CHECK(vertex_connectivity(x) == r.kappa);
    CHECK(edge_connectivity(x) == r.lambda);
  }
  CHECK(vertex_connectivity(hypercube(3)) == 3);
  CHECK(edge_connectivity(hypercube(3)) == 3);
}

TEST_CASE("kappa(G^H) = delta(G) + delta(H)") {
  std::vector<std::pair<Graph, Graph>> pairs{
      {cycle_graph(8), complete_graph(2)}, {complete_graph(4), de_bruijn(2, 2)},
      {complete_graph(3), path_graph(3)},  {cycle_graph(5), cycle_graph(3)},
      {path_graph(4), complete_graph(2)},  {complete_graph(2), cycle_graph(5)},
      {hypercube(2), complete_graph(3)},   {kautz(2, 2), complete_graph(2)}};
  for (auto& [g, h] : pairs) {
    ExpoSpace space(g, h);
    Graph x = exponential(g, h).graph;
    CHECK(vertex_connectivity(x) == g.min_degree() + h.min_degree());
    CHECK(verify_maxcon_theorem(space));
  }
  CHECK(vertex_connectivity(exponential(complete_graph(4), de_bruijn(2, 2)).graph) == 5);
}

TEST_CASE("kappa of Cartesian powers and products") {
  std::vector<std::pair<Graph, std::size_t>> powers{
      {cycle_graph(4), 2}, {cycle_graph(5), 2}, {complete_graph(3), 3},
      {path_graph(3), 3},  {complete_graph(4), 2}, {cycle_graph(3), 4}};
  for (auto& [g, n] : powers)
    CHECK(vertex_connectivity(cartesian_power(g, n)) == n * g.min_degree());

  std::mt19937_64 rng(17);
  for (int t = 0; t < 14; ++t) {
    Graph g = oracle::random_connected(3 + t % 4, 0.3, rng);
    Graph h = oracle::random_connected(2 + (t * 5) % 5, 0.4, rng);
    std::size_t kg = vertex_connectivity(g), kh = vertex_connectivity(h);
    std::size_t want = std::min({kg * h.order(), kh * g.order(),
                                 g.min_degree() + h.min_degree()});
    CHECK(vertex_connectivity(cartesian_product(g, h)) == want);
  }
}

TEST_CASE("super edge connectivity matches the two-clause predicate") {
  struct Case { Graph g, h; bool first, second; };
  std::vector<Case> cases{
      {cycle_graph(4), cycle_graph(4), true, true},
      {cycle_graph(8), complete_graph(2), true, true},
      {cycle_graph(5), path_graph(3), true, true},
      {path_graph(3), complete_graph(3), false, true},
      {path_graph(3), complete_graph(2), false, true},
      {path_graph(4), complete_graph(3), false, true},
      {complete_graph(3), path_graph(3), true, false},
      {complete_graph(4), path_graph(3), true, false},
      {complete_graph(3), path_graph(4), true, false},
      {complete_graph(2), complete_graph(2), false, false},
      {complete_graph(2), complete_graph(3), false, true},
      // K2^K2 is the only pair failing both clauses
      {complete_graph(2), path_graph(2), false, false},
  };
  for (auto& c : cases) {
    bool c1 = c.g.min_degree() >= 2 || !is_complete(c.h);
    bool c2 = c.h.min_degree() >= 2 || !is_complete(c.g);
    REQUIRE(c1 == c.first);
    REQUIRE(c2 == c.second);
    ExpoSpace space(c.g, c.h);
    Graph x = exponential(c.g, c.h).graph;
    bool pred = super_edge_predicate(c.g, c.h);
    CHECK(pred == (c1 && c2));
    auto res = is_super_edge_connected(x);
    CHECK((res.verdict == SuperVerdict::kYes) == pred);
    CHECK(verify_supered_theorem(space));
    if (!pred) {
      CutWitness w = counterexample_cut(space);
      CHECK(w.edges.size() == x.min_degree());
      auto chk = check_cut(x, w);
      CHECK(chk.disconnects);
      CHECK(!chk.isolates_vertex);
      REQUIRE(res.witness.has_value());
      auto chk2 = check_cut(x, *res.witness);
      CHECK(chk2.disconnects);
      CHECK(!chk2.isolates_vertex);
    } else {
      CHECK_THROWS_AS(counterexample_cut(space), PreconditionError);
    }
  }
}

TEST_CASE("analysis report invariants") {
  for (const Graph& g : {hypercube(3), cycle_graph(7), de_bruijn(2, 3), mobius_cube(3)}) {
    auto r = analyze_connectivity(g, true);
    CHECK(r.kappa <= r.lambda);
    CHECK(r.lambda <= r.delta);
    CHECK(r.maximally_connected == (r.kappa == r.delta));
    REQUIRE(r.super_lambda.has_value());
  }
  CHECK(analyze_connectivity(cycle_graph(7), true).super_lambda->verdict == SuperVerdict::kNo);
  CHECK(analyze_connectivity(hypercube(3), true).super_lambda->verdict == SuperVerdict::kYes);
}

TEST_CASE("disconnected input is rejected") {
  std::vector<Edge> e{{0, 1}, {2, 3}};
  Graph g = Graph::from_edges(4, e);
  CHECK_THROWS_AS(restricted_edge_connectivity(g), Disconnected);
  CHECK(vertex_connectivity(g) == 0);
}
