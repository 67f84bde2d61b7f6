#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "expg/algorithms.hpp"
#include "expg/error.hpp"
#include "expg/generators.hpp"
#include "oracles.hpp"

using namespace expg;

TEST_CASE("edge policies") {
  std::vector<Edge> dup{{0, 1}, {1, 0}, {1, 2}};
  CHECK_THROWS_AS(Graph::from_edges(3, dup), std::invalid_argument);
  Graph g = Graph::from_edges(3, dup, EdgePolicy::kCollapse);
  CHECK(g.size() == 2);
  std::vector<Edge> loop{{0, 0}, {0, 1}};
  CHECK_THROWS_AS(Graph::from_edges(2, loop), std::invalid_argument);
  CHECK(Graph::from_edges(2, loop, EdgePolicy::kCollapse).size() == 1);
  std::vector<Edge> out{{0, 5}};
  CHECK_THROWS_AS(Graph::from_edges(2, out), std::invalid_argument);
}

TEST_CASE("csr validation rejects asymmetric adjacency") {
  CHECK_THROWS_AS(Graph::from_csr({0, 1, 1}, {1}), std::invalid_argument);
  CHECK_NOTHROW(Graph::from_csr({0, 1, 2}, {1, 0}));
}

TEST_CASE("adjacency lists are sorted and symmetric") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    Graph g = oracle::random_connected(15, 0.2, rng);
    CHECK_NOTHROW(validate(g));
    std::size_t deg_sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      auto nb = g.neighbors(v);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      for (Vertex w : nb) CHECK(g.adjacent(w, v));
      deg_sum += nb.size();
    }
    CHECK(deg_sum == 2 * g.size());
  }
}

TEST_CASE("edge list round trip is byte stable") {
  Graph g = de_bruijn(2, 3);
  std::ostringstream a;
  write_edge_list(a, g, "B(2,3)");
  std::istringstream in(a.str());
  Graph back = read_edge_list(in);
  CHECK(back == g);
  std::ostringstream b;
  write_edge_list(b, back, "B(2,3)");
  CHECK(a.str() == b.str());
  std::istringstream bad("3 1\n0 7\n");
  CHECK_THROWS_AS(read_edge_list(bad), std::invalid_argument);
}

TEST_CASE("bfs, distance and shortest paths agree with the oracle") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    Graph g = oracle::random_connected(25, 0.08, rng);
    CHECK(diameter(g) == static_cast<std::size_t>(oracle::diameter(g)));
    for (Vertex s = 0; s < g.order(); s += 5) {
      auto ref = oracle::bfs(g, s);
      auto got = bfs_distances(g, s);
      for (Vertex v = 0; v < g.order(); ++v) {
        CHECK(got[v] == ref[v]);
        auto path = shortest_path(g, s, v);
        CHECK(path.size() == static_cast<std::size_t>(ref[v]) + 1);
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
          CHECK(g.adjacent(path[i], path[i + 1]));
      }
    }
  }
}

TEST_CASE("disconnected graphs") {
  std::vector<Edge> e{{0, 1}, {2, 3}};
  Graph g = Graph::from_edges(4, e);
  CHECK_FALSE(is_connected(g));
  CHECK(component_sizes(g) == std::vector<std::size_t>{2, 2});
  CHECK_THROWS_AS(diameter(g), Disconnected);
  CHECK_THROWS_AS(shortest_path(g, 0, 3), Disconnected);
  CHECK_FALSE(distance(g, 0, 2).has_value());
}

TEST_CASE("power graph of C6") {
  Graph p = power_graph(cycle_graph(6), 2);
  CHECK(p.order() == 6);
  CHECK(p.min_degree() == 4);
  CHECK(p.max_degree() == 4);
  CHECK(power_graph(path_graph(5), 4) == complete_graph(5));
}

TEST_CASE("trees and complete graphs") {
  CHECK(is_tree(path_graph(5)));
  CHECK(is_tree(complete_graph(2)));
  CHECK_FALSE(is_tree(cycle_graph(4)));
  CHECK(is_complete(complete_graph(5)));
  CHECK_FALSE(is_complete(cycle_graph(4)));
}

TEST_CASE("contract and induced subgraph") {
  Graph c = cycle_graph(6);
  std::vector<std::vector<Vertex>> blocks{{0, 1}, {2, 3}, {4, 5}};
  CHECK(contract(c, blocks) == cycle_graph(3));
  std::vector<Vertex> sub{1, 2, 3};
  auto ind = induced_subgraph(c, sub);
  CHECK(ind.graph == path_graph(3));
  CHECK(ind.to_parent == sub);
}

TEST_CASE("Hamiltonian brute force matches permutation search") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    Graph g = oracle::random_connected(7, 0.35, rng);
    CHECK(is_hamiltonian(g) == oracle::has_ham_cycle(g));
    if (auto c = find_ham_cycle(g)) {
      REQUIRE(c->size() == g.order());
      for (std::size_t i = 0; i < c->size(); ++i)
        CHECK(g.adjacent((*c)[i], (*c)[(i + 1) % c->size()]));
    }
    bool hc = true;
    for (Vertex s = 0; s < g.order(); ++s)
      for (Vertex u = s + 1; u < g.order(); ++u) hc = hc && oracle::has_ham_path(g, s, u);
    CHECK(is_hamiltonian_connected(g) == hc);
  }
  CHECK_THROWS_AS(is_hamiltonian(cycle_graph(30)), LimitExceeded);
}

TEST_CASE("Hamiltonian path oracle") {
  Graph k = complete_graph(6);
  HamPathOracle o(k);
  auto p = o.path(2, 4);
  REQUIRE(p);
  CHECK(p->size() == 6);
  CHECK(p->front() == 2);
  CHECK(p->back() == 4);
  HamPathOracle c4(cycle_graph(4));
  CHECK_FALSE(c4.path(0, 2).has_value());
  CHECK(c4.path(0, 1).has_value());
  CHECK_FALSE(c4.all_targets_reachable(0));
}

TEST_CASE("labels do not affect equality") {
  Graph q = hypercube(3);
  CHECK(q.has_labels());
  CHECK(q.label(5) == "101");
  CHECK(q == Graph::from_edges(8, q.edges()));
}
