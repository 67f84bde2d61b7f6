#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "expg/graph.hpp"

namespace expg {

// -1 marks unreachable vertices.
std::vector<std::int32_t> bfs_distances(const Graph& g, Vertex source);
std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v);
// Deterministic: neighbors are scanned in increasing order and the first
// discoverer becomes the parent. Throws Disconnected when v is unreachable.
std::vector<Vertex> shortest_path(const Graph& g, Vertex u, Vertex v);

bool is_connected(const Graph& g);
std::vector<std::size_t> component_sizes(const Graph& g);
bool is_tree(const Graph& g);
bool is_complete(const Graph& g);

// Exact diameter using the parallel eccentricity kernel.
// Throws Disconnected for disconnected graphs.
std::size_t diameter(const Graph& g);

// u ~ v iff 1 <= d(u, v) <= n.
Graph power_graph(const Graph& g, std::size_t n);

// Blocks partition a subset of V; uncovered vertices become singletons.
// New ids follow the order of each block's smallest vertex.
Graph contract(const Graph& g, std::span<const std::vector<Vertex>> blocks);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

struct HamSearchLimits {
  std::size_t max_vertices = 14;
};
constexpr std::size_t kHamHardCap = 24;

// Exact tests by dynamic programming over (subset, endpoint).
// Throw LimitExceeded above the configured size.
bool is_hamiltonian(const Graph& g, HamSearchLimits limits = {});
bool is_hamiltonian_connected(const Graph& g, HamSearchLimits limits = {});
std::optional<std::vector<Vertex>> find_ham_cycle(const Graph& g,
                                                  HamSearchLimits limits = {});
std::optional<std::vector<Vertex>> find_ham_path(const Graph& g, Vertex s,
                                                 Vertex t,
                                                 HamSearchLimits limits = {});

// Caches one reachability table per source for repeated path queries.
class HamPathOracle {
 public:
  explicit HamPathOracle(const Graph& g, HamSearchLimits limits = {});
  std::optional<std::vector<Vertex>> path(Vertex s, Vertex t);
  bool all_targets_reachable(Vertex s);

 private:
  const std::vector<std::uint32_t>& table(Vertex s);

  const Graph* g_;
  bool complete_;
  std::vector<std::uint32_t> nbmask_;
  std::vector<std::vector<std::uint32_t>> tables_;
};

}  // namespace expg
