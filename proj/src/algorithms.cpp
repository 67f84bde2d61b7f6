#include "expg/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "expg/error.hpp"
#include "expg/kernels.hpp"

namespace expg {

std::vector<std::int32_t> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.order()) throw std::out_of_range("bfs source out of range");
  std::vector<std::int32_t> dist(g.order(), -1);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Vertex x = queue[i];
    for (Vertex y : g.neighbors(x))
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
  }
  return dist;
}

std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v) {
  if (v >= g.order()) throw std::out_of_range("vertex out of range");
  auto d = bfs_distances(g, u)[v];
  if (d < 0) return std::nullopt;
  return static_cast<std::size_t>(d);
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order())
    throw std::out_of_range("vertex out of range");
  constexpr Vertex kUnset = ~Vertex{0};
  std::vector<Vertex> parent(g.order(), kUnset);
  std::vector<Vertex> queue{u};
  parent[u] = u;
  for (std::size_t i = 0; i < queue.size() && parent[v] == kUnset; ++i) {
    Vertex x = queue[i];
    for (Vertex y : g.neighbors(x))
      if (parent[y] == kUnset) {
        parent[y] = x;
        queue.push_back(y);
      }
  }
  if (parent[v] == kUnset)
    throw Disconnected("no path between " + std::to_string(u) + " and " +
                       std::to_string(v));
  std::vector<Vertex> path{v};
  while (path.back() != u) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::size_t> component_sizes(const Graph& g) {
  std::vector<std::size_t> sizes;
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::size_t count = 0;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      ++count;
      for (Vertex y : g.neighbors(x))
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
    sizes.push_back(count);
  }
  return sizes;
}

bool is_connected(const Graph& g) { return component_sizes(g).size() <= 1; }

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return g.size() == n * (n - (n > 0)) / 2;
}

std::size_t diameter(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("diameter of empty graph");
  auto prof = kernels::parallel::eccentricities(g);
  if (!prof.connected) throw Disconnected("diameter of a disconnected graph");
  return prof.diameter();
}

Graph power_graph(const Graph& g, std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex s = 0; s < g.order(); ++s) {
    auto d = bfs_distances(g, s);
    for (Vertex t = s + 1; t < g.order(); ++t)
      if (d[t] >= 1 && static_cast<std::size_t>(d[t]) <= n)
        edges.emplace_back(s, t);
  }
  return Graph::from_edges(g.order(), edges);
}

Graph contract(const Graph& g, std::span<const std::vector<Vertex>> blocks) {
  constexpr Vertex kUnset = ~Vertex{0};
  std::vector<Vertex> block_of(g.order(), kUnset);
  std::vector<std::vector<Vertex>> all;
  for (const auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty contraction block");
    for (Vertex v : b) {
      if (v >= g.order()) throw std::out_of_range("block vertex out of range");
      if (block_of[v] != kUnset)
        throw std::invalid_argument("contraction blocks overlap");
      block_of[v] = static_cast<Vertex>(all.size());
    }
    all.push_back(b);
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (block_of[v] == kUnset) {
      block_of[v] = static_cast<Vertex>(all.size());
      all.push_back({v});
    }
  std::vector<std::pair<Vertex, std::size_t>> keyed;
  for (std::size_t i = 0; i < all.size(); ++i)
    keyed.emplace_back(*std::min_element(all[i].begin(), all[i].end()), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Vertex> rank(all.size());
  for (std::size_t i = 0; i < keyed.size(); ++i)
    rank[keyed[i].second] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    Vertex a = rank[block_of[u]], b = rank[block_of[v]];
    if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Graph::from_edges(all.size(), edges, EdgePolicy::kCollapse);
}

InducedSubgraph induced_subgraph(const Graph& g,
                                 std::span<const Vertex> subset) {
  InducedSubgraph out;
  out.to_parent.assign(subset.begin(), subset.end());
  std::sort(out.to_parent.begin(), out.to_parent.end());
  out.to_parent.erase(std::unique(out.to_parent.begin(), out.to_parent.end()),
                      out.to_parent.end());
  constexpr Vertex kUnset = ~Vertex{0};
  std::vector<Vertex> local(g.order(), kUnset);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    if (out.to_parent[i] >= g.order())
      throw std::out_of_range("subset vertex out of range");
    local[out.to_parent[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex u : out.to_parent)
    for (Vertex v : g.neighbors(u))
      if (u < v && local[v] != kUnset) edges.emplace_back(local[u], local[v]);
  out.graph = Graph::from_edges(out.to_parent.size(), edges);
  return out;
}

// ---------------------------------------------------------------------------
// Hamiltonicity by subset DP. reach[mask] holds the set of end vertices e for
// which a path from the source visits exactly `mask` and stops at e.

namespace {

void check_limit(const Graph& g, HamSearchLimits limits) {
  const std::size_t cap = std::min(limits.max_vertices, kHamHardCap);
  if (g.order() > cap)
    throw LimitExceeded("Hamiltonicity brute force limited to " +
                        std::to_string(cap) + " vertices, graph has " +
                        std::to_string(g.order()));
}

std::vector<std::uint32_t> neighbor_masks(const Graph& g) {
  std::vector<std::uint32_t> nb(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(v)) nb[v] |= 1u << w;
  return nb;
}

std::vector<std::uint32_t> reach_table(const std::vector<std::uint32_t>& nb,
                                       Vertex s) {
  const std::size_t n = nb.size();
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  reach[1u << s] = 1u << s;
  for (std::uint32_t mask = 0; mask < reach.size(); ++mask) {
    std::uint32_t ends = reach[mask];
    while (ends) {
      int e = std::countr_zero(ends);
      ends &= ends - 1;
      std::uint32_t next = nb[e] & ~mask;
      while (next) {
        int w = std::countr_zero(next);
        next &= next - 1;
        reach[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  return reach;
}

std::vector<Vertex> rebuild(const std::vector<std::uint32_t>& reach,
                            const std::vector<std::uint32_t>& nb, Vertex s,
                            Vertex t) {
  std::uint32_t mask = static_cast<std::uint32_t>(reach.size() - 1);
  std::vector<Vertex> path{t};
  Vertex cur = t;
  while (cur != s) {
    std::uint32_t prev = mask ^ (1u << cur);
    std::uint32_t cand = reach[prev] & nb[cur];
    Vertex p = static_cast<Vertex>(std::countr_zero(cand));
    path.push_back(p);
    mask = prev;
    cur = p;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::optional<std::vector<Vertex>> find_ham_cycle(const Graph& g,
                                                  HamSearchLimits limits) {
  if (g.order() < 3) return std::nullopt;
  check_limit(g, limits);
  auto nb = neighbor_masks(g);
  auto reach = reach_table(nb, 0);
  std::uint32_t ends = reach.back() & nb[0];
  if (!ends) return std::nullopt;
  auto path = rebuild(reach, nb, 0, static_cast<Vertex>(std::countr_zero(ends)));
  return path;
}

bool is_hamiltonian(const Graph& g, HamSearchLimits limits) {
  return find_ham_cycle(g, limits).has_value();
}

std::optional<std::vector<Vertex>> find_ham_path(const Graph& g, Vertex s,
                                                 Vertex t,
                                                 HamSearchLimits limits) {
  if (s >= g.order() || t >= g.order())
    throw std::out_of_range("vertex out of range");
  check_limit(g, limits);
  if (s == t) {
    if (g.order() == 1) return std::vector<Vertex>{s};
    return std::nullopt;
  }
  auto nb = neighbor_masks(g);
  auto reach = reach_table(nb, s);
  if (!(reach.back() >> t & 1u)) return std::nullopt;
  return rebuild(reach, nb, s, t);
}

bool is_hamiltonian_connected(const Graph& g, HamSearchLimits limits) {
  check_limit(g, limits);
  const std::size_t n = g.order();
  if (n <= 1) return true;
  auto nb = neighbor_masks(g);
  const std::uint32_t all = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  for (Vertex s = 0; s < n; ++s) {
    auto reach = reach_table(nb, s);
    if ((reach.back() | (1u << s)) != all) return false;
  }
  return true;
}

HamPathOracle::HamPathOracle(const Graph& g, HamSearchLimits limits)
    : g_(&g), complete_(is_complete(g)) {
  if (!complete_) {
    check_limit(g, limits);
    nbmask_ = neighbor_masks(g);
    tables_.resize(g.order());
  }
}

const std::vector<std::uint32_t>& HamPathOracle::table(Vertex s) {
  if (tables_[s].empty()) tables_[s] = reach_table(nbmask_, s);
  return tables_[s];
}

std::optional<std::vector<Vertex>> HamPathOracle::path(Vertex s, Vertex t) {
  const std::size_t n = g_->order();
  if (s >= n || t >= n) throw std::out_of_range("vertex out of range");
  if (s == t) {
    if (n == 1) return std::vector<Vertex>{s};
    return std::nullopt;
  }
  if (complete_) {
    std::vector<Vertex> p{s};
    for (Vertex v = 0; v < n; ++v)
      if (v != s && v != t) p.push_back(v);
    p.push_back(t);
    return p;
  }
  const auto& reach = table(s);
  if (!(reach.back() >> t & 1u)) return std::nullopt;
  return rebuild(reach, nbmask_, s, t);
}

bool HamPathOracle::all_targets_reachable(Vertex s) {
  if (complete_) return true;
  const std::size_t n = g_->order();
  const std::uint32_t all = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  return (table(s).back() | (1u << s)) == all;
}

}  // namespace expg
