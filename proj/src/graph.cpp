#include "expg/graph.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace expg {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges,
                        EdgePolicy policy) {
  if (n >= std::numeric_limits<Vertex>::max())
    throw std::invalid_argument("graph order exceeds 32-bit vertex range");
  std::vector<std::uint64_t> offsets(n + 1, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(u) + "-" + std::to_string(v));
    if (u == v) {
      if (policy == EdgePolicy::kStrict)
        throw std::invalid_argument("loop at vertex " + std::to_string(u));
      continue;
    }
    ++offsets[u + 1];
    ++offsets[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  std::vector<Vertex> targets(offsets[n]);
  std::vector<std::uint64_t> fill(offsets.begin(), offsets.end() - 1);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    targets[fill[u]++] = v;
    targets[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v)
    std::sort(targets.begin() + offsets[v], targets.begin() + offsets[v + 1]);

  bool dup = false;
  for (std::size_t v = 0; v < n && !dup; ++v)
    for (auto i = offsets[v] + 1; i < offsets[v + 1]; ++i)
      if (targets[i] == targets[i - 1]) { dup = true; break; }
  if (dup) {
    if (policy == EdgePolicy::kStrict)
      throw std::invalid_argument("repeated edge in edge list");
    std::vector<std::uint64_t> off2(n + 1, 0);
    std::vector<Vertex> t2;
    t2.reserve(targets.size());
    for (std::size_t v = 0; v < n; ++v) {
      for (auto i = offsets[v]; i < offsets[v + 1]; ++i)
        if (i == offsets[v] || targets[i] != targets[i - 1])
          t2.push_back(targets[i]);
      off2[v + 1] = t2.size();
    }
    offsets = std::move(off2);
    targets = std::move(t2);
  }
  Graph g;
  g.offsets_ = std::move(offsets);
  g.targets_ = std::move(targets);
  return g;
}

Graph Graph::from_csr(std::vector<std::uint64_t> offsets,
                      std::vector<Vertex> targets) {
  Graph g;
  g.offsets_ = std::move(offsets);
  g.targets_ = std::move(targets);
  validate(g);
  return g;
}

std::size_t Graph::min_degree() const {
  if (order() == 0) return 0;
  std::size_t best = degree(0);
  for (Vertex v = 1; v < order(); ++v) best = std::min(best, degree(v));
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::with_labels(Labeler labeler) const {
  Graph g = *this;
  g.labels_ = std::make_shared<const Labeler>(std::move(labeler));
  return g;
}

std::string Graph::label(Vertex v) const {
  return labels_ ? (*labels_)(v) : std::to_string(v);
}

void validate(const Graph& g) {
  const auto& off = g.offsets();
  const auto& tg = g.targets();
  if (off.empty() || off.front() != 0 || off.back() != tg.size())
    throw std::invalid_argument("malformed CSR offsets");
  const std::size_t n = off.size() - 1;
  for (std::size_t v = 0; v < n; ++v) {
    if (off[v] > off[v + 1]) throw std::invalid_argument("offsets decrease");
    for (auto i = off[v]; i < off[v + 1]; ++i) {
      Vertex w = tg[i];
      if (w >= n) throw std::invalid_argument("neighbor out of range");
      if (w == v)
        throw std::invalid_argument("loop at vertex " + std::to_string(v));
      if (i > off[v] && tg[i - 1] >= w)
        throw std::invalid_argument("adjacency of " + std::to_string(v) +
                                    " not strictly increasing");
      if (!g.adjacent(w, static_cast<Vertex>(v)))
        throw std::invalid_argument("asymmetric edge " + std::to_string(v) +
                                    "-" + std::to_string(w));
    }
  }
}

void write_edge_list(std::ostream& out, const Graph& g,
                     std::string_view comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  bool header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    unsigned long long a, b;
    if (!(ls >> a >> b))
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": expected two integers");
    std::string rest;
    if (ls >> rest)
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": trailing data");
    if (!header) {
      n = a;
      m = b;
      header = true;
      continue;
    }
    if (a >= b)
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": expected u < v");
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!header) throw std::invalid_argument("edge list: missing header");
  if (edges.size() != m)
    throw std::invalid_argument("edge list: header says " + std::to_string(m) +
                                " edges, found " + std::to_string(edges.size()));
  return Graph::from_edges(n, edges, EdgePolicy::kStrict);
}

std::string_view to_string(StepKind kind) {
  switch (kind) {
    case StepKind::kHEdge: return "H";
    case StepKind::kGEdge: return "G";
    default: return "plain";
  }
}

}  // namespace expg
