#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace expg {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

enum class EdgePolicy { kStrict, kCollapse };

// Immutable simple undirected graph in CSR form. Adjacency lists are sorted.
class Graph {
 public:
  using Labeler = std::function<std::string(Vertex)>;

  Graph() = default;

  // kStrict rejects loops and repeated edges, kCollapse drops them.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          EdgePolicy policy = EdgePolicy::kStrict);
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges,
                          EdgePolicy policy = EdgePolicy::kStrict) {
    return from_edges(n, std::span<const Edge>(edges), policy);
  }
  // Takes ownership of CSR arrays; validated before returning.
  static Graph from_csr(std::vector<std::uint64_t> offsets,
                        std::vector<Vertex> targets);

  std::size_t order() const { return offsets_.size() - 1; }
  std::size_t size() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t min_degree() const;
  std::size_t max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;

  // All edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  Graph with_labels(Labeler labeler) const;
  std::string label(Vertex v) const;
  bool has_labels() const { return static_cast<bool>(labels_); }

  const std::vector<std::uint64_t>& offsets() const { return offsets_; }
  const std::vector<Vertex>& targets() const { return targets_; }

  // Structural equality; labels are ignored.
  bool operator==(const Graph& other) const {
    return offsets_ == other.offsets_ && targets_ == other.targets_;
  }

 private:
  std::vector<std::uint64_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::shared_ptr<const Labeler> labels_;
};

// Throws std::invalid_argument describing the first violated invariant.
void validate(const Graph& g);

void write_edge_list(std::ostream& out, const Graph& g,
                     std::string_view comment = {});
Graph read_edge_list(std::istream& in);

// How a walk moves between consecutive vertices.
enum class StepKind : std::uint8_t { kPlain, kHEdge, kGEdge };

struct Step {
  StepKind kind = StepKind::kPlain;
  int dimension = 0;  // 1-based coordinate for G-edges, 0 otherwise
  bool operator==(const Step&) const = default;
};

// A walk given by its vertex sequence. Closed walks repeat the first vertex
// at the end.
struct WalkSpec {
  std::vector<std::uint64_t> vertices;
  std::vector<Step> steps;
  bool closed = false;

  std::size_t length() const {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
};

std::string_view to_string(StepKind kind);

}  // namespace expg
