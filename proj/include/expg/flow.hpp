#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "expg/graph.hpp"

namespace expg {

// Unit-capacity residual network over an undirected graph, solved with BFS
// augmenting paths. kVertexSplit gives every vertex capacity one by
// splitting it into in/out nodes.
class UnitFlowNetwork {
 public:
  enum class Mode { kEdge, kVertexSplit };

  UnitFlowNetwork(const Graph& g, Mode mode);

  // Stops early once `cap` units have been routed.
  std::size_t max_flow(std::span<const Vertex> sources,
                       std::span<const Vertex> sinks, std::size_t cap);

  // Original vertices reachable in the residual network after the last
  // max_flow call. In split mode a vertex counts if its in-node is reached.
  std::vector<bool> source_side() const;

 private:
  bool augment();

  Mode mode_;
  std::size_t graph_order_;
  std::size_t nodes_;
  std::vector<std::uint64_t> head_;
  std::vector<std::uint32_t> to_;
  std::vector<std::uint32_t> rev_;
  std::vector<std::uint8_t> cap0_;
  std::vector<std::uint8_t> cap_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> parent_arc_;
  std::vector<std::uint32_t> queue_;
  std::vector<std::uint8_t> is_sink_;
  std::vector<std::uint32_t> src_nodes_;
};

}  // namespace expg
