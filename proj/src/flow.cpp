#include "expg/flow.hpp"

#include <limits>

namespace expg {

namespace {
constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
}

UnitFlowNetwork::UnitFlowNetwork(const Graph& g, Mode mode)
    : mode_(mode), graph_order_(g.order()) {
  nodes_ = mode == Mode::kVertexSplit ? 2 * g.order() : g.order();
  std::vector<std::uint32_t> deg(nodes_, 0);
  const std::size_t m = g.size();
  const std::size_t arcs = mode == Mode::kVertexSplit ? 4 * m + 2 * g.order()
                                                      : 2 * m;
  head_.assign(nodes_ + 1, 0);
  // count arcs per node
  for (Vertex u = 0; u < g.order(); ++u) {
    if (mode == Mode::kVertexSplit) {
      head_[2 * u + 1] += 1;      // in -> out
      head_[2 * u + 1 + 1] += 1;  // reverse at out
      for (Vertex v : g.neighbors(u)) {
        head_[2 * u + 1 + 1] += 1;  // out(u) -> in(v)
        head_[2 * v + 1] += 1;      // reverse at in(v)
      }
    } else {
      head_[u + 1] += g.degree(u);
    }
  }
  for (std::size_t i = 0; i < nodes_; ++i) head_[i + 1] += head_[i];
  to_.resize(arcs);
  rev_.resize(arcs);
  cap0_.resize(arcs);
  std::vector<std::uint64_t> fill(head_.begin(), head_.end() - 1);
  auto place = [&](std::uint32_t from, std::uint32_t to, std::uint8_t c,
                   std::uint32_t to_from, std::uint8_t rc) {
    auto a = fill[from]++;
    auto b = fill[to_from]++;
    to_[a] = to;
    cap0_[a] = c;
    rev_[a] = static_cast<std::uint32_t>(b);
    to_[b] = from;
    cap0_[b] = rc;
    rev_[b] = static_cast<std::uint32_t>(a);
  };
  for (Vertex u = 0; u < g.order(); ++u) {
    if (mode == Mode::kVertexSplit) {
      place(2 * u, 2 * u + 1, 1, 2 * u + 1, 0);
      for (Vertex v : g.neighbors(u)) place(2 * u + 1, 2 * v, 1, 2 * v, 0);
    } else {
      for (Vertex v : g.neighbors(u))
        if (u < v) place(u, v, 1, v, 1);
    }
  }
  cap_ = cap0_;
  stamp_.assign(nodes_, 0);
  parent_arc_.assign(nodes_, kNone);
  is_sink_.assign(nodes_, 0);
  queue_.reserve(nodes_);
}

bool UnitFlowNetwork::augment() {
  ++epoch_;
  queue_.clear();
  for (auto s : src_nodes_) {
    if (stamp_[s] == epoch_) continue;
    stamp_[s] = epoch_;
    parent_arc_[s] = kNone;
    queue_.push_back(s);
  }
  for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
    auto x = queue_[qi];
    for (auto a = head_[x]; a < head_[x + 1]; ++a) {
      if (!cap_[a]) continue;
      auto y = to_[a];
      if (stamp_[y] == epoch_) continue;
      stamp_[y] = epoch_;
      parent_arc_[y] = static_cast<std::uint32_t>(a);
      if (is_sink_[y]) {
        while (parent_arc_[y] != kNone) {
          auto pa = parent_arc_[y];
          cap_[pa] -= 1;
          cap_[rev_[pa]] += 1;
          y = to_[rev_[pa]];
        }
        return true;
      }
      queue_.push_back(y);
    }
  }
  return false;
}

std::size_t UnitFlowNetwork::max_flow(std::span<const Vertex> sources,
                                      std::span<const Vertex> sinks,
                                      std::size_t cap) {
  cap_ = cap0_;
  std::fill(is_sink_.begin(), is_sink_.end(), 0);
  src_nodes_.clear();
  for (Vertex s : sources)
    src_nodes_.push_back(mode_ == Mode::kVertexSplit ? 2 * s + 1 : s);
  for (Vertex t : sinks) is_sink_[mode_ == Mode::kVertexSplit ? 2 * t : t] = 1;
  for (auto s : src_nodes_)
    if (is_sink_[s]) return std::numeric_limits<std::size_t>::max();
  std::size_t flow = 0;
  while (flow < cap && augment()) ++flow;
  // residual search so source_side() describes a minimum cut
  ++epoch_;
  queue_.clear();
  for (auto s : src_nodes_) {
    if (stamp_[s] == epoch_) continue;
    stamp_[s] = epoch_;
    queue_.push_back(s);
  }
  for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
    auto x = queue_[qi];
    for (auto a = head_[x]; a < head_[x + 1]; ++a) {
      if (!cap_[a] || stamp_[to_[a]] == epoch_) continue;
      stamp_[to_[a]] = epoch_;
      queue_.push_back(to_[a]);
    }
  }
  return flow;
}

std::vector<bool> UnitFlowNetwork::source_side() const {
  std::vector<bool> side(graph_order_, false);
  for (std::size_t v = 0; v < graph_order_; ++v) {
    auto node = mode_ == Mode::kVertexSplit ? 2 * v : v;
    side[v] = stamp_[node] == epoch_;
  }
  return side;
}

}  // namespace expg
