#include <span>

#include "expg/flow.hpp"
#include "expg/kernels.hpp"
#include "expg/parallel.hpp"

namespace expg::kernels {

namespace {

UnitFlowNetwork::Mode mode_of(FlowKind kind) {
  return kind == FlowKind::kVertex ? UnitFlowNetwork::Mode::kVertexSplit
                                   : UnitFlowNetwork::Mode::kEdge;
}

std::size_t run(UnitFlowNetwork& net, const FlowTask& t, std::size_t cap) {
  return net.max_flow(std::span<const Vertex>(t.source.data(), t.arity),
                      std::span<const Vertex>(t.sink.data(), t.arity), cap);
}

}  // namespace

namespace serial {

std::vector<std::size_t> flows(const Graph& g, FlowKind kind,
                               std::span<const FlowTask> tasks,
                               std::size_t cap) {
  std::vector<std::size_t> out(tasks.size());
  UnitFlowNetwork net(g, mode_of(kind));
  for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = run(net, tasks[i], cap);
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<std::size_t> flows(const Graph& g, FlowKind kind,
                               std::span<const FlowTask> tasks,
                               std::size_t cap) {
  std::vector<std::size_t> out(tasks.size());
  const auto count = static_cast<std::int64_t>(tasks.size());
  EXPG_OMP(parallel) {
    UnitFlowNetwork net(g, mode_of(kind));
    EXPG_OMP(for schedule(dynamic, 8))
    for (std::int64_t i = 0; i < count; ++i) out[i] = run(net, tasks[i], cap);
  }
  return out;
}

}  // namespace parallel
}  // namespace expg::kernels
