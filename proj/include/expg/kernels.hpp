#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "expg/graph.hpp"

// Compute-heavy sweeps. Each kernel has a serial reference and an OpenMP
// version that must agree exactly.
namespace expg::kernels {

struct EccentricityProfile {
  std::vector<std::uint32_t> ecc;
  bool connected = true;
  std::uint32_t diameter() const;
};

// One max-flow instance. arity 1 uses source[0]/sink[0] only.
struct FlowTask {
  std::array<Vertex, 2> source{};
  std::array<Vertex, 2> sink{};
  std::uint8_t arity = 1;
};

enum class FlowKind { kVertex, kEdge };


namespace serial {
EccentricityProfile eccentricities(const Graph& g);
std::vector<std::size_t> flows(const Graph& g, FlowKind kind,
                               std::span<const FlowTask> tasks,
                               std::size_t cap);
// First source s (in increasing order) whose tree paths to some t overlap;
// returns order() when all pairs are independent.
std::size_t first_dependent_source(const Graph& t1, const Graph& t2);
}  // namespace serial

namespace parallel {
int max_threads();
EccentricityProfile eccentricities(const Graph& g);
std::vector<std::size_t> flows(const Graph& g, FlowKind kind,
                               std::span<const FlowTask> tasks,
                               std::size_t cap);
std::size_t first_dependent_source(const Graph& t1, const Graph& t2);
}  // namespace parallel

// Check of a single source against every other vertex.
bool tree_paths_independent_from(const Graph& t1, const Graph& t2, Vertex s,
                                 std::vector<Vertex>& par1,
                                 std::vector<Vertex>& par2,
                                 std::vector<std::uint32_t>& mark,
                                 std::vector<Vertex>& queue);

}  // namespace expg::kernels
