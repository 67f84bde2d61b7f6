#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "expg/expo.hpp"
#include "expg/graph.hpp"
#include "expg/kernels.hpp"

namespace expg {

struct ConnectivityOptions {
  std::size_t kappa_budget = 5000;
  std::size_t lambda_prime_budget = 2000;
  bool parallel = true;
  // Use the O(m^2) all-pairs schedule for restricted edge connectivity.
  bool full_schedule = false;
};

std::size_t vertex_connectivity(const Graph& g, const ConnectivityOptions& opts = {});
std::size_t edge_connectivity(const Graph& g, const ConnectivityOptions& opts = {});

struct CutWitness {
  enum class Kind { kVertex, kEdge };
  Kind kind = Kind::kEdge;
  std::vector<Id> vertices;                  // vertex cuts
  std::vector<std::pair<Id, Id>> edges;      // edge cuts, smaller id first
  std::vector<std::size_t> component_sizes;  // claimed split
};

// Standard restricted edge connectivity: minimum edge cut F such that G - F
// is disconnected and has no isolated vertex. nullopt when G has no two
// vertex-disjoint edges. Throws Disconnected.
std::optional<std::size_t> restricted_edge_connectivity(
    const Graph& g, const ConnectivityOptions& opts = {});

enum class SuperVerdict { kYes, kNo, kUndefinedSmallCase };
std::string_view to_string(SuperVerdict v);

struct SuperEdgeResult {
  SuperVerdict verdict = SuperVerdict::kYes;
  std::size_t lambda = 0;
  std::optional<std::size_t> restricted_lambda;
  std::optional<CutWitness> witness;  // present for kNo
};
SuperEdgeResult is_super_edge_connected(const Graph& g,
                                        const ConnectivityOptions& opts = {});

// (delta(G) >= 2 or H not complete) and (delta(H) >= 2 or G not complete).
bool super_edge_predicate(const Graph& g, const Graph& h);

// Minimum edge cut of G^H that isolates no vertex, built directly from the
// failing clause. Throws PreconditionError when the predicate holds.
CutWitness counterexample_cut(const ExpoSpace& space);

struct CutCheck {
  bool disconnects = false;
  bool isolates_vertex = false;
  std::vector<std::size_t> component_sizes;  // sorted ascending
};
CutCheck check_cut(const Graph& g, const CutWitness& w);

struct ConnectivityReport {
  std::size_t kappa = 0;
  std::size_t lambda = 0;
  std::size_t delta = 0;
  bool maximally_connected = false;
  std::optional<SuperEdgeResult> super_lambda;
};
ConnectivityReport analyze_connectivity(const Graph& g, bool with_super,
                                        const ConnectivityOptions& opts = {});

bool verify_maxcon_theorem(const ExpoSpace& space, const Budget& budget = {},
                           const ConnectivityOptions& opts = {});
bool verify_supered_theorem(const ExpoSpace& space, const Budget& budget = {},
                            const ConnectivityOptions& opts = {});

// Flow schedules, exposed for tests and benchmarks.
std::vector<kernels::FlowTask> kappa_schedule(const Graph& g);
std::vector<kernels::FlowTask> restricted_schedule(const Graph& g, bool full);

}  // namespace expg
