#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "expg/algorithms.hpp"
#include "expg/expo.hpp"
#include "expg/graph.hpp"

namespace expg {

constexpr std::size_t kHamDistanceLimit = 15;

struct HamWalk {
  std::size_t length = 0;
  WalkSpec walk;                 // vertex ids of H
  std::vector<Vertex> order;     // required vertices in visiting order
  std::vector<std::size_t> stops;  // index in walk.vertices where each is reached
};

// Shortest u-v walk through every vertex of `required`. Subset DP over the
// metric closure; ties resolved toward the lexicographically smallest order.
// Throws LimitExceeded when more than `limit` vertices are required besides
// u and v.
HamWalk ham_distance(const Graph& h, Vertex u, Vertex v,
                     std::span<const Vertex> required,
                     std::size_t limit = kHamDistanceLimit);

// max over all pairs (u = v included) of dist(u, v; V).
std::size_t ham_diameter(const Graph& h, std::size_t limit = kHamDistanceLimit);

// Covering walk from u to v: a shortest u-v path plus doubled excursions
// into a BFS forest grown from that path. Length 2|V| - 2 - dist(u, v).
WalkSpec covering_walk(const Graph& h, Vertex u, Vertex v);

struct CoveringBound {
  std::size_t length;
  WalkSpec witness;
};
CoveringBound ham_diameter_upper(const Graph& h);

enum class DiamMode { kFormula, kBfs };
std::size_t expo_diameter(const Graph& g, const Graph& h, DiamMode mode,
                          const Budget& budget = {});

enum class ExponentCase { kTree, kHamiltonianConnected, kHamiltonian, kGeneral };
std::string_view to_string(ExponentCase c);

struct DiameterBounds {
  std::size_t lower;                      // (diam G + 1) q
  std::size_t upper;                      // (diam G + 2) q - 2
  ExponentCase tag = ExponentCase::kGeneral;
  std::optional<std::size_t> exact;       // tree and HC cases
  std::optional<std::size_t> case_upper;  // Hamiltonian case
};
// Brute-force classification is skipped (kGeneral) above `ham_limit`.
DiameterBounds diameter_bounds(const Graph& g, const Graph& h,
                               std::size_t ham_limit = 14);

enum class RouteMode { kExact, kHamCycle };

struct RouteSegment {
  StepKind kind;
  int dimension = 0;
  std::vector<Id> vertices;
};

struct RoutePlan {
  RouteMode mode;
  std::vector<RouteSegment> segments;
  WalkSpec path;
  std::size_t length = 0;
};

// Routing in G^H without materializing it. Distance tables of G and H are
// built once.
class Router {
 public:
  explicit Router(const ExpoSpace& space);
  RoutePlan route(Id x, Id y, RouteMode mode = RouteMode::kExact) const;

 private:
  std::vector<Vertex> g_path(Vertex a, Vertex b) const;
  std::vector<Vertex> h_path(Vertex a, Vertex b) const;
  RoutePlan assemble(Id x, Id y, const std::vector<Vertex>& h_walk,
                     const std::vector<bool>& stop_here, RouteMode mode) const;

  const ExpoSpace* space_;
  std::size_t p_, q_;
  std::vector<Vertex> g_parent_;  // p x p, parent toward the row source
  std::vector<std::int32_t> g_dist_;
  std::vector<Vertex> h_parent_;
  std::vector<std::int32_t> h_dist_;
  // Hamiltonian cycle of H, or a closed covering walk when none is known.
  std::optional<std::vector<Vertex>> h_cycle_;
};

// Every step is a host edge; with require_path also no vertex repeats.
bool is_valid_walk(const ExpoSpace& space, const WalkSpec& w,
                   bool require_path = false);

}  // namespace expg
