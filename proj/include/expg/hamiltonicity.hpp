#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "expg/expo.hpp"
#include "expg/graph.hpp"

namespace expg {

// Read-only adjacency oracle over a materialized graph or an implicit G^H.
struct HostView {
  Id order = 0;
  std::function<bool(Id, Id)> adjacent;

  static HostView of(const Graph& g);
  static HostView of(const ExpoSpace& space);
};

// Throws PreconditionError unless hc lists every vertex of g once along a cycle.
void require_ham_cycle(const Graph& g, std::span<const Vertex> hc);

// Hamiltonian cycle of G^{K2} for any Hamiltonian G (no parity condition).
// Ids follow ExpoSpace(G, K2).
WalkSpec ham_cycle_gk2(const Graph& g, std::span<const Vertex> hc);

// Hamiltonian cycle of G^[n] in which consecutive edges never share a
// dimension. p = |V(G)| even, n >= 1. Ids follow cartesian_power(G, n).
WalkSpec cp_ham_cycle(const Graph& g, std::span<const Vertex> hc, std::size_t n);

// Two edge-disjoint alternating Hamiltonian cycles of G^[n] built from the
// square cycle and its negation, n >= 2, p even >= 4.
std::pair<WalkSpec, WalkSpec> cp_ham_cycle_pair(const Graph& g,
                                                std::span<const Vertex> hc,
                                                std::size_t n);

// Edge-disjoint alternating pair for n >= 4 that uses four distinct
// dimensions at every vertex: dimensions are split into halves and the
// square construction runs on the torus of two alternating cycles.
std::pair<WalkSpec, WalkSpec> cp_split_cycle_pair(const Graph& g,
                                                  std::span<const Vertex> hc,
                                                  std::size_t n);

struct LiftOptions {
  // Skip the brute-force Hamiltonian-connectedness check of H.
  bool trust_exponent = false;
  // Weakened hypothesis: H only needs Hamiltonian paths from this vertex.
  // The cycle's dimensions 1 and anchor+1 are swapped first.
  std::optional<Vertex> anchor;
};

// Replace each fiber crossing of an alternating cycle of G^[q] by a
// Hamiltonian path of H between the two contact positions.
WalkSpec lift_ham_cycle(const ExpoSpace& space, const WalkSpec& cp_cycle,
                        const LiftOptions& opts = {});

// Edge-disjoint Hamiltonian paths of K_n (n >= 4): the zigzag
// 0, 1, n-1, 2, n-2, ... and its shift by one.
std::array<std::vector<Vertex>, 2> kn_zigzag_paths(std::size_t n);

// Two edge-disjoint Hamiltonian cycles of G^{K_n}, p even >= 4, n >= 4.
std::pair<WalkSpec, WalkSpec> edhc_gkn(const Graph& g, std::span<const Vertex> hc,
                                       std::size_t n);

struct CistPair {
  std::vector<std::pair<Id, Id>> first;
  std::vector<std::pair<Id, Id>> second;
};
// Two completely independent spanning trees of G^{K_n}, p even >= 4, n >= 4.
CistPair cist_gkn(const Graph& g, std::span<const Vertex> hc, std::size_t n);

// Throws CertificateError on malformed input (ids out of range, mismatched
// annotations); returns false when the certificate is well formed but wrong.
bool verify_ham_cycle(const HostView& host, const WalkSpec& cycle);
bool verify_edge_disjoint(const WalkSpec& a, const WalkSpec& b);
// Consecutive steps (cyclically for closed walks) carry distinct dimensions.
bool check_alternation(const WalkSpec& w);
// Every step of dimension >= 2 sits between steps of dimension 1.
bool check_strong_alternation(const WalkSpec& w);
// Step kinds of a G^H walk from the codec; adjacency is not checked.
void annotate_expo(WalkSpec& w, std::size_t q);
// Fill per-step dimensions of a G^[n] walk from the codec.
void annotate_cartesian(WalkSpec& w, const Graph& g, std::size_t n);

struct CistCheckOptions {
  std::size_t exhaustive_limit = 200;
  std::size_t sample_pairs = 0;
  std::uint64_t seed = 1;
  bool parallel = true;
};

struct CistReport {
  bool spanning_first = false;
  bool spanning_second = false;
  bool edge_disjoint = false;
  bool degree_condition = false;
  bool paths_exhaustive = false;  // all pairs checked
  std::size_t pairs_sampled = 0;
  bool paths_independent = true;  // over whatever was checked
  bool valid() const {
    return spanning_first && spanning_second && edge_disjoint &&
           degree_condition && paths_independent;
  }
};
CistReport check_cist(const HostView& host, const CistPair& pair,
                      const CistCheckOptions& opts = {});
bool verify_cist(const HostView& host, const CistPair& pair,
                 const CistCheckOptions& opts = {});

}  // namespace expg
