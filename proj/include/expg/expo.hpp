#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "expg/count.hpp"
#include "expg/graph.hpp"

namespace expg {

using Id = std::uint64_t;

struct Budget {
  std::uint64_t max_vertices = 2'000'000;
  std::uint64_t max_edges = 20'000'000;
};

// Codec for V(G^H): id = tuple_value * q + (j - 1) where the tuple
// (u_1..u_q) is read base p with u_1 least significant.
class ExpoSpace {
 public:
  ExpoSpace(Graph base, Graph exponent);

  const Graph& base() const { return *base_; }
  const Graph& exponent() const { return *exponent_; }
  std::size_t p() const { return p_; }
  std::size_t q() const { return q_; }
  Id order() const { return order_; }
  Id fibers() const { return order_ / q_; }
  Id stride(std::size_t i) const { return strides_[i]; }  // p^i

  Id encode(std::span<const Vertex> tuple, std::size_t position) const;
  struct Decoded {
    std::vector<Vertex> tuple;
    std::size_t position;  // 0-based, i.e. j - 1
  };
  Decoded decode(Id x) const;

  Id rho(Id x) const { return x / q_; }                 // tuple value
  std::size_t sigma(Id x) const { return x % q_; }      // 0-based position
  Vertex rho_i(Id x, std::size_t i) const {             // 0-based digit i
    return static_cast<Vertex>(x / q_ / strides_[i] % p_);
  }
  Id make(Id tuple_value, std::size_t position) const {
    return tuple_value * q_ + position;
  }

  std::vector<std::pair<Id, Step>> neighbors(Id x) const;
  std::size_t degree(Id x) const;
  bool adjacent(Id a, Id b) const;

  Graph materialize(const Budget& budget = {}) const;

 private:
  void check(Id x) const;

  std::shared_ptr<const Graph> base_;
  std::shared_ptr<const Graph> exponent_;
  std::size_t p_, q_;
  Id order_;
  std::vector<Id> strides_;
};

struct Exponential {
  Graph graph;
  ExpoSpace space;
};
Exponential exponential(const Graph& g, const Graph& h, const Budget& budget = {});

struct ExpoFormulas {
  Count order;
  Count size;
  std::size_t min_degree;
  std::size_t max_degree;
};
ExpoFormulas expo_formulas(const Graph& g, const Graph& h);

// Vertex (g, h) has id g + |V(G)| * h.
Graph cartesian_product(const Graph& g, const Graph& h);
// Vertex (u_1..u_n) has id sum u_i p^(i-1).
Graph cartesian_power(const Graph& g, std::size_t n, const Budget& budget = {});
// 1-based dimension in which two G^[n] ids differ, 0 when not adjacent.
int cartesian_dimension(const Graph& g, std::size_t n, Id a, Id b);

// Collapse each fiber H_u of a materialized G^H into u.
Graph contract_to_base(const ExpoSpace& space, const Graph& host);

}  // namespace expg
