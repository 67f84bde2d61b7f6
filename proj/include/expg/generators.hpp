#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "expg/graph.hpp"

namespace expg {

using BigInt = boost::multiprecision::cpp_int;

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);  // n >= 3
Graph path_graph(std::size_t n);   // n >= 1 vertices
Graph hypercube(std::size_t k);

// Undirected shift graphs with loops dropped and parallel edges merged.
// Tuples are numbered lexicographically, first symbol most significant.
Graph de_bruijn(std::size_t d, std::size_t k);
Graph kautz(std::size_t d, std::size_t k);

enum class MobiusVariant { kZero, kOne };
// x1 is the most significant bit of the id. The i-th neighbor flips bit i
// when x_{i-1} = 0 and complements bits i..n when x_{i-1} = 1; x_0 is the
// variant bit.
Graph mobius_cube(std::size_t k, MobiusVariant variant = MobiusVariant::kZero);

BigInt dcell_order(std::size_t k, std::size_t n);
std::size_t dcell_diam_bound(std::size_t k);

}  // namespace expg
