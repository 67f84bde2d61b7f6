#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "expg/algorithms.hpp"
#include "expg/generators.hpp"
#include "oracles.hpp"

using namespace expg;

namespace {
std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}
}  // namespace

TEST_CASE("basic families") {
  for (std::size_t n = 1; n <= 7; ++n) {
    Graph k = complete_graph(n);
    CHECK(k.order() == n);
    CHECK(k.size() == n * (n - 1) / 2);
    Graph p = path_graph(n);
    CHECK(p.size() == n - 1);
    CHECK(is_tree(p));
  }
  for (std::size_t n = 3; n <= 9; ++n) {
    Graph c = cycle_graph(n);
    CHECK(c.size() == n);
    CHECK(diameter(c) == n / 2);
  }
  for (std::size_t k = 1; k <= 6; ++k) {
    Graph q = hypercube(k);
    CHECK(q.order() == ipow(2, k));
    CHECK(q.min_degree() == k);
    CHECK(q.max_degree() == k);
    CHECK(diameter(q) == k);
  }
}

// Frozen from an independent networkx construction (tuple graphs, loops
// dropped): order, min degree, max degree, diameter.
TEST_CASE("de Bruijn frozen values") {
  struct Row { std::size_t d, k, n, lo, hi, diam; };
  for (Row r : {Row{2, 1, 2, 1, 1, 1}, Row{2, 2, 4, 2, 3, 2}, Row{2, 3, 8, 2, 4, 3},
                Row{3, 2, 9, 4, 5, 2}, Row{3, 3, 27, 4, 6, 3}, Row{2, 4, 16, 2, 4, 4}}) {
    Graph b = de_bruijn(r.d, r.k);
    CAPTURE(r.d);
    CAPTURE(r.k);
    CHECK(b.order() == r.n);
    CHECK(b.min_degree() == r.lo);
    CHECK(b.max_degree() == r.hi);
    CHECK(diameter(b) == r.diam);
  }
}

TEST_CASE("Kautz frozen values") {
  struct Row { std::size_t d, k, n, lo, hi, diam; };
  for (Row r : {Row{2, 1, 3, 2, 2, 1}, Row{2, 2, 6, 3, 3, 2}, Row{2, 3, 12, 3, 4, 3},
                Row{3, 2, 12, 5, 5, 2}, Row{3, 3, 36, 5, 6, 3}}) {
    Graph b = kautz(r.d, r.k);
    CHECK(b.order() == r.n);
    CHECK(b.min_degree() == r.lo);
    CHECK(b.max_degree() == r.hi);
    CHECK(diameter(b) == r.diam);
  }
}

TEST_CASE("de Bruijn and Kautz closed forms for d, k <= 4") {
  for (std::size_t d = 2; d <= 4; ++d)
    for (std::size_t k = 2; k <= 4; ++k) {
      CAPTURE(d);
      CAPTURE(k);
      Graph b = de_bruijn(d, k);
      CHECK(b.order() == ipow(d, k));
      CHECK(b.min_degree() == 2 * d - 2);
      if (k >= 3) CHECK(b.max_degree() == 2 * d);
      CHECK(diameter(b) == k);
      // exactly the d constant tuples have the minimum degree
      std::size_t low = 0;
      for (Vertex v = 0; v < b.order(); ++v) low += b.degree(v) == 2 * d - 2;
      CHECK(low == d);
      Graph z = kautz(d, k);
      CHECK(z.order() == ipow(d, k) + ipow(d, k - 1));
      CHECK(z.min_degree() == 2 * d - 1);
      if (k >= 3) CHECK(z.max_degree() == 2 * d);
      CHECK(diameter(z) == k);
    }
}

TEST_CASE("Mobius cubes") {
  const std::size_t zero[] = {1, 2, 2, 3, 4, 4, 5};
  const std::size_t one[] = {1, 2, 2, 3, 3, 4, 4};
  for (std::size_t n = 1; n <= 7; ++n) {
    Graph m = mobius_cube(n);
    CHECK(m.order() == ipow(2, n));
    CHECK(m.min_degree() == n);
    CHECK(m.max_degree() == n);
    CHECK(diameter(m) == zero[n - 1]);
    CHECK(diameter(mobius_cube(n, MobiusVariant::kOne)) == one[n - 1]);
  }
  // MQ2 is the 4-cycle; from dimension 3 on the cube is Hamiltonian-connected.
  Graph mq2 = mobius_cube(2);
  CHECK((mq2.size() == 4 && mq2.max_degree() == 2 && is_connected(mq2)));
  CHECK_FALSE(is_hamiltonian_connected(mobius_cube(2)));
  CHECK(is_hamiltonian_connected(mobius_cube(3)));
  CHECK(is_hamiltonian_connected(mobius_cube(4), {16}));
}

TEST_CASE("DCell recurrence") {
  const char* t2[] = {"6", "42", "1806", "3263442", "10650056950806"};
  for (std::size_t k = 1; k <= 5; ++k) CHECK(dcell_order(k, 2).str() == t2[k - 1]);
  CHECK(dcell_order(0, 3) == 3);
  CHECK(dcell_order(4, 4).str() == "31265489220");
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t k = 0; k <= 6; ++k) {
      BigInt t = dcell_order(k, n);
      unsigned e = 1u << k;
      BigInt upper = boost::multiprecision::pow(BigInt(n + 1), e) - 1;
      // (n + 1/2)^(2^k) - 1/2 <= t, times 2^(2^k + 1)
      BigInt lhs = 2 * boost::multiprecision::pow(BigInt(2 * n + 1), e);
      BigInt rhs = (2 * t + 1) * boost::multiprecision::pow(BigInt(2), e);
      CHECK(t <= upper);
      CHECK(lhs <= rhs);
    }
  for (std::size_t k = 0; k <= 5; ++k) CHECK(dcell_diam_bound(k) == (2u << k) - 1);
}
