#include "expg/generators.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace expg {

namespace {

std::string bits(std::size_t v, std::size_t k) {
  std::string s(k, '0');
  for (std::size_t i = 0; i < k; ++i)
    if (v >> (k - 1 - i) & 1) s[i] = '1';
  return s;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) {
    if (r > (std::size_t{1} << 40) / b)
      throw std::invalid_argument("generator parameters too large");
    r *= b;
  }
  return r;
}

}  // namespace

Graph complete_graph(std::size_t n) {
  if (n < 1) throw std::invalid_argument("K_n needs n >= 1");
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("C_n needs n >= 3");
  std::vector<Edge> e;
  for (Vertex u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  e.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph::from_edges(n, e);
}

Graph path_graph(std::size_t n) {
  if (n < 1) throw std::invalid_argument("P_n needs n >= 1");
  std::vector<Edge> e;
  for (Vertex u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph::from_edges(n, e);
}

Graph hypercube(std::size_t k) {
  if (k < 1 || k > 24) throw std::invalid_argument("Q_k needs 1 <= k <= 24");
  const std::size_t n = std::size_t{1} << k;
  std::vector<Edge> e;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t w = v ^ (std::size_t{1} << i);
      if (v < w) e.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(w));
    }
  return Graph::from_edges(n, e).with_labels([k](Vertex v) { return bits(v, k); });
}

Graph de_bruijn(std::size_t d, std::size_t k) {
  if (d < 2 || k < 1) throw std::invalid_argument("B(d,k) needs d >= 2, k >= 1");
  const std::size_t n = ipow(d, k);
  std::vector<Edge> e;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t shifted = (v * d) % n;
    for (std::size_t a = 0; a < d; ++a) {
      std::size_t w = shifted + a;
      if (w != v)
        e.emplace_back(static_cast<Vertex>(std::min(v, w)),
                       static_cast<Vertex>(std::max(v, w)));
    }
  }
  return Graph::from_edges(n, e, EdgePolicy::kCollapse)
      .with_labels([d, k](Vertex v) {
        std::string s;
        for (std::size_t i = 0; i < k; ++i) {
          std::size_t digit = v / ipow(d, k - 1 - i) % d;
          if (i) s += ',';
          s += std::to_string(digit);
        }
        return "(" + s + ")";
      });
}

Graph kautz(std::size_t d, std::size_t k) {
  if (d < 2 || k < 1) throw std::invalid_argument("K(d,k) needs d >= 2, k >= 1");
  const std::size_t base = d + 1;
  const std::size_t span = ipow(base, k);
  // collect words over d+1 symbols with no equal neighbors, in lex order
  std::vector<std::size_t> words;
  std::vector<std::int64_t> index(span, -1);
  for (std::size_t v = 0; v < span; ++v) {
    bool ok = true;
    std::size_t prev = base;
    for (std::size_t i = 0; i < k && ok; ++i) {
      std::size_t digit = v / ipow(base, k - 1 - i) % base;
      ok = digit != prev;
      prev = digit;
    }
    if (ok) {
      index[v] = static_cast<std::int64_t>(words.size());
      words.push_back(v);
    }
  }
  std::vector<Edge> e;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::size_t v = words[i];
    const std::size_t shifted = (v * base) % span;
    for (std::size_t a = 0; a < base; ++a) {
      auto j = index[shifted + a];
      if (j < 0 || static_cast<std::size_t>(j) == i) continue;
      e.emplace_back(static_cast<Vertex>(std::min<std::size_t>(i, j)),
                     static_cast<Vertex>(std::max<std::size_t>(i, j)));
    }
  }
  return Graph::from_edges(words.size(), e, EdgePolicy::kCollapse)
      .with_labels([words, base, k](Vertex v) {
        std::string s;
        for (std::size_t i = 0; i < k; ++i)
          s += std::to_string(words[v] / ipow(base, k - 1 - i) % base);
        return s;
      });
}

Graph mobius_cube(std::size_t k, MobiusVariant variant) {
  if (k < 1 || k > 24) throw std::invalid_argument("MQ_k needs 1 <= k <= 24");
  const std::size_t n = std::size_t{1} << k;
  std::vector<Edge> e;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 1; i <= k; ++i) {
      // bit of x_i sits at position k - i
      const std::size_t pos = k - i;
      std::size_t prev = i == 1 ? (variant == MobiusVariant::kOne ? 1 : 0)
                                : (v >> (pos + 1) & 1);
      std::size_t w = prev == 0 ? v ^ (std::size_t{1} << pos)
                                : v ^ ((std::size_t{1} << (pos + 1)) - 1);
      if (v < w) e.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(w));
    }
  }
  return Graph::from_edges(n, e, EdgePolicy::kCollapse)
      .with_labels([k](Vertex v) { return bits(v, k); });
}

BigInt dcell_order(std::size_t k, std::size_t n) {
  if (n < 2) throw std::invalid_argument("DCell needs n >= 2");
  BigInt t = n;
  for (std::size_t i = 0; i < k; ++i) t = t * (t + 1);
  return t;
}

std::size_t dcell_diam_bound(std::size_t k) { return (std::size_t{2} << k) - 1; }

}  // namespace expg
