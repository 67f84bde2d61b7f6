#include <algorithm>
#include <limits>

#include "expg/kernels.hpp"
#include "expg/parallel.hpp"

namespace expg::kernels {

namespace {
constexpr Vertex kUnset = std::numeric_limits<Vertex>::max();

void root_at(const Graph& t, Vertex s, std::vector<Vertex>& par,
             std::vector<Vertex>& queue) {
  std::fill(par.begin(), par.end(), kUnset);
  par[s] = s;
  queue.assign(1, s);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Vertex y : t.neighbors(queue[i]))
      if (par[y] == kUnset) {
        par[y] = queue[i];
        queue.push_back(y);
      }
}
}  // namespace

bool tree_paths_independent_from(const Graph& t1, const Graph& t2, Vertex s,
                                 std::vector<Vertex>& par1,
                                 std::vector<Vertex>& par2,
                                 std::vector<std::uint32_t>& mark,
                                 std::vector<Vertex>& queue) {
  const std::size_t n = t1.order();
  root_at(t1, s, par1, queue);
  root_at(t2, s, par2, queue);
  for (Vertex t = 0; t < n; ++t) {
    if (t == s) continue;
    if (par1[t] == kUnset || par2[t] == kUnset) return false;
    if (par1[t] == s && par2[t] == s) return false;  // shared edge st
    const std::uint32_t stamp = t + 1;
    for (Vertex x = par1[t]; x != s; x = par1[x]) mark[x] = stamp;
    for (Vertex x = par2[t]; x != s; x = par2[x])
      if (mark[x] == stamp) return false;
    // reset marks so the stamp can be reused by a later source
    for (Vertex x = par1[t]; x != s; x = par1[x]) mark[x] = 0;
  }
  return true;
}

namespace serial {

std::size_t first_dependent_source(const Graph& t1, const Graph& t2) {
  const std::size_t n = t1.order();
  std::vector<Vertex> p1(n), p2(n), q;
  std::vector<std::uint32_t> mark(n, 0);
  for (Vertex s = 0; s < n; ++s)
    if (!tree_paths_independent_from(t1, t2, s, p1, p2, mark, q)) return s;
  return n;
}

}  // namespace serial

namespace parallel {

std::size_t first_dependent_source(const Graph& t1, const Graph& t2) {
  const std::size_t n = t1.order();
  std::size_t first = n;
  const auto count = static_cast<std::int64_t>(n);
  EXPG_OMP(parallel reduction(min : first)) {
    std::vector<Vertex> p1(n), p2(n), q;
    std::vector<std::uint32_t> mark(n, 0);
    EXPG_OMP(for schedule(dynamic, 4))
    for (std::int64_t s = 0; s < count; ++s)
      if (static_cast<std::size_t>(s) < first &&
          !tree_paths_independent_from(t1, t2, static_cast<Vertex>(s), p1, p2,
                                       mark, q))
        first = std::min<std::size_t>(first, static_cast<std::size_t>(s));
  }
  return first;
}

}  // namespace parallel
}  // namespace expg::kernels
