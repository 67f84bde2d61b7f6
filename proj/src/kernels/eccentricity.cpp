#include <algorithm>
#include <bit>

#include "expg/kernels.hpp"
#include "expg/parallel.hpp"

namespace expg::kernels {

std::uint32_t EccentricityProfile::diameter() const {
  return ecc.empty() ? 0 : *std::max_element(ecc.begin(), ecc.end());
}

namespace serial {

EccentricityProfile eccentricities(const Graph& g) {
  const std::size_t n = g.order();
  EccentricityProfile prof;
  prof.ecc.assign(n, 0);
  std::vector<std::int32_t> dist(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.assign(1, s);
    dist[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Vertex y : g.neighbors(queue[i]))
        if (dist[y] < 0) {
          dist[y] = dist[queue[i]] + 1;
          queue.push_back(y);
        }
    if (queue.size() != n) prof.connected = false;
    prof.ecc[s] = static_cast<std::uint32_t>(dist[queue.back()]);
  }
  return prof;
}

}  // namespace serial

namespace parallel {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

// BFS from up to 64 sources at once; bit i of a word tracks source base+i.
void batch(const Graph& g, Vertex base, int lanes, std::vector<std::uint64_t>& seen,
           std::vector<std::uint64_t>& front, std::vector<std::uint64_t>& next,
           std::uint32_t* ecc, bool& connected) {
  const std::size_t n = g.order();
  const std::uint64_t full = lanes == 64 ? ~0ull : ((1ull << lanes) - 1);
  std::fill(seen.begin(), seen.end(), 0);
  std::fill(front.begin(), front.end(), 0);
  for (int i = 0; i < lanes; ++i) {
    seen[base + i] |= 1ull << i;
    front[base + i] |= 1ull << i;
    ecc[i] = 0;
  }
  const auto& off = g.offsets();
  const auto& tg = g.targets();
  for (std::uint32_t level = 1;; ++level) {
    std::uint64_t advanced = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (seen[v] == full) {
        next[v] = 0;
        continue;
      }
      std::uint64_t acc = 0;
      for (auto i = off[v]; i < off[v + 1]; ++i) acc |= front[tg[i]];
      acc &= ~seen[v];
      next[v] = acc;
      advanced |= acc;
    }
    if (!advanced) break;
    for (std::size_t v = 0; v < n; ++v) seen[v] |= next[v];
    front.swap(next);
    while (advanced) {
      ecc[std::countr_zero(advanced)] = level;
      advanced &= advanced - 1;
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (seen[v] != full) {
      connected = false;
      break;
    }
}

}  // namespace

EccentricityProfile eccentricities(const Graph& g) {
  const std::size_t n = g.order();
  EccentricityProfile prof;
  prof.ecc.assign(n, 0);
  const std::int64_t batches = static_cast<std::int64_t>((n + 63) / 64);
  bool connected = true;
  EXPG_OMP(parallel reduction(&& : connected)) {
    std::vector<std::uint64_t> seen(n), front(n), next(n);
    bool local = true;
    EXPG_OMP(for schedule(dynamic, 1))
    for (std::int64_t b = 0; b < batches; ++b) {
      Vertex base = static_cast<Vertex>(b * 64);
      int lanes = static_cast<int>(std::min<std::size_t>(64, n - base));
      batch(g, base, lanes, seen, front, next, prof.ecc.data() + base, local);
    }
    connected = connected && local;
  }
  prof.connected = connected;
  return prof;
}

}  // namespace parallel
}  // namespace expg::kernels
