#include "expg/metrics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "expg/error.hpp"

namespace expg {

namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 4;

std::vector<std::uint32_t> distances_from(const Graph& h, Vertex s) {
  auto d = bfs_distances(h, s);
  std::vector<std::uint32_t> out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) throw Disconnected("Hamiltonian distance on a disconnected graph");
    out[i] = static_cast<std::uint32_t>(d[i]);
  }
  return out;
}

void append_path(WalkSpec& w, const std::vector<Vertex>& path) {
  for (std::size_t i = w.vertices.empty() ? 0 : 1; i < path.size(); ++i)
    w.vertices.push_back(path[i]);
}

WalkSpec plain_walk(std::vector<std::uint64_t> vertices) {
  WalkSpec w;
  w.vertices = std::move(vertices);
  w.steps.assign(w.length(), Step{});
  return w;
}

}  // namespace

HamWalk ham_distance(const Graph& h, Vertex u, Vertex v,
                     std::span<const Vertex> required, std::size_t limit) {
  if (u >= h.order() || v >= h.order())
    throw std::out_of_range("vertex out of range");
  std::vector<Vertex> r;
  for (Vertex x : required) {
    if (x >= h.order()) throw std::out_of_range("required vertex out of range");
    if (x != u && x != v) r.push_back(x);
  }
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  const std::size_t k = r.size();
  if (k > limit)
    throw LimitExceeded("Hamiltonian distance limited to " +
                        std::to_string(limit) + " required vertices");

  std::vector<std::vector<std::uint32_t>> d(k);
  for (std::size_t i = 0; i < k; ++i) d[i] = distances_from(h, r[i]);
  auto du = distances_from(h, u);

  HamWalk out;
  std::vector<Vertex> stops_v;
  if (k == 0) {
    out.length = du[v];
  } else {
    // rem[mask * k + i]: cost to finish at v from r[i] once `mask` is visited
    const std::size_t full = (std::size_t{1} << k) - 1;
    std::vector<std::uint32_t> rem((full + 1) * k, kInf);
    for (std::size_t i = 0; i < k; ++i) rem[full * k + i] = d[i][v];
    for (std::size_t mask = full; mask-- > 1;) {
      for (std::size_t i = 0; i < k; ++i) {
        if (!(mask >> i & 1)) continue;
        std::uint32_t best = kInf;
        for (std::size_t j = 0; j < k; ++j) {
          if (mask >> j & 1) continue;
          best = std::min(best, d[i][r[j]] + rem[(mask | (std::size_t{1} << j)) * k + j]);
        }
        rem[mask * k + i] = best;
      }
    }
    std::uint32_t best = kInf;
    std::size_t first = 0;
    for (std::size_t i = 0; i < k; ++i) {
      auto c = du[r[i]] + rem[(std::size_t{1} << i) * k + i];
      if (c < best) { best = c; first = i; }
    }
    out.length = best;
    std::size_t mask = std::size_t{1} << first, cur = first;
    out.order.push_back(r[first]);
    while (mask != full) {
      for (std::size_t j = 0; j < k; ++j) {
        if (mask >> j & 1) continue;
        auto next = mask | (std::size_t{1} << j);
        if (d[cur][r[j]] + rem[next * k + j] == rem[mask * k + cur]) {
          mask = next;
          cur = j;
          out.order.push_back(r[j]);
          break;
        }
      }
    }
  }
  std::vector<std::uint64_t> verts;
  WalkSpec w;
  Vertex at = u;
  w.vertices.push_back(u);
  for (Vertex t : out.order) {
    append_path(w, shortest_path(h, at, t));
    out.stops.push_back(w.vertices.size() - 1);
    at = t;
  }
  append_path(w, shortest_path(h, at, v));
  w.steps.assign(w.length(), Step{});
  out.walk = std::move(w);
  return out;
}

std::size_t ham_diameter(const Graph& h, std::size_t limit) {
  const std::size_t n = h.order();
  if (n == 0) throw std::invalid_argument("empty graph");
  if (n > limit)
    throw LimitExceeded("exact Hamiltonian diameter limited to " +
                        std::to_string(limit) + " vertices");
  if (n == 1) return 0;
  std::vector<std::vector<std::uint32_t>> d(n);
  for (Vertex i = 0; i < n; ++i) d[i] = distances_from(h, i);
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<std::uint32_t> f((full + 1) * n);
  std::uint32_t worst = 0;
  for (Vertex u = 0; u < n; ++u) {
    std::fill(f.begin(), f.end(), kInf);
    f[(std::size_t{1} << u) * n + u] = 0;
    for (std::size_t mask = 1; mask <= full; ++mask) {
      if (!(mask >> u & 1)) continue;
      for (std::size_t i = 0; i < n; ++i) {
        auto c = f[mask * n + i];
        if (c >= kInf) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (mask >> j & 1) continue;
          auto& slot = f[(mask | (std::size_t{1} << j)) * n + j];
          slot = std::min(slot, c + d[i][j]);
        }
      }
    }
    std::uint32_t closed = kInf;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != u) {
        worst = std::max(worst, f[full * n + i]);
        closed = std::min(closed, f[full * n + i] + d[i][u]);
      }
    }
    worst = std::max(worst, closed);
  }
  return worst;
}

WalkSpec covering_walk(const Graph& h, Vertex u, Vertex v) {
  auto p = shortest_path(h, u, v);
  const std::size_t n = h.order();
  constexpr Vertex kUnset = ~Vertex{0};
  std::vector<Vertex> parent(n, kUnset);
  std::vector<Vertex> queue;
  for (Vertex x : p) {
    parent[x] = x;
    queue.push_back(x);
  }
  std::vector<std::vector<Vertex>> children(n);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Vertex y : h.neighbors(queue[i]))
      if (parent[y] == kUnset) {
        parent[y] = queue[i];
        children[queue[i]].push_back(y);
        queue.push_back(y);
      }
  if (queue.size() != n) throw Disconnected("covering walk on a disconnected graph");

  std::vector<std::uint64_t> walk;
  for (std::size_t i = 0; i < p.size(); ++i) {
    walk.push_back(p[i]);
    // iterative DFS excursion over the subtree hanging from p[i]
    std::vector<std::pair<Vertex, std::size_t>> stack{{p[i], 0}};
    while (!stack.empty()) {
      auto& [x, next] = stack.back();
      if (next < children[x].size()) {
        Vertex c = children[x][next++];
        walk.push_back(c);
        stack.emplace_back(c, 0);
      } else {
        stack.pop_back();
        if (!stack.empty()) walk.push_back(stack.back().first);
      }
    }
  }
  return plain_walk(std::move(walk));
}

CoveringBound ham_diameter_upper(const Graph& h) {
  if (h.order() == 0) throw std::invalid_argument("empty graph");
  // the longest covering walk of the construction is the closed one
  auto w = covering_walk(h, 0, 0);
  return {w.length(), std::move(w)};
}

std::size_t expo_diameter(const Graph& g, const Graph& h, DiamMode mode,
                          const Budget& budget) {
  if (mode == DiamMode::kFormula)
    return diameter(g) * h.order() + ham_diameter(h);
  return diameter(exponential(g, h, budget).graph);
}

std::string_view to_string(ExponentCase c) {
  switch (c) {
    case ExponentCase::kTree: return "tree";
    case ExponentCase::kHamiltonianConnected: return "hamiltonian-connected";
    case ExponentCase::kHamiltonian: return "hamiltonian";
    default: return "general";
  }
}

DiameterBounds diameter_bounds(const Graph& g, const Graph& h,
                               std::size_t ham_limit) {
  const std::size_t dg = diameter(g);
  const std::size_t q = h.order();
  if (!is_connected(h)) throw Disconnected("exponent is disconnected");
  DiameterBounds b;
  b.lower = (dg + 1) * q;
  b.upper = (dg + 2) * q - 2;
  if (is_tree(h)) {
    b.tag = ExponentCase::kTree;
    b.exact = b.upper;
    return b;
  }
  if (q > ham_limit) return b;
  HamSearchLimits lim{ham_limit};
  if (is_hamiltonian_connected(h, lim)) {
    b.tag = ExponentCase::kHamiltonianConnected;
    b.exact = b.lower;
  } else if (is_hamiltonian(h, lim)) {
    b.tag = ExponentCase::kHamiltonian;
    b.case_upper = (dg + 1) * q + diameter(h) - 1;
  }
  return b;
}

// ---------------------------------------------------------------------------

namespace {

void all_pairs(const Graph& g, std::vector<Vertex>& parent,
               std::vector<std::int32_t>& dist) {
  const std::size_t n = g.order();
  parent.assign(n * n, 0);
  dist.assign(n * n, -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    auto* par = parent.data() + s * n;
    auto* d = dist.data() + s * n;
    d[s] = 0;
    par[s] = s;
    queue.assign(1, s);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Vertex y : g.neighbors(queue[i]))
        if (d[y] < 0) {
          d[y] = d[queue[i]] + 1;
          par[y] = queue[i];
          queue.push_back(y);
        }
    if (queue.size() != n) throw Disconnected("routing needs connected factors");
  }
}

std::vector<Vertex> tree_path(const std::vector<Vertex>& parent, std::size_t n,
                              Vertex a, Vertex b) {
  const auto* par = parent.data() + a * n;
  std::vector<Vertex> path{b};
  while (path.back() != a) path.push_back(par[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

Router::Router(const ExpoSpace& space)
    : space_(&space), p_(space.p()), q_(space.q()) {
  if (p_ > 4096 || q_ > 4096)
    throw BudgetExceeded("routing tables limited to factors of 4096 vertices");
  all_pairs(space.base(), g_parent_, g_dist_);
  all_pairs(space.exponent(), h_parent_, h_dist_);
  if (q_ <= 14) h_cycle_ = find_ham_cycle(space.exponent());
  if (q_ == 2) h_cycle_ = std::vector<Vertex>{0, 1};
  if (q_ == 1) h_cycle_ = std::vector<Vertex>{0};
  if (!h_cycle_) {
    // No Hamiltonian cycle known: tour along a closed covering walk instead.
    WalkSpec cw = covering_walk(space.exponent(), 0, 0);
    h_cycle_ = std::vector<Vertex>(cw.vertices.begin(), cw.vertices.end() - 1);
  }
}

std::vector<Vertex> Router::g_path(Vertex a, Vertex b) const {
  return tree_path(g_parent_, p_, a, b);
}
std::vector<Vertex> Router::h_path(Vertex a, Vertex b) const {
  return tree_path(h_parent_, q_, a, b);
}

RoutePlan Router::assemble(Id x, Id y, const std::vector<Vertex>& h_walk,
                           const std::vector<bool>& stop_here,
                           RouteMode mode) const {
  RoutePlan plan;
  plan.mode = mode;
  WalkSpec& w = plan.path;
  w.vertices.push_back(x);
  Id tuple = space_->rho(x);
  for (std::size_t idx = 0; idx < h_walk.size(); ++idx) {
    const Vertex pos = h_walk[idx];
    if (stop_here[idx]) {
      const Vertex from = static_cast<Vertex>(tuple / space_->stride(pos) % p_);
      const Vertex to = space_->rho_i(y, pos);
      auto gp = g_path(from, to);
      for (std::size_t s = 1; s < gp.size(); ++s) {
        tuple = tuple - Id{gp[s - 1]} * space_->stride(pos) +
                Id{gp[s]} * space_->stride(pos);
        w.vertices.push_back(space_->make(tuple, pos));
        w.steps.push_back(Step{StepKind::kGEdge, static_cast<int>(pos + 1)});
      }
    }
    if (idx + 1 < h_walk.size()) {
      w.vertices.push_back(space_->make(tuple, h_walk[idx + 1]));
      w.steps.push_back(Step{StepKind::kHEdge, 0});
    }
  }
  if (w.vertices.back() != y)
    throw std::logic_error("route assembly did not reach the target");
  plan.length = w.length();
  // group steps into maximal runs of the same kind and dimension
  for (std::size_t s = 0; s < w.steps.size(); ++s) {
    if (plan.segments.empty() || plan.segments.back().kind != w.steps[s].kind ||
        plan.segments.back().dimension != w.steps[s].dimension) {
      plan.segments.push_back({w.steps[s].kind, w.steps[s].dimension, {w.vertices[s]}});
    }
    plan.segments.back().vertices.push_back(w.vertices[s + 1]);
  }
  return plan;
}

RoutePlan Router::route(Id x, Id y, RouteMode mode) const {
  if (x >= space_->order() || y >= space_->order())
    throw std::out_of_range("vertex id out of range");
  const Vertex j = static_cast<Vertex>(space_->sigma(x));
  const Vertex k = static_cast<Vertex>(space_->sigma(y));
  std::vector<Vertex> diff;
  std::vector<bool> in_d(q_, false);
  for (Vertex i = 0; i < q_; ++i)
    if (space_->rho_i(x, i) != space_->rho_i(y, i)) {
      diff.push_back(i);
      in_d[i] = true;
    }

  if (mode == RouteMode::kExact) {
    auto hw = ham_distance(space_->exponent(), j, k, diff, kHamDistanceLimit);
    std::vector<Vertex> walk(hw.walk.vertices.begin(), hw.walk.vertices.end());
    std::vector<bool> stop(walk.size(), false);
    if (in_d[j]) stop[0] = true;
    for (auto s : hw.stops) stop[s] = true;
    if (in_d[k] && k != j) stop.back() = true;
    return assemble(x, y, walk, stop, mode);
  }

  const auto& c = *h_cycle_;
  const std::size_t len = c.size();
  const std::size_t start =
      static_cast<std::size_t>(std::find(c.begin(), c.end(), j) - c.begin());
  std::optional<RoutePlan> best;
  for (int dir : {+1, -1}) {
    std::vector<Vertex> walk{j};
    std::vector<bool> stop{in_d[j]};
    std::vector<bool> done(q_, false);
    done[j] = true;
    std::size_t remaining = diff.size() - (in_d[j] ? 1 : 0);
    std::size_t at = start;
    while (remaining > 0) {
      at = (at + len + dir) % len;
      walk.push_back(c[at]);
      bool s = in_d[c[at]] && !done[c[at]];
      done[c[at]] = true;
      stop.push_back(s);
      if (s) --remaining;
    }
    auto tail = h_path(walk.back(), k);
    for (std::size_t i = 1; i < tail.size(); ++i) {
      walk.push_back(tail[i]);
      stop.push_back(false);
    }
    auto plan = assemble(x, y, walk, stop, mode);
    if (!best || plan.length < best->length) best = std::move(plan);
  }
  return std::move(*best);
}

bool is_valid_walk(const ExpoSpace& space, const WalkSpec& w, bool require_path) {
  if (w.vertices.empty()) return false;
  for (auto v : w.vertices)
    if (v >= space.order()) return false;
  for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
    if (!space.adjacent(w.vertices[i], w.vertices[i + 1])) return false;
  if (require_path) {
    std::unordered_set<Id> seen(w.vertices.begin(), w.vertices.end());
    if (seen.size() != w.vertices.size()) return false;
  }
  return true;
}

}  // namespace expg
