#include "expg/hamiltonicity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <unordered_set>

#include "expg/algorithms.hpp"
#include "expg/error.hpp"
#include "expg/kernels.hpp"

namespace expg {

HostView HostView::of(const Graph& g) {
  return {g.order(), [&g](Id a, Id b) {
            return g.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b));
          }};
}

HostView HostView::of(const ExpoSpace& space) {
  return {space.order(), [&space](Id a, Id b) { return space.adjacent(a, b); }};
}

void require_ham_cycle(const Graph& g, std::span<const Vertex> hc) {
  const std::size_t p = g.order();
  // K2 counts as even Hamiltonian: its cycle is the edge taken twice.
  if (hc.size() != p || p < 2)
    throw PreconditionError("Hamiltonian cycle must list all " +
                            std::to_string(p) + " vertices (p >= 2)");
  std::vector<bool> seen(p, false);
  for (std::size_t i = 0; i < p; ++i) {
    if (hc[i] >= p || seen[hc[i]])
      throw PreconditionError("Hamiltonian cycle repeats or leaves the vertex set");
    seen[hc[i]] = true;
    if (!g.adjacent(hc[i], hc[(i + 1) % p]))
      throw PreconditionError("Hamiltonian cycle uses a non-edge " +
                              std::to_string(hc[i]) + "-" +
                              std::to_string(hc[(i + 1) % p]));
  }
}

namespace {

using Positions = std::vector<Id>;  // index-level ids: digit i indexes hc

void require_even(std::size_t p, std::size_t min_order) {
  if (p % 2 != 0 || p < min_order)
    throw PreconditionError("base order must be even >= " + std::to_string(min_order));
}

Id ipow(Id b, std::size_t e) {
  Id r = 1;
  while (e--) r *= b;
  return r;
}

// Hamiltonian cycle of C_M x C_N as (i, j) pairs. Segments start at
// (0, t(M-2)), weave right/up across the rows and drop back one column.
std::vector<std::pair<Id, Id>> torus_sequence(Id m, Id n) {
  if (m % 2 || n % 2 || m < 2 || n < 2)
    throw PreconditionError("torus construction needs even side lengths");
  if (std::gcd((m - 2) / 2, n / 2) != 1)
    throw PreconditionError("torus construction needs gcd((M-2)/2, N/2) = 1");
  std::vector<std::pair<Id, Id>> out;
  out.reserve(m * n);
  for (Id t = 0; t < n / 2; ++t) {
    const Id s = t * (m - 2) % n;
    out.emplace_back(0, s);
    for (Id i = 1; i < m; ++i) {
      out.emplace_back(i, (s + i - 1) % n);
      out.emplace_back(i, (s + i) % n);
    }
    out.emplace_back(0, (s + m - 1) % n);
  }
  return out;
}

// Layered lift of a Hamiltonian path of Z_p^n to a cycle of Z_p^{n+1}.
Positions lift_layers(const Positions& path, Id p, std::size_t n) {
  const Id layer = ipow(p, n);
  Positions out;
  out.reserve(path.size() * p);
  for (Id t = 0; t < p; ++t) {
    if (t % 2 == 0)
      for (Id x : path) out.push_back(x + t * layer);
    else
      for (auto it = path.rbegin(); it != path.rend(); ++it) out.push_back(*it + t * layer);
  }
  return out;
}

Positions square_cycle(Id p) {
  Positions out;
  for (auto [i, j] : torus_sequence(p, p)) out.push_back(i + j * p);
  return out;
}

Positions negate(const Positions& c, Id p, std::size_t n) {
  Positions out;
  out.reserve(c.size());
  for (Id x : c) {
    Id y = 0, scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
      y += (p - x % p) % p * scale;
      x /= p;
      scale *= p;
    }
    out.push_back(y);
  }
  return out;
}

Positions alternating_positions(Id p, std::size_t n) {
  if (n == 1) {
    Positions out(p);
    std::iota(out.begin(), out.end(), Id{0});
    return out;
  }
  Positions c = square_cycle(p);
  for (std::size_t k = 2; k < n; ++k) c = lift_layers(c, p, k);
  return c;
}

// Path form of the negated square cycle, ending next to where it starts.
Positions negated_positions(Id p, std::size_t n) {
  Positions c = negate(square_cycle(p), p, 2);
  std::rotate(c.begin(), c.begin() + 2, c.end());
  for (std::size_t k = 2; k < n; ++k) c = lift_layers(c, p, k);
  return c;
}

WalkSpec to_cycle(const Positions& pos, const Graph& g, std::span<const Vertex> hc,
                  std::size_t n) {
  const Id p = g.order();
  WalkSpec w;
  w.closed = true;
  w.vertices.reserve(pos.size() + 1);
  for (Id x : pos) {
    Id id = 0, scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
      id += hc[x % p] * scale;
      x /= p;
      scale *= p;
    }
    w.vertices.push_back(id);
  }
  w.vertices.push_back(w.vertices.front());
  annotate_cartesian(w, g, n);
  return w;
}

}  // namespace

void annotate_expo(WalkSpec& w, std::size_t q) {
  w.steps.assign(w.length(), Step{});
  for (std::size_t i = 0; i < w.length(); ++i) {
    const Id a = w.vertices[i], b = w.vertices[i + 1];
    if (a / q == b / q)
      w.steps[i] = Step{StepKind::kHEdge, 0};
    else
      w.steps[i] = Step{StepKind::kGEdge, static_cast<int>(a % q + 1)};
  }
}

void annotate_cartesian(WalkSpec& w, const Graph& g, std::size_t n) {
  w.steps.assign(w.length(), Step{});
  for (std::size_t i = 0; i < w.length(); ++i) {
    int d = cartesian_dimension(g, n, w.vertices[i], w.vertices[i + 1]);
    if (!d) throw CertificateError("walk step is not an edge of G^[n]");
    w.steps[i] = Step{StepKind::kGEdge, d};
  }
}

WalkSpec ham_cycle_gk2(const Graph& g, std::span<const Vertex> hc) {
  require_ham_cycle(g, hc);
  const Id p = g.order();
  auto id = [&](Id a, Id b, Id w) {
    return (Id{hc[a % p]} + p * hc[b % p]) * 2 + w;
  };
  WalkSpec out;
  out.closed = true;
  for (Id a = 0; a < p; ++a) {
    const Id row = (p - a) % p;
    // at w1 the first coordinate runs a, a-1, ..., a+1
    for (Id s = 0; s < p; ++s) out.vertices.push_back(id(a + p - s, row, 0));
    // at w2 the second coordinate runs -a, -a+1, ..., -a-1
    for (Id s = 0; s < p; ++s) out.vertices.push_back(id(a + 1, row + s, 1));
  }
  out.vertices.push_back(out.vertices.front());
  annotate_expo(out, 2);
  return out;
}

WalkSpec cp_ham_cycle(const Graph& g, std::span<const Vertex> hc, std::size_t n) {
  require_ham_cycle(g, hc);
  if (n < 1) throw PreconditionError("dimension count must be >= 1");
  if (n >= 2) require_even(g.order(), 2);
  return to_cycle(alternating_positions(g.order(), n), g, hc, n);
}

std::pair<WalkSpec, WalkSpec> cp_ham_cycle_pair(const Graph& g,
                                                std::span<const Vertex> hc,
                                                std::size_t n) {
  require_ham_cycle(g, hc);
  require_even(g.order(), 4);
  if (n < 2) throw PreconditionError("dimension count must be >= 2");
  const Id p = g.order();
  return {to_cycle(alternating_positions(p, n), g, hc, n),
          to_cycle(negated_positions(p, n), g, hc, n)};
}

std::pair<WalkSpec, WalkSpec> cp_split_cycle_pair(const Graph& g,
                                                  std::span<const Vertex> hc,
                                                  std::size_t n) {
  require_ham_cycle(g, hc);
  require_even(g.order(), 4);
  if (n < 4) throw PreconditionError("split pair needs n >= 4");
  const Id p = g.order();
  const std::size_t a = n / 2, b = n - a;
  const Positions xa = alternating_positions(p, a);
  const Positions yb = alternating_positions(p, b);
  const Id m = xa.size(), nn = yb.size(), shift = ipow(p, a);
  auto seq = torus_sequence(m, nn);
  Positions first, second;
  first.reserve(seq.size());
  second.reserve(seq.size());
  for (auto [i, j] : seq) {
    first.push_back(xa[i] + yb[j] * shift);
    second.push_back(xa[(m - i) % m] + yb[(nn - j) % nn] * shift);
  }
  return {to_cycle(first, g, hc, n), to_cycle(second, g, hc, n)};
}

namespace {

// Entry and exit dimension (0-based) of each fiber along a closed cycle of
// G^[q] given by tuple values.
struct Contacts {
  std::vector<std::uint32_t> entry, exit;
};

Contacts contacts_of(const WalkSpec& c, Id fibers) {
  Contacts k;
  k.entry.assign(fibers, ~0u);
  k.exit.assign(fibers, ~0u);
  const std::size_t len = c.length();
  for (std::size_t t = 0; t < len; ++t) {
    const auto d = static_cast<std::uint32_t>(c.steps[t].dimension - 1);
    k.exit[c.vertices[t]] = d;
    k.entry[c.vertices[t + 1]] = d;
  }
  return k;
}

void require_fiber_cycle(const WalkSpec& c, Id fibers) {
  if (!c.closed || c.length() != fibers || c.vertices.front() != c.vertices.back())
    throw PreconditionError("cycle of G^[q] must be closed and visit every fiber");
  if (c.steps.size() != c.length())
    throw PreconditionError("cycle of G^[q] needs dimension annotations");
  std::vector<bool> seen(fibers, false);
  for (std::size_t t = 0; t < c.length(); ++t) {
    if (c.vertices[t] >= fibers || seen[c.vertices[t]])
      throw PreconditionError("cycle of G^[q] is not Hamiltonian");
    seen[c.vertices[t]] = true;
  }
  if (!check_alternation(c))
    throw PreconditionError("cycle of G^[q] repeats a dimension on consecutive edges");
}

}  // namespace

WalkSpec lift_ham_cycle(const ExpoSpace& space, const WalkSpec& cp_cycle,
                        const LiftOptions& opts) {
  const Graph& h = space.exponent();
  const std::size_t q = space.q();
  const Id fibers = space.fibers();
  WalkSpec cyc = cp_cycle;
  if (cyc.steps.empty()) annotate_cartesian(cyc, space.base(), q);
  if (opts.anchor) {
    const std::size_t a = *opts.anchor;
    if (a >= q) throw PreconditionError("anchor outside the exponent");
    for (auto& v : cyc.vertices) {
      Vertex d0 = static_cast<Vertex>(v % space.p());
      Vertex da = static_cast<Vertex>(v / space.stride(a) % space.p());
      v = v - d0 - Id{da} * space.stride(a) + da + Id{d0} * space.stride(a);
    }
    for (auto& s : cyc.steps) {
      if (s.dimension == 1) s.dimension = static_cast<int>(a + 1);
      else if (s.dimension == static_cast<int>(a + 1)) s.dimension = 1;
    }
  }
  require_fiber_cycle(cyc, fibers);

  HamPathOracle oracle(h, HamSearchLimits{kHamHardCap});
  if (!opts.trust_exponent) {
    if (opts.anchor) {
      if (!oracle.all_targets_reachable(*opts.anchor))
        throw PreconditionError("exponent lacks Hamiltonian paths from the anchor");
    } else if (!is_complete(h)) {
      if (!is_hamiltonian_connected(h, HamSearchLimits{kHamHardCap}))
        throw PreconditionError("exponent is not Hamiltonian-connected");
    }
  }
  auto k = contacts_of(cyc, fibers);
  std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> cache;
  WalkSpec out;
  out.closed = true;
  out.vertices.reserve(space.order() + 1);
  for (std::size_t t = 0; t < cyc.length(); ++t) {
    const Id u = cyc.vertices[t];
    const Vertex in = k.entry[u], ex = k.exit[u];
    auto key = std::make_pair(in, ex);
    auto it = cache.find(key);
    if (it == cache.end()) {
      auto path = oracle.path(in, ex);
      if (!path)
        throw PreconditionError("no Hamiltonian path of H between w" +
                                std::to_string(in + 1) + " and w" +
                                std::to_string(ex + 1));
      it = cache.emplace(key, std::move(*path)).first;
    }
    for (std::size_t i = 0; i < it->second.size(); ++i) {
      out.vertices.push_back(space.make(u, it->second[i]));
      if (i) out.steps.push_back({StepKind::kHEdge, 0});
    }
    out.steps.push_back({StepKind::kGEdge, static_cast<int>(ex + 1)});
  }
  out.vertices.push_back(out.vertices.front());
  return out;
}

std::array<std::vector<Vertex>, 2> kn_zigzag_paths(std::size_t n) {
  if (n < 4) throw PreconditionError("zigzag paths need n >= 4");
  std::vector<Vertex> p1{0};
  Vertex low = 1, high = static_cast<Vertex>(n - 1);
  for (bool take_low = true; p1.size() < n; take_low = !take_low)
    p1.push_back(take_low ? low++ : high--);
  std::vector<Vertex> p2;
  for (Vertex v : p1) p2.push_back(static_cast<Vertex>((v + 1) % n));
  return {p1, p2};
}

namespace {

struct FiberPlan {
  const Graph* g;
  std::size_t n;
  std::pair<WalkSpec, WalkSpec> cycles;
  Contacts c1, c2;
  std::array<std::vector<Vertex>, 2> zig;
  std::size_t half;
};

FiberPlan plan_fibers(const Graph& g, std::span<const Vertex> hc, std::size_t n) {
  if (n < 4) throw PreconditionError("exponent K_n needs n >= 4");
  FiberPlan f{&g, n, cp_split_cycle_pair(g, hc, n), {}, {}, kn_zigzag_paths(n), (n + 1) / 2};
  if (!verify_edge_disjoint(f.cycles.first, f.cycles.second))
    throw std::logic_error("split cycle pair is not edge-disjoint");
  const Id fibers = ipow(g.order(), n);
  f.c1 = contacts_of(f.cycles.first, fibers);
  f.c2 = contacts_of(f.cycles.second, fibers);
  // the canonical paths must be edge-disjoint for every relabeling to be
  std::set<std::pair<Vertex, Vertex>> e1;
  for (std::size_t i = 0; i + 1 < n; ++i)
    e1.insert(std::minmax(f.zig[0][i], f.zig[0][i + 1]));
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (e1.count(std::minmax(f.zig[1][i], f.zig[1][i + 1])))
      throw std::logic_error("zigzag paths share an edge");
  return f;
}

// Canonical K_n label -> position within fiber u.
std::vector<Vertex> relabel(const FiberPlan& f, Id u) {
  const std::size_t n = f.n, h = f.half;
  const Vertex x1 = f.c1.entry[u], y1 = f.c1.exit[u];
  const Vertex x2 = f.c2.entry[u], y2 = f.c2.exit[u];
  std::set<Vertex> contact{x1, y1, x2, y2};
  if (contact.size() != 4)
    throw std::logic_error("contact positions in a fiber are not distinct");
  std::vector<Vertex> pi(n);
  pi[0] = x1;
  pi[h] = y1;
  pi[1] = x2;
  pi[h + 1] = y2;
  Vertex next = 0;
  for (std::size_t c = 2; c < n; ++c) {
    if (c == h || c == h + 1) continue;
    while (contact.count(next)) ++next;
    pi[c] = next++;
  }
  return pi;
}

WalkSpec weave(const FiberPlan& f, const WalkSpec& cyc, int which) {
  const std::size_t n = f.n;
  WalkSpec out;
  out.closed = true;
  for (std::size_t t = 0; t < cyc.length(); ++t) {
    const Id u = cyc.vertices[t];
    auto pi = relabel(f, u);
    for (std::size_t i = 0; i < n; ++i) {
      out.vertices.push_back(u * n + pi[f.zig[which][i]]);
      if (i) out.steps.push_back({StepKind::kHEdge, 0});
    }
    out.steps.push_back({StepKind::kGEdge, cyc.steps[t].dimension});
  }
  out.vertices.push_back(out.vertices.front());
  return out;
}

}  // namespace

std::pair<WalkSpec, WalkSpec> edhc_gkn(const Graph& g, std::span<const Vertex> hc,
                                       std::size_t n) {
  auto f = plan_fibers(g, hc, n);
  return {weave(f, f.cycles.first, 0), weave(f, f.cycles.second, 1)};
}

CistPair cist_gkn(const Graph& g, std::span<const Vertex> hc, std::size_t n) {
  auto f = plan_fibers(g, hc, n);
  CistPair out;
  const std::size_t h = f.half;
  auto edge = [](Id a, Id b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  const auto& cyc1 = f.cycles.first;
  for (std::size_t t = 0; t < cyc1.length(); ++t) {
    const Id u = cyc1.vertices[t];
    auto pi = relabel(f, u);
    const Id x1 = u * n + pi[0], y1 = u * n + pi[h];
    const Id x2 = u * n + pi[1], y2 = u * n + pi[h + 1];
    for (std::size_t c = 2; c < n; ++c) {
      if (c == h || c == h + 1) continue;
      out.first.push_back(edge(x1, u * n + pi[c]));
      out.second.push_back(edge(x2, u * n + pi[c]));
    }
    out.first.insert(out.first.end(), {edge(x1, y1), edge(x1, x2), edge(y1, y2)});
    out.second.insert(out.second.end(), {edge(x2, y2), edge(x2, y1), edge(y2, x1)});
  }
  // join fibers along each cycle, leaving out the closing G-edge
  for (int which = 0; which < 2; ++which) {
    const auto& cyc = which == 0 ? f.cycles.first : f.cycles.second;
    const auto& k = which == 0 ? f.c1 : f.c2;
    auto& tree = which == 0 ? out.first : out.second;
    for (std::size_t t = 0; t + 1 < cyc.length(); ++t) {
      const Id u = cyc.vertices[t], v = cyc.vertices[t + 1];
      tree.push_back(edge(u * n + k.exit[u], v * n + k.exit[u]));
    }
  }
  std::sort(out.first.begin(), out.first.end());
  std::sort(out.second.begin(), out.second.end());
  return out;
}

bool verify_ham_cycle(const HostView& host, const WalkSpec& cycle) {
  if (cycle.vertices.empty()) throw CertificateError("empty cycle certificate");
  for (auto v : cycle.vertices)
    if (v >= host.order) throw CertificateError("vertex id outside the host");
  if (!cycle.steps.empty() && cycle.steps.size() != cycle.length())
    throw CertificateError("step annotations do not match the vertex sequence");
  if (!cycle.closed || cycle.vertices.front() != cycle.vertices.back()) return false;
  if (cycle.length() != host.order) return false;
  std::vector<bool> seen(host.order, false);
  for (std::size_t i = 0; i < cycle.length(); ++i) {
    if (seen[cycle.vertices[i]]) return false;
    seen[cycle.vertices[i]] = true;
  }
  for (std::size_t i = 0; i < cycle.length(); ++i)
    if (!host.adjacent(cycle.vertices[i], cycle.vertices[i + 1])) return false;
  return true;
}

bool verify_edge_disjoint(const WalkSpec& a, const WalkSpec& b) {
  std::unordered_set<std::uint64_t> seen;
  auto key = [](Id x, Id y) {
    if (x > y) std::swap(x, y);
    return x * 0x9E3779B97F4A7C15ull ^ (y + 0x632BE59BD9B4E019ull + (x << 6));
  };
  std::set<std::pair<Id, Id>> exact;
  for (std::size_t i = 0; i < a.length(); ++i) {
    seen.insert(key(a.vertices[i], a.vertices[i + 1]));
    exact.insert(std::minmax(a.vertices[i], a.vertices[i + 1]));
  }
  for (std::size_t i = 0; i < b.length(); ++i)
    if (seen.count(key(b.vertices[i], b.vertices[i + 1])) &&
        exact.count(std::minmax(b.vertices[i], b.vertices[i + 1])))
      return false;
  return true;
}

bool check_alternation(const WalkSpec& w) {
  const std::size_t len = w.steps.size();
  if (len < 2) return true;
  for (std::size_t i = 0; i + 1 < len; ++i)
    if (w.steps[i].dimension == w.steps[i + 1].dimension) return false;
  if (w.closed && w.steps.back().dimension == w.steps.front().dimension) return false;
  return true;
}

bool check_strong_alternation(const WalkSpec& w) {
  const std::size_t len = w.steps.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (w.steps[i].dimension < 2) continue;
    bool has_prev = i > 0 || w.closed;
    bool has_next = i + 1 < len || w.closed;
    if (has_prev && w.steps[(i + len - 1) % len].dimension != 1) return false;
    if (has_next && w.steps[(i + 1) % len].dimension != 1) return false;
  }
  return true;
}

namespace {

bool spanning_tree(const HostView& host, const std::vector<std::pair<Id, Id>>& edges) {
  if (edges.size() + 1 != host.order) return false;
  std::vector<Id> parent(host.order);
  std::iota(parent.begin(), parent.end(), Id{0});
  auto find = [&](Id x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edges) {
    if (a >= host.order || b >= host.order)
      throw CertificateError("tree edge outside the host");
    if (!host.adjacent(a, b)) return false;
    Id ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

Graph tree_graph(Id n, const std::vector<std::pair<Id, Id>>& edges) {
  std::vector<Edge> e;
  e.reserve(edges.size());
  for (auto [a, b] : edges) e.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  return Graph::from_edges(n, e);
}

struct RootedTree {
  std::vector<Vertex> parent;
  std::vector<std::uint32_t> depth;
};

RootedTree root_tree(const Graph& t) {
  RootedTree r;
  r.parent.assign(t.order(), 0);
  r.depth.assign(t.order(), ~0u);
  std::vector<Vertex> queue{0};
  r.depth[0] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Vertex y : t.neighbors(queue[i]))
      if (r.depth[y] == ~0u) {
        r.depth[y] = r.depth[queue[i]] + 1;
        r.parent[y] = queue[i];
        queue.push_back(y);
      }
  return r;
}

std::vector<Vertex> tree_path(const RootedTree& r, Vertex s, Vertex t) {
  std::vector<Vertex> front{s}, back{t};
  while (s != t) {
    if (r.depth[s] >= r.depth[t]) {
      s = r.parent[s];
      front.push_back(s);
    } else {
      t = r.parent[t];
      back.push_back(t);
    }
  }
  back.pop_back();
  front.insert(front.end(), back.rbegin(), back.rend());
  return front;
}

bool pair_independent(const RootedTree& a, const RootedTree& b, Vertex s, Vertex t) {
  auto pa = tree_path(a, s, t), pb = tree_path(b, s, t);
  std::unordered_set<Vertex> inner(pa.begin() + 1, pa.end() - 1);
  for (std::size_t i = 1; i + 1 < pb.size(); ++i)
    if (inner.count(pb[i])) return false;
  std::set<std::pair<Vertex, Vertex>> ea;
  for (std::size_t i = 0; i + 1 < pa.size(); ++i) ea.insert(std::minmax(pa[i], pa[i + 1]));
  for (std::size_t i = 0; i + 1 < pb.size(); ++i)
    if (ea.count(std::minmax(pb[i], pb[i + 1]))) return false;
  return true;
}

}  // namespace

CistReport check_cist(const HostView& host, const CistPair& pair,
                      const CistCheckOptions& opts) {
  CistReport r;
  r.spanning_first = spanning_tree(host, pair.first);
  r.spanning_second = spanning_tree(host, pair.second);
  std::set<std::pair<Id, Id>> e1;
  for (auto [a, b] : pair.first) e1.insert(std::minmax(a, b));
  r.edge_disjoint = true;
  for (auto [a, b] : pair.second)
    if (e1.count(std::minmax(a, b))) r.edge_disjoint = false;
  std::vector<std::uint32_t> d1(host.order, 0), d2(host.order, 0);
  for (auto [a, b] : pair.first) { ++d1[a]; ++d1[b]; }
  for (auto [a, b] : pair.second) { ++d2[a]; ++d2[b]; }
  r.degree_condition = true;
  for (Id v = 0; v < host.order; ++v)
    if (d1[v] > 1 && d2[v] > 1) r.degree_condition = false;
  if (!r.spanning_first || !r.spanning_second) {
    r.paths_independent = false;
    return r;
  }
  Graph t1 = tree_graph(host.order, pair.first), t2 = tree_graph(host.order, pair.second);
  if (host.order <= opts.exhaustive_limit) {
    auto bad = opts.parallel ? kernels::parallel::first_dependent_source(t1, t2)
                             : kernels::serial::first_dependent_source(t1, t2);
    r.paths_exhaustive = true;
    r.paths_independent = bad == host.order;
  }
  if (opts.sample_pairs > 0 && host.order >= 2) {
    auto ra = root_tree(t1), rb = root_tree(t2);
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<Id> pick(0, host.order - 1);
    for (std::size_t i = 0; i < opts.sample_pairs; ++i) {
      Vertex s = static_cast<Vertex>(pick(rng)), t = static_cast<Vertex>(pick(rng));
      while (t == s) t = static_cast<Vertex>(pick(rng));
      if (!pair_independent(ra, rb, s, t)) r.paths_independent = false;
      ++r.pairs_sampled;
    }
  }
  return r;
}

bool verify_cist(const HostView& host, const CistPair& pair, const CistCheckOptions& opts) {
  return check_cist(host, pair, opts).valid();
}

}  // namespace expg
