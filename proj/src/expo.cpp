#include "expg/expo.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "expg/error.hpp"

namespace expg {

ExpoSpace::ExpoSpace(Graph base, Graph exponent)
    : base_(std::make_shared<const Graph>(std::move(base))),
      exponent_(std::make_shared<const Graph>(std::move(exponent))),
      p_(base_->order()),
      q_(exponent_->order()) {
  if (p_ == 0 || q_ == 0)
    throw std::invalid_argument("exponential needs nonempty factors");
  constexpr Id kMax = Id{1} << 62;
  Id fibers = 1;
  strides_.push_back(1);
  for (std::size_t i = 0; i < q_; ++i) {
    if (fibers > kMax / p_)
      throw BudgetExceeded("exponential id range exceeds 64 bits");
    fibers *= p_;
    strides_.push_back(fibers);
  }
  if (fibers > kMax / q_)
    throw BudgetExceeded("exponential id range exceeds 64 bits");
  order_ = fibers * q_;
}

void ExpoSpace::check(Id x) const {
  if (x >= order_) throw std::out_of_range("vertex id out of range");
}

Id ExpoSpace::encode(std::span<const Vertex> tuple, std::size_t position) const {
  if (tuple.size() != q_ || position >= q_)
    throw std::invalid_argument("tuple length or position mismatch");
  Id value = 0;
  for (std::size_t i = 0; i < q_; ++i) {
    if (tuple[i] >= p_) throw std::out_of_range("tuple digit out of range");
    value += tuple[i] * strides_[i];
  }
  return make(value, position);
}

ExpoSpace::Decoded ExpoSpace::decode(Id x) const {
  check(x);
  Decoded d{std::vector<Vertex>(q_), sigma(x)};
  Id t = rho(x);
  for (std::size_t i = 0; i < q_; ++i) {
    d.tuple[i] = static_cast<Vertex>(t % p_);
    t /= p_;
  }
  return d;
}

std::vector<std::pair<Id, Step>> ExpoSpace::neighbors(Id x) const {
  check(x);
  const std::size_t j = sigma(x);
  const Id t = rho(x);
  const Vertex uj = rho_i(x, j);
  std::vector<std::pair<Id, Step>> out;
  out.reserve(base_->degree(uj) + exponent_->degree(static_cast<Vertex>(j)));
  const Id cleared = t - uj * strides_[j];
  for (Vertex v : base_->neighbors(uj))
    out.emplace_back(make(cleared + v * strides_[j], j),
                     Step{StepKind::kGEdge, static_cast<int>(j + 1)});
  for (Vertex w : exponent_->neighbors(static_cast<Vertex>(j)))
    out.emplace_back(make(t, w), Step{StepKind::kHEdge, 0});
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::size_t ExpoSpace::degree(Id x) const {
  check(x);
  return base_->degree(rho_i(x, sigma(x))) +
         exponent_->degree(static_cast<Vertex>(sigma(x)));
}

bool ExpoSpace::adjacent(Id a, Id b) const {
  check(a);
  check(b);
  const std::size_t j = sigma(a);
  if (rho(a) == rho(b))
    return exponent_->adjacent(static_cast<Vertex>(j),
                               static_cast<Vertex>(sigma(b)));
  if (sigma(b) != j) return false;
  const Id ta = rho(a), tb = rho(b);
  const Id sa = ta - rho_i(a, j) * strides_[j];
  const Id sb = tb - rho_i(b, j) * strides_[j];
  return sa == sb && base_->adjacent(rho_i(a, j), rho_i(b, j));
}

Graph ExpoSpace::materialize(const Budget& budget) const {
  if (order_ > budget.max_vertices)
    throw BudgetExceeded("G^H has " + std::to_string(order_) +
                         " vertices, budget is " +
                         std::to_string(budget.max_vertices));
  if (order_ >= std::numeric_limits<Vertex>::max())
    throw BudgetExceeded("G^H exceeds 32-bit vertex ids");
  auto f = expo_formulas(*base_, *exponent_);
  auto m = f.size.to_u64();
  if (!m || *m > budget.max_edges)
    throw BudgetExceeded("G^H edge count exceeds budget");
  std::vector<std::uint64_t> offsets(order_ + 1, 0);
  for (Id x = 0; x < order_; ++x) offsets[x + 1] = offsets[x] + degree(x);
  std::vector<Vertex> targets(offsets.back());
  for (Id x = 0; x < order_; ++x) {
    auto nb = neighbors(x);
    for (std::size_t i = 0; i < nb.size(); ++i)
      targets[offsets[x] + i] = static_cast<Vertex>(nb[i].first);
  }
  const std::size_t q = q_, p = p_;
  auto base = base_;
  return Graph::from_csr(std::move(offsets), std::move(targets))
      .with_labels([q, p, base](Vertex v) {
        std::string s = "(";
        Id t = v / q;
        for (std::size_t i = 0; i < q; ++i) {
          if (i) s += ',';
          s += base->label(static_cast<Vertex>(t % p));
          t /= p;
        }
        return s + ";w" + std::to_string(v % q + 1) + ")";
      });
}

Exponential exponential(const Graph& g, const Graph& h, const Budget& budget) {
  ExpoSpace space(g, h);
  Graph graph = space.materialize(budget);
  return {std::move(graph), std::move(space)};
}

ExpoFormulas expo_formulas(const Graph& g, const Graph& h) {
  const Count p(static_cast<std::uint64_t>(g.order()));
  const Count q(static_cast<std::uint64_t>(h.order()));
  ExpoFormulas f;
  f.order = Count::power(p, q) * q;
  const Count eg(static_cast<std::uint64_t>(g.size()));
  const Count eh(static_cast<std::uint64_t>(h.size()));
  f.size = h.order() == 0 ? Count(0)
                          : Count::power(p, q - Count(1)) * (q * eg + p * eh);
  f.min_degree = g.min_degree() + h.min_degree();
  f.max_degree = g.max_degree() + h.max_degree();
  return f;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t p = g.order(), q = h.order();
  std::vector<Edge> e;
  for (Vertex b = 0; b < q; ++b)
    for (auto [u, v] : g.edges())
      e.emplace_back(static_cast<Vertex>(u + p * b), static_cast<Vertex>(v + p * b));
  for (auto [a, b] : h.edges())
    for (Vertex u = 0; u < p; ++u)
      e.emplace_back(static_cast<Vertex>(u + p * a), static_cast<Vertex>(u + p * b));
  return Graph::from_edges(p * q, e);
}

Graph cartesian_power(const Graph& g, std::size_t n, const Budget& budget) {
  if (n < 1) throw std::invalid_argument("cartesian power needs n >= 1");
  const std::size_t p = g.order();
  Id total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > budget.max_vertices / std::max<std::size_t>(p, 1))
      throw BudgetExceeded("cartesian power exceeds vertex budget");
    total *= p;
  }
  std::vector<std::uint64_t> offsets(total + 1, 0);
  std::vector<Vertex> targets;
  std::vector<Id> strides(n + 1, 1);
  for (std::size_t i = 0; i < n; ++i) strides[i + 1] = strides[i] * p;
  std::vector<Vertex> nb;
  for (Id x = 0; x < total; ++x) {
    nb.clear();
    for (std::size_t i = 0; i < n; ++i) {
      Vertex d = static_cast<Vertex>(x / strides[i] % p);
      Id cleared = x - d * strides[i];
      for (Vertex v : g.neighbors(d))
        nb.push_back(static_cast<Vertex>(cleared + v * strides[i]));
    }
    std::sort(nb.begin(), nb.end());
    targets.insert(targets.end(), nb.begin(), nb.end());
    offsets[x + 1] = targets.size();
  }
  return Graph::from_csr(std::move(offsets), std::move(targets));
}

int cartesian_dimension(const Graph& g, std::size_t n, Id a, Id b) {
  const std::size_t p = g.order();
  int dim = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Vertex da = static_cast<Vertex>(a % p), db = static_cast<Vertex>(b % p);
    a /= p;
    b /= p;
    if (da == db) continue;
    if (dim || !g.adjacent(da, db)) return 0;
    dim = static_cast<int>(i + 1);
  }
  return dim;
}

Graph contract_to_base(const ExpoSpace& space, const Graph& host) {
  if (host.order() != space.order())
    throw std::invalid_argument("host does not match the exponential space");
  const std::size_t q = space.q();
  std::vector<Edge> e;
  for (auto [u, v] : host.edges()) {
    Vertex a = static_cast<Vertex>(u / q), b = static_cast<Vertex>(v / q);
    if (a != b) e.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Graph::from_edges(space.fibers(), e, EdgePolicy::kCollapse);
}

}  // namespace expg
