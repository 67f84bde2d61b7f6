#include "expg/expr.hpp"

#include <algorithm>
#include <cctype>

#include "expg/algorithms.hpp"
#include "expg/connectivity.hpp"
#include "expg/error.hpp"
#include "expg/generators.hpp"
#include "expg/metrics.hpp"

namespace expg {

namespace {

std::string atom_name(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::kComplete: return "K";
    case Expr::Kind::kCycle: return "C";
    case Expr::Kind::kPath: return "P";
    case Expr::Kind::kHypercube: return "Q";
    case Expr::Kind::kMobius: return "MQ";
    case Expr::Kind::kDeBruijn: return "B";
    case Expr::Kind::kKautz: return "KZ";
    case Expr::Kind::kExp: return "EXP";
    case Expr::Kind::kCpow: return "CPOW";
    case Expr::Kind::kPow: return "POW";
  }
  return "?";
}

ExprPtr make(Expr::Kind k, std::vector<std::size_t> params,
             std::vector<ExprPtr> args = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->params = std::move(params);
  e->args = std::move(args);
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ExprPtr parse() {
    auto e = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + std::string(s_) + "' at offset " +
                     std::to_string(i_) + ": " + what);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  std::string name() {
    skip();
    std::string out;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_])))
      out += static_cast<char>(std::toupper(static_cast<unsigned char>(s_[i_++])));
    return out;
  }
  bool at_digit() {
    skip();
    return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
  }
  std::size_t number() {
    if (!at_digit()) fail("expected a number");
    std::size_t v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + static_cast<std::size_t>(s_[i_++] - '0');
      if (v > 1'000'000'000) fail("number too large");
    }
    return v;
  }
  std::size_t ranged(std::size_t v, std::size_t lo, const char* what) {
    if (v < lo)
      fail(std::string(what) + " must be at least " + std::to_string(lo));
    return v;
  }

  ExprPtr expr() {
    std::size_t start = i_;
    std::string n = name();
    if (n.empty()) fail("expected a graph name");
    using K = Expr::Kind;
    // Atoms with an attached size: K4, C8, P3, Q3, MQ3.
    if (n == "K" || n == "C" || n == "P" || n == "Q" || n == "MQ") {
      if (peek('(')) {
        ++i_;
        std::size_t v = number();
        expect(')');
        return atom(n, v);
      }
      return atom(n, number());
    }
    if (n == "B" || n == "KZ") {
      expect('(');
      std::size_t d = ranged(number(), 2, "d");
      expect(',');
      std::size_t k = ranged(number(), 1, "k");
      expect(')');
      return make(n == "B" ? K::kDeBruijn : K::kKautz, {d, k});
    }
    if (n == "EXP") {
      expect('(');
      auto a = expr();
      expect(',');
      auto b = expr();
      expect(')');
      return make_exp(a, b);
    }
    if (n == "CPOW" || n == "POW") {
      expect('(');
      auto a = expr();
      expect(',');
      std::size_t k = ranged(number(), 1, "n");
      expect(')');
      return make(n == "CPOW" ? K::kCpow : K::kPow, {k}, {a});
    }
    if (n == "OMEGA" || n == "PSI") {
      expect('(');
      ExprPtr g = make(K::kComplete, {2});
      if (!at_digit()) {
        g = expr();
        expect(',');
      }
      std::size_t k = ranged(number(), 1, "k");
      expect(')');
      return n == "OMEGA" ? omega_expr(g, k) : psi_expr(g, k);
    }
    i_ = start;
    fail("unknown graph '" + n + "'");
  }

  ExprPtr atom(const std::string& n, std::size_t v) {
    using K = Expr::Kind;
    if (n == "K") return make(K::kComplete, {ranged(v, 1, "K order")});
    if (n == "C") return make(K::kCycle, {ranged(v, 3, "cycle length")});
    if (n == "P") return make(K::kPath, {ranged(v, 1, "path order")});
    if (n == "Q") return make(K::kHypercube, {ranged(v, 1, "cube dimension")});
    return make(K::kMobius, {ranged(v, 1, "cube dimension")});
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

std::string key(const ExprPtr& e) { return e->text(); }

}  // namespace

std::string Expr::text() const {
  std::string n = atom_name(kind);
  switch (kind) {
    case Kind::kComplete:
    case Kind::kCycle:
    case Kind::kPath:
    case Kind::kHypercube:
    case Kind::kMobius:
      return n + std::to_string(params[0]);
    case Kind::kDeBruijn:
    case Kind::kKautz:
      return n + "(" + std::to_string(params[0]) + "," +
             std::to_string(params[1]) + ")";
    case Kind::kExp:
      return n + "(" + args[0]->text() + "," + args[1]->text() + ")";
    case Kind::kCpow:
    case Kind::kPow:
      return n + "(" + args[0]->text() + "," + std::to_string(params[0]) + ")";
  }
  return n;
}

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

ExprPtr make_exp(ExprPtr base, ExprPtr exponent) {
  return make(Expr::Kind::kExp, {}, {std::move(base), std::move(exponent)});
}

ExprPtr omega_expr(ExprPtr g, std::size_t k) {
  ExprPtr out = g;
  for (std::size_t i = 2; i <= k; ++i) out = make_exp(out, g);
  return out;
}

ExprPtr psi_expr(ExprPtr g, std::size_t k) {
  ExprPtr out = g;
  for (std::size_t i = 2; i <= k; ++i) out = make_exp(g, out);
  return out;
}

std::optional<std::size_t> known_ham_diameter(const Graph& h, const Stats& s) {
  std::size_t q = h.order();
  if (s.tree) return q <= 1 ? 0 : 2 * q - 2;
  if (s.hamiltonian_connected == true) return q;
  if (q <= kHamDistanceLimit) return ham_diameter(h);
  return std::nullopt;
}

bool Evaluator::materializable(const ExprPtr& e) {
  const Stats& s = stats(e);
  auto n = s.order.to_u64();
  if (!n || *n > budget_.max_vertices) return false;
  if (s.size) {
    auto m = s.size->to_u64();
    if (!m || *m > budget_.max_edges) return false;
  }
  return true;
}

const Graph& Evaluator::materialize(const ExprPtr& e) {
  std::string k = key(e);
  if (auto it = graphs_.find(k); it != graphs_.end()) return *it->second;
  using K = Expr::Kind;
  const auto& p = e->params;
  // Measured families are sized directly; their stats come from the graph.
  std::optional<BigInt> direct;
  switch (e->kind) {
    case K::kMobius: direct = boost::multiprecision::pow(BigInt(2), p[0]); break;
    case K::kDeBruijn: direct = boost::multiprecision::pow(BigInt(p[0]), p[1]); break;
    case K::kKautz:
      direct = boost::multiprecision::pow(BigInt(p[0]), p[1]) +
               boost::multiprecision::pow(BigInt(p[0]), p[1] - 1);
      break;
    case K::kPow: direct = stats(e->args[0]).order.value(64); break;
    default: break;
  }
  if (direct ? *direct > budget_.max_vertices : !materializable(e))
    throw BudgetExceeded(k + " is above the budget of " +
                         std::to_string(budget_.max_vertices) + " vertices");
  Graph g;
  switch (e->kind) {
    case K::kComplete: g = complete_graph(p[0]); break;
    case K::kCycle: g = cycle_graph(p[0]); break;
    case K::kPath: g = path_graph(p[0]); break;
    case K::kHypercube: g = hypercube(p[0]); break;
    case K::kMobius: g = mobius_cube(p[0]); break;
    case K::kDeBruijn: g = de_bruijn(p[0], p[1]); break;
    case K::kKautz: g = kautz(p[0], p[1]); break;
    case K::kExp: g = space(e).materialize(budget_); break;
    case K::kCpow: g = cartesian_power(materialize(e->args[0]), p[0], budget_); break;
    case K::kPow: g = power_graph(materialize(e->args[0]), p[0]); break;
  }
  auto ptr = std::make_shared<const Graph>(std::move(g));
  graphs_[k] = ptr;
  return *ptr;
}

ExpoSpace Evaluator::space(const ExprPtr& e) {
  if (e->kind != Expr::Kind::kExp)
    throw PreconditionError("expression " + e->text() + " is not EXP(G,H)");
  // Factors only need to fit; the host itself stays implicit.
  return ExpoSpace(materialize(e->args[0]), materialize(e->args[1]));
}

const Stats& Evaluator::stats(const ExprPtr& e) {
  std::string k = key(e);
  if (auto it = stats_.find(k); it != stats_.end()) return it->second;
  Stats s = compute(e);
  return stats_.emplace(k, std::move(s)).first->second;
}

Stats Evaluator::from_graph(const Graph& g, const Expr& e) {
  Stats s;
  s.order = Count(std::uint64_t{g.order()});
  s.size = Count(std::uint64_t{g.size()});
  s.min_degree = g.min_degree();
  s.max_degree = g.max_degree();
  s.tree = is_tree(g);
  if (is_connected(g)) {
    Count d(std::uint64_t{diameter(g)});
    s.diameter = s.diameter_upper = s.diameter_lower = d;
    if (g.order() <= 2000) s.connectivity = vertex_connectivity(g);
  }
  if (g.order() <= 20) s.hamiltonian = is_hamiltonian(g, {20});
  if (g.order() <= 16) s.hamiltonian_connected = is_hamiltonian_connected(g, {16});
  // Family facts beyond brute-force range.
  if (e.kind == Expr::Kind::kMobius) {
    if (!s.hamiltonian) s.hamiltonian = true;
    if (!s.hamiltonian_connected) s.hamiltonian_connected = true;
  }
  if (e.kind == Expr::Kind::kKautz && !s.hamiltonian) s.hamiltonian = true;
  return s;
}

Stats Evaluator::compute(const ExprPtr& e) {
  using K = Expr::Kind;
  const auto& p = e->params;
  Stats s;
  auto set_diam = [&](std::uint64_t d) {
    s.diameter = s.diameter_upper = s.diameter_lower = Count(d);
  };
  switch (e->kind) {
    case K::kComplete: {
      std::uint64_t n = p[0];
      s.order = Count(n);
      s.size = Count(n * (n - 1) / 2);
      s.min_degree = s.max_degree = n - 1;
      set_diam(n > 1 ? 1 : 0);
      s.connectivity = n - 1;
      s.hamiltonian = n >= 3;
      s.hamiltonian_connected = true;
      s.tree = n <= 2;
      return s;
    }
    case K::kCycle: {
      std::uint64_t n = p[0];
      s.order = Count(n);
      s.size = Count(n);
      s.min_degree = s.max_degree = 2;
      set_diam(n / 2);
      s.connectivity = 2;
      s.hamiltonian = true;
      s.hamiltonian_connected = n == 3;
      return s;
    }
    case K::kPath: {
      std::uint64_t n = p[0];
      s.order = Count(n);
      s.size = Count(n - 1);
      s.min_degree = n == 1 ? 0 : 1;
      s.max_degree = n <= 2 ? n - 1 : 2;
      set_diam(n - 1);
      s.connectivity = n == 1 ? 0 : 1;
      s.hamiltonian = false;
      s.hamiltonian_connected = n <= 2;
      s.tree = true;
      return s;
    }
    case K::kHypercube: {
      std::size_t k = p[0];
      s.order = Count::power(2, Count(std::uint64_t{k}));
      s.size = Count(std::uint64_t{k}) * Count::power(2, Count(std::uint64_t{k - 1}));
      s.min_degree = s.max_degree = k;
      set_diam(k);
      s.connectivity = k;
      s.hamiltonian = k >= 2;
      s.hamiltonian_connected = k == 1;
      s.tree = k == 1;
      return s;
    }
    case K::kMobius:
    case K::kDeBruijn:
    case K::kKautz:
    case K::kPow:
      return from_graph(materialize(e), *e);
    case K::kCpow: {
      const Stats& g = stats(e->args[0]);
      Count n(std::uint64_t{p[0]});
      s.order = Count::power(g.order, n);
      if (g.size)
        s.size = n * Count::power(g.order, Count(std::uint64_t{p[0] - 1})) * *g.size;
      s.min_degree = p[0] * g.min_degree;
      s.max_degree = p[0] * g.max_degree;
      if (g.diameter) s.diameter = s.diameter_upper = s.diameter_lower = n * *g.diameter;
      if (g.connectivity && g.connectivity == g.min_degree)
        s.connectivity = p[0] * g.min_degree;
      if (g.hamiltonian == true) s.hamiltonian = true;
      s.tree = p[0] == 1 && g.tree;
      return s;
    }
    case K::kExp:
      break;
  }

  const ExprPtr& ge = e->args[0];
  const ExprPtr& he = e->args[1];
  const Stats& g = stats(ge);
  const Stats& h = stats(he);
  if (g.order == Count(1)) return h;  // K1^H is H
  // The exponent order may itself be symbolic (PSI(5) and beyond).
  auto q64 = h.order.to_u64();
  const Count& qc = h.order;
  s.order = Count::power(g.order, qc) * qc;
  if (g.size && h.size)
    s.size = Count::power(g.order, qc - 1) * (qc * *g.size + g.order * *h.size);
  s.min_degree = g.min_degree + h.min_degree;
  s.max_degree = g.max_degree + h.max_degree;

  std::optional<Count> ham_diam;
  if (h.tree) ham_diam = qc == Count(1) ? Count(0) : qc * 2 - 2;
  else if (h.hamiltonian_connected == true) ham_diam = qc;
  else if (q64 && *q64 <= kHamDistanceLimit && materializable(he))
    ham_diam = Count(std::uint64_t{ham_diameter(materialize(he))});

  if (g.diameter_upper) s.diameter_upper = (*g.diameter_upper + 2) * qc - 2;
  if (g.diameter_lower) s.diameter_lower = (*g.diameter_lower + 1) * qc;
  if (g.diameter && ham_diam) {
    s.diameter = *g.diameter * qc + *ham_diam;
    s.diameter_upper = s.diameter_lower = s.diameter;
  }
  if (g.diameter && h.hamiltonian == true && h.diameter) {
    s.diameter_ham_bound = (*g.diameter + 1) * qc + *h.diameter - 1;
    if (!s.diameter) {
      auto a = s.diameter_ham_bound->value(4096);
      auto b = s.diameter_upper->value(4096);
      if (a && b && *a < *b) s.diameter_upper = s.diameter_ham_bound;
    }
  }
  bool q_big = !q64 || *q64 >= 2;
  auto p64 = g.order.to_u64();
  if (q_big && p64.value_or(2) >= 2) s.connectivity = g.min_degree + h.min_degree;
  if (g.hamiltonian == true && he->kind == K::kComplete && q64 == 2u)
    s.hamiltonian = true;
  // Even Hamiltonian base (K2 counts, its cube powers are Hamiltonian) and
  // Hamiltonian-connected exponent.
  bool even_ham = p64 && *p64 % 2 == 0 && (g.hamiltonian == true || *p64 == 2);
  if (even_ham && h.hamiltonian_connected == true && q_big) s.hamiltonian = true;
  s.tree = q64 == 1u && g.tree;
  return s;
}

}  // namespace expg
