#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "expg/count.hpp"
#include "expg/expo.hpp"
#include "expg/graph.hpp"

namespace expg {

// Graph expression, e.g. EXP(K4,EXP(K2,K2)), CPOW(C8,2), OMEGA(3), B(2,3).
struct Expr {
  enum class Kind {
    kComplete, kCycle, kPath, kHypercube, kDeBruijn, kKautz, kMobius,
    kExp, kCpow, kPow
  };
  Kind kind;
  std::vector<std::size_t> params;
  std::vector<std::shared_ptr<const Expr>> args;

  std::string text() const;
};
using ExprPtr = std::shared_ptr<const Expr>;

// OMEGA(k) / PSI(k) (base K2) and OMEGA(G,k) / PSI(G,k) expand to EXP chains.
ExprPtr parse_expr(std::string_view text);
ExprPtr make_exp(ExprPtr base, ExprPtr exponent);
ExprPtr omega_expr(ExprPtr g, std::size_t k);
ExprPtr psi_expr(ExprPtr g, std::size_t k);

// Properties derived from the factors without materializing the graph.
struct Stats {
  Count order;
  std::optional<Count> size;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::optional<Count> diameter;        // exact
  std::optional<Count> diameter_upper;  // best known upper bound
  std::optional<Count> diameter_lower;
  // (diam G + 1) q + diam H - 1, stated when H is Hamiltonian.
  std::optional<Count> diameter_ham_bound;
  std::optional<std::size_t> connectivity;  // exact when known
  std::optional<bool> hamiltonian;
  std::optional<bool> hamiltonian_connected;
  bool tree = false;
};

struct Measured {
  std::size_t order = 0;
  std::size_t size = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::optional<std::size_t> diameter;
};

class Evaluator {
 public:
  explicit Evaluator(Budget budget = {}) : budget_(budget) {}

  const Budget& budget() const { return budget_; }
  const Stats& stats(const ExprPtr& e);
  bool materializable(const ExprPtr& e);
  const Graph& materialize(const ExprPtr& e);
  // Implicit host for EXP expressions whose factors can be materialized.
  ExpoSpace space(const ExprPtr& e);

 private:
  Stats compute(const ExprPtr& e);
  Stats from_graph(const Graph& g, const Expr& e);

  Budget budget_;
  std::map<std::string, Stats> stats_;
  std::map<std::string, std::shared_ptr<const Graph>> graphs_;
};

// diam* of H when it is known exactly (tree, Hamiltonian-connected, or small).
std::optional<std::size_t> known_ham_diameter(const Graph& h, const Stats& s);

}  // namespace expg
