// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <nlohmann/json.hpp>

#include "expg/algorithms.hpp"
#include "expg/cli.hpp"
#include "expg/connectivity.hpp"
#include "expg/expo.hpp"
#include "expg/generators.hpp"
#include "expg/hamiltonicity.hpp"
#include "expg/metrics.hpp"

using namespace expg;

namespace {

constexpr double kAc1Seconds = 30;
constexpr double kAc2Seconds = 120;
constexpr double kAc6Seconds = 120;
constexpr std::uint64_t kBatteryVertices = 100'000;
// Above this order all-pairs BFS is too slow on one core. Larger pairs with a
// vertex-transitive base are checked from one tuple per position instead.
constexpr std::uint64_t kBfsVertices = 60'000;
constexpr std::uint64_t kFlowVertices = 2'000;

struct Named {
  std::string name;
  Graph g;
};

std::vector<Named> family() {
  std::vector<Named> f;
  for (std::size_t n = 2; n <= 5; ++n) f.push_back({"K" + std::to_string(n), complete_graph(n)});
  for (std::size_t n = 3; n <= 8; ++n) f.push_back({"C" + std::to_string(n), cycle_graph(n)});
  for (std::size_t n = 2; n <= 4; ++n) f.push_back({"P" + std::to_string(n), path_graph(n)});
  for (std::size_t k = 2; k <= 3; ++k) f.push_back({"Q" + std::to_string(k), hypercube(k)});
  for (std::size_t k = 2; k <= 3; ++k)
    f.push_back({"B(2," + std::to_string(k) + ")", de_bruijn(2, k)});
  f.push_back({"K(2,2)", kautz(2, 2)});
  for (std::size_t k = 2; k <= 3; ++k) f.push_back({"MQ" + std::to_string(k), mobius_cube(k)});
  return f;
}

std::optional<std::uint64_t> expo_order(std::uint64_t p, std::uint64_t q) {
  long double v = std::pow(static_cast<long double>(p), static_cast<long double>(q)) * q;
  if (v > 1e18L) return std::nullopt;
  std::uint64_t r = q;
  for (std::uint64_t i = 0; i < q; ++i) r *= p;
  return r;
}

struct Pair {
  const Named* g;
  const Named* h;
  std::uint64_t order;
};

std::vector<Pair> battery(const std::vector<Named>& f, std::uint64_t cap) {
  std::vector<Pair> out;
  for (const auto& g : f)
    for (const auto& h : f) {
      auto n = expo_order(g.g.order(), h.g.order());
      if (n && *n <= cap) out.push_back({&g, &h, *n});
    }
  return out;
}

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("AC%d %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::vector<Vertex> iota_cycle(std::size_t n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Runs a criterion and turns stray exceptions into a failure line.
void guarded(int id, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, std::string("exception: ") + e.what());
  }
}

void ac1(const std::vector<Named>& f) {
  auto t0 = Clock::now();
  auto pairs = battery(f, kBatteryVertices);
  std::size_t bad = 0;
  std::string first;
  for (const auto& pr : pairs) {
    const Graph &g = pr.g->g, &h = pr.h->g;
    Graph x = exponential(g, h).graph;
    std::uint64_t p = g.order(), q = h.order();
    std::uint64_t pq1 = 1;
    for (std::uint64_t i = 1; i < q; ++i) pq1 *= p;
    std::uint64_t size = pq1 * (q * g.size() + p * h.size());
    bool ok = x.order() == pr.order && x.size() == size &&
              x.min_degree() == g.min_degree() + h.min_degree() &&
              x.max_degree() == g.max_degree() + h.max_degree();
    if (!ok) {
      ++bad;
      if (first.empty()) first = pr.g->name + "^" + pr.h->name;
    }
  }
  double s = seconds_since(t0);
  std::ostringstream d;
  d << pairs.size() << " pairs up to " << kBatteryVertices << " vertices, " << bad
    << " mismatches" << (first.empty() ? "" : " (first " + first + ")") << ", " << s << " s";
  report(1, bad == 0 && pairs.size() >= 20 && s < kAc1Seconds, d.str());
}

// Automorphisms of G act coordinatewise on G^H, so for vertex-transitive G
// every vertex is equivalent to one with tuple 0 at the same position.
std::size_t transitive_base_diameter(const Graph& g, const Graph& h) {
  auto [host, space] = exponential(g, h);
  std::int32_t best = 0;
  for (std::size_t j = 0; j < space.q(); ++j)
    for (auto d : bfs_distances(host, static_cast<Vertex>(space.make(0, j))))
      best = std::max(best, d);
  return static_cast<std::size_t>(best);
}

bool known_transitive(const Named& g) {
  // complete graphs, cycles and hypercubes; Kautz and de Bruijn are not
  return std::string("KCQ").find(g.name[0]) != std::string::npos &&
         std::isdigit(static_cast<unsigned char>(g.name[1]));
}

void ac2(const std::vector<Named>& f) {
  auto t0 = Clock::now();
  std::size_t checked = 0, bad = 0, transitive = 0;
  std::set<ExponentCase> cases;
  std::string first;
  for (const auto& pr : battery(f, kBatteryVertices)) {
    const Graph &g = pr.g->g, &h = pr.h->g;
    if (h.order() > 10) continue;
    if (pr.order > kBfsVertices && !known_transitive(*pr.g)) continue;
    std::size_t formula = expo_diameter(g, h, DiamMode::kFormula);
    std::size_t bfs;
    if (pr.order > kBfsVertices) {
      bfs = transitive_base_diameter(g, h);
      ++transitive;
    } else {
      bfs = expo_diameter(g, h, DiamMode::kBfs);
    }
    cases.insert(diameter_bounds(g, h).tag);
    ++checked;
    if (formula != bfs) {
      ++bad;
      if (first.empty()) first = pr.g->name + "^" + pr.h->name;
    }
  }
  Graph k2 = complete_graph(2);
  Graph omega2 = exponential(k2, k2).graph;
  Graph omega3 = exponential(omega2, k2).graph;
  Graph omega4 = exponential(omega3, k2).graph;
  std::size_t d3 = diameter(omega3), d4 = diameter(omega4);
  std::size_t dmq = expo_diameter(k2, mobius_cube(2), DiamMode::kBfs);
  std::size_t dk3 = expo_diameter(complete_graph(3), k2, DiamMode::kBfs);
  bool anchors = d3 == 10 && d4 == 22 && dmq == 8 && dk3 == 4;
  bool all_cases = cases.count(ExponentCase::kTree) &&
                   cases.count(ExponentCase::kHamiltonian) &&
                   cases.count(ExponentCase::kHamiltonianConnected);
  double s = seconds_since(t0);
  std::ostringstream d;
  d << checked << " pairs with q <= 10 (" << transitive << " above " << kBfsVertices
    << " vertices via base symmetry), " << bad
    << " mismatches" << (first.empty() ? "" : " (first " + first + ")")
    << "; anchors Omega3=" << d3 << " Omega4=" << d4 << " K2^MQ2=" << dmq
    << " K3^K2=" << dk3 << "; " << s << " s";
  report(2, bad == 0 && anchors && all_cases && s < kAc2Seconds, d.str());
}

void ac3(const std::vector<Named>& f) {
  std::vector<Named> hs;
  for (const auto& n : f)
    if (n.g.order() <= 10) hs.push_back(n);
  std::mt19937_64 rng(7);
  for (std::size_t n = 3; n <= 10; ++n) {
    std::vector<Edge> e;
    for (Vertex v = 1; v < n; ++v) e.emplace_back(static_cast<Vertex>(rng() % v), v);
    hs.push_back({"tree" + std::to_string(n), Graph::from_edges(n, e)});
  }
  std::size_t bad = 0, trees = 0, hc = 0;
  std::string first;
  for (const auto& h : hs) {
    std::size_t q = h.g.order();
    std::size_t d = ham_diameter(h.g);
    bool ok = q <= d && d <= 2 * q - 2;
    if (is_tree(h.g)) {
      ++trees;
      ok = ok && d == 2 * q - 2;
    }
    if (is_hamiltonian_connected(h.g)) {
      ++hc;
      ok = ok && d == q;
    }
    auto ub = ham_diameter_upper(h.g);
    ok = ok && ub.length <= 2 * q - 2 && ub.length >= d;
    const auto& w = ub.witness.vertices;
    std::set<std::uint64_t> seen(w.begin(), w.end());
    ok = ok && seen.size() == q && w.size() == ub.length + 1;
    for (std::size_t i = 0; ok && i + 1 < w.size(); ++i)
      ok = h.g.adjacent(static_cast<Vertex>(w[i]), static_cast<Vertex>(w[i + 1]));
    if (!ok) {
      ++bad;
      if (first.empty()) first = h.name;
    }
  }
  std::ostringstream d;
  d << hs.size() << " exponents (" << trees << " trees, " << hc
    << " Hamiltonian-connected), " << bad << " violations"
    << (first.empty() ? "" : " (first " + first + ")");
  report(3, bad == 0 && trees > 0 && hc > 0, d.str());
}

void ac4(const std::vector<Named>& f) {
  std::size_t pairs = 0, bad = 0;
  std::string first;
  for (const auto& pr : battery(f, kFlowVertices)) {
    if (pr.order < 8) continue;
    const Graph &g = pr.g->g, &h = pr.h->g;
    std::size_t k = vertex_connectivity(exponential(g, h).graph);
    ++pairs;
    if (k != g.min_degree() + h.min_degree()) {
      ++bad;
      if (first.empty()) first = pr.g->name + "^" + pr.h->name;
    }
  }
  std::vector<std::pair<Graph, std::size_t>> powers{
      {cycle_graph(4), 2},     {cycle_graph(5), 3},  {complete_graph(3), 3},
      {path_graph(3), 4},      {complete_graph(4), 2}, {de_bruijn(2, 2), 3},
      {kautz(2, 2), 2}};
  std::size_t pow_bad = 0;
  for (auto& [g, n] : powers)
    if (vertex_connectivity(cartesian_power(g, n)) != n * g.min_degree()) ++pow_bad;

  std::size_t spac = 0, spac_bad = 0;
  for (std::size_t i = 0; i < f.size(); i += 3)
    for (std::size_t j = 1; j < f.size(); j += 4) {
      const Graph &g = f[i].g, &h = f[j].g;
      if (g.order() * h.order() > 200) continue;
      std::size_t want = std::min({vertex_connectivity(g) * h.order(),
                                   vertex_connectivity(h) * g.order(),
                                   g.min_degree() + h.min_degree()});
      ++spac;
      if (vertex_connectivity(cartesian_product(g, h)) != want) ++spac_bad;
    }
  std::ostringstream d;
  d << "kappa(G^H): " << pairs << " pairs <= " << kFlowVertices << " vertices, " << bad
    << " off" << (first.empty() ? "" : " (first " + first + ")") << "; kappa(G^[n]): "
    << powers.size() << " powers, " << pow_bad << " off; Cartesian min-formula: " << spac
    << " pairs, " << spac_bad << " off";
  report(4, bad == 0 && pairs >= 12 && pow_bad == 0 && spac >= 10 && spac_bad == 0, d.str());
}

void ac5(const std::vector<Named>& f) {
  std::size_t pairs = 0, bad = 0, witnesses = 0;
  std::set<std::pair<bool, bool>> combos;
  std::string first;
  for (const auto& pr : battery(f, 1'000)) {
    const Graph &g = pr.g->g, &h = pr.h->g;
    if (pr.order < 8) continue;
    bool c1 = g.min_degree() >= 2 || !is_complete(h);
    bool c2 = h.min_degree() >= 2 || !is_complete(g);
    ExpoSpace space(g, h);
    Graph x = exponential(g, h).graph;
    bool pred = super_edge_predicate(g, h);
    auto res = is_super_edge_connected(x);
    bool ok = pred == (c1 && c2) && (res.verdict == SuperVerdict::kYes) == pred;
    if (!pred) {
      CutWitness w = counterexample_cut(space);
      CutCheck chk = check_cut(x, w);
      ok = ok && w.edges.size() == x.min_degree() && chk.disconnects && !chk.isolates_vertex;
      ++witnesses;
    }
    combos.insert({c1, c2});
    ++pairs;
    if (!ok) {
      ++bad;
      if (first.empty()) first = pr.g->name + "^" + pr.h->name;
    }
  }
  std::ostringstream d;
  d << pairs << " pairs, " << combos.size() << "/4 clause combinations, " << witnesses
    << " witness cuts checked, " << bad << " disagreements"
    << (first.empty() ? "" : " (first " + first + ")");
  report(5, bad == 0 && pairs >= 12 && combos.size() == 4, d.str());
}

void ac6() {
  auto t0 = Clock::now();
  std::vector<std::string> failed;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  };
  Graph k2 = complete_graph(2);
  for (const Graph& g : {cycle_graph(5), cycle_graph(8), complete_graph(3), complete_graph(4)}) {
    ExpoSpace sp(g, k2);
    need(verify_ham_cycle(HostView::of(sp), ham_cycle_gk2(g, iota_cycle(g.order()))),
         "gk2 p=" + std::to_string(g.order()));
  }
  for (const Graph& g : {cycle_graph(4), cycle_graph(6), cycle_graph(8), complete_graph(4)}) {
    auto hc = iota_cycle(g.order());
    std::string tag = (g.max_degree() == 2 ? "C" : "K") + std::to_string(g.order());
    for (std::size_t n : {2u, 3u}) {
      Graph host = cartesian_power(g, n);
      HostView hv = HostView::of(host);
      WalkSpec c = cp_ham_cycle(g, hc, n);
      annotate_cartesian(c, g, n);
      need(verify_ham_cycle(hv, c) && check_alternation(c), "cp " + tag);
      auto [a, b] = cp_ham_cycle_pair(g, hc, n);
      annotate_cartesian(a, g, n);
      annotate_cartesian(b, g, n);
      need(verify_ham_cycle(hv, a) && verify_ham_cycle(hv, b) && check_alternation(a) &&
               check_alternation(b) && verify_edge_disjoint(a, b),
           "pair " + tag);
      if (n == 2 && (tag == "C4" || tag == "C8"))
        need(a.length() + b.length() == host.size(), "partition " + tag);
    }
  }
  struct Lift { Graph g, h; std::string tag; };
  for (auto& l : std::vector<Lift>{{cycle_graph(4), complete_graph(3), "C4^K3"},
                                   {cycle_graph(4), mobius_cube(3), "C4^MQ3"},
                                   {complete_graph(4), mobius_cube(3), "K4^MQ3"}}) {
    ExpoSpace sp(l.g, l.h);
    WalkSpec cp = cp_ham_cycle(l.g, iota_cycle(l.g.order()), l.h.order());
    need(verify_ham_cycle(HostView::of(sp), lift_ham_cycle(sp, cp)), "lift " + l.tag);
  }
  std::size_t exhaustive = 0;
  struct Kn { Graph g; std::size_t n; std::string tag; };
  for (auto& c : std::vector<Kn>{{cycle_graph(4), 4, "C4^K4"},
                                 {cycle_graph(4), 6, "C4^K6"},
                                 {cycle_graph(6), 5, "C6^K5"}}) {
    ExpoSpace sp(c.g, complete_graph(c.n));
    HostView hv = HostView::of(sp);
    auto hc = iota_cycle(c.g.order());
    auto [a, b] = edhc_gkn(c.g, hc, c.n);
    need(verify_ham_cycle(hv, a) && verify_ham_cycle(hv, b) && verify_edge_disjoint(a, b),
         "edhc " + c.tag);
    CistCheckOptions opts;
    // beyond the required 200: C4^K4 (1024 vertices) is still cheap to check fully
    opts.exhaustive_limit = 1'100;
    opts.sample_pairs = 2'000;
    CistReport r = check_cist(hv, cist_gkn(c.g, hc, c.n), opts);
    exhaustive += r.paths_exhaustive;
    need(r.valid() && r.degree_condition && (r.paths_exhaustive || sp.order() > 200),
         "cist " + c.tag);
  }
  double s = seconds_since(t0);
  std::ostringstream d;
  d << (failed.empty() ? "all constructions verified" : "failed: ");
  for (const auto& x : failed) d << x << ' ';
  d << "; CIST path-disjointness exhaustive on " << exhaustive
    << " host(s), sampled on the rest; " << s << " s";
  report(6, failed.empty() && s < kAc6Seconds, d.str());
}

void ac7() {
  const char* want[] = {"6", "42", "1806", "3263442", "10650056950806"};
  bool ok = true;
  for (std::size_t k = 1; k <= 5; ++k) ok = ok && dcell_order(k, 2).str() == want[k - 1];
  std::size_t bounds = 0, bad = 0;
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t k = 0; k <= 6; ++k) {
      // (n + 1/2)^K - 1/2 <= t <= (n + 1)^K - 1 with K = 2^k, scaled by 2^K
      unsigned K = 1u << k;
      BigInt t = dcell_order(k, n);
      BigInt two_k = BigInt(1) << K;
      BigInt lower = boost::multiprecision::pow(BigInt(2 * n + 1), K) - two_k / 2;
      BigInt upper = boost::multiprecision::pow(BigInt(n + 1), K) - 1;
      ++bounds;
      if (lower > two_k * t || t > upper) ++bad;
    }
  std::ostringstream d;
  d << "t_{k,2} k=1..5 " << (ok ? "match" : "differ") << "; bounds on " << bounds
    << " (n,k) pairs, " << bad << " violated";
  report(7, ok && bad == 0, d.str());
}

void ac8() {
  struct Host { Graph g, h; std::string tag; };
  std::vector<Host> hosts{{cycle_graph(8), complete_graph(2), "C8^K2"},
                          {complete_graph(3), path_graph(3), "K3^P3"},
                          {complete_graph(4), de_bruijn(2, 2), "K4^B(2,2)"}};
  std::mt19937_64 rng(2024);
  std::size_t bad = 0;
  std::ostringstream d;
  for (auto& hst : hosts) {
    auto [host, space] = exponential(hst.g, hst.h);
    Router router(space);
    double worst = 1, sum = 0;
    std::size_t counted = 0;
    for (int t = 0; t < 100; ++t) {
      Id x = rng() % space.order(), y = rng() % space.order();
      auto dist = static_cast<std::size_t>(bfs_distances(host, static_cast<Vertex>(x))[y]);
      RoutePlan e = router.route(x, y, RouteMode::kExact);
      RoutePlan h = router.route(x, y, RouteMode::kHamCycle);
      if (e.length != dist || !is_valid_walk(space, e.path, true)) ++bad;
      if (!is_valid_walk(space, h.path) || h.length < dist) ++bad;
      if (dist > 0) {
        double st = static_cast<double>(h.length) / dist;
        worst = std::max(worst, st);
        sum += st;
        ++counted;
      }
    }
    d << hst.tag << " mean stretch " << (counted ? sum / counted : 1.0) << " max " << worst
      << "; ";
  }
  d << bad << " bad routes";
  report(8, bad == 0, d.str());
}

void ac9() {
  std::ostringstream out, err;
  int code = run_cli({"expg", "tables", "8", "--max-vertices", "100000", "--json"}, out, err);
  bool ok = code == kExitOk;
  std::size_t verified = 0;
  if (ok) {
    auto j = nlohmann::json::parse(out.str());
    j = j.at("tables").at(0);
    const auto& cols = j["columns"];
    auto col = [&](const std::string& c) {
      for (std::size_t i = 0; i < cols.size(); ++i)
        if (cols[i] == c) return i;
      throw std::runtime_error("missing column " + c);
    };
    auto status = [&](std::size_t row, const std::string& c) {
      return j["rows"][row][col(c)]["status"].get<std::string>();
    };
    for (std::size_t r = 0; r < 5; ++r) {
      // rows hold Omega_{k+1} and Psi_{k+1}
      std::string want_o = r < 3 ? "verified" : "formula";
      std::string want_p = r < 2 ? "verified" : "formula";
      for (const char* c : {"O:order", "O:diam"}) ok = ok && status(r, c) == want_o;
      for (const char* c : {"P:order", "P:diam"}) ok = ok && status(r, c) == want_p;
      for (const char* c : {"D:order", "D:diam"}) ok = ok && status(r, c) == "formula";
    }
    ok = ok && j["rows"][2][col("P:order")]["value"] == "2^2059";
    ok = ok && j["summary"]["mismatch"] == 0;
    verified = j["summary"]["verified"].get<std::size_t>();
  }
  std::ostringstream d;
  d << "exit " << code << ", " << verified
    << " verified cells; Omega through Omega_4 and Psi through Psi_3 measured, larger entries symbolic";
  report(9, ok, d.str());
}

}  // namespace

int main() {
  auto f = family();
  guarded(1, [&] { ac1(f); });
  guarded(2, [&] { ac2(f); });
  guarded(3, [&] { ac3(f); });
  guarded(4, [&] { ac4(f); });
  guarded(5, [&] { ac5(f); });
  guarded(6, [] { ac6(); });
  guarded(7, [] { ac7(); });
  guarded(8, [] { ac8(); });
  guarded(9, [] { ac9(); });
  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}
