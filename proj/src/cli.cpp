#include "expg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "expg/algorithms.hpp"
#include "expg/error.hpp"
#include "expg/expr.hpp"
#include "expg/hamiltonicity.hpp"
#include "expg/metrics.hpp"
#include "expg/report.hpp"
#include "expg/tables.hpp"

namespace expg {

namespace {

struct Shared {
  std::string out_path;
  bool json = false;
  bool canonical = false;
  std::uint64_t max_vertices = 2'000'000;
  std::uint64_t seed = 1;
};

void add_shared(CLI::App* cmd, Shared& s) {
  cmd->add_option("--out", s.out_path, "Write the result to this file");
  cmd->add_flag("--json", s.json, "Machine-readable output");
  cmd->add_flag("--canonical", s.canonical, "Omit timing for byte-stable output");
  cmd->add_option("--max-vertices", s.max_vertices, "Materialization budget");
  cmd->add_option("--seed", s.seed, "Seed for sampled checks");
}

void emit(const Shared& s, std::ostream& out, const std::string& text) {
  if (s.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(s.out_path, std::ios::binary);
  if (!f) throw PreconditionError("cannot write " + s.out_path);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Budget budget_of(const Shared& s) {
  Budget b;
  b.max_vertices = s.max_vertices;
  return b;
}

// A Hamiltonian cycle of a factor: closed forms for the standard families,
// brute force for small graphs.
std::vector<Vertex> factor_cycle(const Expr& e, const Graph& g) {
  std::vector<Vertex> hc(g.order());
  std::iota(hc.begin(), hc.end(), Vertex{0});
  switch (e.kind) {
    case Expr::Kind::kComplete:
    case Expr::Kind::kCycle:
      if (g.order() >= 2) return hc;
      break;
    case Expr::Kind::kHypercube:
      for (Vertex i = 0; i < hc.size(); ++i) hc[i] = i ^ (i >> 1);
      return hc;
    default:
      break;
  }
  if (g.order() <= 20)
    if (auto found = find_ham_cycle(g, {20})) return *found;
  throw PreconditionError("base graph " + e.text() + " has no known Hamiltonian cycle");
}

WalkSpec build_cycle(const ExprPtr& e, Evaluator& ev) {
  ExpoSpace sp = ev.space(e);
  const Graph& g = sp.base();
  auto hc = factor_cycle(*e->args[0], g);
  if (e->args[1]->kind == Expr::Kind::kComplete && sp.q() == 2)
    return ham_cycle_gk2(g, hc);
  if (g.order() % 2 != 0)
    throw PreconditionError("base order must be even unless the exponent is K2");
  WalkSpec cp = cp_ham_cycle(g, hc, sp.q());
  const Stats& hs = ev.stats(e->args[1]);
  LiftOptions lo;
  lo.trust_exponent = hs.hamiltonian_connected == true;
  if (hs.hamiltonian_connected == true || sp.q() > 16) return lift_ham_cycle(sp, cp, lo);
  // Weakened hypothesis: Hamiltonian paths from one anchor vertex suffice.
  HamPathOracle oracle(sp.exponent(), {16});
  for (Vertex a = 0; a < sp.q(); ++a)
    if (oracle.all_targets_reachable(a)) {
      lo.anchor = a;
      return lift_ham_cycle(sp, cp, lo);
    }
  throw PreconditionError("exponent " + e->args[1]->text() +
                          " has no vertex with Hamiltonian paths to all others");
}

std::size_t complete_exponent(const ExprPtr& e) {
  if (e->kind != Expr::Kind::kExp || e->args[1]->kind != Expr::Kind::kComplete)
    throw PreconditionError("expression must be EXP(G,Kn)");
  std::size_t n = e->args[1]->params[0];
  if (n < 4) throw PreconditionError("exponent order must be >= 4");
  return n;
}

ExprPtr require_exp(const std::string& spec) {
  auto e = parse_expr(spec);
  if (e->kind != Expr::Kind::kExp)
    throw PreconditionError("expression " + e->text() + " is not EXP(G,H)");
  return e;
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exponential graphs: generation, analysis, routing, certificates, tables"};
  app.require_subcommand(1, 1);

  Shared sh;
  std::string spec;

  auto* gen = app.add_subcommand("gen", "Write an edge list and a JSON sidecar");
  gen->add_option("expr", spec, "Graph expression")->required();
  add_shared(gen, sh);

  AnalyzeOptions aopts;
  std::string diam_mode = "formula";
  auto* an = app.add_subcommand("analyze", "Formula and measured properties as JSON");
  an->add_option("expr", spec, "Graph expression")->required();
  an->add_flag("--kappa", aopts.kappa, "Vertex connectivity by max-flow");
  an->add_flag("--lambda", aopts.lambda, "Edge connectivity by max-flow");
  an->add_flag("--superlambda", aopts.super_lambda, "Super edge-connectivity");
  an->add_option("--diam", diam_mode, "formula, bfs or both")
      ->check(CLI::IsMember({"formula", "bfs", "both"}));
  add_shared(an, sh);

  Id rx = 0, ry = 0;
  std::string route_mode = "exact";
  auto* rt = app.add_subcommand("route", "Route between two vertex ids of G^H");
  rt->add_option("expr", spec, "EXP(G,H) expression")->required();
  rt->add_option("x", rx, "Source id")->required();
  rt->add_option("y", ry, "Target id")->required();
  rt->add_option("--mode", route_mode, "exact or hamcycle")
      ->check(CLI::IsMember({"exact", "hamcycle"}));
  add_shared(rt, sh);

  std::string what = "cycle";
  bool verify_first = false;
  std::size_t samples = 2000;
  auto* hm = app.add_subcommand("ham", "Hamiltonian cycle, EDHC or CIST certificates");
  hm->add_option("expr", spec, "EXP(G,H) expression")->required();
  hm->add_option("--what", what, "cycle, edhc or cist")
      ->check(CLI::IsMember({"cycle", "edhc", "cist"}));
  hm->add_flag("--verify", verify_first, "Re-check the certificate before writing");
  hm->add_option("--samples", samples, "Sampled vertex pairs for large CIST checks");
  add_shared(hm, sh);

  std::string which;
  auto* tb = app.add_subcommand("tables", "Reproduce the comparison tables");
  tb->add_option("which", which, "1..8 or all")->required();
  add_shared(tb, sh);

  std::string cert_path;
  auto* vf = app.add_subcommand("verify", "Re-verify a saved certificate");
  vf->add_option("certificate", cert_path, "Certificate JSON file")->required();
  vf->add_option("--samples", samples, "Sampled vertex pairs for large CIST checks");
  add_shared(vf, sh);

  std::vector<const char*> cargv;
  for (const auto& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (tb->parsed() && tb->count("--max-vertices") == 0) sh.max_vertices = 100'000;

  try {
    Evaluator ev(budget_of(sh));
    if (gen->parsed()) {
      auto e = parse_expr(spec);
      const Graph& g = ev.materialize(e);
      std::ostringstream edges;
      write_edge_list(edges, g, e->text());
      if (sh.out_path.empty()) {
        out << edges.str();
        return kExitOk;
      }
      emit(sh, out, edges.str());
      const Stats& s = ev.stats(e);
      json side{{"schema", kSchemaVersion}, {"spec", spec}, {"expr", e->text()},
                {"order", g.order()}, {"size", g.size()},
                {"minDegree", g.min_degree()}, {"maxDegree", g.max_degree()},
                {"edgeList", sh.out_path}};
      side["formulaOrder"] = big_string(s.order);
      std::ofstream f(sh.out_path + ".json", std::ios::binary);
      f << dump(side);
      if (s.order.to_u64() != g.order() || s.min_degree != g.min_degree() ||
          s.max_degree != g.max_degree()) {
        err << "formula and generated graph disagree\n";
        return kExitMismatch;
      }
      return kExitOk;
    }
    if (an->parsed()) {
      aopts.diam = diam_mode == "bfs"    ? DiamRequest::kBfs
                   : diam_mode == "both" ? DiamRequest::kBoth
                                         : DiamRequest::kFormula;
      aopts.canonical = sh.canonical;
      Analysis a = analyze(spec, ev, aopts);
      emit(sh, out, dump(a.report));
      if (!a.mismatches.empty()) {
        for (const auto& m : a.mismatches) err << "mismatch: " << m << "\n";
        return kExitMismatch;
      }
      return kExitOk;
    }
    if (rt->parsed()) {
      auto e = require_exp(spec);
      ExpoSpace sp = ev.space(e);
      if (rx >= sp.order() || ry >= sp.order())
        throw PreconditionError("vertex ids must be below " + std::to_string(sp.order()));
      Router router(sp);
      RoutePlan plan = router.route(rx, ry, route_mode == "exact" ? RouteMode::kExact
                                                                  : RouteMode::kHamCycle);
      json j = to_json(plan);
      j["schema"] = kSchemaVersion;
      j["expr"] = e->text();
      j["valid"] = is_valid_walk(sp, plan.path);
      int code = j["valid"].get<bool>() ? kExitOk : kExitMismatch;
      if (ev.materializable(e)) {
        auto d = distance(ev.materialize(e), static_cast<Vertex>(rx), static_cast<Vertex>(ry));
        j["bfsDistance"] = *d;
        j["stretch"] = *d == 0 ? 1.0 : static_cast<double>(plan.length) / *d;
        if (plan.length < *d || (route_mode == "exact" && plan.length != *d))
          code = kExitMismatch;
      }
      emit(sh, out, dump(j));
      return code;
    }
    if (hm->parsed()) {
      auto e = require_exp(spec);
      json cert;
      if (what == "cycle") {
        cert = ham_certificate(e->text(), {build_cycle(e, ev)});
      } else {
        std::size_t n = complete_exponent(e);
        const Graph& g = ev.materialize(e->args[0]);
        auto hc = factor_cycle(*e->args[0], g);
        if (what == "edhc") {
          auto [a, b] = edhc_gkn(g, hc, n);
          cert = ham_certificate(e->text(), {a, b});
        } else {
          cert = cist_certificate(e->text(), cist_gkn(g, hc, n));
        }
      }
      if (verify_first) {
        CistCheckOptions co;
        co.sample_pairs = samples;
        co.seed = sh.seed;
        CertificateCheck c = verify_certificate(cert, ev, co);
        cert["verified"] = c.valid;
        cert["verification"] = c.detail;
        if (!c.valid) {
          err << "certificate failed verification: " << c.detail << "\n";
          return kExitMismatch;
        }
      }
      emit(sh, out, dump(cert));
      return kExitOk;
    }
    if (tb->parsed()) {
      std::vector<int> list;
      if (which == "all") {
        for (int i = 1; i <= kTableCount; ++i) list.push_back(i);
      } else {
        try {
          list.push_back(std::stoi(which));
        } catch (const std::exception&) {
          throw PreconditionError("table must be 1.." + std::to_string(kTableCount) + " or all");
        }
      }
      TableOptions to;
      to.max_vertices = sh.max_vertices;
      bool ok = true;
      json arr = json::array();
      std::string text;
      for (int i : list) {
        Table t = build_table(i, to);
        ok = ok && t.ok();
        if (sh.json) arr.push_back(to_json(t));
        else text += render(t) + (i == list.back() ? "" : "\n");
      }
      if (sh.json) {
        json j{{"schema", kSchemaVersion}, {"maxVertices", sh.max_vertices}, {"tables", arr}};
        text = dump(j);
      }
      emit(sh, out, text);
      return ok ? kExitOk : kExitMismatch;
    }
    if (vf->parsed()) {
      std::ifstream f(cert_path);
      if (!f) throw PreconditionError("cannot read " + cert_path);
      json cert;
      try {
        cert = json::parse(f);
      } catch (const json::exception& ex) {
        throw PreconditionError(std::string("not JSON: ") + ex.what());
      }
      CistCheckOptions co;
      co.sample_pairs = samples;
      co.seed = sh.seed;
      CertificateCheck c = verify_certificate(cert, ev, co);
      json j{{"schema", kSchemaVersion}, {"certificate", cert_path},
             {"valid", c.valid}, {"detail", c.detail}};
      emit(sh, out, dump(j));
      return c.valid ? kExitOk : kExitMismatch;
    }
  } catch (const BudgetExceeded& ex) {
    err << "budget: " << ex.what() << "\n";
    return kExitBudget;
  } catch (const LimitExceeded& ex) {
    err << "budget: " << ex.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace expg
