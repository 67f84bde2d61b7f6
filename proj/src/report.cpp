#include "expg/report.hpp"

#include <chrono>

#include "expg/algorithms.hpp"
#include "expg/error.hpp"

namespace expg {

std::string big_string(const Count& c) {
  if (auto v = c.value()) return v->str();
  return c.str();
}

namespace {

std::string step_code(const Step& s) {
  switch (s.kind) {
    case StepKind::kHEdge: return "H";
    case StepKind::kGEdge: return "G" + std::to_string(s.dimension);
    default: return "plain";
  }
}

Step parse_step(const std::string& code) {
  if (code == "H") return {StepKind::kHEdge, 0};
  if (code == "plain") return {StepKind::kPlain, 0};
  if (code.size() >= 2 && code[0] == 'G') {
    try {
      return {StepKind::kGEdge, std::stoi(code.substr(1))};
    } catch (const std::exception&) {
    }
  }
  throw CertificateError("unknown step code '" + code + "'");
}

json edge_list(const std::vector<std::pair<Id, Id>>& edges) {
  json a = json::array();
  for (auto [u, v] : edges) a.push_back({u, v});
  return a;
}

std::vector<std::pair<Id, Id>> edges_from(const json& a) {
  std::vector<std::pair<Id, Id>> out;
  for (const auto& e : a) {
    if (!e.is_array() || e.size() != 2) throw CertificateError("edge must be a pair");
    out.emplace_back(e[0].get<Id>(), e[1].get<Id>());
  }
  return out;
}

bool mentions_mobius(const Expr& e) {
  if (e.kind == Expr::Kind::kMobius) return true;
  for (const auto& a : e.args)
    if (mentions_mobius(*a)) return true;
  return false;
}

json opt_count(const std::optional<Count>& c) {
  return c ? json(big_string(*c)) : json(nullptr);
}

}  // namespace

json to_json(const WalkSpec& w) {
  json steps = json::array();
  for (const auto& s : w.steps) steps.push_back(step_code(s));
  return {{"closed", w.closed},
          {"length", w.length()},
          {"vertices", w.vertices},
          {"steps", steps}};
}

WalkSpec walk_from_json(const json& j) {
  try {
    WalkSpec w;
    w.closed = j.at("closed").get<bool>();
    w.vertices = j.at("vertices").get<std::vector<std::uint64_t>>();
    if (j.contains("steps"))
      for (const auto& s : j.at("steps")) w.steps.push_back(parse_step(s.get<std::string>()));
    return w;
  } catch (const json::exception& ex) {
    throw CertificateError(std::string("malformed walk: ") + ex.what());
  }
}

json to_json(const RoutePlan& plan) {
  json segs = json::array();
  for (const auto& s : plan.segments) {
    json seg{{"kind", to_string(s.kind)}, {"vertices", s.vertices}};
    if (s.kind == StepKind::kGEdge) seg["dimension"] = s.dimension;
    segs.push_back(std::move(seg));
  }
  return {{"mode", plan.mode == RouteMode::kExact ? "exact" : "hamcycle"},
          {"length", plan.length},
          {"path", plan.path.vertices},
          {"segments", segs}};
}

json to_json(const CutWitness& w) {
  json j;
  j["kind"] = w.kind == CutWitness::Kind::kVertex ? "vertex" : "edge";
  if (w.kind == CutWitness::Kind::kVertex) j["elements"] = w.vertices;
  else j["elements"] = edge_list(w.edges);
  j["componentSizes"] = w.component_sizes;
  return j;
}

json to_json(const CistPair& pair) {
  return {{"trees", {edge_list(pair.first), edge_list(pair.second)}}};
}

CistPair cist_from_json(const json& j) {
  try {
    const auto& t = j.at("trees");
    if (t.size() != 2) throw CertificateError("expected two trees");
    return {edges_from(t[0]), edges_from(t[1])};
  } catch (const json::exception& ex) {
    throw CertificateError(std::string("malformed tree pair: ") + ex.what());
  }
}

json ham_certificate(const std::string& host, const std::vector<WalkSpec>& cycles) {
  json c = json::array();
  for (const auto& w : cycles) c.push_back(to_json(w));
  return {{"schema", kSchemaVersion},
          {"kind", "hamiltonian-cycles"},
          {"host", host},
          {"cycles", c}};
}

json cist_certificate(const std::string& host, const CistPair& pair) {
  json j = to_json(pair);
  j["schema"] = kSchemaVersion;
  j["kind"] = "cist";
  j["host"] = host;
  return j;
}

CertificateCheck verify_certificate(const json& cert, Evaluator& ev,
                                    const CistCheckOptions& cist_opts) {
  CertificateCheck out;
  try {
    auto e = parse_expr(cert.at("host").get<std::string>());
    std::optional<ExpoSpace> space;
    const Graph* graph = nullptr;
    if (e->kind == Expr::Kind::kExp) space.emplace(ev.space(e));
    else graph = &ev.materialize(e);
    HostView host = space ? HostView::of(*space) : HostView::of(*graph);
    std::string kind = cert.at("kind").get<std::string>();
    if (kind == "hamiltonian-cycles") {
      std::vector<WalkSpec> cycles;
      for (const auto& c : cert.at("cycles")) cycles.push_back(walk_from_json(c));
      if (cycles.empty()) {
        out.detail = "no cycles";
        return out;
      }
      for (std::size_t i = 0; i < cycles.size(); ++i)
        if (!verify_ham_cycle(host, cycles[i])) {
          out.detail = "cycle " + std::to_string(i) + " is not a Hamiltonian cycle";
          return out;
        }
      for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = i + 1; j < cycles.size(); ++j)
          if (!verify_edge_disjoint(cycles[i], cycles[j])) {
            out.detail = "cycles " + std::to_string(i) + " and " +
                         std::to_string(j) + " share an edge";
            return out;
          }
      out.valid = true;
      out.detail = std::to_string(cycles.size()) + " Hamiltonian cycle(s), pairwise edge-disjoint";
    } else if (kind == "cist") {
      CistReport r = check_cist(host, cist_from_json(cert), cist_opts);
      out.valid = r.valid();
      out.detail = std::string(r.valid() ? "valid" : "invalid") +
                   " tree pair; spanning " + (r.spanning_first && r.spanning_second ? "yes" : "no") +
                   ", edge-disjoint " + (r.edge_disjoint ? "yes" : "no") +
                   ", degree condition " + (r.degree_condition ? "yes" : "no") +
                   ", paths " + (r.paths_exhaustive ? "checked for all pairs" :
                                 std::to_string(r.pairs_sampled) + " pairs sampled");
    } else {
      out.detail = "unknown certificate kind '" + kind + "'";
    }
  } catch (const CertificateError& ex) {
    out.detail = ex.what();
  } catch (const json::exception& ex) {
    out.detail = std::string("malformed certificate: ") + ex.what();
  }
  return out;
}

Analysis analyze(const std::string& spec, Evaluator& ev, const AnalyzeOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  Analysis a;
  json& r = a.report;
  auto e = parse_expr(spec);
  const Stats& s = ev.stats(e);
  r["schema"] = kSchemaVersion;
  r["spec"] = spec;
  r["expr"] = e->text();
  r["order"] = big_string(s.order);
  if (!s.order.to_u64()) r["orderExpr"] = s.order.str();
  r["size"] = opt_count(s.size);
  r["minDegree"] = s.min_degree;
  r["maxDegree"] = s.max_degree;
  if (mentions_mobius(*e)) r["mobiusVariant"] = "0-type";

  json diam;
  if (opts.diam != DiamRequest::kBfs) {
    diam["formula"] = opt_count(s.diameter);
    diam["lower"] = opt_count(s.diameter_lower);
    diam["upper"] = opt_count(s.diameter_upper);
  }
  if (e->kind == Expr::Kind::kExp) {
    const Stats& h = ev.stats(e->args[1]);
    r["exponentCase"] = h.tree ? "tree"
                        : h.hamiltonian_connected == true ? "hamiltonian-connected"
                        : h.hamiltonian == true ? "hamiltonian"
                                                : "general";
  }

  bool needs_graph = opts.diam != DiamRequest::kFormula || opts.kappa ||
                     opts.lambda || opts.super_lambda;
  bool fits = ev.materializable(e);
  if (needs_graph && !fits)
    throw BudgetExceeded(e->text() + " has " + s.order.str() +
                         " vertices, above the materialization budget of " +
                         std::to_string(ev.budget().max_vertices));
  r["materialized"] = fits;
  auto mismatch = [&](const std::string& what) { a.mismatches.push_back(what); };
  if (fits) {
    const Graph& g = ev.materialize(e);
    json m{{"order", g.order()}, {"size", g.size()},
           {"minDegree", g.min_degree()}, {"maxDegree", g.max_degree()}};
    r["measured"] = m;
    if (s.order.to_u64() != g.order()) mismatch("order");
    if (s.size && s.size->to_u64() != g.size()) mismatch("size");
    if (s.min_degree != g.min_degree()) mismatch("minimum degree");
    if (s.max_degree != g.max_degree()) mismatch("maximum degree");
    if (opts.diam != DiamRequest::kFormula) {
      std::size_t d = diameter(g);
      diam["bfs"] = d;
      if (s.diameter && s.diameter->to_u64() != d) mismatch("diameter");
      if (s.diameter_upper && s.diameter_upper->to_u64().value_or(UINT64_MAX) < d) mismatch("diameter upper bound");
      if (s.diameter_lower && s.diameter_lower->to_u64().value_or(UINT64_MAX) > d) mismatch("diameter lower bound");
    }
    json conn;
    if (s.connectivity) conn["formula"] = *s.connectivity;
    if (opts.kappa) {
      std::size_t k = vertex_connectivity(g, opts.connectivity);
      conn["kappa"] = k;
      if (s.connectivity && *s.connectivity != k) mismatch("vertex connectivity");
    }
    if (opts.lambda) conn["lambda"] = edge_connectivity(g, opts.connectivity);
    if (opts.super_lambda) {
      SuperEdgeResult sr = is_super_edge_connected(g, opts.connectivity);
      json sl{{"verdict", to_string(sr.verdict)}, {"lambda", sr.lambda}};
      sl["restrictedLambda"] = sr.restricted_lambda ? json(*sr.restricted_lambda) : json(nullptr);
      if (sr.witness) sl["witness"] = to_json(*sr.witness);
      if (e->kind == Expr::Kind::kExp) {
        ExpoSpace sp = ev.space(e);
        bool pred = super_edge_predicate(sp.base(), sp.exponent());
        sl["predicate"] = pred;
        if (sr.verdict != SuperVerdict::kUndefinedSmallCase &&
            pred != (sr.verdict == SuperVerdict::kYes))
          mismatch("super edge-connectivity predicate");
        if (!pred) {
          CutWitness w = counterexample_cut(sp);
          CutCheck c = check_cut(g, w);
          json cw = to_json(w);
          cw["disconnects"] = c.disconnects;
          cw["isolatesVertex"] = c.isolates_vertex;
          sl["counterexample"] = cw;
          if (!c.disconnects || c.isolates_vertex || w.edges.size() != s.min_degree)
            mismatch("counterexample cut");
        }
      }
      conn["superLambda"] = sl;
    }
    r["connectivity"] = conn;
  } else {
    json conn;
    if (s.connectivity) conn["formula"] = *s.connectivity;
    r["connectivity"] = conn;
  }
  r["diameter"] = diam;
  json ham;
  ham["hamiltonian"] = s.hamiltonian ? json(*s.hamiltonian) : json(nullptr);
  ham["hamiltonianConnected"] =
      s.hamiltonian_connected ? json(*s.hamiltonian_connected) : json(nullptr);
  ham["certificate"] = s.hamiltonian == true
                           ? json("ham \"" + e->text() + "\" --what cycle")
                           : json(nullptr);
  r["hamiltonicity"] = ham;
  r["mismatches"] = a.mismatches;
  if (!opts.canonical)
    r["timing"] = {{"totalMs", std::chrono::duration<double, std::milli>(
                                   std::chrono::steady_clock::now() - t0)
                                   .count()}};
  return a;
}

}  // namespace expg
