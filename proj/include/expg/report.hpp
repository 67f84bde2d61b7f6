#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "expg/connectivity.hpp"
#include "expg/expr.hpp"
#include "expg/hamiltonicity.hpp"
#include "expg/metrics.hpp"

namespace expg {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "expgraph/1";

// Decimal when the value expands within 64 Kbit, otherwise the compact form.
std::string big_string(const Count& c);

json to_json(const WalkSpec& w);
WalkSpec walk_from_json(const json& j);
json to_json(const RoutePlan& plan);
json to_json(const CutWitness& w);
json to_json(const CistPair& pair);
CistPair cist_from_json(const json& j);

// Certificate files carry the host expression so they can be re-verified.
json ham_certificate(const std::string& host, const std::vector<WalkSpec>& cycles);
json cist_certificate(const std::string& host, const CistPair& pair);

struct CertificateCheck {
  bool valid = false;
  std::string detail;
};
CertificateCheck verify_certificate(const json& cert, Evaluator& ev,
                                    const CistCheckOptions& cist_opts = {});

enum class DiamRequest { kFormula, kBfs, kBoth };

struct AnalyzeOptions {
  DiamRequest diam = DiamRequest::kFormula;
  bool kappa = false;
  bool lambda = false;
  bool super_lambda = false;
  bool canonical = false;
  ConnectivityOptions connectivity;
};

struct Analysis {
  json report;
  std::vector<std::string> mismatches;
};
Analysis analyze(const std::string& spec, Evaluator& ev, const AnalyzeOptions& opts);

}  // namespace expg
