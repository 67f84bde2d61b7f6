#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "expg/cli.hpp"

using namespace expg;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "expg");
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  Run r = run(std::move(args));
  REQUIRE(r.code == kExitOk);
  return json::parse(r.out);
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "expg_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("gen writes edge lists with a sidecar") {
  Run r = run({"gen", "EXP(K2,K2)"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\n8 8\n") != std::string::npos);

  fs::path out = scratch("b23.txt");
  REQUIRE(run({"gen", "B(2,3)", "--out", out.string()}).code == 0);
  std::string text = slurp(out);
  CHECK(text.find("\n8 ") != std::string::npos);
  json side = json::parse(slurp(out.string() + ".json"));
  CHECK(side["order"] == 8);

  Run omega = run({"gen", "OMEGA(4)"});
  REQUIRE(omega.code == 0);
  CHECK(omega.out.find("\n32768 65536\n") != std::string::npos);
}

TEST_CASE("outputs are byte-deterministic") {
  CHECK(run({"gen", "EXP(C5,P3)"}).out == run({"gen", "EXP(C5,P3)"}).out);
  std::vector<std::string> a{"analyze", "EXP(K3,P3)", "--kappa", "--lambda",
                             "--superlambda", "--diam", "both", "--canonical"};
  Run x = run(a), y = run(a);
  REQUIRE(x.code == 0);
  CHECK(x.out == y.out);
  CHECK(x.out.find("timing") == std::string::npos);
}

TEST_CASE("analyze examples") {
  json d = run_json({"analyze", "EXP(C8,K2)", "--diam", "both", "--canonical"});
  CHECK(d["diameter"]["formula"] == "10");
  CHECK(d["diameter"]["bfs"] == 10);
  CHECK(d["mismatches"].empty());

  json s = run_json({"analyze", "EXP(K2,K2)", "--superlambda", "--canonical"});
  CHECK(s["connectivity"]["superLambda"]["verdict"] == "no");
  CHECK(s["connectivity"]["superLambda"].contains("witness"));

  json p3 = run_json({"analyze", "PSI(3)", "--canonical"});
  CHECK(p3["order"] == "2048");
  CHECK(p3["minDegree"] == 3);
  CHECK(!p3["diameter"].contains("bfs"));

  json p4 = run_json({"analyze", "PSI(4)", "--canonical"});
  CHECK(p4["orderExpr"] == "2^2059");
  CHECK(p4["order"].get<std::string>().size() == 620);
  CHECK(p4["materialized"] == false);

  json k = run_json({"analyze", "EXP(K4,B(2,2))", "--kappa", "--canonical"});
  CHECK(k["connectivity"]["kappa"] == 5);
}

TEST_CASE("route reports stretch") {
  json e = run_json({"route", "EXP(K3,P3)", "0", "80", "--mode", "exact"});
  CHECK(e["length"] == e["bfsDistance"]);
  CHECK(e["stretch"] == 1.0);
  json h = run_json({"route", "EXP(K3,P3)", "5", "70", "--mode", "hamcycle"});
  CHECK(h["stretch"].get<double>() >= 1.0);
  CHECK(run({"route", "EXP(K3,P3)", "0", "81"}).code == kExitUsage);
  CHECK(run({"route", "K5", "0", "1"}).code == kExitUsage);
}

TEST_CASE("ham certificates round-trip through verify") {
  fs::path cyc = scratch("c8k2.json");
  REQUIRE(run({"ham", "EXP(C8,K2)", "--what", "cycle", "--verify", "--out", cyc.string()}).code == 0);
  json c = json::parse(slurp(cyc));
  CHECK(c["cycles"][0]["length"] == 128);
  CHECK(run({"verify", cyc.string()}).code == kExitOk);

  fs::path edhc = scratch("edhc.json");
  REQUIRE(run({"ham", "EXP(C4,K4)", "--what", "edhc", "--verify", "--out", edhc.string()}).code == 0);
  CHECK(json::parse(slurp(edhc))["cycles"].size() == 2);
  CHECK(run({"verify", edhc.string()}).code == kExitOk);

  fs::path cist = scratch("cist.json");
  REQUIRE(run({"ham", "EXP(C4,K4)", "--what", "cist", "--verify", "--out", cist.string()}).code == 0);
  CHECK(run({"verify", cist.string()}).code == kExitOk);

  // corrupt the cycle: repeat a vertex
  c["cycles"][0]["vertices"][3] = c["cycles"][0]["vertices"][5];
  fs::path bad = scratch("bad.json");
  std::ofstream(bad) << c.dump();
  CHECK(run({"verify", bad.string()}).code == kExitMismatch);
}

TEST_CASE("precondition failures name the clause") {
  Run r = run({"ham", "EXP(C5,K4)", "--what", "edhc"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("even") != std::string::npos);
}

TEST_CASE("tables command") {
  Run r = run({"tables", "8"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("0 mismatched") != std::string::npos);
  json j = run_json({"tables", "8", "--json", "--max-vertices", "200"});
  CHECK(j.is_object());
}

TEST_CASE("exit codes") {
  CHECK(run({"gen", "EXP(K2,"}).code == kExitUsage);
  CHECK(run({"gen", "FOO"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"gen", "EXP(C8,C8)", "--max-vertices", "1000"}).code == kExitBudget);
  CHECK(run({"analyze", "EXP(C6,C6)", "--diam", "bfs", "--max-vertices", "1000"}).code ==
        kExitBudget);
  CHECK(run({"verify", scratch("missing.json").string()}).code != kExitOk);
}
