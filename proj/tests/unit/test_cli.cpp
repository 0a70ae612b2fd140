#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "avoidlab/cli/cli.hpp"
#include "avoidlab/cli/report.hpp"
#include "doctest.h"
#include "json.hpp"

using avoidlab::cli::dispatch;
using avoidlab::cli::kExitInvalid;
using avoidlab::cli::kExitMismatch;
using avoidlab::cli::kExitOk;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Json run_json(const std::vector<std::string>& args, int expected_code = kExitOk) {
  const auto r = run(args);
  REQUIRE(r.code == expected_code);
  return Json::parse(r.out);
}

// Every numeric leaf of a result must sit inside a {value, provenance} claim
// unless it is bookkeeping (indices, seeds, counts).
void collect_provenance(const Json& j, std::set<std::string>& seen) {
  if (j.is_object()) {
    if (j.contains("provenance")) seen.insert(j["provenance"].get<std::string>());
    for (const auto& [k, v] : j.items()) collect_provenance(v, seen);
  } else if (j.is_array()) {
    for (const auto& v : j) collect_provenance(v, seen);
  }
}

}  // namespace

TEST_CASE("invariants example") {
  const auto j = run_json({"invariants", "--n", "3", "--s", "3"});
  CHECK(j["tool"] == "avoidlab");
  CHECK(j["subcommand"] == "invariants");
  CHECK(j["status"] == "ok");
  CHECK(j["config"]["n"] == 3);
  CHECK(j["config"]["prime"] == 1000003);
  const auto& r = j["result"];
  CHECK(r["d_ns"]["value"] == 5);
  CHECK(r["d_ns"]["provenance"] == "formula");
  CHECK(r["g0"]["value"] == 1);
  CHECK(r["alpha_conj"]["value"] == 5);
  CHECK(r["alpha_conj"]["provenance"] == "conjecture");
  CHECK(r["claim"]["value"] == true);
  CHECK(r["phi"]["value"] == 2);
}

TEST_CASE("report header order") {
  const auto j = run_json({"invariants", "--n", "4", "--s", "5"});
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"tool", "version", "subcommand", "config", "status", "result"});
  CHECK(j["version"] == AVOIDLAB_VERSION);
}

TEST_CASE("classify example") {
  const auto j = run_json({"classify", "--d", "21", "--s", "5"});
  const auto& r = j["result"];
  CHECK(r["range"] == "C");
  CHECK(r["linkage"]["ci"] == false);
  CHECK(r["linkage"]["plane_degree"]["value"] == 4);
  CHECK(r["linkage"]["surfaces"]["value"] == Json::array({5, 5}));
}

TEST_CASE("curve verify example") {
  const std::vector<std::string> args{"curve", "verify", "--n", "3", "--s", "3", "--trials", "10",
                                      "--prime", "1000003", "--seed", "7"};
  const auto j = run_json(args);
  CHECK(j["subcommand"] == "curve verify");
  CHECK(j["result"]["passed"] == true);
  CHECK(j["result"]["upper"].size() == 10);
  CHECK(j["result"]["g0"]["value"] == 1);
  CHECK(j["result"]["general_curve_coverage"] == "formula-only");
  const auto zero = run_json({"curve", "verify", "--n", "4", "--s", "3", "--trials", "2"});
  CHECK(zero["result"]["g0"]["value"] == 0);
  CHECK(zero["result"]["general_curve_coverage"] == "measured");
  std::set<std::string> prov;
  collect_provenance(j["result"], prov);
  CHECK(prov == std::set<std::string>{"formula", "measured"});
}

TEST_CASE("identical arguments give byte-identical reports") {
  const std::vector<std::vector<std::string>> cases{
      {"curve", "verify", "--n", "4", "--s", "3", "--trials", "4", "--seed", "3", "--jobs", "1"},
      {"curve", "section", "--n", "3", "--d", "6", "--seed", "11"},
      {"veronese", "verify", "--k", "3", "--n", "6"},
      {"sweep", "--n-min", "3", "--n-max", "5", "--s-min", "3", "--s-max", "4"},
      {"chow", "plan", "--n", "7", "--m", "2", "--s", "3", "--d", "21"},
  };
  for (const auto& args : cases) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
  // The worker count must not leak into the measured data.
  auto serial = run_json({"curve", "verify", "--n", "4", "--s", "3", "--trials", "4", "--jobs", "1"});
  auto parallel = run_json({"curve", "verify", "--n", "4", "--s", "3", "--trials", "4", "--jobs", "3"});
  CHECK(serial["result"] == parallel["result"]);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitInvalid);
  const auto unknown = run({"frobnicate"});
  CHECK(unknown.code == kExitInvalid);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(run({"invariants", "--n", "3"}).code == kExitInvalid);
  CHECK(run({"invariants", "--n", "3", "--s", "3", "--prime", "1000001"}).code == kExitInvalid);
  CHECK(run({"invariants", "--n", "3", "--s", "3", "--trials", "0"}).code == kExitInvalid);
  CHECK(run({"invariants", "--n", "3", "--s", "3", "--output", "xml"}).code == kExitInvalid);
  CHECK(run({"surface", "bound", "--n", "4", "--d", "5", "--s", "2", "--case", "plane"}).code == kExitInvalid);
  CHECK(run({"chow", "mult", "--m", "2", "--e", "3", "--factor", "1;2"}).code == kExitInvalid);
  CHECK(run({"--help"}).code == kExitOk);

  const auto plan = run({"chow", "plan", "--n", "3", "--m", "0", "--s", "2", "--d", "1"});
  CHECK(plan.code == kExitInvalid);
  CHECK(plan.err.find("m >= 1") != std::string::npos);
  CHECK(plan.err.find("s >= 3") != std::string::npos);

  // Over F_2 the square 28 x 28 quadric matrix of the seed-0 projection of the
  // cubic Veronese surface to P^6 is singular, which is reported as a mismatch.
  const auto bad = run({"veronese", "verify", "--k", "3", "--n", "6", "--prime", "2", "--attempts", "1"});
  CHECK(bad.code == kExitMismatch);
  CHECK(Json::parse(bad.out)["status"] == "mismatch");
}

TEST_CASE("global flags may follow the subcommand") {
  const auto a = run_json({"invariants", "--n", "3", "--s", "3", "--seed", "5"});
  const auto b = run_json({"--seed", "5", "invariants", "--n", "3", "--s", "3"});
  CHECK(a == b);
  CHECK(a["config"]["seed"] == 5);
}

TEST_CASE("csv quoting") {
  using avoidlab::cli::csv_field;
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
  CHECK(csv_field("") == "");
}

TEST_CASE("sweep csv") {
  const auto r = run({"sweep", "--n-min", "3", "--n-max", "4", "--s-min", "3", "--s-max", "3"});
  REQUIRE(r.code == kExitOk);
  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "n,s,d,quantity,value,provenance\r");
  std::string line;
  bool saw = false;
  while (std::getline(in, line)) {
    if (line.rfind("3,3,5,d_ns,5,formula", 0) == 0) saw = true;
  }
  CHECK(saw);
}

TEST_CASE("csv and table output") {
  const auto csv = run({"invariants", "--n", "3", "--s", "3", "--output", "csv"});
  REQUIRE(csv.code == kExitOk);
  CHECK(csv.out.rfind("key,value,provenance\r\n", 0) == 0);
  CHECK(csv.out.find("d_ns,5,formula\r\n") != std::string::npos);
  const auto table = run({"invariants", "--n", "3", "--s", "3", "--output", "table"});
  REQUIRE(table.code == kExitOk);
  CHECK(table.out.find("d_ns") != std::string::npos);
}

TEST_CASE("report to a file") {
  const auto path = std::filesystem::temp_directory_path() / "avoidlab_cli_test_report.json";
  std::filesystem::remove(path);
  const auto r = run({"classify", "--d", "17", "--s", "5", "--out", path.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto j = Json::parse(in);
  CHECK(j["result"]["range"] == "B");
  CHECK(j["config"]["out"] == path.string());
  std::filesystem::remove(path);
}

TEST_CASE("other subcommands") {
  CHECK(run_json({"chow", "mult", "--m", "2", "--e", "3", "--factor", "1,3", "--factor", "1,3", "--factor", "1,3"})
            ["result"]["degree"]["value"] == 3);
  CHECK(run_json({"chow", "contains", "--m", "2", "--e", "3", "--b", "5", "--t", "2"})["result"]["in_gap"] == true);
  const auto v = run_json({"veronese", "verify", "--k", "2", "--n", "5"});
  CHECK(v["result"]["measured_h0"]["value"] == 6);
  CHECK(v["result"]["measured_h1"]["value"] == 0);
  const auto vp = run_json({"veronese", "probe", "--k", "3", "--n", "6", "--s", "3"});
  CHECK(vp["result"]["measured_h0"]["value"] == 29);
  CHECK(vp["result"]["expected_h0"]["provenance"] == "conjecture");
  CHECK(run_json({"surface", "genus", "--d", "4", "--s", "2", "--w1", "-4"})["result"]["genus"]["value"] == 5);
  const auto sec = run_json({"curve", "section", "--n", "3", "--d", "5", "--seed", "1"});
  CHECK(sec["result"]["chi"]["value"] == 1);
  const auto prof = run_json({"curve", "profile", "--n", "3", "--d", "3", "--normal"});
  CHECK(prof["result"]["rows"][1]["h0_I"]["value"] == 3);
  CHECK(run_json({"curve", "probe", "--n", "3", "--s", "3", "--d", "6", "--trials", "3"})["result"]["witness_found"] ==
        true);
}
