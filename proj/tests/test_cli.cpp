#include "flatdelta/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;
namespace fs = std::filesystem;
namespace cli = flatdelta::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "flatdelta_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string write_file(const std::string& name, const std::string& content) {
  fs::path p = scratch(name);
  std::ofstream(p) << content;
  return p.string();
}

const std::string kUnit2 = R"({"dim":2,"vertices":[[0,0],[1,0],[0,1]]})";
const std::string kFull21 = R"({"dim":2,"vertices":[[0,0],[1,0],[2,3]]})";
const std::string kEven311 = R"({"dim":3,"vertices":[[0,0,0],[1,0,0],[0,1,0],[1,1,2]]})";

}  // namespace

TEST_CASE("construct") {
  auto r = run({"construct", "--d", "4", "--k", "1", "--l", "2", "--a", "2", "--format", "json"});
  CHECK(r.code == cli::kExitOk);
  json j = json::parse(r.out);
  CHECK(j["dim"] == 4);
  CHECK(j["delta"] == json::parse("[1,0,2,0,0]"));
  CHECK(j["recipe"]["kind"] == "even");

  auto bad = run({"construct", "--d", "5", "--k", "2", "--l", "1", "--a", "1"});
  CHECK(bad.code == cli::kExitNotRealizable);
  CHECK(bad.err.find("not realizable: k > l") != std::string::npos);

  auto seg = run({"construct", "--d", "1", "--k", "0", "--l", "0", "--a", "1", "--format", "json"});
  CHECK(seg.code == cli::kExitOk);
  CHECK(json::parse(seg.out)["vertices"] == json::parse("[[0],[2]]"));
  CHECK(json::parse(seg.out)["delta"] == json::parse("[1,1]"));

  auto table = run({"construct", "--d", "3", "--k", "1", "--l", "1", "--a", "1"});
  CHECK(table.code == cli::kExitOk);
  CHECK(table.out.find("delta: 1 0 1 0") != std::string::npos);

  CHECK(run({"construct", "--d", "3", "--k", "x", "--l", "1", "--a", "1"}).code == cli::kExitUsage);
  CHECK(run({"construct", "--d", "3", "--k", "2", "--l", "1", "--a", "1"}).code == cli::kExitUsage);
  CHECK(run({"construct", "--d", "3", "--k", "0", "--l", "0", "--a", "0"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
}

TEST_CASE("construct output round-trips through delta and count") {
  const std::string path = scratch("constructed.json").string();
  auto r = run({"construct", "--d", "4", "--k", "1", "--l", "2", "--a", "2", "--out", path});
  REQUIRE(r.code == cli::kExitOk);
  auto d = run({"delta", path, "--method", "both", "--format", "json"});
  CHECK(d.code == cli::kExitOk);
  json j = json::parse(d.out);
  CHECK(j["counts"] == json::parse("[1,0,2,0,0]"));
  CHECK(j["box"] == json::parse("[1,0,2,0,0]"));
  CHECK(j["agree"] == true);
  auto c = run({"count", path, "--n", "1"});
  CHECK(c.code == cli::kExitOk);
  CHECK(c.out == "5\n");
}

TEST_CASE("delta") {
  auto u = run({"delta", write_file("unit2.json", kUnit2), "--method", "both"});
  CHECK(u.code == cli::kExitOk);
  CHECK(u.out == "counts: 1 0 0\nbox: 1 0 0\n");

  auto f = run({"delta", write_file("full21.json", kFull21), "--method", "box", "--format", "json"});
  CHECK(f.code == cli::kExitOk);
  CHECK(json::parse(f.out) == json::parse(R"({"d":2,"delta":[1,1,1]})"));

  auto e = run({"delta", write_file("even311.json", kEven311), "--method", "counts"});
  CHECK(e.code == cli::kExitOk);
  CHECK(e.out == "counts: 1 0 1 0\n");

  CHECK(run({"delta", write_file("bad.json", "{not json")}).code == cli::kExitUsage);
  CHECK(run({"delta", write_file("degenerate.json", R"({"dim":2,"vertices":[[0,0],[1,0],[2,0]]})")}).code ==
        cli::kExitUsage);
  CHECK(run({"delta", scratch("missing.json").string()}).code == cli::kExitUsage);
  CHECK(run({"delta", write_file("full21b.json", kFull21), "--method", "magic"}).code == cli::kExitUsage);
  CHECK(run({"delta", write_file("full21c.json", kFull21), "--budget", "2"}).code == cli::kExitBudget);
}

TEST_CASE("count") {
  CHECK(run({"count", write_file("u.json", kUnit2), "--n", "2"}).out == "6\n");
  CHECK(run({"count", write_file("f.json", kFull21), "--n", "1", "--interior"}).out == "1\n");
  CHECK(run({"count", write_file("e.json", kEven311), "--n", "2", "--interior"}).out == "1\n");
  auto j = run({"count", write_file("u2.json", kUnit2), "--n", "3", "--interior", "--format", "json"});
  CHECK(json::parse(j.out) == json::parse(R"({"n":3,"interior":true,"count":1})"));
  CHECK(run({"count", write_file("u3.json", kUnit2), "--n", "0", "--interior"}).code == cli::kExitUsage);
  CHECK(run({"count", write_file("f2.json", kFull21), "--n", "50", "--budget", "10"}).code == cli::kExitBudget);
}

TEST_CASE("check") {
  auto ok = run({"check", "[1,0,1,0]"});
  CHECK(ok.code == cli::kExitOk);
  CHECK(ok.out.find("flat (d=3 k=1 l=1 a=1)") != std::string::npos);

  auto bad = run({"check", R"({"d":4,"delta":[1,0,0,1,0]})"});
  CHECK(bad.code == cli::kExitNotRealizable);
  CHECK(bad.out.find("hibi: fails at i=1") != std::string::npos);
  CHECK(bad.out.find("not realizable") != std::string::npos);

  auto nf = run({"check", write_file("d.json", R"({"d":2,"delta":[1,2,1]})"), "--format", "json"});
  CHECK(nf.code == cli::kExitOk);
  json j = json::parse(nf.out);
  CHECK(j["flat"].is_null());
  CHECK(j["stanley"]["holds"] == true);

  auto neg = run({"check", "[1,-1,2]"});
  CHECK(neg.code == cli::kExitNotRealizable);
  CHECK(neg.out.find("nonnegative: fails") != std::string::npos);

  CHECK(run({"check", "[1,0.5]"}).code == cli::kExitUsage);
}

TEST_CASE("verify") {
  auto t2 = run({"verify", "--theorem", "2", "--d", "3", "--k", "1", "--l", "1", "--a", "1", "--format", "json"});
  CHECK(t2.code == cli::kExitOk);
  json j = json::parse(t2.out);
  CHECK(j["theorem"] == "theorem2");
  CHECK(j["first_divergence"][0]["value_P"] == 14);
  CHECK(j["first_divergence"][0]["value_Q"] == 15);
  CHECK(j["first_divergence"][1]["value_P"] == 0);
  CHECK(j["first_divergence"][1]["value_Q"] == 1);

  auto table = run({"verify", "--theorem", "2", "--d", "3", "--k", "1", "--l", "1", "--a", "1"});
  CHECK(table.code == cli::kExitOk);
  CHECK(table.out.find("PASSED") != std::string::npos);

  auto t1 = run({"verify", "--theorem", "1", "--d", "4", "--k", "1", "--l", "2", "--a", "2"});
  CHECK(t1.code == cli::kExitOk);
  CHECK(t1.out.find("counted delta: 1 0 2 0 0") != std::string::npos);

  auto t1bad = run({"verify", "--theorem", "1", "--d", "4", "--k", "2", "--l", "1", "--a", "1"});
  CHECK(t1bad.code == cli::kExitNotRealizable);
  CHECK(t1bad.out.find("hibi inequality fails at i=1") != std::string::npos);

  auto t3 = run({"verify", "--theorem", "3", "--d", "3", "--k", "1", "--l", "1", "--count", "3", "--format", "json"});
  CHECK(t3.code == cli::kExitOk);
  CHECK(json::parse(t3.out)["pairs"].size() == 3);
  CHECK(json::parse(t3.out)["params"]["a"] == json::parse("[1,2,3]"));

  CHECK(run({"verify", "--theorem", "4", "--d", "3", "--k", "1", "--l", "1"}).code == cli::kExitUsage);
  CHECK(run({"verify", "--theorem", "3", "--d", "3", "--k", "2", "--l", "1"}).code == cli::kExitUsage);
  CHECK(run({"verify", "--theorem", "2", "--d", "3", "--k", "2", "--l", "1"}).code == cli::kExitUsage);
}

TEST_CASE("commands are deterministic") {
  std::vector<std::string> args{"verify", "--theorem", "3", "--d", "4", "--k", "1", "--l", "2", "--count", "3"};
  CHECK(run(args).out == run(args).out);
  std::vector<std::string> d{"delta", write_file("det.json", kEven311), "--format", "json"};
  CHECK(run(d).out == run(d).out);
}
