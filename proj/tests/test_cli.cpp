#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using namespace dlab::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream o, e;
  int c = run_cli(args, o, e);
  return {c, o.str(), e.str()};
}

}  // namespace

TEST_CASE("family membership") {
  Run r = run({"fam", "member", "--family", "S(2)", "--set", "2,3,4,5"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  CHECK(run({"fam", "member", "--family", "S(1)", "--set", "1,2"}).code == kFail);
}

TEST_CASE("norm evaluation") {
  Run r = run({"norm", "eval", "--space", "T(S(1),1/2)", "--vec", "[[2,\"1\"],[3,\"1\"]]"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  Run j = run({"--json", "norm", "eval", "--space", "T(S(1),1/2)", "--vec", "[[2,\"1\"],[3,\"1\"]]"});
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["result"]["norm"] == "1");
  CHECK(doc["tool"] == "dlab");
  CHECK(doc["mode"] == "exact");
  CHECK(doc.contains("fundamental_sequence"));
  CHECK(doc["config"]["seed"] == 1);
}

TEST_CASE("lemma 1 report") {
  Run r = run({"--json", "lemma1", "--space", "T(S(1),1/2)", "--n", "2", "--blocks", "e4,e5,e6,e7"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["result"]["status"] == "verified");
}

TEST_CASE("exit codes") {
  CHECK(run({"suite", "unknown"}).code == kUsage);
  CHECK(run({"norm", "eval", "--space", "T(S(1)", "--vec", "e1"}).code == kUsage);
  CHECK(run({"frobnicate"}).code == kUsage);
  CHECK(run({"scc", "--xi", "1", "--eta", "0", "--eps", "1", "--start", "1"}).code == kPrecondition);
  CHECK(run({"lemma2", "--space", "T(S(1),1/2)", "--branch", "3..23"}).code == kPrecondition);
  CHECK(run({"--universe", "21", "spreading", "--space", "C0", "--C", "10"}).code == kFail);
  CHECK(run({"norm", "eval", "--space", "T(S(1),1/2)", "--vec", "[[1,\"x\"]]"}).code == kUsage);
  CHECK(run({"distort", "--space", "L1", "--derived", "L1", "--corpus", "avg(S(1),1000)"}).code == kResource);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("ordinals") {
  CHECK(run({"ord", "fs", "w*2", "3"}).out == "w+3\n");
  CHECK(run({"ord", "pow", "w*2"}).out == "w^(w*2)\n");
}

TEST_CASE("atomic report files are byte-identical across runs") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "dlab_cli_test";
  fs::create_directories(dir);
  auto read = [](const fs::path& p) {
    std::ifstream f(p);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
  };
  std::vector<std::string> args = {"--seed", "5", "--out", (dir / "a.json").string(), "distort", "--space", "T(S(1),1/2)",
                                   "--derived", "ASSOC(T(S(1),1/2),S(1),adm)", "--corpus", "e8;avg(S(1),4,8)",
                                   "--csv", (dir / "a.csv").string()};
  REQUIRE(run(args).code == 0);
  std::string first = read(dir / "a.json");
  REQUIRE(run(args).code == 0);
  CHECK(read(dir / "a.json") == first);
  CHECK(nlohmann::json::parse(first)["result"]["empirical_lambda"] == "2");
  CHECK(read(dir / "a.csv").find("e8,1,1,1") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("schreier-core suite") {
  Run r = run({"--json", "suite", "schreier-core"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["result"]["failed"] == 0);
  CHECK(run({"--json", "suite", "schreier-core"}).out == r.out);
}

TEST_CASE("norms-exact suite") {
  Run r = run({"suite", "norms-exact"});
  CHECK(r.code == 0);
}
