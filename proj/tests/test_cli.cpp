#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "orbitlab/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "orbitlab");
  std::ostringstream out;
  std::ostringstream err;
  const int code = orbitlab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name, const std::string& content) {
  const fs::path dir = fs::temp_directory_path() / "orbitlab_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << content;
  return p;
}

const char* kPointJson =
    R"({"space":[2,1],"terms":[{"coef":"1/2*sqrt2","monomial":[[2,0],[1,0]]},)"
    R"({"coef":"1/2*sqrt2","monomial":[[0,2],[0,1]]}]})";

}  // namespace

TEST_CASE("verify-paper-example") {
  const Result r = run({"verify-paper-example"});
  CHECK(r.code == 0);
  CHECK(r.out.find("lambda1 = 12 = threshold") != std::string::npos);
  for (const char* stage : {"moment-map", "isotropy", "sigma-coset", "fs-norms", "frame-gram", "spherical-table",
                            "lambda1", "verdict"}) {
    CHECK(r.out.find(std::string("[ok]   ") + stage) != std::string::npos);
  }
  CHECK(run({"verify-paper-example"}).out == r.out);

  const Result c8 = run({"--c", "8", "verify-paper-example"});
  CHECK(c8.code == 0);
  CHECK(c8.out.find("unstable") != std::string::npos);
  CHECK(c8.out.find("nonstandard curvature") != std::string::npos);

  const Result bad = run({"verify-paper-example", "--test-corrupt-point"});
  CHECK(bad.code != 0);
  CHECK(bad.out.find("failed at stage moment-map") != std::string::npos);

  const Result j = run({"--format", "json", "verify-paper-example"});
  CHECK(j.code == 0);
  CHECK(json::parse(j.out).is_object());
}

TEST_CASE("lambda1 and stability") {
  const Result r = run({"--format", "json", "lambda1", "--prune"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("lambda1") == 12);
  CHECK(j.at("verdict") == "hamiltonian-stable");
  CHECK(j.at("at_bound") == true);
  CHECK(j.at("multiplicity") == 29);
  bool found = false;
  for (const auto& w : j.at("witnesses")) {
    if (w.at("ell") == 1 && w.at("n") == 1 && w.at("q") == 1) found = true;
  }
  CHECK(found);

  const Result ex = run({"--format", "json", "lambda1", "--exhaustive", "--lmax", "6", "--nmax", "6"});
  REQUIRE(ex.code == 0);
  CHECK(json::parse(ex.out).at("witnesses") == j.at("witnesses"));

  CHECK(run({"lambda1"}).out.find("12") != std::string::npos);
  CHECK(run({"lambda1", "--prune", "--exhaustive"}).code == 2);

  const json s = json::parse(run({"--format", "json", "stability", "--lambda1", "12", "--dim", "5"}).out);
  CHECK(s.at("threshold") == 12);
  CHECK(s.at("verdict") == "hamiltonian-stable");
  const json s8 = json::parse(run({"--format", "json", "--c", "8", "stability", "--lambda1", "12", "--dim", "5"}).out);
  CHECK(s8.at("threshold") == 24);
  CHECK(s8.at("verdict") == "unstable");
  CHECK(run({"stability", "--lambda1", "1/0", "--dim", "5"}).code == 2);
  CHECK(run({"stability", "--dim", "5"}).code == 2);
}

TEST_CASE("orbit subcommands") {
  const json mm = json::parse(run({"--format", "json", "moment-map", "--point", "paper-p"}).out);
  for (const auto& [name, value] : mm.at("moment_map").items()) CHECK(value == "0");

  const json cl = json::parse(run({"--format", "json", "classify", "--point", "paper-p"}).out);
  CHECK(cl.at("orbit_real_dim") == 5);
  CHECK(cl.at("lagrangian") == true);

  const Result iso = run({"isotropy", "--point", "paper-p"});
  CHECK(iso.code == 0);

  const Result norms = run({"fs-norms", "--point", "paper-p", "--element", "X2"});
  CHECK(norms.code == 0);
  CHECK(norms.out.find("1/8") != std::string::npos);

  CHECK(run({"frame", "--point", "paper-p"}).code == 0);
  CHECK(run({"frame", "--point", "real-form"}).code == 0);
  CHECK(run({"spectrum", "--lmax", "2", "--nmax", "1"}).code == 0);
  CHECK(run({"--approx", "fs-norms", "--point", "paper-p"}).code == 0);

  const fs::path mono = scratch("mono.json", R"({"space":[2,1],"terms":[{"coef":"1","monomial":[[2,0],[1,0]]}]})");
  CHECK(run({"frame", "--point", mono.string()}).code == 1);
  CHECK(run({"moment-map", "--point", "paper-p", "--element", "nope"}).code == 2);
}

TEST_CASE("point files") {
  const fs::path good = scratch("p.json", kPointJson);
  const Result from_file = run({"--format", "json", "classify", "--point", good.string()});
  const Result builtin = run({"--format", "json", "classify", "--point", "paper-p"});
  CHECK(from_file.code == 0);
  CHECK(from_file.out == builtin.out);

  const fs::path bad = scratch("bad.json", R"({"space":[2,1],"terms":[{"coef":"1 + 2x","monomial":[[2,0],[1,0]]}]})");
  const Result r = run({"moment-map", "--point", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("parse error") != std::string::npos);

  const fs::path wrong = scratch("wrong.json", R"({"space":[2,1],"terms":[{"coef":"1","monomial":[[2,1],[1,0]]}]})");
  CHECK(run({"moment-map", "--point", wrong.string()}).code == 2);
  const fs::path zero = scratch("zero.json", R"({"space":[2,1],"terms":[]})");
  CHECK(run({"classify", "--point", zero.string()}).code == 1);
  CHECK(run({"classify", "--point", "/nonexistent/x.json"}).code == 2);
}

TEST_CASE("JSON output is canonical") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--format", "json", "moment-map", "--point", "paper-p"},
        {"--format", "json", "frame", "--point", "paper-p"},
        {"--format", "json", "lambda1"},
        {"--format", "json", "castle", "SL2:S^2 (x) SL(1) | m=3"}}) {
    const Result r = run(args);
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out).dump(2) + "\n" == r.out);
  }
  // The point written back out reproduces the same report.
  const json mm = json::parse(run({"--format", "json", "moment-map", "--point", "paper-p"}).out);
  const fs::path echoed = scratch("echo.json", mm.at("point").dump());
  CHECK(run({"--format", "json", "moment-map", "--point", echoed.string()}).out ==
        run({"--format", "json", "moment-map", "--point", "paper-p"}).out);
}

TEST_CASE("castling subcommands") {
  const Result r = run({"--format", "json", "castle", "SL2:S^2 (x) SL(1) | m=3"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("partner").at("n") == 2);
  CHECK(j.at("partner").at("rep_dim") == 6);
  CHECK(j.at("round_trip_equivalent") == true);
  const Result none = run({"--format", "json", "castle", "SL2:S^2 (x) SL(3) | m=3"});
  CHECK(none.code == 0);
  CHECK(json::parse(none.out).at("partner").is_null());
  CHECK(run({"castle", "SL2:S^2 (x) SL(2) m=3"}).code == 2);

  const fs::path cat = scratch(
      "cat.jsonl",
      R"({"core":"SL2:S^2","m":3,"n":1,"dual":false,"flag":"yes","provenance":"verified:classify_orbit"})"
      "\n"
      R"({"core":"SL2:S^2","m":3,"n":2,"dual":true,"flag":"unknown","provenance":""})"
      "\n");
  const fs::path out = fs::temp_directory_path() / "orbitlab_cli_test" / "out.jsonl";
  const Result p = run({"propagate", "--catalog", cat.string(), "--out", out.string()});
  CHECK(p.code == 0);
  std::ifstream in(out);
  std::string first;
  std::string second;
  std::getline(in, first);
  std::getline(in, second);
  CHECK(json::parse(second).at("flag") == "yes");

  const fs::path broken = scratch("broken.jsonl", "{\"core\":\"SL2:S^2\",\"m\":3,\"n\":1}\n{\n");
  const Result pb = run({"propagate", "--catalog", broken.string()});
  CHECK(pb.code == 2);
  CHECK(pb.err.find("line 2") != std::string::npos);
  const fs::path conflict = scratch(
      "conflict.jsonl",
      R"({"core":"SL2:S^2","m":3,"n":1,"flag":"yes","provenance":"seed:a"})"
      "\n"
      R"({"core":"SL2:S^2","m":3,"n":2,"flag":"no","provenance":"seed:b"})"
      "\n");
  CHECK(run({"propagate", "--catalog", conflict.string()}).code == 1);
}

TEST_CASE("usage and output format") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--format", "yaml", "lambda1"}).code == 2);
  CHECK(run({"--c", "-4", "lambda1"}).code == 2);
  CHECK(run({"--c", "abc", "lambda1"}).code == 2);

  ::setenv("ORBITLAB_FORMAT", "json", 1);
  const Result env_json = run({"stability", "--lambda1", "12", "--dim", "5"});
  const Result flag_text = run({"--format", "text", "stability", "--lambda1", "12", "--dim", "5"});
  ::unsetenv("ORBITLAB_FORMAT");
  CHECK(json::parse(env_json.out).at("lambda1") == 12);
  CHECK(flag_text.out.find("verdict: hamiltonian-stable") != std::string::npos);
}
