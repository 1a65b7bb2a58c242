#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "breakgeo/cli.hpp"

using namespace breakgeo;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("dist") {
    const auto r = run({"dist", "1 2 3 4", "2 1 4 3"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
  }

  TEST_CASE("exact moments") {
    const auto r = run({"moments", "--n", "4", "--m", "1", "--k", "1", "--exact"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["expect"]["alpha"] == "1/2");
    CHECK(j["expect"]["beta"] == "2/1");
    CHECK(j["expect"]["gamma"] == "1/2");
    CHECK(j["expect"]["delta"] == "0/1");
    const auto e = nlohmann::json::parse(run({"moments", "--n", "4", "--m", "1", "--k", "1", "--exhaustive"}).out);
    CHECK(e["expect"] == j["expect"]);
    CHECK(e["var"] == j["var"]);
  }

  TEST_CASE("errors and exit codes") {
    const auto bad = run({"classify", "--perm", "1 2 2", "--segments", "[1,2]"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("DuplicateValue") != std::string::npos);
    CHECK(bad.err.find("2") != std::string::npos);

    const auto unknown = run({"dist", "--bogus", "1 2", "2 1"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("--bogus") != std::string::npos);

    CHECK(run({}).code == 2);
    const auto big = run({"geodesics", "--perm", "1 2 3 4 5 6 7 8 9", "--perm", "2 1 3 4 5 6 7 8 9"});
    CHECK(big.code == 3);
    CHECK(big.err.find("TooLarge") != std::string::npos);
    CHECK(run({"moments", "--n", "10", "--m", "8", "--k", "3"}).code == 2);
  }

  TEST_CASE("classify text and json") {
    const auto t = run({"classify", "--perm", "6 4 1 3 8 10 2 9 7 5", "--segments", "[4,5,6,7]"});
    REQUIRE(t.code == 0);
    CHECK(t.out.find("counts: 5 2 0 2") != std::string::npos);
    const auto j = run({"classify", "--perm", "6 4 1 3 8 10 2 9 7 5", "--segments", "[4,5,6,7]", "--format", "json"});
    REQUIRE(j.code == 0);
    CHECK(nlohmann::json::parse(j.out)["counts"]["alpha"] == 5);
  }

  TEST_CASE("seeded output is stable across runs and worker counts") {
    const std::vector<std::string> base{"moments", "--n", "50", "--m", "10", "--mc", "--samples", "3000", "--seed", "5"};
    auto a = base, b = base;
    a.insert(a.end(), {"--parallelism", "1"});
    b.insert(b.end(), {"--parallelism", "6"});
    const auto ra = run(a), rb = run(b);
    REQUIRE(ra.code == 0);
    CHECK(ra.out == rb.out);
    CHECK(ra.out == run(a).out);

    const auto csv = run({"moments", "--n", "50", "--m", "10", "--mc", "--samples", "100", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out.rfind("n,m,k,alpha_e,", 0) == 0);

    const auto f1 = run({"far-geodesic", "--n", "8", "--samples", "200", "--seed", "2", "--parallelism", "1"});
    const auto f2 = run({"far-geodesic", "--n", "8", "--samples", "200", "--seed", "2", "--parallelism", "4"});
    REQUIRE(f1.code == 0);
    CHECK(f1.out == f2.out);
  }

  TEST_CASE("seed falls back to the environment") {
    const std::vector<std::string> args{"segments", "sample", "--n", "30", "--m", "9", "--k", "3"};
    ::setenv("BREAKGEO_SEED", "1234", 1);
    const auto a = run(args);
    auto explicit_args = args;
    explicit_args.insert(explicit_args.end(), {"--seed", "1234"});
    const auto b = run(explicit_args);
    ::unsetenv("BREAKGEO_SEED");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
  }

  TEST_CASE("subcommands produce parseable output") {
    const std::vector<std::vector<std::string>> calls{
        {"segments", "prob", "--n", "5", "--m", "2", "--k", "1"},
        {"segments", "points", "--n", "10", "--segments", "[2,3,9,4];[5,6]"},
        {"segments", "complement", "--perm", "1 2 3 4 5 6", "--segments", "[2,3]"},
        {"figure", "--n", "20", "--steps", "20"},
        {"geodesics", "--perm", "1 2 3 4 5", "--perm", "2 1 3 5 4"},
        {"xn", "member", "--perm", "6 4 1 3 8 10 2 9 7 5", "--segments", "[4,5,6,7]"},
        {"xn", "bound", "--n", "4", "--m", "1"},
        {"access", "--perm", "1 2 3 4", "--perm", "2 1 4 3"},
        {"median", "--perm", "1 2 3 4", "--perm", "1 2 3 4", "--perm", "2 1 4 3"},
        {"far-geodesic", "--perm", "2 1 3 5 4", "--epsilon", "0.2"},
        {"far-geodesic", "--n", "5", "--exhaustive"},
        {"limits", "--c", "0.5", "--c-prime", "0.1"},
    };
    for (const auto& c : calls) {
      const auto r = run(c);
      INFO(c[0]);
      REQUIRE(r.code == 0);
      CHECK(nlohmann::json::accept(r.out));
    }
    CHECK(run({"xn", "closed", "--n", "4", "--m", "1", "--k", "1"}).out == "20\n");
    CHECK(run({"xn", "containing", "--n", "6", "--m", "2", "--k", "2"}).out == "96\n");
    CHECK(run({"xn", "pairs", "--n", "4", "--segments", "[1,2]"}).out == "32\n");
    CHECK(run({"segments", "count", "--n", "10", "--m", "3", "--k", "1"}).out == "7\n");
    const auto m = nlohmann::json::parse(run({"median", "--perm", "1 2 3 4", "--perm", "1 2 3 4", "--perm", "2 1 4 3"}).out);
    CHECK(m["value"] == 1);
  }

  TEST_CASE("help output matches golden files") {
    const std::vector<std::string> subs{"", "dist", "classify", "segments", "moments", "figure", "geodesics",
                                        "xn", "access", "median", "far-geodesic", "limits"};
    for (const auto& s : subs) {
      std::vector<std::string> args;
      if (!s.empty()) args.push_back(s);
      args.push_back("--help");
      const auto r = run(args);
      INFO(s);
      CHECK(r.code == 0);
      const std::string name = s.empty() ? "main" : s;
      const std::string golden = read_file(std::string(BREAKGEO_GOLDEN_DIR) + "/help_" + name + ".txt");
      CHECK(r.out == golden);
    }
  }
}
