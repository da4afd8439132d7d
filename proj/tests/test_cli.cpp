#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "gorlab/cli.hpp"
#include "json.hpp"

using namespace gorlab;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("segre report as json") {
  Run r = run({"segre", "--n", "3", "report", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["core_facets"].size() == 6);
  CHECK(j["cone_points"].size() == 3);
  CHECK(j["gorenstein"] == true);
  CHECK(j["h"] == nlohmann::json::array({1, 4, 1}));
  CHECK(j["a_invariant"] == -3);
}

TEST_CASE("betti diagram of the revlex example") {
  Run r = run({"betti", "--ideal", "data/i23_revlex.ideal"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("j-i= 2:     9    16     9     0") != std::string::npos);
  CHECK(r.out.find("j-i= 3:     0     0     0     1") != std::string::npos);
  Run c = run({"betti", "--ideal", "data/i23_classical.ideal"});
  REQUIRE(c.code == 0);
  CHECK(c.out.find("j-i= 2:     9    16    10     2") != std::string::npos);
  CHECK(c.out.find("j-i= 3:     0     1     2     1") != std::string::npos);
}

TEST_CASE("complex checks") {
  CHECK(run({"complex", "--facets", "data/hexagon.cx", "--check", "gorenstein"}).code == 0);
  CHECK(run({"complex", "--facets", "data/hexagon.cx"}).code == 0);
  CHECK(run({"complex", "--facets", "data/missing.cx"}).code == 2);
}

TEST_CASE("output is deterministic and independent of the job count") {
  const std::vector<std::string> args = {"segre", "--n", "2,3,4", "report", "--format", "json"};
  Run a = run(args), b = run(args);
  std::vector<std::string> par = args;
  par.insert(par.begin(), {"--jobs", "2"});
  Run c = run(par);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}

TEST_CASE("exit codes") {
  CHECK(run({"segre", "--bogus"}).code == 2);
  CHECK(run({"segre", "--n", "0", "report"}).code == 2);
  CHECK(run({"nosuch"}).code == 2);
  Run capped = run({"--pair-budget", "1", "segre", "--n", "3", "report"});
  CHECK(capped.code == 3);
  CHECK(capped.err.find("resource cap") != std::string::npos);
}

TEST_CASE("environment overrides") {
  setenv("GORLAB_FORMAT", "json", 1);
  Run r = run({"veronese", "--n", "4", "report"});
  unsetenv("GORLAB_FORMAT");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["gorenstein"] == true);
  // explicit flags win over the environment
  setenv("GORLAB_FORMAT", "json", 1);
  Run t = run({"veronese", "--n", "4", "report", "--format", "text"});
  unsetenv("GORLAB_FORMAT");
  CHECK_FALSE(nlohmann::json::accept(t.out));
}

TEST_CASE("groebner command") {
  Run r = run({"groebner", "--ideal", "data/i23_revlex.ideal", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["num_generators"] == 9);
  CHECK(j["max_degree"] == 2);
}
