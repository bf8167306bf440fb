#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "picard_cli/commands.hpp"

using namespace picard::cli;

namespace {

struct Run {
  int status;
  std::string out, err;
};

template <class F>
Run run(F f, const RunConfig& cfg) {
  std::ostringstream out, err;
  const int s = f(cfg, out, err);
  return {s, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("classify") {
  RunConfig cfg;
  cfg.d = 3;
  cfg.element = "U1";
  CHECK(run(cmd_classify, cfg).out == "Unipotent2Step\n");
  cfg.d = 7;
  cfg.element = "A1";
  cfg.format = "json";
  const auto j = nlohmann::json::parse(run(cmd_classify, cfg).out);
  CHECK(j["class"] == "Loxodromic");
  CHECK(j["projective_order"].is_null());
}

TEST_CASE("search") {
  RunConfig cfg;
  cfg.d = 3;
  cfg.target = "U1";
  cfg.max_depth = 3;
  const Run r = run(cmd_search, cfg);
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["word"] == "Q^2");
  CHECK(j["length"] == 2);
  CHECK(j["verified"] == true);
  cfg.target = "E1";
  cfg.max_depth = 2;
  CHECK(run(cmd_search, cfg).status == 1);
  cfg.d = 1;
  cfg.target = "U2";
  cfg.gens = "hybrid";
  cfg.max_depth = 3;
  CHECK(nlohmann::json::parse(run(cmd_search, cfg).out)["length"] == 1);
}

TEST_CASE("abelianize and catalog") {
  RunConfig cfg;
  cfg.presentation = "picard-3";
  CHECK(run(cmd_abelianize, cfg).out == "Z/6\n");
  cfg.presentation = "quotient-7";
  CHECK(run(cmd_abelianize, cfg).out == "1\n");
  cfg.presentation = "/nonexistent/file";
  CHECK_THROWS_AS(run(cmd_abelianize, cfg), std::invalid_argument);
  cfg.d = 1;
  CHECK(run(cmd_catalog, cfg).out.find("picard-1") != std::string::npos);
}

TEST_CASE("orbit export") {
  RunConfig cfg;
  cfg.d = 3;
  std::size_t previous = 0;
  for (int len = 0; len <= 3; ++len) {
    cfg.length = len;
    const Run r = run(cmd_orbit, cfg);
    CHECK(r.out.rfind("re_z,im_z,t\n", 0) == 0);
    const std::size_t rows = lines(r.out) - 1;
    CHECK(rows > previous);
    previous = rows;
    CHECK(run(cmd_orbit, cfg).out == r.out);
  }
  cfg.length = 0;
  CHECK(run(cmd_orbit, cfg).out == "re_z,im_z,t\n0,0,0\n");
  cfg.base = "infinity";
  cfg.length = 1;
  CHECK(run(cmd_orbit, cfg).err.find("at infinity") != std::string::npos);
  cfg.base = "nonsense";
  CHECK_THROWS(run(cmd_orbit, cfg));
}

TEST_CASE("verify exit status") {
  RunConfig cfg;
  cfg.d = 7;
  cfg.scope = "classification";
  const Run r = run(cmd_verify, cfg);
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["summary"]["fail"] == 0);
  cfg.d = 1;
  cfg.scope = "primed";
  cfg.strict = true;
  const Run s = run(cmd_verify, cfg);
  CHECK(s.status == 1);
  CHECK(s.err.find("primed-index") != std::string::npos);
  cfg.strict = false;
  cfg.format = "md";
  CHECK(run(cmd_verify, cfg).status == 0);
}

TEST_CASE("verify --all covers the three rings") {
  RunConfig cfg;
  cfg.all = true;
  cfg.max_cosets = 20'000;
  const Run r = run(cmd_verify, cfg);
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 3);
  for (const auto& rep : j) CHECK(rep["summary"]["fail"] == 0);
  CHECK(run(cmd_verify, cfg).out == r.out);
  cfg.strict = true;
  CHECK(run(cmd_verify, cfg).status == 1);
}

}
