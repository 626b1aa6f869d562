#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "polemono/pipeline.hpp"
#include "polemono/report.hpp"

using namespace polemono;

namespace {

CurveReport run(const char* curve, Mode mode = Mode::kAuto) {
  RunConfig cfg;
  cfg.mode = mode;
  return run_curve(curve, cfg);
}

}  // namespace

TEST_CASE("reports serialize byte-identically across runs with one seed") {
  RunConfig cfg;
  std::string a = to_json(run_curve("x^5+y^4*z+x^3*y^2", cfg)).dump(2);
  std::string b = to_json(run_curve("x^5+y^4*z+x^3*y^2", cfg)).dump(2);
  REQUIRE(a == b);

  cfg.rank.seed = 99;  // different primes, same mathematics, same bytes
  std::string c = to_json(run_curve("x^5+y^4*z+x^3*y^2", cfg)).dump(2);
  Json ja = Json::parse(a), jc = Json::parse(c);
  REQUIRE(ja["invariants"] == jc["invariants"]);
  REQUIRE(ja["config"]["seed"] != jc["config"]["seed"]);
}

TEST_CASE("report json carries every schema section") {
  Json j = to_json(run("x*y*z"));
  REQUIRE(j["schema"] == "polemono/1");
  for (const char* key :
       {"curve", "config", "hilbert", "milnor", "cycles", "spectral", "invariants"})
    REQUIRE(j.contains(key));
  for (const char* key : {"input", "canonical", "degree"}) REQUIRE(j["curve"].contains(key));
  for (const char* key : {"m", "m_smooth", "kw", "h2", "syz", "tau", "ct", "st", "mdr"})
    REQUIRE(j["hilbert"].contains(key));
  for (const char* key : {"mu", "transform", "stabilization_degree"})
    REQUIRE(j["milnor"].contains(key));
  for (const char* key : {"chi_U", "h1_eigenspaces", "delta1", "delta2", "sp_P0", "sp_P1",
                          "bs_roots_certified", "status"})
    REQUIRE(j["invariants"].contains(key));
  REQUIRE(j["curve"]["input"] == "x*y*z");
  REQUIRE(j["curve"]["canonical"] == "x*y*z");
  REQUIRE(j["curve"]["degree"] == 3);
}

TEST_CASE("shortcut runs leave the second-cycle kernel column null") {
  Json wh = to_json(run("x^5+y^5+x*y*z^3"));  // mu == tau, shortcut fires
  REQUIRE(wh["config"]["mode"] == "first-cycle-only");
  REQUIRE(wh["config"]["mode_requested"] == "auto");
  REQUIRE(wh["cycles"]["k"].is_null());
  REQUIRE(wh["spectral"]["wh_shortcut_used"] == true);
  REQUIRE_FALSE(wh["spectral"]["grP_H2"].is_null());

  Json full = to_json(run("x^5+y^5+x*y*z^3", Mode::kFull));
  REQUIRE(full["cycles"]["k"].is_array());
  REQUIRE(full["config"]["mode"] == "full");
}

TEST_CASE("h1-only runs null out everything second-cohomology") {
  Json j = to_json(run("x^5+y^4*z+x^4*y", Mode::kFirstCycleOnly));
  REQUIRE(j["config"]["mode"] == "first-cycle-only");
  REQUIRE(j["spectral"]["grP_H2"].is_null());
  REQUIRE(j["spectral"]["certificate_per_k"].is_null());
  REQUIRE(j["spectral"]["E3"]["row2"].is_null());
  REQUIRE(j["spectral"]["q0_observed"].is_null());
  REQUIRE(j["invariants"]["delta2"].is_null());
  REQUIRE(j["invariants"]["sp_P0"].is_null());
  REQUIRE(j["invariants"]["bs_roots_certified"].is_null());
  REQUIRE(j["invariants"]["status"] == "h1-only");
}

TEST_CASE("the four quintic pairs give the expected stability thresholds") {
  struct Case {
    const char* curve;
    long mu;
    int q0;
  };
  std::vector<Case> cases = {
      {"x^5+y^4*z+x^4*y", 12, 9},
      {"x^5+y^4*z+x^3*y^2", 12, 8},
      {"x^5+x*y^3*z+y^4*z+x*y^4", 11, 10},
      {"x^5+x*y^3*z+y^4*z", 11, 9},
  };
  for (const auto& c : cases) {
    CurveReport r = run(c.curve);
    INFO(c.curve);
    REQUIRE(r.milnor.mu == c.mu);
    REQUIRE(r.spectral.q0_observed == c.q0);
    REQUIRE(r.invariants.delta1.total() == 0);
    REQUIRE(r.invariants.status == "certified-euler");
  }
}

TEST_CASE("degenerate inputs raise the matching typed errors") {
  RunConfig cfg;
  REQUIRE_THROWS_AS(run_curve("x^2+y*z", cfg), InvalidDegreeError);
  REQUIRE_THROWS_AS(run_curve("x*y", cfg), InvalidDegreeError);
  REQUIRE_THROWS_AS(run_curve("x-x", cfg), ZeroPolynomialError);
  REQUIRE_THROWS_AS(run_curve("x^2+y^3", cfg), NotHomogeneousError);
  REQUIRE_THROWS_AS(run_curve("x^2*y*z", cfg), NonReducedError);
  REQUIRE_THROWS_AS(run_curve("x^3+y^3", cfg), CentralPencilError);
}

TEST_CASE("batch mode writes one json line per curve and skips comments") {
  std::istringstream in(
      "x*y*z\n"
      "\n"
      "# a comment line\n"
      "x^2+y^3\n"
      "x^4+y^4+z^4\n");
  std::ostringstream out;
  RunConfig cfg;
  int failures = run_batch(in, out, cfg);
  REQUIRE(failures == 1);

  std::istringstream lines(out.str());
  std::string line;
  std::vector<Json> rows;
  while (std::getline(lines, line)) rows.push_back(Json::parse(line));
  REQUIRE(rows.size() == 3);

  REQUIRE(rows[0]["curve"]["degree"] == 3);
  REQUIRE(rows[1]["input"] == "x^2+y^3");
  REQUIRE(rows[1]["error"]["type"] == "NotHomogeneous");
  REQUIRE(rows[1]["error"]["code"] == 3);
  REQUIRE(rows[1]["error"].contains("message"));
  REQUIRE(rows[2]["curve"]["degree"] == 4);
  REQUIRE(rows[2]["invariants"]["status"] == "certified-wh");
}

TEST_CASE("requested and effective modes are reported separately") {
  CurveReport auto_full = run("x^5+y^4*z+x^4*y");  // mu != tau: auto goes full
  REQUIRE(auto_full.mode_requested == Mode::kAuto);
  REQUIRE(auto_full.mode_effective == Mode::kFull);
  REQUIRE(auto_full.cycles.second_cycle_ran);

  CurveReport auto_short = run("x^4+y^4+z^4");  // mu == tau: shortcut
  REQUIRE(auto_short.mode_requested == Mode::kAuto);
  REQUIRE(auto_short.mode_effective == Mode::kFirstCycleOnly);
  REQUIRE_FALSE(auto_short.cycles.second_cycle_ran);
  REQUIRE(auto_short.spectral.wh_shortcut_used);
}
