#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "polemono/invariants.hpp"
#include "polemono/pipeline.hpp"

using namespace polemono;

namespace {

CurveReport run(const char* curve, Mode mode = Mode::kAuto) {
  RunConfig cfg;
  cfg.mode = mode;
  return run_curve(curve, cfg);
}

}  // namespace

TEST_CASE("euler characteristic of the complement") {
  REQUIRE(euler_complement(4, 0) == 7);    // smooth quartic
  REQUIRE(euler_complement(5, 1) == 12);   // one node
  REQUIRE(euler_complement(8, 24) == 19);  // torus-type octic
  REQUIRE(euler_complement(12, 73) == 38);
}

TEST_CASE("uninodal quintic: trivial first, explicit second characteristic data") {
  CurveReport r = run("x^5+y^5+x*y*z^3");
  const InvariantReport& inv = r.invariants;

  REQUIRE(inv.chi_u == 12);
  REQUIRE(inv.delta1.total() == 0);  // H^1(F) = 0, first eigenpolynomial is 1

  REQUIRE(inv.delta2_valid);
  for (int k = 1; k <= 4; ++k) REQUIRE(inv.delta2.mult[static_cast<size_t>(k)] == 12);
  REQUIRE(inv.delta2.mult[5] == 11);
  REQUIRE(inv.delta2.total() == 59);
  REQUIRE(inv.sp_p0_valid);
  REQUIRE(inv.sp_p0.total() == inv.delta2.total());

  // Certified roots are exactly j/5 for j in [3, 11], reduced.
  std::vector<BSRoot> expect;
  for (long j = 3; j <= 11; ++j) {
    long g = std::gcd(j, 5L);
    expect.push_back(BSRoot{j / g, 5 / g, 0, 0});
  }
  REQUIRE(inv.bs_valid);
  REQUIRE(inv.bs_roots.size() == expect.size());
  for (size_t i = 0; i < expect.size(); ++i) {
    REQUIRE(inv.bs_roots[i].num == expect[i].num);
    REQUIRE(inv.bs_roots[i].den == expect[i].den);
  }
  REQUIRE(inv.status == "certified-wh");
}

TEST_CASE("four general lines: eigenvalue-1 plane plus small pole-order roots") {
  CurveReport r = run("x*y*z*(x+y+z)");
  const InvariantReport& inv = r.invariants;

  // H^1(F) is three-dimensional and lives entirely at eigenvalue 1.
  REQUIRE(inv.delta1.total() == 3);
  REQUIRE(inv.delta1.mult[4] == 3);
  REQUIRE(inv.sp_p1.total() == 3);
  REQUIRE(inv.sp_p1.entries ==
          std::vector<SpectrumEntry>{SpectrumEntry{8, 4, 3}});

  // Largest certified root stays below 7/4 for a line arrangement of four.
  for (const BSRoot& root : inv.bs_roots) REQUIRE(4 * root.num < 7 * root.den);
  REQUIRE(inv.bs_roots.back().num == 3);
  REQUIRE(inv.bs_roots.back().den == 2);
}

TEST_CASE("first cohomology eigenspaces are conjugation symmetric") {
  for (const char* curve :
       {"(y^2*z^2-x^4)^2*y^2-x^10", "x*y*z*(x+y+z)", "x^4*y^2 + y^6 - 3*x*y^4*z + 3*x^2*y^2*z^2 - x^3*z^3"}) {
    CurveReport r = run(curve);
    const std::vector<long>& h1 = r.invariants.h1;
    const int d = r.degree;
    for (int k = 1; k < d; ++k)
      REQUIRE(h1[static_cast<size_t>(k)] == h1[static_cast<size_t>(d - k)]);
  }
}

TEST_CASE("free curve of degree ten: spectra bookkeeping") {
  CurveReport full = run("(y^2*z^2-x^4)^2*y^2-x^10", Mode::kFull);
  const InvariantReport& inv = full.invariants;

  std::vector<long> expect_h1{1, 1, 1, 1, 0, 1, 1, 1, 1, 1};
  for (int k = 1; k <= 10; ++k)
    REQUIRE(inv.h1[static_cast<size_t>(k)] == expect_h1[static_cast<size_t>(k - 1)]);

  REQUIRE(inv.sp_p1.total() == 9);
  for (size_t i = 0; i < inv.sp_p1.entries.size(); ++i) {
    REQUIRE(inv.sp_p1.entries[i].num == 16 + static_cast<int>(i));
    REQUIRE(inv.sp_p1.entries[i].den == 10);
    REQUIRE(inv.sp_p1.entries[i].mult == 1);
  }

  REQUIRE(inv.sp_p0.total() == 38);
  REQUIRE(inv.delta2.total() == 38);
  REQUIRE(inv.status == "certified-euler");
}

TEST_CASE("status reflects how much was proven") {
  REQUIRE(run("x^4+y^4+z^4").invariants.status == "certified-wh");
  REQUIRE(run("x^5+y^4*z+x^4*y", Mode::kFull).invariants.status == "certified-euler");

  CurveReport partial = run("x^5+y^4*z+x^4*y", Mode::kFirstCycleOnly);
  REQUIRE(partial.invariants.status == "h1-only");
  REQUIRE_FALSE(partial.invariants.delta2_valid);
  REQUIRE_FALSE(partial.invariants.sp_p0_valid);
  REQUIRE_FALSE(partial.invariants.bs_valid);
  REQUIRE(partial.invariants.sp_p1.entries.empty());

  SECTION("a failed certificate downgrades to conjectural") {
    // Assemble the correct tables against a deliberately wrong Milnor number:
    // every per-eigenvalue Euler identity misses by one.
    HomogPoly f = parse_homogeneous("x^5+y^4*z+x^4*y");
    Partials pf = Partials::of(f);
    RankPolicy policy;
    HilbertData hil = compute_hilbert(5, pf, policy, 1);
    CycleTables t = first_cycle(pf, hil, policy, 1);
    second_cycle(t, pf, hil, policy, 1);
    SpectralReport sp = assemble(t, hil, /*mu=*/13, true, false);
    REQUIRE_FALSE(sp.all_certified);
    InvariantReport inv = derive_invariants(t, sp, 13, hil.tau, true);
    REQUIRE(inv.status == "conjectural");
  }
}

TEST_CASE("quintic pole-order spectrum terms are stored unreduced over d") {
  CurveReport r = run("x^5+y^4*z+x^4*y", Mode::kFull);
  REQUIRE(r.invariants.sp_p0.entries ==
          std::vector<SpectrumEntry>{SpectrumEntry{3, 5, 1}, SpectrumEntry{4, 5, 1},
                                     SpectrumEntry{6, 5, 1}, SpectrumEntry{7, 5, 1}});
}

TEST_CASE("h1-only mode still reproduces the full-run first cohomology") {
  // This sextic has a two-dimensional H^1, so the conjugation fill used by
  // the shortcut must reconstruct real nonzero dimensions, not just zeros.
  const char* curve = "x^4*y^2 + y^6 - 3*x*y^4*z + 3*x^2*y^2*z^2 - x^3*z^3";
  CurveReport full = run(curve, Mode::kFull);
  CurveReport partial = run(curve, Mode::kFirstCycleOnly);
  REQUIRE(full.invariants.delta1.total() == 2);
  REQUIRE(partial.invariants.h1 == full.invariants.h1);
  REQUIRE(partial.invariants.delta1.mult == full.invariants.delta1.mult);
}
