#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>

#include "polemono/hilbert.hpp"
#include "polemono/milnor_number.hpp"
#include "polemono/parser.hpp"
#include "polemono/spectral.hpp"

using namespace polemono;

namespace {

const RankPolicy kPolicy;

struct Run {
  HomogPoly f;
  HilbertData hil;
  CycleTables cycles;
};

Run run_cycles(const char* curve, bool both_cycles) {
  Run r;
  r.f = parse_homogeneous(curve);
  Partials pf = Partials::of(r.f);
  r.hil = compute_hilbert(r.f.degree(), pf, kPolicy, 1);
  r.cycles = first_cycle(pf, r.hil, kPolicy, 1);
  if (both_cycles) second_cycle(r.cycles, pf, r.hil, kPolicy, 1);
  return r;
}

std::string dump_string(const SparseMatrix& m) {
  std::ostringstream os;
  m.dump(os);
  return os.str();
}

}  // namespace

TEST_CASE("second-cycle map degenerates to the first-cycle map in low degrees") {
  for (const char* curve : {"x^4+y^4+z^4", "x^5+y^4*z+x^4*y"}) {
    HomogPoly f = parse_homogeneous(curve);
    Partials pf = Partials::of(f);
    HilbertData hil = compute_hilbert(f.degree(), pf, kPolicy, 1);
    for (int q = 3; q <= f.degree() + 1; ++q) {
      REQUIRE(phi_case(f.degree(), hil.mdr, q) == PhiCase::a);
      REQUIRE(dump_string(build_phi(pf, f.degree(), hil.mdr, q)) ==
              dump_string(build_phi_prime(pf, f.degree(), q)));
    }
  }
}

TEST_CASE("case boundaries of the second-cycle map") {
  // d = 10, mdr = 4: a through d+1, b through d+mdr+1, c through 2d, then d.
  REQUIRE(phi_case(10, 4, 3) == PhiCase::a);
  REQUIRE(phi_case(10, 4, 11) == PhiCase::a);
  REQUIRE(phi_case(10, 4, 12) == PhiCase::b);
  REQUIRE(phi_case(10, 4, 15) == PhiCase::b);
  REQUIRE(phi_case(10, 4, 16) == PhiCase::c);
  REQUIRE(phi_case(10, 4, 20) == PhiCase::c);
  REQUIRE(phi_case(10, 4, 21) == PhiCase::d);
  REQUIRE(phi_case(10, 4, 40) == PhiCase::d);
}

TEST_CASE("smooth quartic: both cycles vanish and the certificate closes") {
  Run r = run_cycles("x^4+y^4+z^4", /*both_cycles=*/true);
  for (int q = 3; q <= 16; ++q) {
    REQUIRE(r.cycles.eps_prime_at(q) == 0);
    REQUIRE(r.cycles.eps_at(q) == 0);
  }
  SpectralReport sr = assemble(r.cycles, r.hil, /*mu=*/0, true, false);
  REQUIRE(sr.all_certified);
  REQUIRE(sr.killed_by_p_filtration.empty());
  REQUIRE(sr.q0_observed == 1);

  // Milnor fiber of a smooth curve: total second-page dimension (d-1)^3.
  long total = 0;
  for (int tt = 0; tt <= 3; ++tt)
    for (int k = 1; k <= 4; ++k)
      total += sr.e2_row1[static_cast<size_t>(tt)][static_cast<size_t>(k)] +
               sr.e2_row2[static_cast<size_t>(tt)][static_cast<size_t>(k)];
  REQUIRE(total == 27);
}

TEST_CASE("quintic with one unibranch singular point, full run") {
  Run r = run_cycles("x^5+y^4*z+x^4*y", /*both_cycles=*/true);
  const int d = 5;
  REQUIRE(r.cycles.second_cycle_ran);

  SECTION("second-cycle dims never exceed first-cycle dims") {
    for (int q = 3; q <= 4 * d; ++q) REQUIRE(r.cycles.eps_at(q) <= r.cycles.eps_prime_at(q));
  }

  SECTION("the two cycles agree where the maps coincide") {
    for (int q = 3; q <= d + 1; ++q)
      REQUIRE(r.cycles.eps_at(q) == r.cycles.eps_prime_at(q));
  }

  SECTION("conjugation pairs the two filtration levels on first cohomology") {
    for (int k = 1; k <= d; ++k)
      REQUIRE(r.cycles.eps_at(d + k) == r.cycles.eps_prime_at(d - k));
  }

  SECTION("assembled report is certified with the observed threshold") {
    SpectralReport sr = assemble(r.cycles, r.hil, /*mu=*/12, true, false);
    REQUIRE(sr.all_certified);
    REQUIRE(sr.q0_observed == 9);
    REQUIRE(sr.chi_u == 4 * 3 + 1 - 12);
    // All second-cycle dims vanish here, so nothing survives past 2d.
    REQUIRE(sr.killed_by_p_filtration.empty());
  }
}

TEST_CASE("torus-type octic: row-2 dims vanish exactly from degree 18 on") {
  Run r = run_cycles("(x^2+y^2)^4+(y^4+z^4)^2", /*both_cycles=*/false);
  REQUIRE(r.cycles.theta_at(17) > 0);
  for (int q = 18; q <= 32; ++q) REQUIRE(r.cycles.theta_at(q) == 0);
  for (int q = 3; q < 18; ++q) REQUIRE(r.cycles.theta_at(q) > 0);
}

TEST_CASE("free curve of degree ten: first cohomology at filtration level zero") {
  Run r = run_cycles("(y^2*z^2-x^4)^2*y^2-x^10", /*both_cycles=*/true);
  SpectralReport sr = assemble(r.cycles, r.hil, /*mu=*/70, true, false);
  REQUIRE(sr.all_certified);
  REQUIRE(sr.q0_observed == 18);
  for (int k = 1; k <= 10; ++k) {
    long expect = k <= 4 ? 1 : 0;
    REQUIRE(sr.grp_h1[0][static_cast<size_t>(k)] == expect);
  }
}
