#include <catch2/catch_amalgamated.hpp>

#include "polemono/milnor_number.hpp"
#include "polemono/parser.hpp"
#include "polemono/rank.hpp"

using namespace polemono;

namespace {

const RankPolicy kPolicy;

bool is_identity(const Mat3& t) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (t[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

long mu_of(const char* curve, u64 seed = 1) {
  return total_milnor_number(parse_homogeneous(curve), kPolicy, seed).mu;
}

}  // namespace

TEST_CASE("smooth curves have total milnor number zero") {
  HomogPoly f = parse_homogeneous("x^4+y^4+z^4");
  MilnorResult r = total_milnor_number(f, kPolicy, 1);
  REQUIRE(r.mu == 0);
  // The Fermat quartic is transverse to z = 0 as given.
  REQUIRE(is_identity(r.curve.transform));
  REQUIRE(r.stabilization_degree > 0);
}

TEST_CASE("one node gives mu = 1") {
  REQUIRE(mu_of("x^5+y^5+x*y*z^3") == 1);
}

TEST_CASE("line arrangements: mu counts nodes and ordinary triple points") {
  REQUIRE(mu_of("x*y*z") == 3);          // triangle of lines, three nodes
  REQUIRE(mu_of("x*y*z*(x+y+z)") == 6);  // four general lines, six nodes
}

TEST_CASE("coordinate change is forced when the curve is tangent to z = 0") {
  // This quintic is tangent to z = 0 at (0:1:0): keeping the identity would
  // inflate the truncated colength by the intersection multiplicity excess.
  HomogPoly f = parse_homogeneous("x^5+y^4*z+x^4*y");
  AffineCurve moved = generic_line_change(f, 1);
  REQUIRE_FALSE(is_identity(moved.transform));

  MilnorResult r = total_milnor_number(f, kPolicy, 1);
  REQUIRE(r.mu == 12);
}

TEST_CASE("remaining quintics with a single unibranch singularity") {
  REQUIRE(mu_of("x^5+y^4*z+x^3*y^2") == 12);
  REQUIRE(mu_of("x^5+x*y^3*z+y^4*z+x*y^4") == 11);
  REQUIRE(mu_of("x^5+x*y^3*z+y^4*z") == 11);
}

TEST_CASE("free curve of degree ten") {
  REQUIRE(mu_of("(y^2*z^2-x^4)^2*y^2-x^10") == 70);
}

TEST_CASE("mu does not depend on the seed or the identity shortcut") {
  HomogPoly f = parse_homogeneous("x^5+y^4*z+x^4*y");
  long reference = total_milnor_number(f, kPolicy, 1).mu;
  for (u64 seed : {2ull, 17ull, 123456789ull})
    REQUIRE(total_milnor_number(f, kPolicy, seed).mu == reference);

  // Forcing a random transform even where the identity would do.
  HomogPoly smooth = parse_homogeneous("x^4+y^4+z^4");
  AffineCurve moved = generic_line_change(smooth, 5, 100, /*try_identity_first=*/false);
  REQUIRE_FALSE(is_identity(moved.transform));
}

TEST_CASE("no transverse line exists for a curve with a multiple component") {
  // The singular locus of x^2 y = 0 is a whole line; every candidate line at
  // infinity meets it, so the transversality search must give up.
  HomogPoly f = parse_homogeneous("x^2*y");
  REQUIRE_THROWS_AS(generic_line_change(f, 1, 10), RetryExhaustedError);
}
