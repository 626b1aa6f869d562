#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "polemono/errors.hpp"
#include "polemono/matrix_builder.hpp"
#include "polemono/modular.hpp"
#include "polemono/polynomial.hpp"
#include "polemono/rank.hpp"

namespace polemono {

// Affine model of the curve after a linear change of coordinates: g(x,y) is
// the transformed equation with z set to 1. The verified transform keeps
// every singular point off the line z = 0, so the affine model sees all of
// them.
struct AffineCurve {
  Polynomial g;
  Mat3 transform;
};

struct MilnorResult {
  long mu = 0;
  AffineCurve curve;
  int stabilization_degree = 0;
};

namespace detail {

inline Rational det3(const Mat3& t) {
  return t[0][0] * (t[1][1] * t[2][2] - t[1][2] * t[2][1]) -
         t[0][1] * (t[1][0] * t[2][2] - t[1][2] * t[2][0]) +
         t[0][2] * (t[1][0] * t[2][1] - t[1][1] * t[2][0]);
}

inline void trim_poly(std::vector<Integer>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

inline void make_primitive(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Gcd of univariate integer polynomials (coefficient vectors, low degree
// first) by primitive pseudo-remainder Euclid. Only degrees and root sets
// matter to the caller, so content is ignored.
inline std::vector<Integer> gcd_univariate(std::vector<Integer> a, std::vector<Integer> b) {
  trim_poly(a);
  trim_poly(b);
  while (!b.empty()) {
    make_primitive(b);
    Integer lead = b.back();
    std::vector<Integer> r = std::move(a);
    while (r.size() >= b.size()) {
      Integer c = r.back();
      size_t shift = r.size() - b.size();
      for (size_t i = 0; i + 1 < b.size(); ++i) r[shift + i] = r[shift + i] * lead - c * b[i];
      for (size_t i = 0; i < shift; ++i) r[i] *= lead;  // r <- lead*r - c*x^shift*b
      r.pop_back();
      trim_poly(r);
    }
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Coefficient vector (in x) of a polynomial that involves only x, with
// denominators cleared; used on border forms after folding y := 1.
inline std::vector<Integer> fold_y_coeffs(const Polynomial& p) {
  Integer lcm = 1;
  for (const auto& [m, c] : p.terms())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Integer> v;
  for (const auto& [m, c] : p.terms()) {
    size_t e = static_cast<size_t>(m.ex);
    if (v.size() <= e) v.resize(e + 1, Integer(0));
    v[e] += c.get_num() * (lcm / c.get_den());
  }
  trim_poly(v);
  return v;
}

// Restriction to the line z = 0: the binary form of the z-free terms.
inline Polynomial restrict_z0(const Polynomial& p) {
  Polynomial r;
  for (const auto& [m, c] : p.terms())
    if (m.ez == 0) r.add_term(m, c);
  return r;
}

}  // namespace detail

// Find a linear change of coordinates T such that the line z = 0 is
// transverse to f(T.): it passes through no singular point and is tangent
// nowhere. Both conditions are needed, not just the first: the truncated
// quotient below converges to the affine colength of (g_x, g_y, g^2), and a
// point at infinity shared by all three generators inflates that colength
// beyond mu. On z = 0 the Euler relation reduces x f_x + y f_y + z f_z to
// x f_x + y f_y = d f, so the shared points at infinity are exactly the
// common projective zeros of the two binary forms f_x(x,y,0) and f_y(x,y,0)
// (a zero with f_z != 0 is a tangency point, one with f_z = 0 a singular
// point on the line). A candidate transform is accepted when these two forms
// have no common zero: the point (1:0) is checked through the top
// coefficients, all other candidate zeros (x0:1) through a univariate gcd.
//
// The identity is tried first so inputs already in general position stay
// untouched; afterwards small-integer transforms are drawn deterministically
// from the seed.
inline AffineCurve generic_line_change(const HomogPoly& f, u64 seed, int max_tries = 100,
                                       bool try_identity_first = true) {
  const int d = f.degree();
  u64 state = splitmix64(seed ^ 0xa1c6d5f30b2e94d7ull);
  auto next_entry = [&state]() {
    state = splitmix64(state);
    return static_cast<long>(state % 9) - 4;
  };

  for (int attempt = 0; attempt < max_tries; ++attempt) {
    Mat3 t;
    if (attempt == 0 && try_identity_first) {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = Rational(i == j ? 1 : 0);
    } else {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = Rational(next_entry());
      if (detail::det3(t) == 0) continue;
    }

    Polynomial moved = f.poly().substitute_linear(t);
    std::array<Polynomial, 2> border;
    bool degenerate = false;
    for (int v = 0; v < 2; ++v) {
      border[static_cast<size_t>(v)] = detail::restrict_z0(moved.partial(v));
      if (border[static_cast<size_t>(v)].is_zero()) degenerate = true;
    }
    if (degenerate) continue;  // a vanishing form has every point as a zero

    bool top_hit = false;
    for (const auto& b : border)
      if (b.coeff(Monomial{d - 1, 0, 0}) != 0) top_hit = true;
    if (!top_hit) continue;  // common zero at (1:0)

    std::vector<Integer> acc;
    bool first = true;
    for (const auto& b : border) {
      Polynomial folded;
      for (const auto& [m, c] : b.terms()) folded.add_term(Monomial{m.ex, 0, 0}, c);
      std::vector<Integer> coeffs = detail::fold_y_coeffs(folded);
      acc = first ? std::move(coeffs) : detail::gcd_univariate(std::move(acc), std::move(coeffs));
      first = false;
      if (acc.size() == 1) break;  // gcd already constant
    }
    if (acc.size() != 1) continue;  // common zero (x0:1) somewhere

    AffineCurve out;
    out.g = moved.dehomogenize_z();
    out.transform = t;
    return out;
  }
  throw RetryExhaustedError("no coordinate change making z = 0 transverse to the curve found "
                            "after " +
                            std::to_string(max_tries) + " attempts");
}

// Index of x^ex y^ey within the bivariate monomials of total degree <= D,
// ordered degree-major.
inline long bi_index(int ex, int ey) {
  long t = ex + ey;
  return t * (t + 1) / 2 + ey;
}

inline long bi_dim(int D) { return D < 0 ? 0 : static_cast<long>(D + 1) * (D + 2) / 2; }

// Macaulay-style matrix whose columns are the multiples m*h with
// deg(m*h) <= D of each generator h, expressed in the bivariate monomial
// basis of degree <= D.
inline SparseMatrix milnor_truncation_matrix(const std::array<Polynomial, 3>& gens, int D) {
  long rows = bi_dim(D);
  long cols = 0;
  for (const auto& h : gens)
    if (!h.is_zero()) cols += bi_dim(D - h.total_degree());
  SparseMatrix m(rows, cols);
  long col = 0;
  for (const auto& h : gens) {
    if (h.is_zero()) continue;
    const int room = D - h.total_degree();
    for (int t = 0; t <= room; ++t)
      for (int ey = 0; ey <= t; ++ey) {
        const int ex = t - ey;
        for (const auto& [mon, c] : h.terms()) m.add(bi_index(ex + mon.ex, ey + mon.ey), col, c);
        ++col;
      }
  }
  m.finalize();
  return m;
}

// Total Milnor number of the curve: the colength of (g_x, g_y, g^2) in
// Q[x,y] for the affine model g. The g^2 generator absorbs the points of the
// gradient ideal away from the curve, so the colength equals the sum of the
// local Milnor numbers. Computed through truncated quotient dimensions
// t_D = dim R_{<=D} - rank, scanning D upward until three consecutive values
// agree (capped at 4d+2).
inline MilnorResult total_milnor_number(const HomogPoly& f, const RankPolicy& policy, u64 seed,
                                        const DumpSink* dump = nullptr) {
  const int d = f.degree();
  MilnorResult res;
  res.curve = generic_line_change(f, seed);
  const Polynomial& g = res.curve.g;
  std::array<Polynomial, 3> gens = {g.partial(0), g.partial(1), g * g};

  long prev1 = -1, prev2 = -2;
  for (int D = 2 * d; D <= 4 * d + 2; ++D) {
    SparseMatrix m = milnor_truncation_matrix(gens, D);
    maybe_dump(dump, "macaulay_D" + std::to_string(D), m);
    long t_d = bi_dim(D) - rank_certified(m, policy).rank;
    if (t_d == prev1 && t_d == prev2) {
      res.mu = t_d;
      res.stabilization_degree = D - 2;
      return res;
    }
    prev2 = prev1;
    prev1 = t_d;
  }
  throw NotStabilizedError("truncated Milnor quotient dimensions did not stabilize by degree " +
                           std::to_string(4 * d + 2));
}

}  // namespace polemono
