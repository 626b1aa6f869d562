#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "polemono/errors.hpp"

namespace polemono {

// Monomial x^ex * y^ey * z^ez in the graded ring S = Q[x,y,z].
struct Monomial {
  int ex = 0;
  int ey = 0;
  int ez = 0;

  int degree() const { return ex + ey + ez; }

  int exponent(int var) const {
    switch (var) {
      case 0: return ex;
      case 1: return ey;
      default: return ez;
    }
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  Monomial operator*(const Monomial& o) const {
    return Monomial{ex + o.ex, ey + o.ey, ez + o.ez};
  }
};

// Graded-lexicographic order with x > y > z: compare total degree first,
// then exponents of x, then y. This is the one term order used everywhere;
// bases, coefficient vectors and serialized polynomials all follow it.
inline std::strong_ordering graded_lex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = a.ex <=> b.ex; c != 0) return c;
  return a.ey <=> b.ey;
}

struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return graded_lex_compare(a, b) < 0;
  }
};

// Number of degree-j monomials in three variables.
inline long graded_dim(int j) {
  if (j < 0) return 0;
  return static_cast<long>(j + 1) * (j + 2) / 2;
}

// Position of a degree-j monomial in the descending graded-lex listing of
// S_j (so x^j sits at index 0 and z^j at the end). Descending order keeps
// displayed polynomials and matrix columns in the familiar leading-term-first
// shape.
inline long graded_index(const Monomial& m) {
  const long s = m.ey + m.ez;  // degree left after the x part
  return s * (s + 1) / 2 + m.ez;
}

// Ordered monomial basis of S_j, descending graded-lex.
struct GradedBasis {
  int degree = -1;
  std::vector<Monomial> monomials;

  static GradedBasis of(int degree) {
    GradedBasis b;
    b.degree = degree;
    if (degree < 0) return b;
    b.monomials.reserve(static_cast<size_t>(graded_dim(degree)));
    for (int ex = degree; ex >= 0; --ex)
      for (int ey = degree - ex; ey >= 0; --ey)
        b.monomials.push_back(Monomial{ex, ey, degree - ex - ey});
    return b;
  }

  long size() const { return static_cast<long>(monomials.size()); }

  long index_of(const Monomial& m) const {
    if (m.degree() != degree)
      throw DegreeMismatchError("monomial of degree " + std::to_string(m.degree()) +
                                " indexed against basis of degree " + std::to_string(degree));
    return graded_index(m);
  }
};

inline std::string to_string(const Monomial& m) {
  if (m.degree() == 0) return "1";
  std::string s;
  auto app = [&s](char v, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  };
  app('x', m.ex);
  app('y', m.ey);
  app('z', m.ez);
  return s;
}

}  // namespace polemono
