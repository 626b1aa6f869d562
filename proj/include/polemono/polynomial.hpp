#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polemono/errors.hpp"
#include "polemono/monomial.hpp"
#include "polemono/rational.hpp"

namespace polemono {

using Mat3 = std::array<std::array<Rational, 3>, 3>;

// General sparse polynomial in Q[x,y,z]; no homogeneity requirement. Used as
// parser output and as scratch for coordinate changes; the pipeline proper
// works with the validated HomogPoly wrapper below.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  Polynomial() = default;

  static Polynomial constant(const Rational& c) {
    Polynomial p;
    p.add_term(Monomial{}, c);
    return p;
  }

  static Polynomial variable(int var) {
    Monomial m;
    (var == 0 ? m.ex : var == 1 ? m.ey : m.ez) = 1;
    Polynomial p;
    p.add_term(m, 1);
    return p;
  }

  static Polynomial term(const Monomial& m, const Rational& c) {
    Polynomial p;
    p.add_term(m, c);
    return p;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
  }

  Rational constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
  }

  int total_degree() const {  // -1 for the zero polynomial
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.degree();
  }

  // Degree of the lowest term; with the graded order that is the first key.
  int min_degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.degree();
  }

  bool is_homogeneous() const {
    return terms_.empty() || min_degree() == total_degree();
  }

  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  Polynomial operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  Polynomial scaled(const Rational& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
  }

  Polynomial pow(unsigned long e) const {
    Polynomial r = constant(1);
    Polynomial base = *this;
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  Polynomial partial(int var) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
      int e = m.exponent(var);
      if (e == 0) continue;
      Monomial n = m;
      (var == 0 ? n.ex : var == 1 ? n.ey : n.ez) = e - 1;
      r.add_term(n, c * e);
    }
    return r;
  }

  // f(T * (x,y,z)^t): substitute each variable by the corresponding row of T.
  Polynomial substitute_linear(const Mat3& t) const {
    std::array<Polynomial, 3> rows;
    for (int i = 0; i < 3; ++i) {
      Polynomial li;
      for (int j = 0; j < 3; ++j)
        if (t[i][j] != 0) li += variable(j).scaled(t[i][j]);
      rows[i] = li;
    }
    // Cache powers of each substituted variable up to the exponents we need.
    std::array<std::vector<Polynomial>, 3> powers;
    for (int i = 0; i < 3; ++i) powers[i].push_back(constant(1));
    auto power = [&](int i, int e) -> const Polynomial& {
      while (static_cast<int>(powers[i].size()) <= e)
        powers[i].push_back(powers[i].back() * rows[i]);
      return powers[i][e];
    };
    Polynomial r;
    for (const auto& [m, c] : terms_)
      r += (power(0, m.ex) * power(1, m.ey) * power(2, m.ez)).scaled(c);
    return r;
  }

  // z := 1; result lives in Q[x,y] (all ez exponents fold away).
  Polynomial dehomogenize_z() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.add_term(Monomial{m.ex, m.ey, 0}, c);
    return r;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  TermMap terms_;
};

// Homogeneous polynomial of a fixed degree, the curve equations the whole
// pipeline runs on. Construction validates; a default-constructed value is
// the zero polynomial (degree -1).
class HomogPoly {
 public:
  HomogPoly() = default;

  // Throws ZeroPolynomialError / NotHomogeneousError.
  static HomogPoly validate(Polynomial p) {
    if (p.is_zero()) throw ZeroPolynomialError("polynomial is identically zero");
    if (!p.is_homogeneous())
      throw NotHomogeneousError("mixed term degrees " + std::to_string(p.min_degree()) +
                                " and " + std::to_string(p.total_degree()));
    HomogPoly h;
    h.degree_ = p.total_degree();
    h.p_ = std::move(p);
    return h;
  }

  // For internal construction where homogeneity of degree d is known; the
  // zero polynomial is allowed and propagates.
  static HomogPoly trusted(Polynomial p, int degree) {
    HomogPoly h;
    if (!p.is_zero()) {
      h.degree_ = degree;
      h.p_ = std::move(p);
    }
    return h;
  }

  bool is_zero() const { return degree_ < 0; }
  int degree() const { return degree_; }
  const Polynomial& poly() const { return p_; }
  const Polynomial::TermMap& terms() const { return p_.terms(); }
  size_t term_count() const { return p_.term_count(); }
  Rational coeff(const Monomial& m) const { return p_.coeff(m); }

  HomogPoly partial(int var) const {
    Polynomial d = p_.partial(var);
    return trusted(std::move(d), degree_ - 1);
  }

  friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
    if (a.is_zero() || b.is_zero()) return HomogPoly();
    return trusted(a.p_ * b.p_, a.degree_ + b.degree_);
  }

  friend HomogPoly operator+(const HomogPoly& a, const HomogPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree_ != b.degree_)
      throw DegreeMismatchError("adding homogeneous polynomials of degrees " +
                                std::to_string(a.degree_) + " and " + std::to_string(b.degree_));
    return trusted(a.p_ + b.p_, a.degree_);
  }

  HomogPoly scaled(const Rational& c) const {
    return trusted(p_.scaled(c), degree_);
  }

  friend bool operator==(const HomogPoly&, const HomogPoly&) = default;

  // Coefficients of the polynomial against an explicit basis of S_degree.
  std::vector<Rational> coeff_vector(const GradedBasis& basis) const {
    if (!is_zero() && basis.degree != degree_)
      throw DegreeMismatchError("coefficient vector of a degree-" + std::to_string(degree_) +
                                " polynomial against basis of degree " +
                                std::to_string(basis.degree));
    std::vector<Rational> v(static_cast<size_t>(basis.size()), Rational(0));
    for (const auto& [m, c] : p_.terms()) v[static_cast<size_t>(basis.index_of(m))] = c;
    return v;
  }

  // Canonical form: terms in descending graded-lex order, unit coefficients
  // dropped, rationals printed as num/den. Reparsing the result gives back
  // an equal polynomial.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (auto it = p_.terms().rbegin(); it != p_.terms().rend(); ++it) {
      const auto& [m, c] = *it;
      const bool neg = c < 0;
      const Rational a = neg ? Rational(-c) : c;
      if (s.empty()) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      if (m.degree() == 0) {
        s += polemono::to_string(a);
      } else if (a == 1) {
        s += polemono::to_string(m);
      } else {
        s += polemono::to_string(a) + "*" + polemono::to_string(m);
      }
    }
    return s;
  }

 private:
  int degree_ = -1;
  Polynomial p_;
};

// The three first-order partials of a curve equation, bundled because every
// matrix builder wants all of them.
struct Partials {
  HomogPoly fx, fy, fz;

  static Partials of(const HomogPoly& f) {
    return Partials{f.partial(0), f.partial(1), f.partial(2)};
  }

  const HomogPoly& operator[](int var) const { return var == 0 ? fx : var == 1 ? fy : fz; }
};

}  // namespace polemono
