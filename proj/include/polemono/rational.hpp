#pragma once

#include <gmpxx.h>

#include <string>

namespace polemono {

using Rational = mpq_class;
using Integer = mpz_class;

// mpq_class(n, d) does not canonicalize; route all two-argument
// construction through here.
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace polemono
