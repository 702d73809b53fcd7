#pragma once

// Exact arithmetic types: arbitrary-precision integers and canonical rationals.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qsym {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Both arguments are decimal strings, optionally signed.
inline Rational rational_from_strings(const std::string& num, const std::string& den) {
  Integer n(num);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline std::string num_string(const Rational& q) { return q.get_num().get_str(); }
inline std::string den_string(const Rational& q) { return q.get_den().get_str(); }

// "3", "-5/2"; the denominator is printed only when it is not 1.
inline std::string rational_text(const Rational& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) s += "/" + q.get_den().get_str();
  return s;
}

inline Rational rational_from_text(const std::string& s) {
  auto pos = s.find('/');
  if (pos == std::string::npos) return Rational(Integer(s));
  return rational_from_strings(s.substr(0, pos), s.substr(pos + 1));
}

}  // namespace qsym
