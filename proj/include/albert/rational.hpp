#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "albert/error.hpp"

namespace albert {

// Expression templates are disabled: arithmetic must yield plain values, so
// that `auto` locals and deduced lambda returns never hold dangling
// references into temporaries.
using Integer =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Canonical form: lowest terms, positive denominator, "p" when the
// denominator is 1, "p/q" otherwise.
inline std::string rat_str(const Rational& r) { return r.str(); }

// Accepts "p" or "p/q" with optional leading '-'. Anything else is an error;
// q = 0 is an error.
inline Rational parse_rational(const std::string& s) {
  auto bad = [&]() -> parameter_error {
    return parameter_error("not a rational literal: '" + s + "'");
  };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto check_int = [&](const std::string& part) {
    if (part.empty()) throw bad();
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw bad();
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw bad();
  };
  if (slash == std::string::npos) {
    check_int(s);
    return Rational(Integer(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  Integer q(den);
  if (q == 0) throw bad();
  return Rational(Integer(num), q);
}

inline Rational pow_int(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw not_invertible("0 has no negative power");
    return pow_int(Rational(1) / base, -e);
  }
  Rational acc(1), b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// True when n is a perfect square; root returned through out if non-null.
inline bool integer_sqrt(const Integer& n, Integer* out = nullptr) {
  if (n < 0) return false;
  Integer r = boost::multiprecision::sqrt(n);
  if (r * r != n) return false;
  if (out) *out = r;
  return true;
}

inline bool is_square(const Rational& r) {
  if (r < 0) return false;
  return integer_sqrt(numerator(r)) && integer_sqrt(denominator(r));
}

inline bool is_squarefree_integer(const Integer& n_in) {
  Integer n = n_in < 0 ? Integer(-n_in) : n_in;
  if (n == 0) return false;
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    while (n % p == 0) n /= p;
  }
  return true;
}

}  // namespace albert
