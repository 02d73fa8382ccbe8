#pragma once

#include <algorithm>
#include <vector>

#include "albert/error.hpp"
#include "albert/rational.hpp"

namespace albert {

// Univariate polynomial over Q; c[i] is the coefficient of t^i.
struct QPoly {
  std::vector<Rational> c;

  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  long degree() const { return static_cast<long>(c.size()) - 1; }

  Rational coeff(std::size_t i) const {
    return i < c.size() ? c[i] : Rational(0);
  }

  Rational eval(const Rational& t) const {
    Rational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
  }
};

inline std::string poly_str(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.c.size(); i-- > 0;) {
    if (p.c[i] == 0) continue;
    Rational a = p.c[i];
    if (out.empty()) {
      if (a < 0) out += "-", a = -a;
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (a != 1 || i == 0) out += rat_str(a);
    if (i > 0) {
      if (a != 1) out += " ";
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

inline QPoly operator*(const QPoly& p, const QPoly& q) {
  if (p.is_zero() || q.is_zero()) return QPoly{};
  std::vector<Rational> r(p.c.size() + q.c.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.c.size(); ++i)
    for (std::size_t j = 0; j < q.c.size(); ++j) r[i + j] += p.c[i] * q.c[j];
  return QPoly(std::move(r));
}

// Exact interpolation at the integer nodes t = 0..n from n+1 values, via
// Newton divided differences.
inline QPoly interpolate_at_nodes(const std::vector<Rational>& values) {
  std::size_t n = values.size();
  if (n == 0) return QPoly{};
  std::vector<Rational> dd = values;  // dd[j] becomes f[t_0..t_j]
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t j = n - 1; j >= level; --j)
      dd[j] = (dd[j] - dd[j - 1]) / Rational(level);
  // Horner over the Newton basis (t-0)(t-1)...(t-k+1).
  std::vector<Rational> coeffs{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    std::vector<Rational> next(coeffs.size() + 1, Rational(0));
    Rational node(static_cast<long>(k));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= node * coeffs[i];
    }
    next[0] += dd[k];
    coeffs = std::move(next);
  }
  return QPoly(std::move(coeffs));
}

namespace detail {
inline std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> ds;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d * d != n) ds.push_back(n / d);
    }
  }
  return ds;
}
}  // namespace detail

// All rational roots, exactly, via the rational root theorem after clearing
// denominators. Intended for the small coefficients that arise here; the
// divisor scan is a trial division, so callers keep inputs desk-sized.
inline std::vector<Rational> rational_roots(const QPoly& p_in) {
  QPoly p = p_in;
  std::vector<Rational> roots;
  if (p.is_zero()) throw parameter_error("rational_roots of the zero polynomial");
  std::size_t low = 0;
  while (low < p.c.size() && p.c[low] == 0) ++low;
  if (low > 0) {
    roots.push_back(Rational(0));
    p.c.erase(p.c.begin(), p.c.begin() + static_cast<long>(low));
  }
  if (p.degree() < 1) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  Integer lcm(1);
  for (const auto& co : p.c) {
    Integer d = denominator(co);
    lcm = lcm / gcd(lcm, d) * d;
  }
  std::vector<Integer> ic(p.c.size());
  for (std::size_t i = 0; i < p.c.size(); ++i)
    ic[i] = numerator(p.c[i] * Rational(lcm));
  auto ps = detail::positive_divisors(ic.front());
  auto qs = detail::positive_divisors(ic.back());
  for (const auto& num : ps)
    for (const auto& den : qs)
      for (int sign : {1, -1}) {
        Rational cand(sign * num, den);
        if (p.eval(cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace albert
