#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "albert/error.hpp"
#include "albert/linalg.hpp"
#include "albert/rational.hpp"

namespace albert {

enum class FieldKind {
  rationals,        // Q
  quadratic,        // Q(w), w^2 = d
  split_quadratic,  // Q x Q, componentwise
  cubic,            // Q[x]/(x^3 + c2 x^2 + c1 x + c0), irreducible
  cubic_product,    // Q x Q x Q
};

// Immutable description of an etale scalar tower over Q. Scalars hold a
// shared pointer to their descriptor; equality of descriptors is structural
// so independently built towers interoperate.
struct FieldDescriptor {
  FieldKind kind = FieldKind::rationals;
  Rational d;                              // quadratic
  std::array<Rational, 3> min_poly{};      // cubic: x^3 + c2 x^2 + c1 x + c0 -> {c0,c1,c2}
  std::optional<std::array<Rational, 3>> cyclic_image;  // cubic: rho(theta) in power basis

  int degree() const {
    switch (kind) {
      case FieldKind::rationals: return 1;
      case FieldKind::quadratic:
      case FieldKind::split_quadratic: return 2;
      default: return 3;
    }
  }

  bool operator==(const FieldDescriptor& o) const {
    return kind == o.kind && d == o.d && min_poly == o.min_poly &&
           cyclic_image == o.cyclic_image;
  }

  std::string name() const {
    switch (kind) {
      case FieldKind::rationals: return "Q";
      case FieldKind::quadratic: return "Q(sqrt(" + rat_str(d) + "))";
      case FieldKind::split_quadratic: return "QxQ";
      case FieldKind::cubic: {
        std::string s = "Q[x]/(x^3";
        auto term = [&](const Rational& cf, const std::string& pw) {
          if (cf.is_zero()) return;
          s += cf.sign() < 0 ? " - " : " + ";
          Rational a = cf.sign() < 0 ? Rational(-cf) : cf;
          if (!pw.empty() && a == Rational(1)) s += pw;
          else s += rat_str(a) + (pw.empty() ? "" : " " + pw);
        };
        term(min_poly[2], "x^2");
        term(min_poly[1], "x");
        term(min_poly[0], "");
        return s + ")";
      }
      case FieldKind::cubic_product: return "QxQxQ";
    }
    return "?";
  }

  static std::shared_ptr<const FieldDescriptor> rationals() {
    static auto inst = std::make_shared<const FieldDescriptor>();
    return inst;
  }

  static std::shared_ptr<const FieldDescriptor> quadratic(const Rational& d) {
    if (d == 0) throw parameter_error("quadratic descriptor: d must be nonzero");
    if (!is_integer(d) || !is_squarefree_integer(numerator(d)))
      throw parameter_error("quadratic descriptor: d must be a squarefree integer");
    if (is_square(d)) throw parameter_error("quadratic descriptor: d must not be a square");
    auto f = std::make_shared<FieldDescriptor>();
    f->kind = FieldKind::quadratic;
    f->d = d;
    return f;
  }

  static std::shared_ptr<const FieldDescriptor> split_quadratic() {
    static auto inst = [] {
      auto f = std::make_shared<FieldDescriptor>();
      f->kind = FieldKind::split_quadratic;
      return std::shared_ptr<const FieldDescriptor>(f);
    }();
    return inst;
  }

  static std::shared_ptr<const FieldDescriptor> cubic(
      const Rational& c0, const Rational& c1, const Rational& c2,
      std::optional<std::array<Rational, 3>> rho_image = std::nullopt);

  static std::shared_ptr<const FieldDescriptor> cubic_product() {
    static auto inst = [] {
      auto f = std::make_shared<FieldDescriptor>();
      f->kind = FieldKind::cubic_product;
      return std::shared_ptr<const FieldDescriptor>(f);
    }();
    return inst;
  }
};

using FieldPtr = std::shared_ptr<const FieldDescriptor>;

// One element of a scalar tower: coordinate vector over Q of length
// descriptor->degree(). Immutable by convention (all ops return new values).
struct Scalar {
  FieldPtr F;
  std::vector<Rational> c;

  Scalar() = default;
  Scalar(FieldPtr f, std::vector<Rational> coords) : F(std::move(f)), c(std::move(coords)) {
    if (static_cast<int>(c.size()) != F->degree())
      throw parameter_error("scalar coordinate count does not match tower degree");
  }

  static Scalar zero(const FieldPtr& f) {
    return Scalar(f, std::vector<Rational>(f->degree(), Rational(0)));
  }

  // Embeds a base rational on the diagonal of the tower.
  static Scalar of_base(const FieldPtr& f, const Rational& r) {
    switch (f->kind) {
      case FieldKind::rationals: return Scalar(f, {r});
      case FieldKind::quadratic: return Scalar(f, {r, Rational(0)});
      case FieldKind::split_quadratic: return Scalar(f, {r, r});
      case FieldKind::cubic: return Scalar(f, {r, Rational(0), Rational(0)});
      case FieldKind::cubic_product: return Scalar(f, {r, r, r});
    }
    throw parameter_error("unknown field kind");
  }

  static Scalar one(const FieldPtr& f) { return of_base(f, Rational(1)); }

  bool is_zero() const {
    for (const auto& x : c)
      if (x != 0) return false;
    return true;
  }

  bool same_field(const Scalar& o) const { return *F == *o.F; }

  void check_field(const Scalar& o) const {
    if (!same_field(o))
      throw descriptor_mismatch("scalars from different towers: " + F->name() +
                                " vs " + o.F->name());
  }

  bool operator==(const Scalar& o) const { return same_field(o) && c == o.c; }

  std::string str() const { return qvec_str(c) + "@" + F->name(); }
};

namespace detail {

// Multiplication in Q[x]/(x^3 + c2 x^2 + c1 x + c0).
inline std::vector<Rational> cubic_mul(const std::array<Rational, 3>& m,
                                       const std::vector<Rational>& a,
                                       const std::vector<Rational>& b) {
  std::array<Rational, 5> p{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p[i + j] += a[i] * b[j];
  // reduce x^4 then x^3 using x^3 = -(c0 + c1 x + c2 x^2)
  for (int k = 4; k >= 3; --k) {
    if (p[k] == 0) continue;
    Rational f = p[k];
    p[k] = 0;
    p[k - 3] -= f * m[0];
    p[k - 2] -= f * m[1];
    p[k - 1] -= f * m[2];
  }
  return {p[0], p[1], p[2]};
}

// Matrix of multiplication by a in the power basis (regular representation).
inline QMat cubic_regmat(const std::array<Rational, 3>& m, const std::vector<Rational>& a) {
  QMat r(3, 3);
  std::vector<Rational> basis(3, Rational(0));
  for (int j = 0; j < 3; ++j) {
    basis.assign(3, Rational(0));
    basis[j] = 1;
    auto col = cubic_mul(m, a, basis);
    for (int i = 0; i < 3; ++i) r.at(i, j) = col[i];
  }
  return r;
}

}  // namespace detail

inline Scalar operator+(const Scalar& a, const Scalar& b) {
  a.check_field(b);
  std::vector<Rational> r(a.c.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.c[i] + b.c[i];
  return Scalar(a.F, std::move(r));
}

inline Scalar operator-(const Scalar& a, const Scalar& b) {
  a.check_field(b);
  std::vector<Rational> r(a.c.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.c[i] - b.c[i];
  return Scalar(a.F, std::move(r));
}

inline Scalar operator-(const Scalar& a) {
  std::vector<Rational> r(a.c.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = -a.c[i];
  return Scalar(a.F, std::move(r));
}

inline Scalar operator*(const Rational& s, const Scalar& a) {
  std::vector<Rational> r(a.c.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = s * a.c[i];
  return Scalar(a.F, std::move(r));
}

inline Scalar operator*(const Scalar& a, const Scalar& b) {
  a.check_field(b);
  switch (a.F->kind) {
    case FieldKind::rationals:
      return Scalar(a.F, {a.c[0] * b.c[0]});
    case FieldKind::quadratic:
      return Scalar(a.F, {a.c[0] * b.c[0] + a.F->d * a.c[1] * b.c[1],
                          a.c[0] * b.c[1] + a.c[1] * b.c[0]});
    case FieldKind::split_quadratic:
      return Scalar(a.F, {a.c[0] * b.c[0], a.c[1] * b.c[1]});
    case FieldKind::cubic:
      return Scalar(a.F, detail::cubic_mul(a.F->min_poly, a.c, b.c));
    case FieldKind::cubic_product:
      return Scalar(a.F, {a.c[0] * b.c[0], a.c[1] * b.c[1], a.c[2] * b.c[2]});
  }
  throw parameter_error("unknown field kind");
}

// Conjugation of the quadratic level; errors elsewhere (no canonical choice).
inline Scalar conj(const Scalar& a) {
  switch (a.F->kind) {
    case FieldKind::quadratic: return Scalar(a.F, {a.c[0], -a.c[1]});
    case FieldKind::split_quadratic: return Scalar(a.F, {a.c[1], a.c[0]});
    default:
      throw parameter_error("conjugate is only defined on quadratic towers, got " +
                            a.F->name());
  }
}

// Applies the distinguished order-3 automorphism rho of a cyclic cubic tower.
inline Scalar rho(const Scalar& a) {
  if (a.F->kind != FieldKind::cubic || !a.F->cyclic_image)
    throw parameter_error("rho requires a cubic tower with a cyclic generator image");
  const auto& img = *a.F->cyclic_image;
  std::vector<Rational> r{img[0], img[1], img[2]};
  std::vector<Rational> r2 = detail::cubic_mul(a.F->min_poly, r, r);
  std::vector<Rational> out{a.c[0], Rational(0), Rational(0)};
  for (int i = 0; i < 3; ++i) out[i] += a.c[1] * r[i] + a.c[2] * r2[i];
  return Scalar(a.F, std::move(out));
}

inline Scalar rho2(const Scalar& a) { return rho(rho(a)); }

// Norm down one level of the tower (to Q).
inline Rational norm_down(const Scalar& a) {
  switch (a.F->kind) {
    case FieldKind::rationals:
      throw parameter_error("norm_down: tower has height 0");
    case FieldKind::quadratic: return a.c[0] * a.c[0] - a.F->d * a.c[1] * a.c[1];
    case FieldKind::split_quadratic: return a.c[0] * a.c[1];
    case FieldKind::cubic: return det(detail::cubic_regmat(a.F->min_poly, a.c));
    case FieldKind::cubic_product: return a.c[0] * a.c[1] * a.c[2];
  }
  throw parameter_error("unknown field kind");
}

inline Rational trace_down(const Scalar& a) {
  switch (a.F->kind) {
    case FieldKind::rationals:
      throw parameter_error("trace_down: tower has height 0");
    case FieldKind::quadratic: return 2 * a.c[0];
    case FieldKind::split_quadratic: return a.c[0] + a.c[1];
    case FieldKind::cubic: {
      // tr(1)=3, tr(theta)=-c2, tr(theta^2)=c2^2-2c1
      const auto& m = a.F->min_poly;
      return 3 * a.c[0] - m[2] * a.c[1] + (m[2] * m[2] - 2 * m[1]) * a.c[2];
    }
    case FieldKind::cubic_product: return a.c[0] + a.c[1] + a.c[2];
  }
  throw parameter_error("unknown field kind");
}

inline Scalar inverse(const Scalar& a) {
  switch (a.F->kind) {
    case FieldKind::rationals:
      if (a.c[0] == 0) throw not_invertible("0 is not invertible");
      return Scalar(a.F, {Rational(1) / a.c[0]});
    case FieldKind::quadratic: {
      Rational n = norm_down(a);
      if (n == 0) throw not_invertible("zero scalar in " + a.F->name());
      return Scalar(a.F, {a.c[0] / n, -a.c[1] / n});
    }
    case FieldKind::split_quadratic:
    case FieldKind::cubic_product: {
      std::vector<Rational> r(a.c.size());
      for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0)
          throw not_invertible("zero divisor in " + a.F->name() + ": " + a.str());
        r[i] = Rational(1) / a.c[i];
      }
      return Scalar(a.F, std::move(r));
    }
    case FieldKind::cubic: {
      QMat m = detail::cubic_regmat(a.F->min_poly, a.c);
      QVec e1{Rational(1), Rational(0), Rational(0)};
      QMat inv;
      try {
        inv = inverse(m);
      } catch (const not_invertible&) {
        throw not_invertible("zero scalar in " + a.F->name());
      }
      return Scalar(a.F, mul(inv, e1));
    }
  }
  throw parameter_error("unknown field kind");
}

inline Scalar operator/(const Scalar& a, const Scalar& b) { return a * inverse(b); }

// True when the scalar lies in the base copy of Q (the diagonal for split kinds).
inline bool in_base(const Scalar& a) {
  switch (a.F->kind) {
    case FieldKind::rationals: return true;
    case FieldKind::quadratic:
    case FieldKind::cubic:
      for (std::size_t i = 1; i < a.c.size(); ++i)
        if (a.c[i] != 0) return false;
      return true;
    case FieldKind::split_quadratic: return a.c[0] == a.c[1];
    case FieldKind::cubic_product: return a.c[0] == a.c[1] && a.c[0] == a.c[2];
  }
  return false;
}

inline Rational base_value(const Scalar& a) {
  if (!in_base(a))
    throw parameter_error("scalar does not lie in the base field: " + a.str());
  return a.c[0];
}

inline std::shared_ptr<const FieldDescriptor> FieldDescriptor::cubic(
    const Rational& c0, const Rational& c1, const Rational& c2,
    std::optional<std::array<Rational, 3>> rho_image) {
  auto f = std::make_shared<FieldDescriptor>();
  f->kind = FieldKind::cubic;
  f->min_poly = {c0, c1, c2};
  // separable and irreducible over Q (no rational root; degree 3 suffices)
  Rational p = c1 - c2 * c2 / 3;
  Rational q = 2 * c2 * c2 * c2 / 27 - c2 * c1 / 3 + c0;
  Rational disc = -4 * p * p * p - 27 * q * q;
  if (disc == 0) throw parameter_error("cubic descriptor: repeated root (not etale)");
  {
    std::vector<Rational> coeffs{c0, c1, c2, Rational(1)};
    Integer lcm(1);
    for (const auto& co : coeffs) {
      Integer dn = denominator(co);
      lcm = lcm / gcd(lcm, dn) * dn;
    }
    std::vector<Integer> ic(4);
    for (int i = 0; i < 4; ++i) ic[i] = numerator(coeffs[i] * Rational(lcm));
    auto divs = [](Integer n) {
      if (n < 0) n = -n;
      std::vector<Integer> ds;
      if (n == 0) return ds;
      for (Integer d = 1; d * d <= n; ++d)
        if (n % d == 0) {
          ds.push_back(d);
          if (d * d != n) ds.push_back(n / d);
        }
      return ds;
    };
    if (ic[0] == 0)
      throw parameter_error("cubic descriptor: reducible (root 0); use cubic_product");
    for (const auto& pn : divs(ic[0]))
      for (const auto& qd : divs(ic[3]))
        for (int sign : {1, -1}) {
          Rational cand(sign * pn, qd);
          Rational val = ((cand + c2) * cand + c1) * cand + c0;
          if (val == 0)
            throw parameter_error(
                "cubic descriptor: reducible over Q (root " + rat_str(cand) +
                "); only fields and full products are supported");
        }
  }
  if (rho_image) {
    f->cyclic_image = rho_image;
    FieldPtr fc = f;
    Scalar theta(fc, {Rational(0), Rational(1), Rational(0)});
    Scalar r = rho(theta);
    // rho must permute the roots of the minimal polynomial...
    Scalar val = r * r * r + c2 * (r * r) + c1 * r + Scalar::of_base(fc, c0);
    if (!val.is_zero())
      throw parameter_error("cubic descriptor: generator image is not a root");
    // ...with order exactly 3.
    if (r == theta)
      throw parameter_error("cubic descriptor: generator image is the identity");
    if (!(rho(rho(r)) == theta))
      throw parameter_error("cubic descriptor: generator image does not have order 3");
  }
  return f;
}

}  // namespace albert
