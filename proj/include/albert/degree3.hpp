#pragma once

#include <memory>
#include <string>
#include <vector>

#include "albert/error.hpp"
#include "albert/field.hpp"
#include "albert/linalg.hpp"

namespace albert {

// Element of a degree-3 coordinate algebra: a flat list of tower scalars whose
// layout is owned by the algebra (9 matrix entries, 3 cyclic coordinates, one
// cubic-tower scalar, or the concatenation of the two halves of D x D-op).
using D3Elt = std::vector<Scalar>;

// Associative algebra of degree 3 over its center (Q, a quadratic tower, or
// Q x Q), with reduced norm/trace and the adjugate-style adjoint satisfying
// x x^# = N(x) 1. Instances are immutable and shared.
class Degree3Algebra : public std::enable_shared_from_this<Degree3Algebra> {
 public:
  enum class Kind { matrix3, cyclic, cubic_etale, product_opposite };

  using Ptr = std::shared_ptr<const Degree3Algebra>;

  Kind kind;
  FieldPtr F;       // matrix3: entry field (= center)
  FieldPtr L;       // cyclic / cubic_etale: the cubic tower
  Rational gamma;   // cyclic: u^3 = gamma
  Ptr inner;        // product_opposite: D

  static Ptr matrix3(const FieldPtr& entries) {
    switch (entries->kind) {
      case FieldKind::rationals:
      case FieldKind::quadratic:
      case FieldKind::split_quadratic: break;
      default:
        throw parameter_error("matrix3 entries must form a tower of degree <= 2");
    }
    auto a = std::shared_ptr<Degree3Algebra>(new Degree3Algebra());
    a->kind = Kind::matrix3;
    a->F = entries;
    a->center_ = entries;
    return a;
  }

  // Cyclic algebra (L/Q, rho, gamma): L + L u + L u^2, u^3 = gamma,
  // u l = rho(l) u.
  static Ptr cyclic(const FieldPtr& l, const Rational& g) {
    if (l->kind != FieldKind::cubic || !l->cyclic_image)
      throw parameter_error("cyclic algebra needs a cubic tower with rho");
    if (g == 0) throw parameter_error("cyclic algebra: gamma must be nonzero");
    auto a = std::shared_ptr<Degree3Algebra>(new Degree3Algebra());
    a->kind = Kind::cyclic;
    a->L = l;
    a->gamma = g;
    a->center_ = FieldDescriptor::rationals();
    return a;
  }

  static Ptr cubic_etale(const FieldPtr& l) {
    if (l->kind != FieldKind::cubic && l->kind != FieldKind::cubic_product)
      throw parameter_error("cubic_etale needs a cubic tower");
    auto a = std::shared_ptr<Degree3Algebra>(new Degree3Algebra());
    a->kind = Kind::cubic_etale;
    a->L = l;
    a->center_ = FieldDescriptor::rationals();
    return a;
  }

  // B = D x D-op, the split-center doubling with the exchange involution.
  static Ptr product_opposite(const Ptr& d) {
    if (d->center()->kind != FieldKind::rationals)
      throw parameter_error("product_opposite needs a central simple factor over Q");
    auto a = std::shared_ptr<Degree3Algebra>(new Degree3Algebra());
    a->kind = Kind::product_opposite;
    a->inner = d;
    a->center_ = FieldDescriptor::split_quadratic();
    return a;
  }

  const FieldPtr& center() const { return center_; }

  std::size_t kdim() const {
    switch (kind) {
      case Kind::matrix3: return 9 * static_cast<std::size_t>(F->degree());
      case Kind::cyclic: return 9;
      case Kind::cubic_etale: return 3;
      case Kind::product_opposite: return 2 * inner->kdim();
    }
    return 0;
  }

  std::size_t slots() const {
    switch (kind) {
      case Kind::matrix3: return 9;
      case Kind::cyclic: return 3;
      case Kind::cubic_etale: return 1;
      case Kind::product_opposite: return 2 * inner->slots();
    }
    return 0;
  }

  bool same_algebra(const Degree3Algebra& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
      case Kind::matrix3: return *F == *o.F;
      case Kind::cyclic: return *L == *o.L && gamma == o.gamma;
      case Kind::cubic_etale: return *L == *o.L;
      case Kind::product_opposite: return inner->same_algebra(*o.inner);
    }
    return false;
  }

  std::string name() const {
    switch (kind) {
      case Kind::matrix3: return "M3(" + F->name() + ")";
      case Kind::cyclic: return "cyclic(" + L->name() + ", " + rat_str(gamma) + ")";
      case Kind::cubic_etale: return L->name();
      case Kind::product_opposite: return inner->name() + " x op";
    }
    return "?";
  }

  D3Elt zero() const {
    D3Elt e;
    e.reserve(slots());
    fill_zero(e);
    return e;
  }

  D3Elt unit() const {
    D3Elt e = zero();
    switch (kind) {
      case Kind::matrix3:
        e[0] = e[4] = e[8] = Scalar::one(F);
        break;
      case Kind::cyclic:
      case Kind::cubic_etale:
        e[0] = Scalar::one(L);
        break;
      case Kind::product_opposite: {
        D3Elt iu = inner->unit();
        std::size_t m = inner->slots();
        for (std::size_t i = 0; i < m; ++i) e[i] = e[m + i] = iu[i];
        break;
      }
    }
    return e;
  }

  D3Elt add(const D3Elt& a, const D3Elt& b) const {
    D3Elt r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
  }

  D3Elt sub(const D3Elt& a, const D3Elt& b) const {
    D3Elt r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
  }

  D3Elt neg(const D3Elt& a) const {
    D3Elt r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
  }

  D3Elt smul_q(const Rational& s, const D3Elt& a) const {
    D3Elt r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
  }

  // Action of the center on the algebra.
  D3Elt smul_center(const Scalar& s, const D3Elt& a) const {
    check_center(s);
    switch (kind) {
      case Kind::matrix3: {
        D3Elt r(9);
        for (int i = 0; i < 9; ++i) r[i] = s * a[i];
        return r;
      }
      case Kind::cyclic:
      case Kind::cubic_etale:
        return smul_q(s.c[0], a);
      case Kind::product_opposite: {
        auto [x, y] = split_pair(a);
        return join_pair(inner->smul_q(s.c[0], x), inner->smul_q(s.c[1], y));
      }
    }
    throw parameter_error("unknown algebra kind");
  }

  D3Elt mul(const D3Elt& a, const D3Elt& b) const {
    switch (kind) {
      case Kind::matrix3: {
        D3Elt r = zero();
        for (int i = 0; i < 3; ++i)
          for (int k = 0; k < 3; ++k) {
            const Scalar& aik = a[3 * i + k];
            if (aik.is_zero()) continue;
            for (int j = 0; j < 3; ++j) r[3 * i + j] = r[3 * i + j] + aik * b[3 * k + j];
          }
        return r;
      }
      case Kind::cyclic: {
        // (sum l_i u^i)(sum m_j u^j), with u m = rho(m) u and u^3 = gamma
        const Scalar &l0 = a[0], &l1 = a[1], &l2 = a[2];
        Scalar m0 = b[0], m1 = b[1], m2 = b[2];
        D3Elt r(3, Scalar::zero(L));
        r[0] = l0 * m0 + gamma * (l1 * rho(m2) + l2 * rho2(m1));
        r[1] = l0 * m1 + l1 * rho(m0) + gamma * (l2 * rho2(m2));
        r[2] = l0 * m2 + l1 * rho(m1) + l2 * rho2(m0);
        return r;
      }
      case Kind::cubic_etale:
        return D3Elt{a[0] * b[0]};
      case Kind::product_opposite: {
        auto [x1, y1] = split_pair(a);
        auto [x2, y2] = split_pair(b);
        // second factor is the opposite algebra: (y1-op)(y2-op) = (y2 y1)-op
        return join_pair(inner->mul(x1, x2), inner->mul(y2, y1));
      }
    }
    throw parameter_error("unknown algebra kind");
  }

  // Reduced norm, valued in the center.
  Scalar norm(const D3Elt& a) const {
    switch (kind) {
      case Kind::matrix3:
        return det3(a);
      case Kind::cyclic: {
        // regular representation over the splitting tower L, then descend
        Scalar n = Scalar::zero(L);
        const Scalar &l0 = a[0], &l1 = a[1], &l2 = a[2];
        Scalar nl0 = l0 * rho(l0) * rho2(l0);
        Scalar nl1 = l1 * rho(l1) * rho2(l1);
        Scalar nl2 = l2 * rho(l2) * rho2(l2);
        Scalar mix = l0 * rho(l1) * rho2(l2);
        Scalar tr_mix = mix + rho(mix) + rho2(mix);
        n = nl0 + gamma * nl1 + (gamma * gamma) * nl2 - gamma * tr_mix;
        return Scalar(center_, {descend(n)});
      }
      case Kind::cubic_etale:
        return Scalar(center_, {norm_down(a[0])});
      case Kind::product_opposite: {
        auto [x, y] = split_pair(a);
        return Scalar(center_, {base_value(inner->norm(x)), base_value(inner->norm(y))});
      }
    }
    throw parameter_error("unknown algebra kind");
  }

  Scalar trace(const D3Elt& a) const {
    switch (kind) {
      case Kind::matrix3:
        return a[0] + a[4] + a[8];
      case Kind::cyclic:
        return Scalar(center_, {trace_down(a[0])});
      case Kind::cubic_etale:
        return Scalar(center_, {trace_down(a[0])});
      case Kind::product_opposite: {
        auto [x, y] = split_pair(a);
        return Scalar(center_, {base_value(inner->trace(x)), base_value(inner->trace(y))});
      }
    }
    throw parameter_error("unknown algebra kind");
  }

  // Adjoint with x x^# = x^# x = N(x) 1 and (x y)^# = y^# x^#.
  D3Elt adjoint(const D3Elt& a) const {
    switch (kind) {
      case Kind::matrix3: {
        D3Elt r = zero();
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            int i1 = (j + 1) % 3, i2 = (j + 2) % 3;  // adjugate: transpose cofactors
            int j1 = (i + 1) % 3, j2 = (i + 2) % 3;
            r[3 * i + j] =
                a[3 * i1 + j1] * a[3 * i2 + j2] - a[3 * i1 + j2] * a[3 * i2 + j1];
          }
        return r;
      }
      case Kind::cyclic:
      case Kind::cubic_etale: {
        // x^2 - t(x) x + s(x) 1 with s(x) = (t(x)^2 - t(x^2)) / 2
        Rational t = trace(a).c[0];
        D3Elt sq = mul(a, a);
        Rational t2 = trace(sq).c[0];
        Rational s = (t * t - t2) / 2;
        D3Elt r = sub(sq, smul_q(t, a));
        return add(r, smul_q(s, unit()));
      }
      case Kind::product_opposite: {
        auto [x, y] = split_pair(a);
        return join_pair(inner->adjoint(x), inner->adjoint(y));
      }
    }
    throw parameter_error("unknown algebra kind");
  }

  D3Elt inverse(const D3Elt& a) const {
    Scalar n = norm(a);
    Scalar ninv;
    try {
      ninv = albert::inverse(n);
    } catch (const not_invertible&) {
      throw not_invertible("element of " + name() + " has non-invertible reduced norm " +
                           n.str());
    }
    return smul_center(ninv, adjoint(a));
  }

  D3Elt embed_center(const Scalar& s) const {
    check_center(s);
    switch (kind) {
      case Kind::matrix3: {
        D3Elt r = zero();
        r[0] = r[4] = r[8] = s;
        return r;
      }
      case Kind::cyclic:
      case Kind::cubic_etale:
        return smul_q(s.c[0], unit());
      case Kind::product_opposite:
        return smul_center(s, unit());
    }
    throw parameter_error("unknown algebra kind");
  }

  bool is_central(const D3Elt& a) const {
    Scalar v = Scalar::zero(center_);
    return central_probe(a, v);
  }

  Scalar central_value(const D3Elt& a) const {
    Scalar v = Scalar::zero(center_);
    if (!central_probe(a, v))
      throw parameter_error("element of " + name() + " is not central: " + elt_str(a));
    return v;
  }

  bool eq(const D3Elt& a, const D3Elt& b) const {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!(a[i] == b[i])) return false;
    return true;
  }

  bool is_zero_elt(const D3Elt& a) const {
    for (const auto& s : a)
      if (!s.is_zero()) return false;
    return true;
  }

  QVec to_kvec(const D3Elt& a) const {
    QVec v;
    v.reserve(kdim());
    for (const auto& s : a) v.insert(v.end(), s.c.begin(), s.c.end());
    return v;
  }

  D3Elt from_kvec(const QVec& v) const {
    if (v.size() != kdim()) throw descriptor_mismatch("coordinate count mismatch");
    D3Elt e = zero();
    std::size_t pos = 0;
    for (auto& s : e) {
      for (auto& coord : s.c) coord = v[pos++];
    }
    return e;
  }

  D3Elt basis_elt(std::size_t i) const {
    QVec v = qvec_zero(kdim());
    v[i] = 1;
    return from_kvec(v);
  }

  // Matrix over Q of x |-> a x (or x |-> x a).
  QMat lmul_mat(const D3Elt& a) const {
    QMat m(kdim(), kdim());
    for (std::size_t j = 0; j < kdim(); ++j) {
      QVec col = to_kvec(mul(a, basis_elt(j)));
      for (std::size_t i = 0; i < kdim(); ++i) m.at(i, j) = col[i];
    }
    return m;
  }

  QMat rmul_mat(const D3Elt& a) const {
    QMat m(kdim(), kdim());
    for (std::size_t j = 0; j < kdim(); ++j) {
      QVec col = to_kvec(mul(basis_elt(j), a));
      for (std::size_t i = 0; i < kdim(); ++i) m.at(i, j) = col[i];
    }
    return m;
  }

  std::string elt_str(const D3Elt& a) const { return qvec_str(to_kvec(a)); }

  // product_opposite helpers (public: the exchange involution uses them)
  std::pair<D3Elt, D3Elt> split_pair(const D3Elt& a) const {
    std::size_t m = inner->slots();
    return {D3Elt(a.begin(), a.begin() + static_cast<long>(m)),
            D3Elt(a.begin() + static_cast<long>(m), a.end())};
  }

  D3Elt join_pair(const D3Elt& x, const D3Elt& y) const {
    D3Elt r = x;
    r.insert(r.end(), y.begin(), y.end());
    return r;
  }

 private:
  FieldPtr center_;

  Degree3Algebra() = default;

  void fill_zero(D3Elt& e) const {
    switch (kind) {
      case Kind::matrix3:
        e.assign(9, Scalar::zero(F));
        break;
      case Kind::cyclic:
        e.assign(3, Scalar::zero(L));
        break;
      case Kind::cubic_etale:
        e.assign(1, Scalar::zero(L));
        break;
      case Kind::product_opposite: {
        D3Elt z = inner->zero();
        e = z;
        e.insert(e.end(), z.begin(), z.end());
        break;
      }
    }
  }

  void check_center(const Scalar& s) const {
    if (!(*s.F == *center_))
      throw descriptor_mismatch("scalar is not in the center " + center_->name());
  }

  Scalar det3(const D3Elt& a) const {
    return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
           a[2] * (a[3] * a[7] - a[4] * a[6]);
  }

  // Cyclic-norm values lie in the fixed field of rho, i.e. in Q; enforce it.
  static Rational descend(const Scalar& s) {
    if (s.c[1] != 0 || s.c[2] != 0)
      throw parameter_error("cyclic norm failed to descend to Q: " + s.str());
    return s.c[0];
  }

  bool central_probe(const D3Elt& a, Scalar& out) const {
    switch (kind) {
      case Kind::matrix3: {
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            if (i != j && !a[3 * i + j].is_zero()) return false;
        if (!(a[0] == a[4]) || !(a[0] == a[8])) return false;
        out = a[0];
        return true;
      }
      case Kind::cyclic: {
        if (!a[1].is_zero() || !a[2].is_zero()) return false;
        if (!in_base(a[0])) return false;
        out = Scalar(center_, {a[0].c[0]});
        return true;
      }
      case Kind::cubic_etale: {
        if (!in_base(a[0])) return false;
        out = Scalar(center_, {base_value(a[0])});
        return true;
      }
      case Kind::product_opposite: {
        auto [x, y] = split_pair(a);
        Scalar u = Scalar::zero(inner->center()), v = u;
        if (!inner->central_probe(x, u) || !inner->central_probe(y, v)) return false;
        out = Scalar(center_, {u.c[0], v.c[0]});
        return true;
      }
    }
    return false;
  }
};

using D3Ptr = Degree3Algebra::Ptr;

}  // namespace albert
