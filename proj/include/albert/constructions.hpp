#pragma once

#include <array>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "albert/cubic_norm.hpp"
#include "albert/degree3.hpp"
#include "albert/error.hpp"
#include "albert/involution.hpp"
#include "albert/octonion.hpp"
#include "albert/rng.hpp"

namespace albert {

// J = D + D + D for a degree-3 algebra D over Q and a unit lambda:
//   N(x,y,z) = N_D(x) + lambda N_D(y) + lambda^-1 N_D(z) - T_D(xyz)
//   (x,y,z)^# = (x^# - yz, lambda^-1 z^# - xy, lambda y^# - zx), c = (1,0,0)
struct FirstConstruction {
  D3Ptr D;
  Rational lambda;
  CnsPtr J;

  QVec pack(const D3Elt& x, const D3Elt& y, const D3Elt& z) const {
    QVec v = D->to_kvec(x);
    QVec vy = D->to_kvec(y), vz = D->to_kvec(z);
    v.insert(v.end(), vy.begin(), vy.end());
    v.insert(v.end(), vz.begin(), vz.end());
    return v;
  }

  std::array<D3Elt, 3> unpack(const QVec& v) const {
    std::size_t m = D->kdim();
    auto slice = [&](std::size_t i) {
      return QVec(v.begin() + static_cast<long>(i * m),
                  v.begin() + static_cast<long>((i + 1) * m));
    };
    return {D->from_kvec(slice(0)), D->from_kvec(slice(1)), D->from_kvec(slice(2))};
  }
};

inline FirstConstruction build_first(const D3Ptr& d, const Rational& lambda) {
  if (d->center()->kind != FieldKind::rationals)
    throw parameter_error("first construction needs a coordinate algebra with center Q");
  if (lambda == 0) throw parameter_error("first construction: lambda must be a unit");
  FirstConstruction f;
  f.D = d;
  f.lambda = lambda;
  std::size_t m = d->kdim();
  Rational li = Rational(1) / lambda;

  auto cv = [d](const Scalar& s) { return s.c[0]; };
  FirstConstruction fv = f;  // value copy for the closures
  auto norm = [fv, cv, lambda, li](const QVec& v) {
    auto [x, y, z] = fv.unpack(v);
    const auto& D = fv.D;
    Rational t = cv(D->trace(D->mul(x, D->mul(y, z))));
    return cv(D->norm(x)) + lambda * cv(D->norm(y)) + li * cv(D->norm(z)) - t;
  };
  auto sharp = [fv, lambda, li](const QVec& v) {
    auto [x, y, z] = fv.unpack(v);
    const auto& D = fv.D;
    D3Elt a = D->sub(D->adjoint(x), D->mul(y, z));
    D3Elt b = D->sub(D->smul_q(li, D->adjoint(z)), D->mul(x, y));
    D3Elt c = D->sub(D->smul_q(lambda, D->adjoint(y)), D->mul(z, x));
    return fv.pack(a, b, c);
  };
  QVec base = f.pack(d->unit(), d->zero(), d->zero());
  f.J = CubicNormStructure::make(3 * m, base, norm, sharp,
                                 "first(" + d->name() + ", " + rat_str(lambda) + ")");
  return f;
}

// J = H(B, sigma) + B for an involution of the second kind, u symmetric
// invertible, mu a center unit with N_B(u) = mu conj(mu):
//   N(b,x) = N_B(b) + Tr_K(mu N_B(x)) - Tr_B(b x u sigma(x))
//   (b,x)^# = (b^# - x u sigma(x), conj(mu) sigma(x)^# u^-1 - b x), c = (1,0)
struct SecondConstruction {
  D3Ptr B;
  InvPtr sigma;
  D3Elt u, u_inv;
  Scalar mu;
  InvPtr sigma_u;  // Int(u) composed with sigma; its unitaries act on J
  std::vector<QVec> herm_basis;
  std::vector<std::size_t> herm_free;
  CnsPtr J;

  std::size_t herm_dim() const { return herm_basis.size(); }

  // coordinates of a symmetric element: read off the free columns, then
  // check the expansion reproduces it exactly
  QVec herm_coords(const D3Elt& b) const {
    QVec w = B->to_kvec(b);
    QVec coords(herm_dim());
    for (std::size_t i = 0; i < herm_dim(); ++i) coords[i] = w[herm_free[i]];
    QVec back = qvec_zero(B->kdim());
    for (std::size_t i = 0; i < herm_dim(); ++i) back = back + coords[i] * herm_basis[i];
    if (!(back == w))
      throw parameter_error("element is not symmetric under " + sigma->name() + ": " +
                            B->elt_str(b));
    return coords;
  }

  QVec pack(const D3Elt& b, const D3Elt& x) const {
    QVec v = herm_coords(b);
    QVec w = B->to_kvec(x);
    v.insert(v.end(), w.begin(), w.end());
    return v;
  }

  std::pair<D3Elt, D3Elt> unpack(const QVec& v) const {
    QVec w = qvec_zero(B->kdim());
    for (std::size_t i = 0; i < herm_dim(); ++i) w = w + v[i] * herm_basis[i];
    QVec t(v.begin() + static_cast<long>(herm_dim()), v.end());
    return {B->from_kvec(w), B->from_kvec(t)};
  }
};

inline SecondConstruction build_second(const D3Ptr& b, const InvPtr& sigma,
                                       const D3Elt& u, const Scalar& mu) {
  SecondConstruction s;
  s.B = b;
  s.sigma = sigma;
  if (!b->same_algebra(*sigma->B))
    throw parameter_error("involution acts on a different algebra");
  if (!sigma->is_symmetric(u))
    throw parameter_error("second construction: u must be symmetric");
  s.u = u;
  try {
    s.u_inv = b->inverse(u);
  } catch (const not_invertible&) {
    throw parameter_error("second construction: u must be invertible");
  }
  if (!(*mu.F == *b->center()))
    throw descriptor_mismatch("mu must lie in the center " + b->center()->name());
  if (mu.is_zero()) throw parameter_error("second construction: mu must be a unit");
  if (!(b->norm(u) == mu * conj(mu)))
    throw parameter_error("second construction: N(u) = " + b->norm(u).str() +
                          " differs from mu conj(mu) = " + (mu * conj(mu)).str());
  s.mu = mu;
  s.sigma_u = sigma->twist(u);

  const Nullspace& ns = sigma->sym_space();
  s.herm_basis = ns.basis;
  s.herm_free = ns.free_cols;
  if (2 * s.herm_dim() != b->kdim())
    throw parameter_error("symmetric part of " + b->name() + " has unexpected dimension");

  std::size_t dim = s.herm_dim() + b->kdim();
  SecondConstruction sv = s;
  auto norm = [sv](const QVec& v) {
    auto [bb, x] = sv.unpack(v);
    const auto& B = sv.B;
    D3Elt xusx = B->mul(x, B->mul(sv.u, sv.sigma->apply(x)));
    Rational n1 = base_value(B->norm(bb));
    Rational n2 = trace_down(sv.mu * B->norm(x));
    Rational n3 = base_value(B->trace(B->mul(bb, xusx)));
    return n1 + n2 - n3;
  };
  auto sharp = [sv](const QVec& v) {
    auto [bb, x] = sv.unpack(v);
    const auto& B = sv.B;
    D3Elt sx = sv.sigma->apply(x);
    D3Elt b1 = B->sub(B->adjoint(bb), B->mul(x, B->mul(sv.u, sx)));
    D3Elt x1 = B->sub(B->smul_center(conj(sv.mu), B->mul(B->adjoint(sx), sv.u_inv)),
                      B->mul(bb, x));
    return sv.pack(b1, x1);
  };
  QVec base = s.pack(b->unit(), b->zero());
  s.J = CubicNormStructure::make(dim, base, norm, sharp, "second(" + b->name() + ")");
  return s;
}

// Reduced model: 3x3 matrices (alpha_i on the diagonal, octonions a, b, c
// off it) twisted by scalars gamma = (g1, g2, g3):
//   N = a1 a2 a3 - g2 g3 a1 n(a) - g3 g1 a2 n(b) - g1 g2 a3 n(c) + g1 g2 g3 t(abc)
struct ReducedConstruction {
  OctonionAlgebra C;
  std::array<Rational, 3> gamma;
  CnsPtr J;

  QVec pack(const std::array<Rational, 3>& alpha, const OctElt& a, const OctElt& b,
            const OctElt& cc) const {
    QVec v(27);
    for (int i = 0; i < 3; ++i) v[i] = alpha[i];
    for (int i = 0; i < 8; ++i) {
      v[3 + i] = a[i];
      v[11 + i] = b[i];
      v[19 + i] = cc[i];
    }
    return v;
  }

  void unpack(const QVec& v, std::array<Rational, 3>& alpha, OctElt& a, OctElt& b,
              OctElt& cc) const {
    for (int i = 0; i < 3; ++i) alpha[i] = v[i];
    for (int i = 0; i < 8; ++i) {
      a[i] = v[3 + i];
      b[i] = v[11 + i];
      cc[i] = v[19 + i];
    }
  }
};

inline ReducedConstruction build_reduced(const OctonionAlgebra& c,
                                         const std::array<Rational, 3>& gamma) {
  for (const auto& g : gamma)
    if (g == 0) throw parameter_error("reduced model: gamma entries must be units");
  ReducedConstruction r{c, gamma, nullptr};
  ReducedConstruction rv = r;
  const Rational g1 = gamma[0], g2 = gamma[1], g3 = gamma[2];
  auto norm = [rv, g1, g2, g3](const QVec& v) {
    std::array<Rational, 3> al;
    OctElt a, b, cc;
    rv.unpack(v, al, a, b, cc);
    const auto& C = rv.C;
    Rational t_abc = C.trace(C.mul(C.mul(a, b), cc));
    return al[0] * al[1] * al[2] - g2 * g3 * al[0] * C.norm(a) -
           g3 * g1 * al[1] * C.norm(b) - g1 * g2 * al[2] * C.norm(cc) +
           g1 * g2 * g3 * t_abc;
  };
  auto sharp = [rv, g1, g2, g3](const QVec& v) {
    std::array<Rational, 3> al;
    OctElt a, b, cc;
    rv.unpack(v, al, a, b, cc);
    const auto& C = rv.C;
    std::array<Rational, 3> al2{al[1] * al[2] - g2 * g3 * C.norm(a),
                                al[2] * al[0] - g3 * g1 * C.norm(b),
                                al[0] * al[1] - g1 * g2 * C.norm(cc)};
    auto smul = [&](const Rational& s, OctElt x) {
      for (auto& e : x) e = s * e;
      return x;
    };
    auto osub = [&](OctElt x, const OctElt& y) {
      for (int i = 0; i < 8; ++i) x[i] = x[i] - y[i];
      return x;
    };
    OctElt a2 = osub(smul(g1, C.conj(C.mul(b, cc))), smul(al[0], a));
    OctElt b2 = osub(smul(g2, C.conj(C.mul(cc, a))), smul(al[1], b));
    OctElt c2 = osub(smul(g3, C.conj(C.mul(a, b))), smul(al[2], cc));
    return rv.pack(al2, a2, b2, c2);
  };
  QVec base = qvec_zero(27);
  base[0] = base[1] = base[2] = 1;
  r.J = CubicNormStructure::make(
      27, base, norm, sharp,
      "reduced(" + c.name() + "; " + rat_str(g1) + "," + rat_str(g2) + "," + rat_str(g3) + ")");
  return r;
}

// The first construction for (D, lambda) is the second construction for
// (D x D-op, exchange, 1, (lambda, lambda^-1)) under
//   (x, y, z) |-> ((x, x-op), (y, z-op)).
struct BridgeMap {
  FirstConstruction from;
  SecondConstruction to;
  QMat M;

  QVec apply_vec(const QVec& v) const { return mul(M, v); }
};

inline BridgeMap first_as_second(const FirstConstruction& f) {
  BridgeMap br;
  br.from = f;
  auto bop = Degree3Algebra::product_opposite(f.D);
  auto sig = Involution::exchange(bop);
  Scalar mu(bop->center(), {f.lambda, Rational(1) / f.lambda});
  br.to = build_second(bop, sig, bop->unit(), mu);
  std::size_t n = f.J->dim;
  if (br.to.J->dim != n) throw certification_error("bridge dimension mismatch");
  QMat m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto [x, y, z] = f.unpack(f.J->basis(j));
    QVec col = br.to.pack(bop->join_pair(x, x), bop->join_pair(y, z));
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = col[i];
  }
  br.M = std::move(m);
  return br;
}

// Inclusion of a cubic-tower model J(L, lambda) into J(D, lambda) where
// D is a cyclic algebra built on the same tower L (L sits in D as the
// degree-0 slot). Norm, adjoint and base point are preserved; checked on
// construction.
struct SummandEmbedding {
  CnsPtr sub, amb;
  QMat inj;   // amb.dim x sub.dim, a coordinate inclusion
  QMat proj;  // left inverse

  QVec up(const QVec& v) const { return mul(inj, v); }
  QVec down(const QVec& v) const { return mul(proj, v); }
};

inline SummandEmbedding embed_etale_in_cyclic(const FirstConstruction& small,
                                              const FirstConstruction& big) {
  if (small.D->kind != Degree3Algebra::Kind::cubic_etale ||
      big.D->kind != Degree3Algebra::Kind::cyclic)
    throw parameter_error("embedding expects a cubic tower inside a cyclic algebra");
  if (!(*small.D->L == *big.D->L))
    throw parameter_error("embedding: the towers differ");
  if (small.lambda != big.lambda) throw parameter_error("embedding: lambda differs");

  SummandEmbedding e;
  e.sub = small.J;
  e.amb = big.J;
  auto lift = [&](const D3Elt& l) {
    D3Elt d = big.D->zero();
    d[0] = l[0];
    return d;
  };
  QMat m(big.J->dim, small.J->dim);
  for (std::size_t j = 0; j < small.J->dim; ++j) {
    auto [x, y, z] = small.unpack(small.J->basis(j));
    QVec col = big.pack(lift(x), lift(y), lift(z));
    for (std::size_t i = 0; i < big.J->dim; ++i) m.at(i, j) = col[i];
  }
  e.inj = m;
  e.proj = m.transpose();
  if (!(mul(e.proj, e.inj) == QMat::identity(small.J->dim)))
    throw certification_error("embedding is not a coordinate inclusion");
  if (!(e.up(small.J->c) == big.J->c))
    throw certification_error("embedding does not preserve the base point");
  Sampler smp(derive_seed(7, "embedding-check"));
  for (int t = 0; t < 16; ++t) {
    QVec v = smp.vec(small.J->dim);
    if (small.J->N(v) != big.J->N(e.up(v)))
      throw certification_error("embedding does not preserve the norm");
    if (!(e.up(small.J->sharp(v)) == big.J->sharp(e.up(v))))
      throw certification_error("embedding does not commute with the adjoint");
  }
  return e;
}

}  // namespace albert
