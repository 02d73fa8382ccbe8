#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "albert/constructions.hpp"
#include "albert/structure_map.hpp"

namespace albert {

inline QMat matrix_from_images(std::size_t dim,
                               const std::function<QVec(const QVec&)>& fn) {
  QMat m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    QVec e = qvec_zero(dim);
    e[j] = 1;
    QVec col = fn(e);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = col[i];
  }
  return m;
}

// g sigma(g) must be a central scalar (g is a similitude of the form);
// returns that scalar.
inline Scalar similitude_factor(const SecondConstruction& S, const D3Elt& g) {
  D3Elt p = S.B->mul(g, S.sigma->apply(g));
  if (!S.B->is_central(p))
    throw parameter_error("g sigma(g) is not central: " + S.B->elt_str(p));
  return S.B->central_value(p);
}

// Automorphism extension: (a, b) |-> (g a g^-1, lambda^-1 sigma(g)^# b q)
// for g with g sigma(g) = lambda in k*, q a sigma_u-unitary with
// N(q) = conj(nu)^-1 nu, nu = N(g). Certified factor 1, fixes c.
inline StructureMap extend_aut_second(const SecondConstruction& S, const D3Elt& g,
                                      const D3Elt& q, std::uint64_t seed) {
  const auto& B = S.B;
  Scalar lam_c = similitude_factor(S, g);
  if (!in_base(lam_c))
    throw parameter_error("g sigma(g) lies in K but not in k: " + lam_c.str());
  Rational lam = base_value(lam_c);
  if (lam == 0) throw parameter_error("g is not invertible");
  if (!S.sigma_u->is_unitary(q))
    throw parameter_error("q is not unitary for the twisted involution");
  Scalar nu_g = B->norm(g);
  if (!(B->norm(q) == inverse(conj(nu_g)) * nu_g))
    throw parameter_error("N(q) = " + B->norm(q).str() +
                          " differs from conj(N(g))^-1 N(g)");
  D3Elt ginv = B->inverse(g);
  D3Elt sg_sharp = B->adjoint(S.sigma->apply(g));
  Rational lam_inv = 1 / lam;
  auto fn = [&](const QVec& v) {
    auto [a, b] = S.unpack(v);
    D3Elt a1 = B->mul(g, B->mul(a, ginv));
    D3Elt b1 = B->smul_q(lam_inv, B->mul(sg_sharp, B->mul(b, q)));
    return S.pack(a1, b1);
  };
  StructureMap f =
      certify_similarity(S.J, matrix_from_images(S.J->dim, fn), "aut2", seed);
  if (f.nu != 1)
    throw certification_error("automorphism extension has factor " + rat_str(f.nu));
  if (!(f.apply_vec(S.J->c) == S.J->c))
    throw certification_error("automorphism extension moves the base point");
  return f;
}

// Pointwise norm-similarity extension (*): (b, x) |-> gamma (g b sigma(g),
// sigma(g)^# x q). The sigma_of_b flag deliberately evaluates the corrupted
// variant g b sigma(b) instead; it is not a linear map and must be rejected
// by the callers' checks.
inline QVec extend_sim_second_apply(const SecondConstruction& S, const Rational& gamma,
                                    const D3Elt& g, const D3Elt& q, const QVec& v,
                                    bool sigma_of_b = false) {
  const auto& B = S.B;
  auto [b, x] = S.unpack(v);
  D3Elt right = sigma_of_b ? S.sigma->apply(b) : S.sigma->apply(g);
  D3Elt b1 = B->smul_q(gamma, B->mul(g, B->mul(b, right)));
  D3Elt sg_sharp = B->adjoint(S.sigma->apply(g));
  D3Elt x1 = B->smul_q(gamma, B->mul(sg_sharp, B->mul(x, q)));
  return S.pack(b1, x1);
}

// Certified form of (*) with the exact factor identity
// nu = gamma^3 N(g) conj(N(g)).
inline StructureMap extend_sim_second(const SecondConstruction& S, const Rational& gamma,
                                      const D3Elt& g, const D3Elt& q,
                                      std::uint64_t seed) {
  const auto& B = S.B;
  if (gamma == 0) throw parameter_error("gamma must be a unit");
  if (!S.sigma_u->is_unitary(q))
    throw parameter_error("q is not unitary for the twisted involution");
  D3Elt sg = S.sigma->apply(g);
  Scalar expected_nq = B->norm(B->mul(B->inverse(sg), g));
  if (!(B->norm(q) == expected_nq))
    throw parameter_error("N(q) = " + B->norm(q).str() + " differs from N(sigma(g)^-1 g) = " +
                          expected_nq.str());
  auto fn = [&](const QVec& v) { return extend_sim_second_apply(S, gamma, g, q, v); };
  StructureMap f =
      certify_similarity(S.J, matrix_from_images(S.J->dim, fn), "sim2", seed);
  Scalar nu_g = B->norm(g);
  Rational expected = gamma * gamma * gamma * base_value(nu_g * conj(nu_g));
  if (f.nu != expected)
    throw certification_error("extension factor " + rat_str(f.nu) +
                              " differs from gamma^3 N(g) conj(N(g)) = " +
                              rat_str(expected));
  return f;
}

// (b, x) |-> (b, x q') for q' special unitary (twisted involution, norm 1):
// the automorphisms fixing the hermitian summand pointwise.
inline StructureMap aut_fixing_hermitian(const SecondConstruction& S, const D3Elt& q1,
                                         std::uint64_t seed) {
  const auto& B = S.B;
  if (!S.sigma_u->is_unitary(q1))
    throw parameter_error("q' is not unitary for the twisted involution");
  if (!(B->norm(q1) == Scalar::one(B->center())))
    throw parameter_error("q' has reduced norm " + B->norm(q1).str() + ", expected 1");
  auto fn = [&](const QVec& v) {
    auto [b, x] = S.unpack(v);
    return S.pack(b, B->mul(x, q1));
  };
  StructureMap f =
      certify_similarity(S.J, matrix_from_images(S.J->dim, fn), "fix-herm", seed);
  if (f.nu != 1 || !(f.apply_vec(S.J->c) == S.J->c))
    throw certification_error("hermitian-fixing map is not an automorphism");
  return f;
}

// First-construction automorphism extension:
// (x, y, z) |-> (g x g^-1, g y h^-1, h z g^-1) for N(g) = N(h), both units.
inline StructureMap extend_aut_first(const FirstConstruction& F, const D3Elt& g,
                                     const D3Elt& h, std::uint64_t seed) {
  const auto& D = F.D;
  Scalar ng = D->norm(g), nh = D->norm(h);
  if (!(ng == nh)) throw parameter_error("N(g) != N(h)");
  D3Elt ginv = D->inverse(g), hinv = D->inverse(h);
  auto fn = [&](const QVec& v) {
    auto [x, y, z] = F.unpack(v);
    return F.pack(D->mul(g, D->mul(x, ginv)), D->mul(g, D->mul(y, hinv)),
                  D->mul(h, D->mul(z, ginv)));
  };
  StructureMap f =
      certify_similarity(F.J, matrix_from_images(F.J->dim, fn), "aut1", seed);
  if (f.nu != 1 || !(f.apply_vec(F.J->c) == F.J->c))
    throw certification_error("first-construction extension is not an automorphism");
  return f;
}

// First-construction similarity extension:
// (x, y, z) |-> gamma (a x b, b^# y c, c^-1 z a^#) for N(a) = N(b) N(c);
// factor gamma^3 N(a) N(b) exactly.
inline StructureMap extend_sim_first(const FirstConstruction& F, const Rational& gamma,
                                     const D3Elt& a, const D3Elt& b, const D3Elt& c,
                                     std::uint64_t seed) {
  const auto& D = F.D;
  if (gamma == 0) throw parameter_error("gamma must be a unit");
  Scalar na = D->norm(a), nb = D->norm(b), nc = D->norm(c);
  if (!(na == nb * nc)) throw parameter_error("N(a) != N(b) N(c)");
  D3Elt cinv = D->inverse(c);
  D3Elt bsharp = D->adjoint(b), asharp = D->adjoint(a);
  auto fn = [&](const QVec& v) {
    auto [x, y, z] = F.unpack(v);
    D3Elt x1 = D->smul_q(gamma, D->mul(a, D->mul(x, b)));
    D3Elt y1 = D->smul_q(gamma, D->mul(bsharp, D->mul(y, c)));
    D3Elt z1 = D->smul_q(gamma, D->mul(cinv, D->mul(z, asharp)));
    return F.pack(x1, y1, z1);
  };
  StructureMap f =
      certify_similarity(F.J, matrix_from_images(F.J->dim, fn), "sim1", seed);
  Rational expected = gamma * gamma * gamma * na.c[0] * nb.c[0];
  if (f.nu != expected)
    throw certification_error("extension factor " + rat_str(f.nu) +
                              " differs from gamma^3 N(a) N(b) = " + rat_str(expected));
  return f;
}

// The parameter triples acting as the identity: for alpha in K*,
// (gamma, g, q) = (N_K(alpha)^-1, alpha 1, (conj(alpha)^-1 alpha) 1).
struct KernelTriple {
  Rational gamma;
  D3Elt g, q;
};

inline KernelTriple stab_kernel_element(const SecondConstruction& S,
                                        const Scalar& alpha) {
  if (alpha.is_zero()) throw parameter_error("alpha must be a unit");
  Scalar nk = alpha * conj(alpha);
  KernelTriple t;
  t.gamma = 1 / base_value(nk);
  t.g = S.B->embed_center(alpha);
  t.q = S.B->embed_center(inverse(conj(alpha)) * alpha);
  return t;
}

// A sigma-unitary q with N(q) = lambda, for lambda of center norm 1.
// Constructive in the matrix and split cases, bounded search otherwise.
inline D3Elt unitary_with_norm(const InvPtr& sig, const Scalar& lambda,
                               std::uint64_t seed = 0, int attempts = 64) {
  const auto& B = sig->B;
  if (!(*lambda.F == *B->center()))
    throw descriptor_mismatch("lambda must lie in the center of " + B->name());
  if (!(lambda * conj(lambda) == Scalar::one(lambda.F)))
    throw parameter_error("lambda conj(lambda) != 1: " + lambda.str());
  if (B->kind == Degree3Algebra::Kind::matrix3) {
    D3Elt q = B->unit();
    q[0] = lambda;
    if (sig->is_unitary(q) && B->norm(q) == lambda) return q;
  }
  if (B->kind == Degree3Algebra::Kind::product_opposite) {
    const auto& D = B->inner;
    Rational l1 = lambda.c[0];
    D3Elt w;
    bool have = false;
    if (D->kind == Degree3Algebra::Kind::matrix3) {
      w = D->unit();
      w[0] = Scalar(D->F, {l1});
      have = true;
    } else if (l1 * l1 * l1 == l1) {  // +-1 or 0; 0 already excluded
      w = D->smul_q(l1, D->unit());
      have = true;
    }
    if (have && base_value(D->norm(w)) == l1) {
      D3Elt q = B->join_pair(w, D->inverse(w));
      if (sig->is_unitary(q) && B->norm(q) == lambda) return q;
    }
  }
  Sampler smp(derive_seed(seed, "unitary-with-norm"));
  const Nullspace& sym = sig->sym_space();
  for (int t = 0; t < attempts; ++t) {
    QVec hv = qvec_zero(B->kdim());
    for (const auto& bvec : sym.basis) hv = hv + smp.rational() * bvec;
    D3Elt w = B->from_kvec(hv);
    Scalar beta = Scalar::zero(B->center());
    for (auto& cc : beta.c) cc = smp.rational();
    w = B->add(w, B->embed_center(beta));
    if (B->norm(w).is_zero()) continue;
    D3Elt q = B->mul(B->inverse(sig->apply(w)), w);
    if (sig->is_unitary(q) && B->norm(q) == lambda) return q;
  }
  throw search_exhausted("no unitary with norm " + lambda.str() + " found for " +
                         B->name());
}

// Factorization g = z s with z in K 1 + H(B, sigma) (hence sigma-normal)
// and s symmetric, both invertible: pick s0 in H(B, sigma) with
// g s0 in K 1 + H(B, sigma), then z = g s0, s = s0^-1.
struct FactorPair {
  D3Elt z, s;
};

inline FactorPair yanchevskii_factor(const SecondConstruction& S, const D3Elt& g,
                                     std::uint64_t seed = 0, int attempts = 40) {
  const auto& B = S.B;
  if (B->norm(g).is_zero()) throw parameter_error("factorization needs invertible g");
  std::size_t n = B->kdim();
  const auto& H = S.herm_basis;
  std::size_t hd = H.size();

  // columns: g h_i for the symmetric basis, then -(K 1 + H) spanning set
  std::vector<QVec> v2;
  for (std::size_t i = 0; i < 2; ++i) {
    Scalar e = Scalar::zero(B->center());
    e.c[i] = 1;
    v2.push_back(B->to_kvec(B->embed_center(e)));
  }
  for (const auto& h : H) v2.push_back(h);
  QMat A(n, hd + v2.size());
  for (std::size_t j = 0; j < hd; ++j) {
    QVec col = B->to_kvec(B->mul(g, B->from_kvec(H[j])));
    for (std::size_t i = 0; i < n; ++i) A.at(i, j) = col[i];
  }
  for (std::size_t j = 0; j < v2.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) A.at(i, hd + j) = -v2[j][i];
  Nullspace ns = nullspace(A);

  auto s0_from = [&](const QVec& combo) {
    QVec hv = qvec_zero(n);
    for (std::size_t i = 0; i < hd; ++i) hv = hv + combo[i] * H[i];
    return B->from_kvec(hv);
  };
  auto finish = [&](const D3Elt& s0) {
    FactorPair fp;
    fp.z = B->mul(g, s0);
    fp.s = B->inverse(s0);
    if (!S.sigma->is_symmetric(fp.s))
      throw certification_error("factor s is not symmetric");
    D3Elt sz = S.sigma->apply(fp.z);
    if (!B->eq(B->mul(fp.z, sz), B->mul(sz, fp.z)))
      throw certification_error("factor z is not normal");
    if (!B->eq(B->mul(fp.z, fp.s), g))
      throw certification_error("factorization does not recover g");
    return fp;
  };
  for (const auto& base : ns.basis) {
    D3Elt s0 = s0_from(base);
    if (!B->is_zero_elt(s0) && !B->norm(s0).is_zero()) return finish(s0);
  }
  Sampler smp(derive_seed(seed, "factor-search"));
  for (int t = 0; t < attempts; ++t) {
    QVec combo = qvec_zero(hd + v2.size());
    for (const auto& base : ns.basis) combo = combo + smp.rational() * base;
    D3Elt s0 = s0_from(combo);
    if (!B->is_zero_elt(s0) && !B->norm(s0).is_zero()) return finish(s0);
  }
  throw search_exhausted("no invertible symmetric factor found for g = " +
                         B->elt_str(g));
}

// The map carrying an invertible tower element a to the base point of the
// three-slot tower model: R_N U_(0,0,1) U_(0,w,0). Two published shapes of
// w are implemented; eval_chi reports which one works.
enum class ChiVariant { scaled_element, unit_scaled };

inline StructureMap chi_map(const FirstConstruction& F, const D3Elt& a,
                            ChiVariant variant) {
  const auto& D = F.D;
  if (D->kind != Degree3Algebra::Kind::cubic_etale)
    throw parameter_error("chi is defined on the tower model");
  Rational na = D->norm(a).c[0];
  if (na == 0) throw not_invertible("chi needs an invertible tower element");
  D3Elt w = variant == ChiVariant::scaled_element ? D->smul_q(1 / na, a)
                                                  : D->smul_q(1 / na, D->unit());
  QVec e_z = F.pack(D->zero(), D->zero(), D->unit());
  QVec e_w = F.pack(D->zero(), w, D->zero());
  StructureMap m = compose(u_operator_map(F.J, e_z), u_operator_map(F.J, e_w));
  return compose(scalar_map(F.J, na), m);
}

}  // namespace albert
