#include <catch2/catch_amalgamated.hpp>

#include "albert/constructions.hpp"
#include "albert/cubic_norm.hpp"
#include "albert/degree3.hpp"
#include "albert/involution.hpp"
#include "albert/octonion.hpp"

using namespace albert;

namespace {

D3Elt rand_elt(const D3Ptr& d, Sampler& s) {
  QVec v(d->kdim());
  for (auto& x : v) x = s.rational();
  return d->from_kvec(v);
}

OctElt rand_oct(Sampler& s) {
  OctElt x;
  for (auto& v : x) v = s.rational();
  return x;
}

}  // namespace

TEST_CASE("split octonions: norm is multiplicative, conjugation reverses",
          "[octonion]") {
  auto C = OctonionAlgebra::zorn();
  CHECK(C.norm(C.unit()) == 1);
  Sampler s(101);
  for (int i = 0; i < 50; ++i) {
    OctElt x = rand_oct(s), y = rand_oct(s);
    CHECK(C.norm(C.mul(x, y)) == C.norm(x) * C.norm(y));
    OctElt lhs = C.conj(C.mul(x, y)), rhs = C.mul(C.conj(y), C.conj(x));
    CHECK(lhs == rhs);
    // x conj(x) = n(x) 1
    OctElt p = C.mul(x, C.conj(x)), n1 = C.unit();
    for (auto& v : n1) v *= C.norm(x);
    CHECK(p == n1);
  }
}

TEST_CASE("doubled quaternions give an anisotropic norm", "[octonion]") {
  auto C = OctonionAlgebra::cayley_dickson(Rational(-1), Rational(-1), Rational(-1));
  OctElt ones;
  ones.fill(Rational(1));
  CHECK(C.norm(ones) == 8);  // sum of eight squares
  Sampler s(7);
  for (int i = 0; i < 200; ++i) {
    OctElt x = rand_oct(s);
    bool zero = true;
    for (const auto& v : x) zero = zero && v == 0;
    if (!zero) CHECK(C.norm(x) > 0);
  }
  for (int i = 0; i < 30; ++i) {
    OctElt x = rand_oct(s), y = rand_oct(s);
    CHECK(C.norm(C.mul(x, y)) == C.norm(x) * C.norm(y));
  }
}

TEST_CASE("3x3 matrices: determinant, adjugate and trace are classical",
          "[degree3]") {
  auto D = Degree3Algebra::matrix3(FieldDescriptor::rationals());
  // M = [[1,2,3],[0,1,4],[5,6,0]], det 1, inverse known in closed form
  D3Elt m = D->from_kvec({1, 2, 3, 0, 1, 4, 5, 6, 0});
  CHECK(base_value(D->norm(m)) == 1);
  CHECK(base_value(D->trace(m)) == 2);
  D3Elt adj = D->adjoint(m);
  CHECK(D->to_kvec(adj) == QVec({-24, 18, 5, 20, -15, -4, -5, 4, 1}));
  CHECK(D->eq(D->mul(m, adj), D->unit()));
  CHECK(D->eq(D->inverse(m), adj));
}

TEST_CASE("degree-3 algebras satisfy their characteristic identities",
          "[degree3]") {
  auto rho = std::array<Rational, 3>{Rational(-2), Rational(0), Rational(1)};
  std::vector<D3Ptr> algebras = {
      Degree3Algebra::matrix3(FieldDescriptor::rationals()),
      Degree3Algebra::matrix3(FieldDescriptor::quadratic(Rational(-1))),
      Degree3Algebra::cyclic(
          FieldDescriptor::cubic(Rational(-1), Rational(-2), Rational(1), rho),
          Rational(2)),
      Degree3Algebra::cubic_etale(
          FieldDescriptor::cubic(Rational(-1), Rational(-1), Rational(0))),
      Degree3Algebra::cubic_etale(FieldDescriptor::cubic_product()),
  };
  Sampler s(55);
  for (const auto& D : algebras) {
    INFO(D->name());
    CHECK(base_value(D->norm(D->unit())) == 1);
    for (int i = 0; i < 25; ++i) {
      D3Elt a = rand_elt(D, s), b = rand_elt(D, s);
      // reduced norm is multiplicative
      CHECK(D->norm(D->mul(a, b)) == D->norm(a) * D->norm(b));
      // a a^# = N(a) 1 and the adjoint is an antihomomorphism
      CHECK(D->eq(D->mul(a, D->adjoint(a)),
                  D->smul_center(D->norm(a), D->unit())));
      CHECK(D->eq(D->adjoint(D->mul(a, b)),
                  D->mul(D->adjoint(b), D->adjoint(a))));
      // Cayley-Hamilton: a^3 - t a^2 + s a - n = 0, s = t(a^#)
      D3Elt a2 = D->mul(a, a);
      D3Elt lhs = D->sub(D->mul(a2, a), D->smul_center(D->trace(a), a2));
      lhs = D->add(lhs, D->smul_center(D->trace(D->adjoint(a)), a));
      lhs = D->sub(lhs, D->smul_center(D->norm(a), D->unit()));
      CHECK(D->is_zero_elt(lhs));
    }
  }
}

TEST_CASE("division cyclic algebra has no zero divisors in sample", "[degree3]") {
  auto rho = std::array<Rational, 3>{Rational(-2), Rational(0), Rational(1)};
  auto D = Degree3Algebra::cyclic(
      FieldDescriptor::cubic(Rational(-1), Rational(-2), Rational(1), rho),
      Rational(2));
  Sampler s(9);
  for (int i = 0; i < 300; ++i) {
    D3Elt a = rand_elt(D, s);
    if (!D->is_zero_elt(a)) CHECK_FALSE(D->norm(a).is_zero());
  }
}

TEST_CASE("conjugate-transpose is an involution with 9-dimensional fixed space",
          "[involution]") {
  auto B = Degree3Algebra::matrix3(FieldDescriptor::quadratic(Rational(-1)));
  auto sig = Involution::conjugate_transpose(B);
  sig->validate();
  Sampler s(31);
  for (int i = 0; i < 40; ++i) {
    D3Elt a = rand_elt(B, s), b = rand_elt(B, s);
    CHECK(B->eq(sig->apply(sig->apply(a)), a));
    CHECK(B->eq(sig->apply(B->mul(a, b)), B->mul(sig->apply(b), sig->apply(a))));
    CHECK(B->norm(sig->apply(a)) == conj(B->norm(a)));
  }
  CHECK(sig->sym_space().basis.size() == 9);
  CHECK(sig->is_symmetric(B->unit()));
}

TEST_CASE("twisting by a symmetric unit keeps the involution property",
          "[involution]") {
  auto B = Degree3Algebra::matrix3(FieldDescriptor::quadratic(Rational(2)));
  auto sig = Involution::conjugate_transpose(B);
  // u = diag(1, 1, -1)
  QVec uv(B->kdim(), Rational(0));
  uv[0] = 1;
  uv[8] = 1;
  uv[16] = -1;
  D3Elt u = B->from_kvec(uv);
  auto sig_u = sig->twist(u);
  sig_u->validate();
  Sampler s(13);
  for (int i = 0; i < 30; ++i) {
    D3Elt a = rand_elt(B, s);
    CHECK(B->eq(sig_u->apply(sig_u->apply(a)), a));
  }
  CHECK(sig_u->sym_space().basis.size() == 9);
}

TEST_CASE("exchange on A x A-op fixes the diagonal", "[involution]") {
  auto D = Degree3Algebra::matrix3(FieldDescriptor::rationals());
  auto Bop = Degree3Algebra::product_opposite(D);
  auto sig = Involution::exchange(Bop);
  sig->validate();
  Sampler s(3);
  for (int i = 0; i < 20; ++i) {
    D3Elt x = rand_elt(D, s);
    D3Elt diag = Bop->join_pair(x, x);
    CHECK(sig->is_symmetric(diag));
  }
  CHECK(sig->sym_space().basis.size() == D->kdim());
}

TEST_CASE("every shipped model satisfies the norm-adjoint axioms",
          "[cubic_norm]") {
  auto F = build_first(Degree3Algebra::matrix3(FieldDescriptor::rationals()),
                       Rational(1, 2));
  auto R = build_reduced(OctonionAlgebra::zorn(), {1, 2, 3});
  auto B3 = Degree3Algebra::matrix3(FieldDescriptor::quadratic(Rational(-1)));
  auto S = build_second(B3, Involution::conjugate_transpose(B3), B3->unit(),
                        Scalar::one(B3->center()));
  for (const CnsPtr& j : {F.J, R.J, S.J}) {
    INFO(j->name);
    auto rep = j->verify_axioms(25, 77);
    for (const auto& ck : rep.checks) {
      INFO(ck.name << ": " << ck.witness);
      CHECK(ck.passed);
    }
    CHECK(rep.checks.size() == 9);
  }
}

TEST_CASE("the norm alone determines the adjoint", "[cubic_norm]") {
  // sharp_generic inverts the trace bilinear form against directional
  // derivatives of N; it never reads the stored adjoint
  auto F = build_first(Degree3Algebra::matrix3(FieldDescriptor::rationals()),
                       Rational(2));
  Sampler s(19);
  for (int i = 0; i < 40; ++i) {
    QVec x(F.J->dim);
    for (auto& v : x) v = s.rational();
    CHECK(F.J->sharp(x) == F.J->sharp_generic(x));
  }
}

TEST_CASE("trace form is symmetric and the base point has trace 3",
          "[cubic_norm]") {
  auto R = build_reduced(OctonionAlgebra::zorn(), {1, 1, 1});
  const auto& j = R.J;
  CHECK(j->trace_lin(j->c) == 3);
  Sampler s(23);
  for (int i = 0; i < 30; ++i) {
    QVec x(j->dim), y(j->dim);
    for (auto& v : x) v = s.rational();
    for (auto& v : y) v = s.rational();
    CHECK(j->trace_form(x, y) == j->trace_form(y, x));
    CHECK(j->cross(x, y) == j->cross(y, x));
  }
}

TEST_CASE("quadratic operator: matrix form, identity at c, inverses",
          "[cubic_norm]") {
  auto F = build_first(Degree3Algebra::matrix3(FieldDescriptor::rationals()),
                       Rational(3));
  const auto& j = F.J;
  CHECK(j->u_matrix(j->c).is_identity());
  Sampler s(47);
  for (int i = 0; i < 20; ++i) {
    QVec a(j->dim), x(j->dim);
    for (auto& v : a) v = s.rational();
    for (auto& v : x) v = s.rational();
    if (j->N(a) == 0) continue;
    CHECK(mul(j->u_matrix(a), x) == j->u_apply(a, x));
    QVec ai = j->inverse_elt(a);
    CHECK(j->u_apply(a, ai) == a);
    CHECK(j->N(ai) == Rational(1) / j->N(a));
    CHECK(mul(j->u_matrix(a), mul(j->u_matrix(ai), x)) == x);
  }
  QVec zero(j->dim, Rational(0));
  CHECK_THROWS_AS(j->inverse_elt(zero), not_invertible);
}

TEST_CASE("triple-sum model evaluates norm and adjoint in closed form",
          "[constructions]") {
  auto D = Degree3Algebra::matrix3(FieldDescriptor::rationals());
  auto F = build_first(D, Rational(2));
  D3Elt I = D->unit();
  // N(1,1,1) = 1 + 2 + 1/2 - t(1) = 1/2
  CHECK(F.J->N(F.pack(I, I, I)) == Rational(1, 2));
  // (1,1,1)^# = (0, -1/2, 1) componentwise multiples of 1
  QVec sh = F.J->sharp(F.pack(I, I, I));
  CHECK(sh == F.pack(D->zero(), D->smul_q(Rational(-1, 2), I), I));
  CHECK(F.J->N(F.J->c) == 1);
  CHECK(F.J->dim == 27);
  // lambda must be a unit and the center must be Q
  CHECK_THROWS_AS(build_first(D, Rational(0)), parameter_error);
  auto BQ = Degree3Algebra::matrix3(FieldDescriptor::quadratic(Rational(-1)));
  CHECK_THROWS_AS(build_first(BQ, Rational(1)), parameter_error);
}

TEST_CASE("involution model needs a symmetric invertible u and matching mu",
          "[constructions]") {
  auto B = Degree3Algebra::matrix3(FieldDescriptor::quadratic(Rational(-1)));
  auto sig = Involution::conjugate_transpose(B);
  auto S = build_second(B, sig, B->unit(), Scalar::one(B->center()));
  CHECK(S.J->dim == 27);
  CHECK(S.herm_dim() == 9);
  CHECK(S.J->N(S.pack(B->unit(), B->zero())) == 1);
  // u not symmetric: i*1 fails
  Scalar i(B->center(), {Rational(0), Rational(1)});
  CHECK_THROWS_AS(
      build_second(B, sig, B->embed_center(i), Scalar::one(B->center())),
      parameter_error);
}

TEST_CASE("diagonal model: norm of a diagonal element is the product",
          "[constructions]") {
  auto C = OctonionAlgebra::zorn();
  auto R = build_reduced(C, {1, 2, 3});
  QVec d = R.pack({Rational(2), Rational(-3), Rational(1, 2)}, C.zero_elt(),
                  C.zero_elt(), C.zero_elt());
  CHECK(R.J->N(d) == Rational(-3));
  CHECK(R.J->trace_lin(d) == Rational(-1, 2));
  CHECK(R.J->N(R.J->c) == 1);
  CHECK_THROWS_AS(build_reduced(C, {1, 0, 1}), parameter_error);
}

TEST_CASE("triple-sum model embeds in the exchange model", "[constructions]") {
  auto D = Degree3Algebra::matrix3(FieldDescriptor::rationals());
  auto F = build_first(D, Rational(1, 3));
  BridgeMap br = first_as_second(F);
  CHECK(br.apply_vec(F.J->c) == br.to.J->c);
  Sampler s(71);
  for (int i = 0; i < 60; ++i) {
    QVec x(F.J->dim);
    for (auto& v : x) v = s.rational();
    QVec y = br.apply_vec(x);
    CHECK(br.to.J->N(y) == F.J->N(x));
    CHECK(br.apply_vec(F.J->sharp(x)) == br.to.J->sharp(y));
  }
}

TEST_CASE("tower summand embeds in the cyclic model norm-compatibly",
          "[constructions]") {
  auto rho = std::array<Rational, 3>{Rational(-2), Rational(0), Rational(1)};
  auto L = FieldDescriptor::cubic(Rational(-1), Rational(-2), Rational(1), rho);
  auto big = build_first(Degree3Algebra::cyclic(L, Rational(2)), Rational(3));
  auto small = build_first(Degree3Algebra::cubic_etale(L), Rational(3));
  SummandEmbedding emb = embed_etale_in_cyclic(small, big);
  CHECK(emb.up(small.J->c) == big.J->c);
  Sampler s(29);
  for (int i = 0; i < 60; ++i) {
    QVec x(small.J->dim);
    for (auto& v : x) v = s.rational();
    QVec lifted = emb.up(x);
    CHECK(big.J->N(lifted) == small.J->N(x));
    CHECK(emb.down(lifted) == x);
    CHECK(emb.up(small.J->sharp(x)) == big.J->sharp(lifted));
  }
}
