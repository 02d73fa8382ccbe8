#include <catch2/catch_amalgamated.hpp>

#include "albert/field.hpp"
#include "albert/linalg.hpp"
#include "albert/poly.hpp"
#include "albert/rational.hpp"
#include "albert/rng.hpp"

using namespace albert;

TEST_CASE("rational literals parse exactly", "[rational]") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-7/2") == Rational(-7, 2));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(rat_str(parse_rational("-10/4")) == "-5/2");
  CHECK_THROWS_AS(parse_rational(""), parameter_error);
  CHECK_THROWS_AS(parse_rational("1/0"), parameter_error);
  CHECK_THROWS_AS(parse_rational("a/2"), parameter_error);
  CHECK_THROWS_AS(parse_rational("1.5"), parameter_error);
  CHECK_THROWS_AS(parse_rational("1/2/3"), parameter_error);
}

TEST_CASE("integer powers and square detection", "[rational]") {
  CHECK(pow_int(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow_int(Rational(2), -2) == Rational(1, 4));
  CHECK(pow_int(Rational(5), 0) == Rational(1));
  CHECK_THROWS_AS(pow_int(Rational(0), -1), not_invertible);
  CHECK(is_square(Rational(49, 4)));
  CHECK_FALSE(is_square(Rational(-4)));
  CHECK_FALSE(is_square(Rational(2)));
  CHECK(is_squarefree_integer(Integer(30)));
  CHECK_FALSE(is_squarefree_integer(Integer(12)));
  CHECK_FALSE(is_squarefree_integer(Integer(0)));
}

TEST_CASE("matrix inverse and determinant are exact", "[linalg]") {
  QMat m(3, 3);
  // det = 1, entries chosen so the inverse has large denominators upstream
  Rational vals[9] = {Rational(2), Rational(1, 3), Rational(-1), Rational(0),
                      Rational(1, 2), Rational(4),  Rational(1), Rational(-2),
                      Rational(3)};
  for (int i = 0; i < 9; ++i) m.a[static_cast<std::size_t>(i)] = vals[i];
  Rational d = det(m);
  REQUIRE(d != 0);
  QMat mi = inverse(m);
  CHECK(mul(m, mi).is_identity());
  CHECK(mul(mi, m).is_identity());
  CHECK(det(mi) == Rational(1) / d);

  QMat sing(2, 2);
  sing.at(0, 0) = 1;
  sing.at(0, 1) = 2;
  sing.at(1, 0) = 2;
  sing.at(1, 1) = 4;
  CHECK(det(sing) == 0);
  CHECK_THROWS_AS(inverse(sing), not_invertible);
}

TEST_CASE("nullspace basis spans the kernel", "[linalg]") {
  // rank 1: x + 2y - z = 0 in Q^3
  QMat m(1, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(0, 2) = -1;
  Nullspace ns = nullspace(m);
  REQUIRE(ns.basis.size() == 2);
  for (const auto& v : ns.basis) CHECK(is_zero(mul(m, v)));
}

TEST_CASE("polynomial interpolation at integer nodes", "[poly]") {
  // values of 2t^3 - t + 5 at t = 0..3
  std::vector<Rational> vals = {Rational(5), Rational(6), Rational(19),
                                Rational(56)};
  QPoly p = interpolate_at_nodes(vals);
  CHECK(p.coeff(3) == Rational(2));
  CHECK(p.coeff(2) == Rational(0));
  CHECK(p.coeff(1) == Rational(-1));
  CHECK(p.coeff(0) == Rational(5));
  CHECK(p.eval(Rational(1, 2)) == Rational(19, 4));
}

TEST_CASE("rational roots are found exactly and exhaustively", "[poly]") {
  // (2t - 1)(t - 3)(t^2 + 1): rational roots 1/2 and 3 only
  QPoly a{{Rational(-1), Rational(2)}};
  QPoly b{{Rational(-3), Rational(1)}};
  QPoly c{{Rational(1), Rational(0), Rational(1)}};
  QPoly p = a * b * c;
  auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Rational(1, 2));
  CHECK(roots[1] == Rational(3));
  CHECK(rational_roots(QPoly{{Rational(1), Rational(0), Rational(1)}}).empty());
}

TEST_CASE("polynomial printer", "[poly]") {
  QPoly p{{Rational(1, 3), Rational(-1), Rational(2)}};
  CHECK(poly_str(p) == "2 t^2 - t + 1/3");
  CHECK(poly_str(QPoly{{Rational(0)}}) == "0");
  CHECK(poly_str(QPoly{{Rational(-1), Rational(2)}}) == "2 t - 1");
}

TEST_CASE("quadratic field arithmetic", "[field]") {
  auto K = FieldDescriptor::quadratic(Rational(-1));
  Scalar i(K, {Rational(0), Rational(1)});
  Scalar a(K, {Rational(3), Rational(-2)});
  CHECK((i * i).c[0] == Rational(-1));
  CHECK((i * i).c[1] == Rational(0));
  CHECK((a * inverse(a)) == Scalar::one(K));
  CHECK(conj(a).c[1] == Rational(2));
  CHECK(norm_down(a) == Rational(13));
  Scalar b(K, {Rational(1), Rational(5)});
  CHECK(norm_down(a * b) == norm_down(a) * norm_down(b));
  CHECK_THROWS_AS(inverse(Scalar::zero(K)), not_invertible);
}

TEST_CASE("split quadratic has zero divisors but unit inverses", "[field]") {
  auto K = FieldDescriptor::split_quadratic();
  Scalar e1(K, {Rational(1), Rational(0)});
  Scalar e2(K, {Rational(0), Rational(1)});
  CHECK((e1 * e2).is_zero());
  CHECK_THROWS_AS(inverse(e1), not_invertible);
  Scalar a(K, {Rational(2), Rational(-3)});
  CHECK(a * inverse(a) == Scalar::one(K));
  CHECK(norm_down(a) == Rational(-6));
  CHECK(conj(a).c[0] == Rational(-3));
}

TEST_CASE("cubic field arithmetic follows the minimal polynomial", "[field]") {
  // x^3 - x - 1, theta a root
  auto L = FieldDescriptor::cubic(Rational(-1), Rational(-1), Rational(0));
  Scalar th(L, {Rational(0), Rational(1), Rational(0)});
  Scalar th3 = th * th * th;
  CHECK(th3 == th + Scalar::one(L));
  Scalar a(L, {Rational(1), Rational(2), Rational(-1)});
  CHECK(a * inverse(a) == Scalar::one(L));
  CHECK(norm_down(a * th) == norm_down(a) * norm_down(th));
  // reducible cubics are rejected
  CHECK_THROWS_AS(FieldDescriptor::cubic(Rational(0), Rational(-1), Rational(0)),
                  parameter_error);
}

TEST_CASE("cubic product is the split case", "[field]") {
  auto L = FieldDescriptor::cubic_product();
  Scalar a(L, {Rational(2), Rational(3), Rational(5)});
  CHECK(norm_down(a) == Rational(30));
  CHECK(a * inverse(a) == Scalar::one(L));
  Scalar z(L, {Rational(0), Rational(3), Rational(5)});
  CHECK_THROWS_AS(inverse(z), not_invertible);
}

TEST_CASE("generator streams are reproducible and label-separated", "[rng]") {
  SplitMix64 g1(42), g2(42);
  for (int i = 0; i < 100; ++i) REQUIRE(g1.next() == g2.next());
  CHECK(derive_seed(7, "a") != derive_seed(7, "b"));
  CHECK(derive_seed(7, "a") == derive_seed(7, "a"));
  CHECK(derive_seed(7, "a") != derive_seed(8, "a"));
}

TEST_CASE("samplers draw small exact rationals", "[rng]") {
  Sampler s(11);
  for (int i = 0; i < 500; ++i) {
    Rational r = s.rational();
    CHECK(numerator(r) >= -4);
    CHECK(numerator(r) <= 4);
    CHECK(denominator(r) >= 1);
    CHECK(denominator(r) <= 3);
  }
  for (int i = 0; i < 100; ++i) CHECK(s.nonzero_rational() != 0);
  Sampler t1(5), t2(5);
  for (int i = 0; i < 50; ++i) REQUIRE(t1.rational() == t2.rational());
}
