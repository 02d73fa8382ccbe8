#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "albert/error.hpp"
#include "albert/linalg.hpp"
#include "albert/rational.hpp"

namespace albert {

using OctElt = std::array<Rational, 8>;

// Octonion algebra over Q with its quadratic norm form. Two coordinatizations:
//  - zorn: split vector matrices [[a, v], [w, b]], basis order
//    (e1, e2, u1, u2, u3, w1, w2, w3), n = ab - <v,w>;
//  - cayley_dickson: doubling of the quaternion algebra (alpha, beta) by delta,
//    basis (1, i, j, ij, l, il, jl, (ij)l), n = <1,-a,-b,ab> perp -d<...>.
class OctonionAlgebra {
 public:
  enum class Kind { zorn, cayley_dickson };

  Kind kind;
  Rational alpha, beta, delta;

  static OctonionAlgebra zorn() { return OctonionAlgebra(Kind::zorn, 0, 0, 0); }

  static OctonionAlgebra cayley_dickson(const Rational& a, const Rational& b,
                                        const Rational& d) {
    if (a == 0 || b == 0 || d == 0)
      throw parameter_error("cayley_dickson: structure constants must be nonzero");
    return OctonionAlgebra(Kind::cayley_dickson, a, b, d);
  }

  bool operator==(const OctonionAlgebra& o) const {
    return kind == o.kind && alpha == o.alpha && beta == o.beta && delta == o.delta;
  }

  OctElt zero_elt() const { return make(); }

  OctElt unit() const {
    OctElt e = make();
    if (kind == Kind::zorn) {
      e[0] = 1;
      e[1] = 1;
    } else {
      e[0] = 1;
    }
    return e;
  }

  OctElt mul(const OctElt& x, const OctElt& y) const {
    OctElt r = make();
    for (int i = 0; i < 8; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < 8; ++j) {
        if (y[j] == 0) continue;
        Rational f = x[i] * y[j];
        for (const auto& [k, c] : table_[i][j]) r[k] += f * c;
      }
    }
    return r;
  }

  Rational trace(const OctElt& x) const {
    if (kind == Kind::zorn) return x[0] + x[1];
    return 2 * x[0];
  }

  OctElt conj(const OctElt& x) const {
    Rational t = trace(x);
    OctElt u = unit(), r = make();
    for (int i = 0; i < 8; ++i) r[i] = t * u[i] - x[i];
    return r;
  }

  Rational norm(const OctElt& x) const {
    if (kind == Kind::zorn)
      return x[0] * x[1] - (x[2] * x[5] + x[3] * x[6] + x[4] * x[7]);
    return x[0] * x[0] - alpha * x[1] * x[1] - beta * x[2] * x[2] +
           alpha * beta * x[3] * x[3] -
           delta * (x[4] * x[4] - alpha * x[5] * x[5] - beta * x[6] * x[6] +
                    alpha * beta * x[7] * x[7]);
  }

  std::string name() const {
    if (kind == Kind::zorn) return "zorn";
    return "cayley-dickson(" + rat_str(alpha) + "," + rat_str(beta) + "," +
           rat_str(delta) + ")";
  }

 private:
  // table_[i][j] = products of basis units as sparse (index, coeff) lists
  std::array<std::array<std::vector<std::pair<int, Rational>>, 8>, 8> table_;

  static OctElt make() {
    OctElt e;
    e.fill(Rational(0));
    return e;
  }

  OctonionAlgebra(Kind k, Rational a, Rational b, Rational d)
      : kind(k), alpha(std::move(a)), beta(std::move(b)), delta(std::move(d)) {
    if (kind == Kind::zorn)
      build_zorn();
    else
      build_cayley_dickson();
  }

  void put(int i, int j, int k, Rational c) {
    if (c != 0) table_[i][j].push_back({k, std::move(c)});
  }

  // [[a1,v1],[w1,b1]][[a2,v2],[w2,b2]] =
  //   [[a1 a2 + <v1,w2>, a1 v2 + b2 v1 - w1 x w2],
  //    [a2 w1 + b1 w2 + v1 x v2, b1 b2 + <w1,v2>]]
  void build_zorn() {
    const int E1 = 0, E2 = 1, U = 2, W = 5;  // U+i, W+i for the vector slots
    put(E1, E1, E1, 1);
    put(E2, E2, E2, 1);
    for (int i = 0; i < 3; ++i) {
      put(E1, U + i, U + i, 1);   // a1 v2
      put(U + i, E2, U + i, 1);   // b2 v1
      put(E2, W + i, W + i, 1);   // b1 w2
      put(W + i, E1, W + i, 1);   // a2 w1
      put(U + i, W + i, E1, 1);   // <v1,w2>
      put(W + i, U + i, E2, 1);   // <w1,v2>
    }
    for (int i = 0; i < 3; ++i) {
      int j = (i + 1) % 3, k = (i + 2) % 3;
      put(U + i, U + j, W + k, 1);   // v1 x v2
      put(U + j, U + i, W + k, -1);
      put(W + i, W + j, U + k, -1);  // -(w1 x w2)
      put(W + j, W + i, U + k, 1);
    }
  }

  void build_cayley_dickson() {
    // quaternion structure constants: i^2 = alpha, j^2 = beta, ij = -ji = k
    auto qmul = [&](int i, int j) -> std::pair<int, Rational> {
      static const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
      const Rational sgn[4][4] = {{1, 1, 1, 1},
                                  {1, alpha, 1, alpha},
                                  {1, -1, beta, -beta},
                                  {1, -alpha, beta, -alpha * beta}};
      return {idx[i][j], sgn[i][j]};
    };
    // conjugation sign on the quaternion basis
    auto csgn = [](int i) { return i == 0 ? Rational(1) : Rational(-1); };
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        auto [k, c] = qmul(i, j);
        put(i, j, k, c);  // a c
      }
    for (int a = 0; a < 4; ++a)
      for (int d = 0; d < 4; ++d) {
        auto [k, c] = qmul(d, a);
        put(a, d + 4, k + 4, c);  // a (d l) = (d a) l
      }
    for (int b = 0; b < 4; ++b)
      for (int cidx = 0; cidx < 4; ++cidx) {
        auto [k, c] = qmul(b, cidx);
        put(b + 4, cidx, k + 4, c * csgn(cidx));  // (b l) c = (b cbar) l
      }
    for (int b = 0; b < 4; ++b)
      for (int d = 0; d < 4; ++d) {
        auto [k, c] = qmul(d, b);
        put(b + 4, d + 4, k, delta * c * csgn(d));  // (b l)(d l) = delta dbar b
      }
  }
};

}  // namespace albert
