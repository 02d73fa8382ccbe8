#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "albert/error.hpp"
#include "albert/linalg.hpp"
#include "albert/poly.hpp"
#include "albert/rng.hpp"

namespace albert {

struct AxiomCheck {
  std::string name;
  bool passed = true;
  int samples = 0;
  std::string witness;  // offending input, exact coordinates
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

// A cubic form N with base point c and adjoint map # on a finite-dimensional
// Q-space, presented by evaluators. Derived data (directional derivatives,
// the trace bilinear form, the generic adjoint) is computed from N alone by
// polynomial interpolation, so it is an independent cross-check of #.
class CubicNormStructure {
 public:
  using Ptr = std::shared_ptr<const CubicNormStructure>;
  using NormFn = std::function<Rational(const QVec&)>;
  using SharpFn = std::function<QVec(const QVec&)>;

  std::size_t dim = 0;
  QVec c;
  NormFn N;
  SharpFn sharp;
  std::string name;

  static Ptr make(std::size_t dim, QVec base, NormFn n, SharpFn s, std::string nm) {
    auto p = std::make_shared<CubicNormStructure>();
    p->dim = dim;
    p->c = std::move(base);
    p->N = std::move(n);
    p->sharp = std::move(s);
    p->name = std::move(nm);
    if (p->c.size() != dim) throw parameter_error("base point has wrong dimension");
    return p;
  }

  Rational norm(const QVec& x) const { return N(x); }
  QVec adjoint(const QVec& x) const { return sharp(x); }

  // (d/dt) N(x + t y) at t = 0. N(x + t y) has degree <= 3 in t; sample at
  // t = 0..3 and read the linear coefficient.
  Rational dir_derivative(const QVec& x, const QVec& y) const {
    std::vector<Rational> vals(4);
    for (int t = 0; t < 4; ++t) vals[t] = N(x + Rational(t) * y);
    QPoly p = interpolate_at_nodes(vals);
    return p.coeff(1);
  }

  // T(x, y) from the norm alone: with f(s,t) = N(c + s x + t y),
  //   T(x, y) = f_(1,0) * f_(0,1) - f_(1,1)
  // where f_(i,j) is the coefficient of s^i t^j.
  Rational trace_bilinear(const QVec& x, const QVec& y) const {
    // two-stage interpolation on the 4 x 4 grid {0..3}^2
    std::vector<std::vector<Rational>> tcoef(4);
    for (int s = 0; s < 4; ++s) {
      QVec xs = c + Rational(s) * x;
      std::vector<Rational> vals(4);
      for (int t = 0; t < 4; ++t) vals[t] = N(xs + Rational(t) * y);
      QPoly p = interpolate_at_nodes(vals);
      tcoef[s] = {p.coeff(0), p.coeff(1), p.coeff(2), p.coeff(3)};
    }
    auto coef_st = [&](int i, int j) {
      std::vector<Rational> vals(4);
      for (int s = 0; s < 4; ++s) vals[s] = tcoef[s][j];
      return interpolate_at_nodes(vals).coeff(i);
    };
    return coef_st(1, 0) * coef_st(0, 1) - coef_st(1, 1);
  }

  const QMat& gram() const {
    if (!gram_) {
      QMat g(dim, dim);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) {
          Rational v = trace_bilinear(basis(i), basis(j));
          g.at(i, j) = v;
          g.at(j, i) = v;
        }
      gram_ = std::move(g);
    }
    return *gram_;
  }

  const QMat& gram_inverse() const {
    if (!gram_inv_) {
      try {
        gram_inv_ = inverse(gram());
      } catch (const not_invertible&) {
        throw certification_error("trace form of " + name + " is degenerate");
      }
    }
    return *gram_inv_;
  }

  Rational trace_form(const QVec& x, const QVec& y) const {
    const QMat& g = gram();
    QVec gy = mul(g, y);
    Rational r = 0;
    for (std::size_t i = 0; i < dim; ++i) r += x[i] * gy[i];
    return r;
  }

  Rational trace_lin(const QVec& x) const { return trace_form(x, c); }

  // Adjoint recovered from N alone: solve T(x^#, b_i) = (d/dt N(x + t b_i))|_0
  // against the Gram matrix. Independent of the structural # evaluator.
  QVec sharp_generic(const QVec& x) const {
    QVec rhs(dim);
    for (std::size_t i = 0; i < dim; ++i) rhs[i] = dir_derivative(x, basis(i));
    return mul(gram_inverse(), rhs);
  }

  QVec cross(const QVec& x, const QVec& y) const {
    return sharp(x + y) - sharp(x) - sharp(y);
  }

  // U_a x = T(a, x) a - a^# x (cross), the fundamental quadratic operator.
  QVec u_apply(const QVec& a, const QVec& x) const {
    QVec asharp = sharp(a);
    return trace_form(a, x) * a - (sharp(asharp + x) - sharp(asharp) - sharp(x));
  }

  QMat u_matrix(const QVec& a) const {
    QVec asharp = sharp(a);
    QVec ga = mul(gram(), a);
    QMat m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      QVec col = ga[j] * a - (sharp(asharp + basis(j)) - sharp(asharp) - sharp_b(j));
      for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = col[i];
    }
    return m;
  }

  QVec inverse_elt(const QVec& x) const {
    Rational n = N(x);
    if (n == 0)
      throw not_invertible("norm vanishes in " + name + " at " + qvec_str(x));
    return (Rational(1) / n) * sharp(x);
  }

  QVec basis(std::size_t i) const {
    QVec v = qvec_zero(dim);
    v[i] = 1;
    return v;
  }

  AxiomReport verify_axioms(int samples, std::uint64_t seed) const {
    AxiomReport rep;
    Sampler smp(derive_seed(seed, "axioms:" + name));
    auto check = [&](const std::string& nm, auto&& body) {
      AxiomCheck c0;
      c0.name = nm;
      body(c0);
      rep.checks.push_back(std::move(c0));
    };

    check("norm-cubic-homogeneous", [&](AxiomCheck& ck) {
      for (int t = 0; t < samples; ++t) {
        QVec x = smp.vec(dim);
        Rational r = smp.nonzero_rational();
        ++ck.samples;
        if (N(r * x) != r * r * r * N(x)) {
          ck.passed = false;
          ck.witness = "x=" + qvec_str(x) + " r=" + rat_str(r);
          return;
        }
      }
    });

    check("base-point-norm", [&](AxiomCheck& ck) {
      ck.samples = 1;
      if (N(c) != 1) {
        ck.passed = false;
        ck.witness = "N(c)=" + rat_str(N(c));
      }
    });

    check("trace-nondegenerate", [&](AxiomCheck& ck) {
      ck.samples = 1;
      Rational d = det(gram());
      if (d == 0) {
        ck.passed = false;
        ck.witness = "det(gram)=0";
      }
    });

    check("adjoint-quadratic", [&](AxiomCheck& ck) {
      for (int t = 0; t < samples; ++t) {
        QVec x = smp.vec(dim);
        Rational r = smp.nonzero_rational();
        ++ck.samples;
        if (!(sharp(r * x) == (r * r) * sharp(x))) {
          ck.passed = false;
          ck.witness = "x=" + qvec_str(x) + " r=" + rat_str(r);
          return;
        }
      }
    });

    check("adjoint-trace-derivative", [&](AxiomCheck& ck) {
      for (int t = 0; t < samples; ++t) {
        QVec x = smp.vec(dim);
        QVec y = smp.vec(dim);
        ++ck.samples;
        if (trace_form(sharp(x), y) != dir_derivative(x, y)) {
          ck.passed = false;
          ck.witness = "x=" + qvec_str(x) + " y=" + qvec_str(y);
          return;
        }
      }
    });

    check("adjoint-adjoint", [&](AxiomCheck& ck) {
      for (int t = 0; t < samples; ++t) {
        QVec x = smp.vec(dim);
        ++ck.samples;
        if (!(sharp(sharp(x)) == N(x) * x)) {
          ck.passed = false;
          ck.witness = "x=" + qvec_str(x);
          return;
        }
      }
    });

    check("base-point-adjoint", [&](AxiomCheck& ck) {
      ck.samples = 1;
      if (!(sharp(c) == c)) {
        ck.passed = false;
        ck.witness = "c^#=" + qvec_str(sharp(c));
      }
    });

    check("base-point-cross", [&](AxiomCheck& ck) {
      for (int t = 0; t < samples; ++t) {
        QVec x = smp.vec(dim);
        ++ck.samples;
        if (!(cross(c, x) == trace_lin(x) * c - x)) {
          ck.passed = false;
          ck.witness = "x=" + qvec_str(x);
          return;
        }
      }
    });

    check("cross-bilinear", [&](AxiomCheck& ck) {
      for (int t = 0; t < samples; ++t) {
        QVec x = smp.vec(dim);
        QVec y = smp.vec(dim);
        QVec z = smp.vec(dim);
        ++ck.samples;
        if (!(cross(x, y + z) == cross(x, y) + cross(x, z))) {
          ck.passed = false;
          ck.witness = "x=" + qvec_str(x) + " y=" + qvec_str(y) + " z=" + qvec_str(z);
          return;
        }
      }
    });

    return rep;
  }

 private:
  mutable std::optional<QMat> gram_;
  mutable std::optional<QMat> gram_inv_;
  mutable std::vector<std::optional<QVec>> sharp_basis_;

  const QVec& sharp_b(std::size_t j) const {
    if (sharp_basis_.empty()) sharp_basis_.resize(dim);
    if (!sharp_basis_[j]) sharp_basis_[j] = sharp(basis(j));
    return *sharp_basis_[j];
  }
};

using CnsPtr = CubicNormStructure::Ptr;

}  // namespace albert
