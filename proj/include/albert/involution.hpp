#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "albert/degree3.hpp"
#include "albert/error.hpp"
#include "albert/linalg.hpp"
#include "albert/rng.hpp"

namespace albert {

// Anti-automorphism of order 2 on a degree-3 algebra whose restriction to the
// center is the nontrivial conjugation (an involution of the second kind).
class Involution : public std::enable_shared_from_this<Involution> {
 public:
  enum class Kind { conjugate_transpose, exchange, twisted };

  using Ptr = std::shared_ptr<const Involution>;

  D3Ptr B;
  Kind kind;
  Ptr base;            // twisted: the untwisted involution
  D3Elt u_elt, u_inv;  // twisted: x |-> u base(x) u^-1

  static Ptr conjugate_transpose(const D3Ptr& b) {
    if (b->kind != Degree3Algebra::Kind::matrix3)
      throw parameter_error("conjugate-transpose needs a 3x3 matrix algebra");
    if (b->F->kind != FieldKind::quadratic && b->F->kind != FieldKind::split_quadratic)
      throw parameter_error(
          "conjugate-transpose over " + b->F->name() +
          " fixes the center; a quadratic tower of entries is required");
    auto s = std::shared_ptr<Involution>(new Involution());
    s->B = b;
    s->kind = Kind::conjugate_transpose;
    return s;
  }

  static Ptr exchange(const D3Ptr& b) {
    if (b->kind != Degree3Algebra::Kind::product_opposite)
      throw parameter_error("exchange involution needs a product with its opposite");
    auto s = std::shared_ptr<Involution>(new Involution());
    s->B = b;
    s->kind = Kind::exchange;
    return s;
  }

  // Int(u) composed with this involution; requires u symmetric and invertible.
  Ptr twist(const D3Elt& u) const {
    if (!B->eq(apply(u), u))
      throw parameter_error("twist element is not symmetric under the involution");
    auto s = std::shared_ptr<Involution>(new Involution());
    s->B = B;
    s->kind = Kind::twisted;
    s->base = shared_from_this();
    s->u_elt = u;
    s->u_inv = B->inverse(u);  // throws not_invertible on a non-unit
    return s;
  }

  D3Elt apply(const D3Elt& a) const {
    switch (kind) {
      case Kind::conjugate_transpose: {
        D3Elt r = B->zero();
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) r[3 * i + j] = conj(a[3 * j + i]);
        return r;
      }
      case Kind::exchange: {
        auto [x, y] = B->split_pair(a);
        return B->join_pair(y, x);
      }
      case Kind::twisted:
        return B->mul(u_elt, B->mul(base->apply(a), u_inv));
    }
    throw parameter_error("unknown involution kind");
  }

  const QMat& matrix() const {
    if (!mat_) {
      std::size_t n = B->kdim();
      QMat m(n, n);
      for (std::size_t j = 0; j < n; ++j) {
        QVec col = B->to_kvec(apply(B->basis_elt(j)));
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = col[i];
      }
      mat_ = std::move(m);
    }
    return *mat_;
  }

  bool is_symmetric(const D3Elt& a) const { return B->eq(apply(a), a); }

  // q with q sigma(q) = 1.
  bool is_unitary(const D3Elt& q) const {
    return B->eq(B->mul(q, apply(q)), B->unit());
  }

  // Basis over Q of the symmetric elements, via ker(matrix - id).
  const Nullspace& sym_space() const {
    if (!sym_) {
      QMat m = matrix();
      for (std::size_t i = 0; i < m.rows; ++i) m.at(i, i) -= 1;
      sym_ = nullspace(m);
    }
    return *sym_;
  }

  std::string name() const {
    switch (kind) {
      case Kind::conjugate_transpose: return "conjugate-transpose";
      case Kind::exchange: return "exchange";
      case Kind::twisted: return base->name() + " twisted by " + B->elt_str(u_elt);
    }
    return "?";
  }

  // Structural sanity: order 2, anti-multiplicative on sampled pairs, and
  // conjugation (not the identity) on the center.
  void validate(std::uint64_t seed = 0xA17u, int samples = 8) const {
    const QMat& m = matrix();
    if (!(mul(m, m) == QMat::identity(m.rows)))
      throw parameter_error("involution " + name() + " does not square to the identity");
    Sampler smp(derive_seed(seed, "involution-validate"));
    for (int t = 0; t < samples; ++t) {
      D3Elt x = B->from_kvec(smp.vec(B->kdim()));
      D3Elt y = B->from_kvec(smp.vec(B->kdim()));
      if (!B->eq(apply(B->mul(x, y)), B->mul(apply(y), apply(x))))
        throw parameter_error("involution " + name() + " is not anti-multiplicative");
    }
    Scalar g = Scalar::zero(B->center());
    g.c[1] = 1;  // a generator of the center over Q (both center kinds are 2-dim)
    if (!B->eq(apply(B->embed_center(g)), B->embed_center(conj(g))))
      throw parameter_error("involution " + name() +
                            " does not conjugate the center (not of the second kind)");
  }

 private:
  Involution() = default;
  mutable std::optional<QMat> mat_;
  mutable std::optional<Nullspace> sym_;
};

using InvPtr = Involution::Ptr;

}  // namespace albert
