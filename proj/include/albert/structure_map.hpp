#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "albert/cubic_norm.hpp"
#include "albert/error.hpp"
#include "albert/linalg.hpp"
#include "albert/rng.hpp"

namespace albert {

struct Certificate {
  std::uint64_t seed = 0;
  int samples = 0;
};

// Invertible linear map f on a cubic norm structure with N(f(x)) = nu N(x).
// Instances come from certify_similarity (sampled exact check) or from
// operators whose factor is known identically (U_a, homotheties, identity).
struct StructureMap {
  CnsPtr J;
  QMat M;
  Rational nu;
  Certificate cert;
  std::string label;

  QVec apply_vec(const QVec& v) const { return mul(M, v); }
  bool is_identity() const { return M.is_identity(); }
};

inline bool same_map(const StructureMap& a, const StructureMap& b) {
  return a.J == b.J && a.M == b.M;
}

inline StructureMap certify_similarity(const CnsPtr& j, QMat m, std::string label,
                                       std::uint64_t seed, int samples = 16) {
  if (m.rows != j->dim || m.cols != j->dim)
    throw descriptor_mismatch("similarity candidate has wrong shape for " + j->name);
  if (det(m) == 0)
    throw certification_error("candidate '" + label + "' is not invertible");
  Sampler smp(derive_seed(seed, "certify:" + label));
  bool have_nu = false;
  Rational nu;
  std::vector<std::pair<QVec, Rational>> deferred;
  for (int t = 0; t < samples; ++t) {
    QVec x = smp.vec(j->dim);
    Rational nx = j->N(x);
    Rational nfx = j->N(mul(m, x));
    if (!have_nu) {
      if (nx == 0) {
        deferred.emplace_back(std::move(x), nfx);
        continue;
      }
      nu = nfx / nx;
      have_nu = true;
      continue;
    }
    if (nfx != nu * nx)
      throw certification_error("candidate '" + label +
                                "' is not a norm similarity: x=" + qvec_str(x));
  }
  if (!have_nu)
    throw certification_error("candidate '" + label +
                              "': no sample with nonzero norm; cannot determine factor");
  for (const auto& [x, nfx] : deferred)
    if (nfx != 0)
      throw certification_error("candidate '" + label +
                                "' is not a norm similarity: x=" + qvec_str(x));
  if (nu == 0)
    throw certification_error("candidate '" + label + "' has similarity factor 0");
  StructureMap f;
  f.J = j;
  f.M = std::move(m);
  f.nu = nu;
  f.cert = {seed, samples};
  f.label = std::move(label);
  return f;
}

inline StructureMap identity_map(const CnsPtr& j) {
  return {j, QMat::identity(j->dim), 1, {0, 0}, "id"};
}

// Homothety R_r: x |-> r x, factor r^3.
inline StructureMap scalar_map(const CnsPtr& j, const Rational& r) {
  if (r == 0) throw parameter_error("homothety needs a nonzero scalar");
  QMat m = QMat::identity(j->dim);
  for (std::size_t i = 0; i < j->dim; ++i) m.at(i, i) = r;
  return {j, std::move(m), r * r * r, {0, 0}, "R_" + rat_str(r)};
}

// U_a for invertible a; N(U_a x) = N(a)^2 N(x).
inline StructureMap u_operator_map(const CnsPtr& j, const QVec& a) {
  Rational na = j->N(a);
  if (na == 0)
    throw not_invertible("U-operator base point has norm 0: " + qvec_str(a));
  return {j, j->u_matrix(a), na * na, {0, 0}, "U[" + qvec_str(a) + "]"};
}

// f after g.
inline StructureMap compose(const StructureMap& f, const StructureMap& g) {
  if (f.J != g.J) throw descriptor_mismatch("composing maps on different structures");
  return {f.J, mul(f.M, g.M), f.nu * g.nu, {0, 0}, f.label + "." + g.label};
}

inline StructureMap inverse_map(const StructureMap& f) {
  QMat mi;
  try {
    mi = inverse(f.M);
  } catch (const not_invertible&) {
    throw certification_error("structure map '" + f.label + "' is not invertible");
  }
  return {f.J, std::move(mi), Rational(1) / f.nu, {0, 0}, f.label + "^-1"};
}

}  // namespace albert
