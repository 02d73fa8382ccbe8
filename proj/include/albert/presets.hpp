#pragma once

#include <optional>
#include <string>
#include <vector>

#include "albert/constructions.hpp"

namespace albert {

enum class Mutation { none, adjoint, path, extension };

// A shipped construction with its verification metadata: which model it is,
// any pinned isotropic witnesses, and whether it carries one of the three
// deliberate corruptions the suites are expected to catch.
struct Preset {
  std::string name;
  std::string summary;
  std::optional<FirstConstruction> first;
  std::optional<SecondConstruction> second;
  std::optional<ReducedConstruction> reduced;
  CnsPtr J;
  Mutation mutation = Mutation::none;

  std::optional<D3Elt> coord_isotropic;  // nonzero norm-0 coordinate element
  bool coord_division = false;           // coordinate algebra claimed division
  std::optional<QVec> isotropic;         // nonzero norm-0 vector of J
  bool oct_division = false;             // octonion coordinates anisotropic
  std::string division_note;

  const FirstConstruction& as_first() const {
    if (!first) throw parameter_error(name + " is not a first-model preset");
    return *first;
  }
  const SecondConstruction& as_second() const {
    if (!second) throw parameter_error(name + " is not a second-model preset");
    return *second;
  }
};

inline std::vector<std::string> preset_names() {
  return {"first-m3-l1",     "first-m3-l2",        "first-cyclic-div",
          "first-tower-l2",  "first-tower-split",  "second-gauss",
          "second-root2-twisted", "split-h3",      "reduced-weighted",
          "reduced-compact", "corrupted-adjoint",  "corrupted-path",
          "corrupted-extension"};
}

namespace detail {

inline D3Elt matrix_e11(const D3Ptr& d) {
  D3Elt e = d->zero();
  e[0] = Scalar::one(d->F);
  return e;
}

inline Preset preset_first_m3(const std::string& name, const Rational& lambda) {
  Preset p;
  p.name = name;
  auto D = Degree3Algebra::matrix3(FieldDescriptor::rationals());
  auto F = build_first(D, lambda);
  p.summary = "first model on 3x3 rational matrices, lambda=" + rat_str(lambda);
  p.coord_isotropic = matrix_e11(D);
  p.isotropic = F.pack(*p.coord_isotropic, D->zero(), D->zero());
  p.division_note = "rank-1 coordinates give isotropic vectors";
  p.J = F.J;
  p.first = std::move(F);
  return p;
}

inline Preset preset_first_cyclic() {
  Preset p;
  p.name = "first-cyclic-div";
  // real subfield of the 7th cyclotomic field, x^3 + x^2 - 2x - 1,
  // generator mapped to x^2 - 2 by the order-3 automorphism
  auto L = FieldDescriptor::cubic(-1, -2, 1, {{Rational(-2), Rational(0), Rational(1)}});
  auto D = Degree3Algebra::cyclic(L, 2);
  auto F = build_first(D, 3);
  p.summary = "first model on a division cyclic algebra of degree 3, lambda=3";
  p.coord_division = true;
  p.division_note =
      "coordinate algebra is division (sampled); no isotropic vector is pinned "
      "for the structure itself";
  p.J = F.J;
  p.first = std::move(F);
  return p;
}

inline Preset preset_first_tower(const std::string& name, bool split) {
  Preset p;
  p.name = name;
  FieldPtr L = split ? FieldDescriptor::cubic_product()
                     : FieldDescriptor::cubic(-1, -1, 0);
  auto D = Degree3Algebra::cubic_etale(L);
  auto F = build_first(D, 2);
  if (split) {
    p.summary = "first model on the split cubic tower Q x Q x Q, lambda=2";
    D3Elt e = D->zero();
    e[0] = Scalar(L, {1, 0, 0});
    p.coord_isotropic = e;
    p.isotropic = F.pack(e, D->zero(), D->zero());
    p.division_note = "split tower has idempotent isotropic vectors";
  } else {
    p.summary = "first model on the cubic field Q[x]/(x^3-x-1), lambda=2";
    p.coord_division = true;
    p.division_note = "tower is a field (sampled); structure status not pinned";
  }
  p.J = F.J;
  p.first = std::move(F);
  return p;
}

inline Preset preset_second_gauss() {
  Preset p;
  p.name = "second-gauss";
  auto K = FieldDescriptor::quadratic(-1);
  auto B = Degree3Algebra::matrix3(K);
  auto sig = Involution::conjugate_transpose(B);
  auto S = build_second(B, sig, B->unit(), Scalar::one(K));
  p.summary = "second model on 3x3 matrices over Q(i), conjugate-transpose, u=1";
  p.coord_isotropic = matrix_e11(B);
  p.isotropic = S.pack(*p.coord_isotropic, B->zero());
  p.division_note = "rank-1 hermitian coordinates give isotropic vectors";
  p.J = S.J;
  p.second = std::move(S);
  return p;
}

inline Preset preset_second_twisted() {
  Preset p;
  p.name = "second-root2-twisted";
  auto K = FieldDescriptor::quadratic(2);
  auto B = Degree3Algebra::matrix3(K);
  auto sig = Involution::conjugate_transpose(B);
  D3Elt u = B->unit();
  u[8] = Scalar(K, {-1, 0});  // diag(1,1,-1), N(u) = -1 = (1+r2)(1-r2)
  auto S = build_second(B, sig, u, Scalar(K, {1, 1}));
  p.summary =
      "second model over Q(sqrt 2), involution twisted by diag(1,1,-1), "
      "mu=1+sqrt 2";
  p.coord_isotropic = matrix_e11(B);
  p.isotropic = S.pack(*p.coord_isotropic, B->zero());
  p.division_note = "rank-1 hermitian coordinates give isotropic vectors";
  p.J = S.J;
  p.second = std::move(S);
  return p;
}

inline Preset preset_reduced(const std::string& name, const OctonionAlgebra& C,
                             const std::array<Rational, 3>& gamma,
                             const std::string& summary, bool oct_division) {
  Preset p;
  p.name = name;
  auto R = build_reduced(C, gamma);
  p.summary = summary;
  p.isotropic =
      R.pack({1, 0, 0}, C.zero_elt(), C.zero_elt(), C.zero_elt());
  p.oct_division = oct_division;
  p.division_note = "diagonal idempotents are isotropic";
  p.J = R.J;
  p.reduced = std::move(R);
  return p;
}

inline Preset preset_corrupted_adjoint() {
  Preset p = preset_first_m3(std::string("corrupted-adjoint"), 1);
  const FirstConstruction F = *p.first;
  auto D = F.D;
  Rational lam = F.lambda;
  auto base = F.J;
  // same norm, but the first adjoint slot drops its cross term: the
  // differential axioms and the generic-adjoint oracle must flag this
  auto bad_sharp = [F, D, lam](const QVec& v) {
    auto parts = F.unpack(v);
    const D3Elt &x = parts[0], &y = parts[1], &z = parts[2];
    D3Elt s1 = D->adjoint(x);
    D3Elt s2 = D->sub(D->smul_q(1 / lam, D->adjoint(z)), D->mul(x, y));
    D3Elt s3 = D->sub(D->smul_q(lam, D->adjoint(y)), D->mul(z, x));
    return F.pack(s1, s2, s3);
  };
  auto corrupted = CubicNormStructure::make(base->dim, base->c, base->N, bad_sharp,
                                            base->name + " [corrupted adjoint]");
  p.summary = "first-m3-l1 with a term dropped from the adjoint (must be caught)";
  p.mutation = Mutation::adjoint;
  p.J = corrupted;
  p.first->J = corrupted;
  return p;
}

}  // namespace detail

inline Preset make_preset(const std::string& name) {
  using namespace detail;
  if (name == "first-m3-l1") return preset_first_m3(name, 1);
  if (name == "first-m3-l2") return preset_first_m3(name, 2);
  if (name == "first-cyclic-div") return preset_first_cyclic();
  if (name == "first-tower-l2") return preset_first_tower(name, false);
  if (name == "first-tower-split") return preset_first_tower(name, true);
  if (name == "second-gauss") return preset_second_gauss();
  if (name == "second-root2-twisted") return preset_second_twisted();
  if (name == "split-h3")
    return preset_reduced(name, OctonionAlgebra::zorn(), {1, 1, 1},
                          "reduced model on split octonions, gamma=(1,1,1)", false);
  if (name == "reduced-weighted")
    return preset_reduced(name, OctonionAlgebra::zorn(), {1, 2, 3},
                          "reduced model on split octonions, gamma=(1,2,3)", false);
  if (name == "reduced-compact")
    return preset_reduced(name, OctonionAlgebra::cayley_dickson(-1, -1, -1),
                          {1, 1, 1},
                          "reduced model on anisotropic octonions, gamma=(1,1,1)",
                          true);
  if (name == "corrupted-adjoint") return preset_corrupted_adjoint();
  if (name == "corrupted-path") {
    Preset p = preset_reduced(
        "corrupted-path", OctonionAlgebra::zorn(), {1, 1, 1},
        "split-h3 whose path suite interpolates wrongly (must be caught)", false);
    p.mutation = Mutation::path;
    return p;
  }
  if (name == "corrupted-extension") {
    Preset p = preset_second_gauss();
    p.name = "corrupted-extension";
    p.summary =
        "second-gauss whose extension suite applies the corrupted pointwise "
        "formula (must be caught)";
    p.mutation = Mutation::extension;
    return p;
  }
  throw config_error("unknown preset: " + name);
}

}  // namespace albert
