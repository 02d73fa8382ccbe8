#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "albert/group_maps.hpp"
#include "albert/poly.hpp"
#include "albert/structure_map.hpp"

namespace albert {

// One-parameter family of structure maps with exact evaluation, declared
// endpoints and (where a closed form exists) a pole polynomial whose
// rational roots are the parameters where evaluation is undefined.
struct RationalPath {
  CnsPtr J;
  std::string label;
  std::function<StructureMap(const Rational&)> at;
  StructureMap start, end;  // declared, independent of at() where possible
  std::vector<Rational> poles;
  QPoly pole_poly;
  bool has_pole_poly = false;
  std::function<Rational(const Rational&)> expected_nu;  // may be empty
};

namespace detail {

inline void merge_roots(std::vector<Rational>& into, const std::vector<Rational>& more) {
  for (const auto& r : more)
    if (std::find(into.begin(), into.end(), r) == into.end()) into.push_back(r);
  std::sort(into.begin(), into.end());
}

}  // namespace detail

// theta(t) = U_{a_1(t)} ... U_{a_r(t)} with a_i(t) = (1-t) a_i + t c
// (the deliberately wrong variant drops the + t c pull toward the base
// point, so the declared endpoint theta(1) = id fails).
inline RationalPath u_path(const CnsPtr& j, const std::vector<QVec>& elems,
                           bool wrong_interpolation = false) {
  if (elems.empty()) throw parameter_error("u-path needs at least one element");
  for (const auto& a : elems)
    if (j->N(a) == 0)
      throw not_invertible("u-path element has norm 0: " + qvec_str(a));
  RationalPath p;
  p.J = j;
  p.label = "u-path(" + std::to_string(elems.size()) +
            (elems.size() == 1 ? " factor)" : " factors)");
  auto seg = [j, wrong_interpolation](const QVec& a, const Rational& t) {
    QVec v = (1 - t) * a;
    if (!wrong_interpolation) v = v + t * j->c;
    return v;
  };
  QPoly prod{{1}};
  std::vector<Rational> roots;
  for (const auto& a : elems) {
    std::vector<Rational> vals(4);
    for (int k = 0; k < 4; ++k) vals[k] = j->N(seg(a, k));
    QPoly nk = interpolate_at_nodes(vals);
    prod = prod * nk;
    detail::merge_roots(roots, rational_roots(nk));
  }
  p.pole_poly = prod;
  p.has_pole_poly = true;
  p.poles = roots;
  QPoly prod_copy = prod;
  p.expected_nu = [prod_copy](const Rational& t) {
    Rational v = prod_copy.eval(t);
    return v * v;
  };
  auto elems_copy = elems;
  p.at = [j, elems_copy, seg, p_label = p.label](const Rational& t) {
    StructureMap m = identity_map(j);
    for (const auto& a : elems_copy) {
      QVec at_t = seg(a, t);
      if (j->N(at_t) == 0)
        throw pole_error(p_label + " at t=" + rat_str(t) +
                         ": N(a_t)=0 for a_t=" + qvec_str(at_t));
      m = compose(m, u_operator_map(j, at_t));
    }
    return m;
  };
  StructureMap start = identity_map(j);
  for (const auto& a : elems) start = compose(start, u_operator_map(j, a));
  p.start = start;
  p.end = identity_map(j);
  return p;
}

// lambda(t) = extension (*) at (1, s_t, 1) with s_t = (1-t) s + t, for
// symmetric invertible s; factor N(s_t)^2, ends at the identity.
inline RationalPath hermitian_path(const SecondConstruction& S, const D3Elt& s,
                                   std::uint64_t seed = 0) {
  const auto& B = S.B;
  if (!S.sigma->is_symmetric(s))
    throw parameter_error("hermitian path needs a symmetric element");
  if (B->norm(s).is_zero()) throw not_invertible("hermitian path element has norm 0");
  RationalPath p;
  p.J = S.J;
  p.label = "hermitian-path";
  auto seg = [B, s](const Rational& t) {
    return B->add(B->smul_q(1 - t, s), B->smul_q(t, B->unit()));
  };
  std::vector<Rational> vals(4);
  for (int k = 0; k < 4; ++k) vals[k] = base_value(B->norm(seg(k)));
  p.pole_poly = interpolate_at_nodes(vals);
  p.has_pole_poly = true;
  p.poles = rational_roots(p.pole_poly);
  QPoly np = p.pole_poly;
  p.expected_nu = [np](const Rational& t) {
    Rational v = np.eval(t);
    return v * v;
  };
  SecondConstruction Sv = S;
  p.at = [Sv, seg, seed, p_label = p.label](const Rational& t) {
    D3Elt st = seg(t);
    if (Sv.B->norm(st).is_zero())
      throw pole_error(p_label + " at t=" + rat_str(t) + ": N(s_t)=0");
    return extend_sim_second(Sv, 1, st, Sv.B->unit(), derive_seed(seed, rat_str(t)));
  };
  p.start = extend_sim_second(S, 1, s, B->unit(), derive_seed(seed, "start"));
  p.end = identity_map(S.J);
  return p;
}

// f(t) = extension (*) at (1, z_t, q_t) with z_t = (1-t) z + t and
// q_t = sigma_u(z_t)^-1 z_t, for z normal under the twisted involution;
// factor is the center norm of N_B(z_t), ends at the identity.
inline RationalPath normal_path(const SecondConstruction& S, const D3Elt& z,
                                std::uint64_t seed = 0) {
  const auto& B = S.B;
  D3Elt sz = S.sigma_u->apply(z);
  if (!B->eq(B->mul(z, sz), B->mul(sz, z)))
    throw parameter_error("normal path needs z commuting with sigma_u(z)");
  if (B->norm(z).is_zero()) throw not_invertible("normal path element has norm 0");
  RationalPath p;
  p.J = S.J;
  p.label = "normal-path";
  auto seg = [B, z](const Rational& t) {
    return B->add(B->smul_q(1 - t, z), B->smul_q(t, B->unit()));
  };
  // N_B(z_t) is center-valued; its center norm is a degree-6 polynomial in t
  std::vector<Rational> vals(7);
  for (int k = 0; k < 7; ++k) {
    Scalar nz = B->norm(seg(k));
    vals[k] = base_value(nz * conj(nz));
  }
  p.pole_poly = interpolate_at_nodes(vals);
  p.has_pole_poly = true;
  p.poles = rational_roots(p.pole_poly);
  QPoly np = p.pole_poly;
  p.expected_nu = [np](const Rational& t) { return np.eval(t); };
  SecondConstruction Sv = S;
  p.at = [Sv, seg, seed, p_label = p.label](const Rational& t) {
    D3Elt zt = seg(t);
    if (Sv.B->norm(zt).is_zero())
      throw pole_error(p_label + " at t=" + rat_str(t) + ": N(z_t)=0");
    D3Elt qt = Sv.B->mul(Sv.B->inverse(Sv.sigma_u->apply(zt)), zt);
    return extend_sim_second(Sv, 1, zt, qt, derive_seed(seed, rat_str(t)));
  };
  D3Elt q0 = B->mul(B->inverse(sz), z);
  p.start = extend_sim_second(S, 1, z, q0, derive_seed(seed, "start"));
  p.end = identity_map(S.J);
  return p;
}

// chi_t = R_{1/lambda_t} U_{a_0}^-1 U_{a_t} psi_t with a_t = psi_t(c),
// lambda_t = N(a_t): corrects a factor-1 path into the isometry group
// (nu identically 1). Needs N(psi_0(c)) = 1.
inline RationalPath isometry_correction(const RationalPath& psi) {
  RationalPath p;
  p.J = psi.J;
  p.label = "isometry-correction(" + psi.label + ")";
  const CnsPtr j = psi.J;
  StructureMap psi0 = psi.at(0);
  QVec a0 = psi0.apply_vec(j->c);
  if (j->N(a0) != 1)
    throw parameter_error("correction needs N(psi_0(c)) = 1, got " +
                          rat_str(j->N(a0)));
  StructureMap u0_inv = inverse_map(u_operator_map(j, a0));
  auto psi_at = psi.at;
  p.at = [j, u0_inv, psi_at, p_label = p.label](const Rational& t) {
    StructureMap pt = psi_at(t);
    QVec at = pt.apply_vec(j->c);
    Rational lt = j->N(at);
    if (lt == 0)
      throw pole_error(p_label + " at t=" + rat_str(t) + ": N(psi_t(c))=0");
    StructureMap m = compose(u_operator_map(j, at), pt);
    m = compose(u0_inv, m);
    return compose(scalar_map(j, 1 / lt), m);
  };
  p.poles = psi.poles;  // further poles (N(psi_t(c)) = 0) surface lazily
  p.has_pole_poly = false;
  p.expected_nu = [](const Rational&) { return Rational(1); };
  // declared endpoints derived from psi's declarations
  p.start = psi.start;
  QVec a1 = psi.end.apply_vec(j->c);
  Rational l1 = j->N(a1);
  if (l1 == 0) throw parameter_error("correction: declared end is degenerate");
  StructureMap e = compose(u_operator_map(j, a1), psi.end);
  e = compose(u0_inv, e);
  p.end = compose(scalar_map(j, 1 / l1), e);
  return p;
}

struct PathPoint {
  Rational t;
  bool evaluated = false;
  std::string note;  // pole witness or factor mismatch
  Rational nu;
};

struct PathCertificate {
  std::string label;
  bool start_ok = false, end_ok = false;
  std::string start_witness, end_witness;
  std::vector<PathPoint> points;
  std::vector<Rational> poles;
  std::string pole_poly_str;
  bool passed = false;
};

// Exact endpoint comparison plus certified similarity (and expected factor,
// when the path declares one) at interior sample parameters.
inline PathCertificate endpoint_certificate(const RationalPath& p, int points = 10,
                                            std::uint64_t seed = 0,
                                            int cert_samples = 16) {
  PathCertificate c;
  c.label = p.label;
  c.poles = p.poles;
  if (p.has_pole_poly) c.pole_poly_str = poly_str(p.pole_poly);
  auto check_end = [&](const Rational& t, const StructureMap& declared, bool& ok,
                       std::string& witness) {
    try {
      StructureMap got = p.at(t);
      if (got.M == declared.M) {
        ok = true;
      } else {
        ok = false;
        witness = "value at t=" + rat_str(t) + " differs from declared endpoint";
      }
    } catch (const error& e) {
      ok = false;
      witness = e.what();
    }
  };
  check_end(0, p.start, c.start_ok, c.start_witness);
  check_end(1, p.end, c.end_ok, c.end_witness);
  bool interior_ok = true;
  for (int k = 1; k <= points; ++k) {
    PathPoint pt;
    pt.t = Rational(k, points + 1);
    try {
      StructureMap m = p.at(pt.t);
      StructureMap cert = certify_similarity(p.J, m.M, p.label + "@" + rat_str(pt.t),
                                             derive_seed(seed, rat_str(pt.t)),
                                             cert_samples);
      pt.nu = cert.nu;
      pt.evaluated = true;
      if (p.expected_nu && cert.nu != p.expected_nu(pt.t)) {
        pt.note = "factor " + rat_str(cert.nu) + " differs from declared " +
                  rat_str(p.expected_nu(pt.t));
        interior_ok = false;
      }
    } catch (const pole_error& e) {
      pt.note = std::string("pole: ") + e.what();  // landing here is not a failure
    } catch (const error& e) {
      pt.note = e.what();
      interior_ok = false;
    }
    c.points.push_back(std::move(pt));
  }
  c.passed = c.start_ok && c.end_ok && interior_ok;
  return c;
}

}  // namespace albert
