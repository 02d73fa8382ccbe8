#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "albert/presets.hpp"
#include "albert/report.hpp"
#include "albert/suites.hpp"

namespace albert {

// A run description parsed from a config document: the structure to build,
// the sampling parameters, and which suites to run (empty = all).
struct LoadedConfig {
  Preset preset;
  RunParams run;
  std::vector<std::string> suites;
};

namespace cfg {

inline const json& need(const json& j, const char* key, const std::string& path) {
  if (!j.is_object())
    throw config_error(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw config_error(path + "." + key + ": missing");
  return *it;
}

inline std::string str_at(const json& v, const std::string& path) {
  if (!v.is_string()) throw config_error(path + ": expected a string");
  return v.get<std::string>();
}

// exact rationals travel as "p/q" strings; plain integers are also accepted
inline Rational rat_at(const json& v, const std::string& path) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
  } catch (const error& e) {
    throw config_error(path + ": " + e.what());
  }
  throw config_error(path + ": expected a rational as \"p/q\" string or integer");
}

inline std::vector<Rational> rat_array(const json& v, std::size_t n,
                                       const std::string& path) {
  if (!v.is_array() || (n != 0 && v.size() != n))
    throw config_error(path + ": expected an array of " + std::to_string(n) +
                       " rationals");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(rat_at(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

inline FieldPtr field_at(const json& f, const std::string& path) {
  std::string kind = str_at(need(f, "kind", path), path + ".kind");
  try {
    if (kind == "rationals") return FieldDescriptor::rationals();
    if (kind == "quadratic")
      return FieldDescriptor::quadratic(rat_at(need(f, "d", path), path + ".d"));
    if (kind == "split-quadratic") return FieldDescriptor::split_quadratic();
    if (kind == "cubic-product") return FieldDescriptor::cubic_product();
    if (kind == "cubic") {
      auto mp = rat_array(need(f, "min_poly", path), 3, path + ".min_poly");
      std::optional<std::array<Rational, 3>> rho;
      if (f.contains("rho")) {
        auto rv = rat_array(f.at("rho"), 3, path + ".rho");
        rho = std::array<Rational, 3>{rv[0], rv[1], rv[2]};
      }
      return FieldDescriptor::cubic(mp[0], mp[1], mp[2], rho);
    }
  } catch (const config_error&) {
    throw;
  } catch (const error& e) {
    throw config_error(path + ": " + e.what());
  }
  throw config_error(path + ".kind: unknown field kind '" + kind +
                     "' (rationals | quadratic | split-quadratic | cubic | "
                     "cubic-product)");
}

inline D3Ptr coords_at(const json& c, const std::string& path) {
  std::string kind = str_at(need(c, "kind", path), path + ".kind");
  try {
    if (kind == "matrix3")
      return Degree3Algebra::matrix3(field_at(need(c, "field", path), path + ".field"));
    if (kind == "cyclic")
      return Degree3Algebra::cyclic(field_at(need(c, "field", path), path + ".field"),
                                    rat_at(need(c, "gamma", path), path + ".gamma"));
    if (kind == "tower")
      return Degree3Algebra::cubic_etale(
          field_at(need(c, "field", path), path + ".field"));
  } catch (const config_error&) {
    throw;
  } catch (const error& e) {
    throw config_error(path + ": " + e.what());
  }
  throw config_error(path + ".kind: unknown coordinate kind '" + kind +
                     "' (matrix3 | cyclic | tower)");
}

inline Preset structure_at(const json& st) {
  const std::string path = "structure";
  std::string model = str_at(need(st, "model", path), path + ".model");
  Preset p;
  p.name = "config";
  try {
    if (model == "first") {
      D3Ptr d = coords_at(need(st, "coordinates", path), path + ".coordinates");
      Rational lam = rat_at(need(st, "lambda", path), path + ".lambda");
      auto F = build_first(d, lam);
      p.summary = "first model from config on " + d->name();
      p.J = F.J;
      p.first = std::move(F);
      return p;
    }
    if (model == "second") {
      D3Ptr b = coords_at(need(st, "coordinates", path), path + ".coordinates");
      auto sig = Involution::conjugate_transpose(b);
      D3Elt u = b->unit();
      if (st.contains("u")) {
        auto uv = rat_array(st.at("u"), b->kdim(), path + ".u");
        u = b->from_kvec(uv);
      }
      Scalar mu = Scalar::one(b->center());
      if (st.contains("mu")) {
        auto mv = rat_array(st.at("mu"),
                            static_cast<std::size_t>(b->center()->degree()),
                            path + ".mu");
        mu = Scalar(b->center(), mv);
      }
      auto S = build_second(b, sig, u, mu);
      p.summary = "second model from config on " + b->name();
      p.J = S.J;
      p.second = std::move(S);
      return p;
    }
    if (model == "reduced") {
      const json& oct = need(st, "octonions", path);
      std::string okind = str_at(need(oct, "kind", path + ".octonions"),
                                 path + ".octonions.kind");
      std::optional<OctonionAlgebra> C;
      if (okind == "zorn") {
        C = OctonionAlgebra::zorn();
      } else if (okind == "cayley-dickson") {
        auto prm = rat_array(need(oct, "params", path + ".octonions"), 3,
                             path + ".octonions.params");
        C = OctonionAlgebra::cayley_dickson(prm[0], prm[1], prm[2]);
      } else {
        throw config_error(path + ".octonions.kind: expected zorn | cayley-dickson");
      }
      auto gv = rat_array(need(st, "gamma", path), 3, path + ".gamma");
      auto R = build_reduced(*C, {gv[0], gv[1], gv[2]});
      p.summary = "reduced model from config";
      p.isotropic = R.pack({1, 0, 0}, C->zero_elt(), C->zero_elt(), C->zero_elt());
      p.division_note = "diagonal idempotents are isotropic";
      p.J = R.J;
      p.reduced = std::move(R);
      return p;
    }
  } catch (const config_error&) {
    throw;
  } catch (const error& e) {
    throw config_error(path + ": " + e.what());
  }
  throw config_error(path + ".model: expected first | second | reduced");
}

inline long long int_at(const json& v, const std::string& path, long long lo) {
  if (!v.is_number_integer())
    throw config_error(path + ": expected an integer");
  long long x = v.get<long long>();
  if (x < lo) throw config_error(path + ": must be >= " + std::to_string(lo));
  return x;
}

}  // namespace cfg

inline LoadedConfig load_config(const json& doc) {
  LoadedConfig lc;
  lc.preset = cfg::structure_at(cfg::need(doc, "structure", "$"));
  if (doc.contains("run")) {
    const json& run = doc.at("run");
    if (!run.is_object()) throw config_error("run: expected an object");
    auto opt = [&](const char* key, int& slot, long long lo = 1) {
      if (run.contains(key))
        slot = static_cast<int>(cfg::int_at(run.at(key), std::string("run.") + key, lo));
    };
    if (run.contains("seed"))
      lc.run.seed = static_cast<std::uint64_t>(
          cfg::int_at(run.at("seed"), "run.seed", 0));
    opt("samples", lc.run.samples);
    opt("operators", lc.run.operators);
    opt("extension", lc.run.extension);
    opt("kernel", lc.run.kernel);
    opt("factorization", lc.run.factorization);
    opt("transitivity", lc.run.transitivity);
    opt("path_points", lc.run.path_points);
    opt("cert_samples", lc.run.cert_samples, 2);
    if (run.contains("suites")) {
      const json& sv = run.at("suites");
      if (!sv.is_array()) throw config_error("run.suites: expected an array of names");
      auto known = suite_names();
      for (std::size_t i = 0; i < sv.size(); ++i) {
        std::string name =
            cfg::str_at(sv[i], "run.suites[" + std::to_string(i) + "]");
        if (std::find(known.begin(), known.end(), name) == known.end())
          throw config_error("run.suites[" + std::to_string(i) + "]: unknown suite '" +
                             name + "'");
        lc.suites.push_back(name);
      }
    }
  }
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (it.key() != "structure" && it.key() != "run")
      throw config_error("$." + it.key() + ": unknown top-level key");
  return lc;
}

inline LoadedConfig load_config_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw config_error("cannot read config file: " + file);
  json doc;
  try {
    doc = json::parse(in);  // parse errors carry line/byte positions
  } catch (const json::parse_error& e) {
    throw config_error(file + ": " + e.what());
  }
  return load_config(doc);
}

}  // namespace albert
