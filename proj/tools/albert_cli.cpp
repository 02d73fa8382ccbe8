// Command-line front end: build a shipped preset or a configured structure,
// run verification suites or path certificates, and report results in
// human- or machine-readable form. Exit codes: 0 all checks pass, 1 a check
// failed, 2 usage or config error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "albert/albert.hpp"

namespace {

using namespace albert;

struct CommonOpts {
  std::string config_file;
  std::string preset_name;
  std::vector<std::string> suites;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  bool machine = false;
  std::string out_file;
};

LoadedConfig resolve_input(const CommonOpts& o) {
  if (!o.config_file.empty() && !o.preset_name.empty())
    throw config_error("give either a config file or --preset, not both");
  LoadedConfig lc;
  if (!o.config_file.empty()) {
    lc = load_config_file(o.config_file);
  } else if (!o.preset_name.empty()) {
    lc.preset = make_preset(o.preset_name);
  } else {
    throw config_error("nothing to run: give a config file or --preset NAME");
  }
  if (o.seed) lc.run.seed = *o.seed;
  if (o.samples) {
    lc.run.samples = *o.samples;
    lc.run.operators = std::min(lc.run.operators, *o.samples);
  }
  if (!o.suites.empty()) {
    auto known = suite_names();
    for (const auto& s : o.suites)
      if (std::find(known.begin(), known.end(), s) == known.end())
        throw config_error("unknown suite '" + s + "'");
    lc.suites = o.suites;
  }
  return lc;
}

void emit(const json& doc, const CommonOpts& o) {
  if (!o.out_file.empty()) {
    std::ofstream out(o.out_file);
    if (!out) throw config_error("cannot write: " + o.out_file);
    out << doc.dump(2) << "\n";
  } else {
    std::cout << doc.dump(2) << "\n";
  }
}

int cmd_verify(const CommonOpts& o) {
  LoadedConfig lc = resolve_input(o);
  auto results = run_suites(lc.preset, lc.run, lc.suites);
  bool all = true;
  for (const auto& r : results)
    if (r.applicable && !r.passed) all = false;
  if (o.machine || !o.out_file.empty()) {
    emit(run_report(lc.preset, lc.run, results), o);
  }
  if (!o.machine) {
    std::cout << lc.preset.name << ": " << lc.preset.summary << "\n"
              << "structure: " << lc.preset.J->name << " (dimension "
              << lc.preset.J->dim << ")\n";
    for (const auto& r : results) {
      std::cout << "  " << (r.applicable ? (r.passed ? "pass" : "FAIL") : "skip")
                << "  " << r.suite << "  [" << r.checks << " checks, "
                << r.failures << " failures]\n";
      for (const auto& n : r.notes) std::cout << "        " << n << "\n";
    }
    std::cout << (all ? "all suites passed" : "FAILURES detected") << "\n";
  }
  return all ? 0 : 1;
}

int cmd_presets(const std::string& name, bool machine) {
  if (!name.empty()) {
    Preset p = make_preset(name);  // throws config_error on unknown
    json j;
    j["name"] = p.name;
    j["summary"] = p.summary;
    j["structure"] = p.J->name;
    j["dimension"] = p.J->dim;
    if (machine) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << p.name << ": " << p.summary << "\n  structure: " << p.J->name
                << " (dimension " << p.J->dim << ")\n";
      if (!p.division_note.empty()) std::cout << "  " << p.division_note << "\n";
    }
    return 0;
  }
  json arr = json::array();
  for (const auto& n : preset_names()) {
    Preset p = make_preset(n);
    if (machine) {
      json j;
      j["name"] = p.name;
      j["summary"] = p.summary;
      arr.push_back(j);
    } else {
      std::cout << "  " << p.name << "  -  " << p.summary << "\n";
    }
  }
  if (machine) std::cout << arr.dump(2) << "\n";
  return 0;
}

int cmd_path(const CommonOpts& o, const std::string& kind, int points) {
  LoadedConfig lc = resolve_input(o);
  const Preset& p = lc.preset;
  const CnsPtr& j = p.J;
  Sampler s(derive_seed(lc.run.seed, p.name + ":cli-path"));
  RationalPath path;
  if (kind == "identity") {
    path = u_path(j, {j->c});
  } else if (kind == "u") {
    bool corrupt = p.mutation == Mutation::path;
    if (p.reduced) {
      QVec a = p.reduced->pack({-1, 1, 1}, p.reduced->C.zero_elt(),
                               p.reduced->C.zero_elt(), p.reduced->C.zero_elt());
      path = u_path(j, {a}, corrupt);
    } else {
      path = u_path(j, {detail::sample_invertible_vec(j, s),
                        detail::sample_invertible_vec(j, s)},
                    corrupt);
    }
  } else if (kind == "correction") {
    QVec b = detail::sample_invertible_vec(j, s);
    path = isometry_correction(u_path(j, {b, j->inverse_elt(b)}));
  } else if (kind == "hermitian" || kind == "normal") {
    if (!p.second)
      throw config_error("path kind '" + kind + "' needs a second-model structure");
    const auto& S = *p.second;
    if (kind == "hermitian") {
      D3Elt sym = detail::sample_symmetric(S, s, true);
      path = hermitian_path(S, sym, derive_seed(lc.run.seed, "cli-hp"));
    } else {
      D3Elt z;
      for (int i = 0; i < 400; ++i) {
        Scalar alpha = detail::sample_nonzero_scalar(S.B->center(), s);
        z = S.B->add(S.B->embed_center(alpha),
                     detail::sample_twisted_symmetric(S, s));
        if (!S.B->norm(z).is_zero()) break;
      }
      path = normal_path(S, z, derive_seed(lc.run.seed, "cli-np"));
    }
  } else {
    throw config_error("unknown path kind '" + kind +
                       "' (u | hermitian | normal | correction | identity)");
  }
  PathCertificate cert = endpoint_certificate(path, points, lc.run.seed,
                                              lc.run.cert_samples);
  json doc;
  doc["preset"] = p.name;
  doc["structure"] = j->name;
  doc["certificate"] = path_certificate_json(cert);
  if (o.machine || !o.out_file.empty()) emit(doc, o);
  if (!o.machine) {
    std::cout << path.label << " on " << j->name << "\n"
              << "  start " << (cert.start_ok ? "ok" : "MISMATCH: " + cert.start_witness)
              << "\n  end   " << (cert.end_ok ? "ok" : "MISMATCH: " + cert.end_witness)
              << "\n";
    if (!cert.pole_poly_str.empty())
      std::cout << "  pole polynomial: " << cert.pole_poly_str << "\n";
    for (const auto& pl : cert.poles) std::cout << "  pole at t=" << rat_str(pl) << "\n";
    int evaluated = 0;
    for (const auto& pt : cert.points) evaluated += pt.evaluated ? 1 : 0;
    std::cout << "  interior points certified: " << evaluated << "/"
              << cert.points.size() << "\n"
              << (cert.passed ? "certificate passed" : "certificate FAILED") << "\n";
  }
  return cert.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of cubic norm structures and their groups"};
  app.require_subcommand(1);

  CommonOpts vo;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("config", vo.config_file, "JSON config file");
  verify->add_option("--preset", vo.preset_name, "shipped preset name");
  verify->add_option("--suite", vo.suites, "suite to run (repeatable)");
  verify->add_option("--seed", vo.seed, "sampler seed");
  verify->add_option("--samples", vo.samples, "sample count override");
  verify->add_flag("--json", vo.machine, "machine-readable report on stdout");
  verify->add_option("--out", vo.out_file, "write the JSON report to a file");

  std::string preset_query;
  bool presets_machine = false;
  auto* presets = app.add_subcommand("presets", "list shipped presets");
  presets->add_option("name", preset_query, "show one preset in detail");
  presets->add_flag("--json", presets_machine, "machine-readable listing");

  CommonOpts po;
  std::string path_kind = "u";
  int path_points = 10;
  auto* path = app.add_subcommand("path", "build a path and certify its endpoints");
  path->add_option("config", po.config_file, "JSON config file");
  path->add_option("--preset", po.preset_name, "shipped preset name");
  path->add_option("--kind", path_kind, "u | hermitian | normal | correction | identity");
  path->add_option("--points", path_points, "interior sample count")
      ->check(CLI::PositiveNumber);
  path->add_option("--seed", po.seed, "sampler seed");
  path->add_flag("--json", po.machine, "machine-readable certificate on stdout");
  path->add_option("--out", po.out_file, "write the JSON certificate to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(vo);
    if (presets->parsed()) return cmd_presets(preset_query, presets_machine);
    if (path->parsed()) return cmd_path(po, path_kind, path_points);
  } catch (const config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const albert::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
