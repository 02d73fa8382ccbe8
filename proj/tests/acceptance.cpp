// Acceptance gate: ten checks over the shipped presets, one line each.
// All arithmetic is exact; the only tolerance anywhere is the wall-clock
// bound in check 1. Exit 0 only if every line passes.

#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "albert/albert.hpp"

using namespace albert;

namespace {

int g_failed = 0;

void line(int k, bool ok, const std::string& what) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << k << ". " << what << std::endl;
  if (!ok) ++g_failed;
}

bool all_passed(const std::vector<SuiteResult>& rs) {
  for (const auto& r : rs)
    if (!r.applicable || !r.passed) return false;
  return !rs.empty();
}

std::string first_note(const SuiteResult& r) {
  return r.notes.empty() ? std::string("(no witness)") : r.notes.front();
}

std::string clip(const std::string& s, std::size_t n = 120) {
  return s.size() <= n ? s : s.substr(0, n) + "...";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main() {
  std::map<std::string, Preset> presets;
  std::vector<std::string> honest;
  for (const auto& n : preset_names()) {
    presets.emplace(n, make_preset(n));
    if (presets.at(n).mutation == Mutation::none) honest.push_back(n);
  }

  // 1. Norm/adjoint axioms on every honest preset, 200 samples each,
  //    within 60 s of wall clock per preset.
  {
    RunParams rp;
    rp.samples = 200;
    bool ok = honest.size() >= 6;
    double worst = 0;
    std::string why;
    for (const auto& n : honest) {
      auto t0 = std::chrono::steady_clock::now();
      SuiteResult r = run_suite("axioms", presets.at(n), rp);
      double secs = seconds_since(t0);
      worst = std::max(worst, secs);
      if (!r.applicable || !r.passed) {
        ok = false;
        why = n + ": " + clip(first_note(r));
      }
      if (secs > 60.0) {
        ok = false;
        why = n + " took " + std::to_string(secs) + "s";
      }
    }
    std::string what = "axioms: " + std::to_string(honest.size()) +
                       " presets x 200 samples, slowest " +
                       std::to_string(worst).substr(0, 5) + "s (bound 60s)";
    line(1, ok, ok ? what : what + "; " + why);
  }

  // 2. The norm-derived adjoint agrees with the stored one, 200 points
  //    per preset.
  {
    RunParams rp;
    rp.samples = 200;
    bool ok = true;
    std::string why;
    for (const auto& n : honest) {
      SuiteResult r = run_suite("adjoint", presets.at(n), rp);
      if (!r.applicable || !r.passed) {
        ok = false;
        why = n + ": " + clip(first_note(r));
      }
    }
    line(2, ok,
         "adjoint oracle: 200 points per preset" + (ok ? "" : "; " + why));
  }

  // 3. U-operators compose with the norm: N(U_a x) = N(a)^2 N(x),
  //    100 pairs per preset.
  {
    RunParams rp;
    rp.operators = 100;
    bool ok = true;
    std::string why;
    for (const auto& n : honest) {
      SuiteResult r = run_suite("operators", presets.at(n), rp);
      if (!r.applicable || !r.passed) {
        ok = false;
        why = n + ": " + clip(first_note(r));
      }
    }
    line(3, ok,
         "operator norm composition: 100 pairs per preset" +
             (ok ? "" : "; " + why));
  }

  // 4. Group extensions on a split involution preset and a triple-sum
  //    preset, 50 each; the similitude factor identity is exact.
  {
    RunParams rp;
    rp.extension = 50;
    SuiteResult a = run_suite("extension", presets.at("second-gauss"), rp);
    SuiteResult b = run_suite("extension", presets.at("first-m3-l1"), rp);
    bool ok = a.applicable && a.passed && b.applicable && b.passed;
    line(4, ok,
         "extensions: 50 automorphisms + 50 similitudes on second-gauss and "
         "first-m3-l1" +
             (ok ? ""
                 : "; " + clip(first_note(a.passed ? b : a))));
  }

  // 5. Central kernel triples act as the identity, 20 parameters over two
  //    distinct quadratic centers.
  {
    RunParams rp;
    rp.kernel = 20;
    SuiteResult a = run_suite("kernel", presets.at("second-gauss"), rp);
    SuiteResult b = run_suite("kernel", presets.at("second-root2-twisted"), rp);
    bool ok = a.applicable && a.passed && b.applicable && b.passed;
    line(5, ok,
         "kernel parameters: 20 over Q(i) and 20 over Q(sqrt 2)" +
             (ok ? "" : "; " + clip(first_note(a.passed ? b : a))));
  }

  // 6. The exchange-model bridge preserves norms (200 points) and the
  //    base point, on every triple-sum preset.
  {
    RunParams rp;
    rp.samples = 200;
    bool ok = false;
    int count = 0;
    std::string why;
    for (const auto& n : honest) {
      if (!presets.at(n).first) continue;
      SuiteResult r = run_suite("bridge", presets.at(n), rp);
      ++count;
      if (!r.applicable || !r.passed) {
        why = n + ": " + clip(first_note(r));
        count = -1000;
      }
    }
    ok = count > 0;
    line(6, ok,
         "bridge: 200 norm checks and base-point match on " +
             std::to_string(std::max(count, 0)) + " presets" +
             (ok ? "" : "; " + why));
  }

  // 7. Normal-times-symmetric factorization, 100 invertible elements on
  //    the conjugate-transpose matrix preset.
  {
    RunParams rp;
    rp.factorization = 100;
    SuiteResult r = run_suite("factorization", presets.at("second-gauss"), rp);
    bool ok = r.applicable && r.passed;
    line(7, ok,
         "factorization: 100 elements on second-gauss" +
             (ok ? "" : "; " + clip(first_note(r))));
  }

  // 8. The normalizing map reaches the base point from 100 tower points on
  //    first-tower-l2; the adopted variant is recorded in the report.
  {
    RunParams rp;
    rp.transitivity = 100;
    SuiteResult r = run_suite("transitivity", presets.at("first-tower-l2"), rp);
    bool ok = r.applicable && r.passed && r.detail.contains("adopted");
    std::string adopted =
        r.detail.contains("adopted") ? r.detail["adopted"].get<std::string>()
                                     : "(missing)";
    line(8, ok,
         "transitivity: 100 points on first-tower-l2, adopted variant " +
             adopted + (ok ? "" : "; " + clip(first_note(r))));
  }

  // 9. Path certificates on the shipped parameter sets; the diagonal demo
  //    declares its pole at t = 1/2; the corrected family has factor 1 at
  //    ten interior points.
  {
    RunParams rp;
    rp.path_points = 10;
    SuiteResult a = run_suite("paths", presets.at("split-h3"), rp);
    SuiteResult b = run_suite("paths", presets.at("second-gauss"), rp);
    SuiteResult c = run_suite("paths", presets.at("first-m3-l1"), rp);
    bool pole_declared = false;
    for (const auto& n : a.notes)
      if (n.find("root 1/2") != std::string::npos) pole_declared = true;
    bool ok = a.applicable && a.passed && b.applicable && b.passed &&
              c.applicable && c.passed && pole_declared;
    std::string why;
    if (!pole_declared) why = "pole at 1/2 not declared";
    for (const auto* r : {&a, &b, &c})
      if (!r->passed) why = clip(first_note(*r));
    line(9, ok,
         "paths: certificates on split-h3, second-gauss, first-m3-l1; demo pole "
         "root 1/2 declared; correction factor 1 at 10 points" +
             (ok ? "" : "; " + why));
  }

  // 10. Each shipped corruption is rejected with an exact witness.
  {
    RunParams rp;
    rp.samples = 10;
    rp.extension = 3;
    rp.path_points = 4;
    struct Case {
      const char* preset;
      const char* suite;
    };
    bool ok = true;
    std::string detail;
    for (const Case& cs : {Case{"corrupted-adjoint", "adjoint"},
                           Case{"corrupted-path", "paths"},
                           Case{"corrupted-extension", "extension"}}) {
      SuiteResult r = run_suite(cs.suite, presets.at(cs.preset), rp);
      bool caught = r.applicable && !r.passed && r.failures > 0;
      if (std::string(cs.preset) != "corrupted-adjoint") {
        bool prefixed = false;
        for (const auto& n : r.notes)
          if (n.rfind("corruption caught: ", 0) == 0) prefixed = true;
        caught = caught && prefixed;
      }
      if (!caught) {
        ok = false;
        detail += std::string(cs.preset) + " not caught; ";
      } else {
        detail += std::string(cs.preset) + " caught (" +
                  clip(first_note(r), 60) + "); ";
      }
    }
    line(10, ok, "corruption detection: " + detail);
  }

  std::cout << (g_failed == 0 ? "acceptance: all 10 passed"
                              : "acceptance: " + std::to_string(g_failed) +
                                    " failed")
            << std::endl;
  return g_failed == 0 ? 0 : 1;
}
