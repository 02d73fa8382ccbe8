#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "albert/cubic_norm.hpp"
#include "albert/paths.hpp"

namespace albert {

// Reports must be bit-stable for a fixed (input, seed, build): insertion
// order is preserved and nothing time- or address-dependent is recorded.
using json = nlohmann::ordered_json;

struct SuiteResult {
  std::string suite;
  bool applicable = true;
  bool passed = true;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> notes;  // first-failure witnesses, exact values
  json detail = json::object();

  void fail(const std::string& witness) {
    ++failures;
    passed = false;
    notes.push_back(witness);
  }
  void note(const std::string& line) { notes.push_back(line); }
  void skip(const std::string& why) {
    applicable = false;
    notes.push_back(why);
  }
};

inline json suite_json(const SuiteResult& r) {
  json j;
  j["suite"] = r.suite;
  j["applicable"] = r.applicable;
  j["passed"] = r.passed;
  j["checks"] = r.checks;
  j["failures"] = r.failures;
  j["notes"] = r.notes;
  j["detail"] = r.detail;
  return j;
}

inline json axiom_report_json(const AxiomReport& rep) {
  json arr = json::array();
  for (const auto& c : rep.checks) {
    json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["samples"] = c.samples;
    if (!c.passed) j["witness"] = c.witness;
    arr.push_back(j);
  }
  return arr;
}

inline json path_certificate_json(const PathCertificate& c) {
  json j;
  j["path"] = c.label;
  j["passed"] = c.passed;
  j["start_ok"] = c.start_ok;
  j["end_ok"] = c.end_ok;
  if (!c.start_ok) j["start_witness"] = c.start_witness;
  if (!c.end_ok) j["end_witness"] = c.end_witness;
  json poles = json::array();
  for (const auto& p : c.poles) poles.push_back(rat_str(p));
  j["poles"] = poles;
  if (!c.pole_poly_str.empty()) j["pole_polynomial"] = c.pole_poly_str;
  json pts = json::array();
  for (const auto& pt : c.points) {
    json pj;
    pj["t"] = rat_str(pt.t);
    pj["evaluated"] = pt.evaluated;
    if (pt.evaluated) pj["nu"] = rat_str(pt.nu);
    if (!pt.note.empty()) pj["note"] = pt.note;
    pts.push_back(pj);
  }
  j["points"] = pts;
  return j;
}

}  // namespace albert
