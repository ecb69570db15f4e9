/* Copyright 2026 The listind Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// JSON and text renderings of reports. nlohmann::json objects keep keys in
// sorted order, which keeps the documents byte-stable.

#include <sstream>

#include "json.hpp"
#include "listind/induction.hpp"

namespace listind {

namespace {

using nlohmann::json;

json value_json(const Value& v) {
  if (const auto* n = std::get_if<Natural>(&v)) return *n;
  return std::get<TransfiniteList>(v).to_string();
}

json assignment_json(const Assignment& a) {
  json out = json::object();
  for (const auto& [name, value] : a) out[name] = value_json(value);
  return out;
}

json premise_json(const PremiseCheck& p) {
  json out;
  out["name"] = p.name;
  out["formula"] = p.formula;
  out["verdict"] = p.verdict.falsified ? "falsified" : "no-counterexample";
  out["witness"] = p.verdict.falsified ? assignment_json(p.verdict.witness) : json(nullptr);
  out["bound"] = p.verdict.bound;
  out["evaluated"] = p.verdict.evaluated;
  out["exhaustive"] = p.verdict.exhaustive;
  out["source"] = p.verdict.falsified ? json(p.verdict.source) : json(nullptr);
  return out;
}

std::string verdict_text(const Verdict& v) {
  if (v.falsified) return "Falsified(" + to_string(v.witness) + ") [" + v.source + "]";
  return "NoCounterexampleFound(" + std::to_string(v.bound) + ")";
}

}  // namespace

std::string instance_verdict(const CheckReport& report) {
  return report.instance_falsified ? "axiom instance falsified" : "no falsification found";
}

std::string to_json(const CheckReport& report) {
  json out;
  out["model"] = report.model;
  out["schema"] = schema_kind_name(report.kind);
  out["steps"] = report.steps;
  out["m"] = report.steps.size() == 1 ? json(report.steps.front()) : json(nullptr);
  out["phi"] = report.phi;
  out["parameters"] = assignment_json(report.parameters);
  json premises = json::array();
  for (const auto& p : report.premises) premises.push_back(premise_json(p));
  out["premises"] = premises;
  out["conclusion"] = premise_json(report.conclusion);
  out["instance_falsified"] = report.instance_falsified;
  out["verdict"] = instance_verdict(report);
  out["seed"] = report.seed;
  out["bound"] = report.bound;
  return out.dump(2) + "\n";
}

std::string to_json(const Certificate& certificate) {
  json out;
  out["certificate"] = certificate.name;
  out["model"] = certificate.model;
  out["m"] = certificate.m ? json(certificate.m) : json(nullptr);
  json witnesses = json::object();
  for (const auto& [name, value] : certificate.witnesses) witnesses[name] = value;
  out["witnesses"] = witnesses;
  json checks = json::array();
  for (const auto& c : certificate.checks) {
    checks.push_back({{"name", c.name},
                      {"statement", c.statement},
                      {"exact", c.exact},
                      {"passed", c.passed},
                      {"detail", c.detail}});
  }
  out["checks"] = checks;
  out["samples"] = certificate.samples;
  out["seed"] = certificate.seed;
  out["valid"] = certificate.valid();
  return out.dump(2) + "\n";
}

std::string to_json(const std::vector<AxiomResult>& results, const std::string& model,
                    std::uint64_t seed) {
  json out;
  out["model"] = model;
  out["seed"] = seed;
  json axioms = json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    axioms.push_back({{"name", r.name},
                      {"formula", r.formula},
                      {"samples", r.samples},
                      {"verdict", r.passed ? "pass" : "fail"},
                      {"counterexample",
                       r.counterexample ? assignment_json(*r.counterexample) : json(nullptr)}});
  }
  out["axioms"] = axioms;
  out["all_passed"] = all;
  return out.dump(2) + "\n";
}

std::string to_text(const CheckReport& report) {
  std::ostringstream out;
  out << "model: " << report.model << "\n";
  out << "schema: " << schema_kind_name(report.kind);
  for (std::size_t i = 0; i < report.steps.size(); ++i)
    out << (i ? "," : " m=") << report.steps[i];
  out << "\nphi: " << report.phi << "\n";
  if (!report.parameters.empty()) out << "parameters: " << to_string(report.parameters) << "\n";
  for (const auto& p : report.premises)
    out << "premise " << p.name << ": " << verdict_text(p.verdict) << "\n    " << p.formula
        << "\n";
  out << "conclusion: " << verdict_text(report.conclusion.verdict) << "\n    "
      << report.conclusion.formula << "\n";
  out << "verdict: " << instance_verdict(report) << "\n";
  out << "seed: " << report.seed << "  bound: " << report.bound << "\n";
  return out.str();
}

std::string to_text(const Certificate& certificate) {
  std::ostringstream out;
  out << "certificate: " << certificate.name << " in " << certificate.model << "\n";
  out << "witness:";
  for (const auto& [name, value] : certificate.witnesses) out << " " << name << "=" << value;
  out << "\n";
  for (const auto& c : certificate.checks) {
    out << (c.passed ? "  ok   " : "  FAIL ") << c.name << (c.exact ? " (exact)" : " (sampled)")
        << ": " << c.statement << "\n";
    if (!c.detail.empty()) out << "       " << c.detail << "\n";
  }
  out << (certificate.valid() ? "valid" : "INVALID") << "\n";
  return out.str();
}

std::string to_text(const std::vector<AxiomResult>& results, const std::string& model) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << model << " " << r.name << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.samples
        << " samples)  " << r.formula << "\n";
    if (r.counterexample) out << "    counterexample: " << to_string(*r.counterexample) << "\n";
  }
  return out.str();
}

}  // namespace listind
