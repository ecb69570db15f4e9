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

// listind command line.
//
//   listind ord "w*2+3 - w"
//   listind eval m2 "Y ++ X = X" "Y=N(0); X=rep(N(0))"
//   listind check m1:3 induction "A(X)" 3
//   listind check m1:3 counterexample big-step --json --out cert.json
//   listind check m2 axioms --samples 10000
//   listind check m2 induction "X ++ X = X" 2 --expect clean
//   listind emit smtlib2 --m 1..5 out/
//
// Exit status: 0 expected verdict, 1 unexpected verdict, 2 usage or I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "listind/listind.h"

namespace {

constexpr int kExpected = 0;
constexpr int kUnexpected = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::string model;
  std::uint64_t seed = 0;
  std::uint64_t budget = 200;
  std::uint64_t alphabet_bound = 3;
  std::uint64_t samples = 10000;
  bool json = false;
  std::string out;
  std::string var = "X";
  std::string expect;  // falsified | clean; overrides the model's prediction
};

int report_error(li_status status) {
  std::cerr << "listind: " << li_status_name(status) << " error: " << li_last_error() << "\n";
  return kUsage;
}

// Takes ownership of s.
std::string take(char* s) {
  std::string out = s ? s : "";
  li_string_free(s);
  return out;
}

int write_output(const RunConfig& config, const std::string& text) {
  if (config.out.empty()) {
    std::cout << text;
    return kExpected;
  }
  std::ofstream file(config.out, std::ios::binary);
  file << text;
  file.close();
  if (!file) {
    std::cerr << "listind: io error: cannot write " << config.out << "\n";
    return kUsage;
  }
  return kExpected;
}

li_options options_of(const RunConfig& config) {
  li_options o;
  li_options_default(&o);
  o.seed = config.seed;
  o.budget = config.budget;
  o.bound = config.alphabet_bound;
  o.samples = config.samples;
  return o;
}

class ModelHandle {
 public:
  ~ModelHandle() { li_model_destroy(model_); }
  li_status open(const std::string& selector) { return li_model_create(selector.c_str(), &model_); }
  const li_model* get() const { return model_; }

 private:
  li_model* model_ = nullptr;
};

// "3", "1..5" or "1,3,4".
std::optional<std::vector<std::uint64_t>> parse_range(const std::string& text) {
  std::vector<std::uint64_t> out;
  auto number = [](const std::string& s) -> std::optional<std::uint64_t> {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18)
      return std::nullopt;
    return std::stoull(s);
  };
  std::stringstream parts(text);
  std::string part;
  while (std::getline(parts, part, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      auto n = number(part);
      if (!n) return std::nullopt;
      out.push_back(*n);
      continue;
    }
    auto lo = number(part.substr(0, dots));
    auto hi = number(part.substr(dots + 2));
    if (!lo || !hi || *lo > *hi || *hi - *lo > 10000) return std::nullopt;
    for (std::uint64_t m = *lo; m <= *hi; ++m) out.push_back(m);
  }
  if (out.empty()) return std::nullopt;
  return out;
}

int cmd_ord(const std::string& expression) {
  char* out = nullptr;
  if (li_status s = li_ordinal_eval(expression.c_str(), &out); s != LI_OK) return report_error(s);
  std::cout << take(out) << "\n";
  return kExpected;
}

int cmd_eval(const std::string& selector, const std::string& formula,
             const std::string& assignment) {
  ModelHandle model;
  if (li_status s = model.open(selector); s != LI_OK) return report_error(s);
  int value = 0;
  if (li_status s = li_eval(model.get(), formula.c_str(), assignment.c_str(), &value); s != LI_OK)
    return report_error(s);
  std::cout << (value ? "true" : "false") << "\n";
  return kExpected;
}

int cmd_check(RunConfig config, std::vector<std::string> args) {
  if (config.model.empty()) {
    if (args.empty()) {
      std::cerr << "listind: check needs a model (m1:<m> or m2)\n";
      return kUsage;
    }
    config.model = args.front();
    args.erase(args.begin());
  }
  ModelHandle model;
  if (li_status s = model.open(config.model); s != LI_OK) return report_error(s);
  if (args.empty()) {
    std::cerr << "listind: check needs a target: axioms | induction <phi> <m> | "
                 "counterexample <name>\n";
    return kUsage;
  }
  if (!config.expect.empty() && args.front() != "induction") {
    std::cerr << "listind: --expect applies to induction checks only\n";
    return kUsage;
  }
  const li_options options = options_of(config);
  li_report* report = nullptr;
  li_status status = LI_OK;
  const std::string& target = args.front();
  if (target == "axioms" && args.size() == 1) {
    status = li_check_axioms(model.get(), &options, &report);
  } else if (target == "induction" && args.size() == 3) {
    const auto m = parse_range(args[2]);
    if (!m || m->size() != 1 || m->front() == 0) {
      std::cerr << "listind: step width must be a positive integer, got '" << args[2] << "'\n";
      return kUsage;
    }
    status = li_check_induction(model.get(), args[1].c_str(), config.var.c_str(), m->front(),
                                &options, &report);
  } else if (target == "counterexample" && args.size() == 2) {
    status = li_certificate(model.get(), args[1].c_str(), &options, &report);
  } else {
    std::cerr << "listind: unknown check target; expected axioms | induction <phi> <m> | "
                 "counterexample <name>\n";
    return kUsage;
  }
  if (status != LI_OK) return report_error(status);

  char* text = nullptr;
  status = config.json ? li_report_json(report, &text) : li_report_text(report, &text);
  int expected = 0;
  if (status == LI_OK && config.expect.empty()) status = li_report_expected(report, &expected);
  if (status == LI_OK && !config.expect.empty()) {
    int falsified = 0;
    status = li_report_instance_falsified(report, &falsified);
    expected = (falsified != 0) == (config.expect == "falsified");
  }
  li_report_destroy(report);
  if (status != LI_OK) return report_error(status);
  if (int rc = write_output(config, take(text)); rc != kExpected) return rc;
  return expected ? kExpected : kUnexpected;
}

int cmd_emit(const std::string& format, const std::string& range, const std::string& dir) {
  const auto ms = parse_range(range);
  if (!ms) {
    std::cerr << "listind: bad --m range '" << range << "'\n";
    return kUsage;
  }
  char* paths = nullptr;
  if (li_status s = li_emit_benchmarks(format.c_str(), ms->data(), ms->size(), dir.c_str(), &paths);
      s != LI_OK)
    return report_error(s);
  std::cout << take(paths);
  return kExpected;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Countermodels for list induction: evaluation, checking, certificates"};
  app.require_subcommand(1);
  RunConfig config;

  auto* ord = app.add_subcommand("ord", "Evaluate an ordinal expression");
  std::string expression;
  ord->add_option("expression", expression, "e.g. \"w*2+3 - w\" or \"divmod(w^2, w)\"")
      ->required();

  auto* eval = app.add_subcommand("eval", "Evaluate an open formula in a model");
  std::string eval_model, formula, assignment;
  eval->add_option("model", eval_model, "m1:<m> or m2")->required();
  eval->add_option("formula", formula)->required();
  eval->add_option("assignment", assignment, "e.g. \"X=N(0); x=3\"");

  auto* check = app.add_subcommand("check", "Check axioms, an induction instance or a certificate");
  std::vector<std::string> check_args;
  check->add_option("args", check_args,
                    "[model] axioms | induction <phi> <m> | counterexample <name>");
  check->add_option("--model", config.model, "m1:<m> or m2");
  check->add_option("--seed", config.seed, "RNG seed")->capture_default_str();
  check->add_option("--budget", config.budget, "random assignments per universal check")
      ->capture_default_str();
  check->add_option("--alphabet-bound", config.alphabet_bound, "enumeration bound")
      ->capture_default_str();
  check->add_option("--samples", config.samples, "axiom and certificate samples")
      ->capture_default_str();
  check->add_option("--var", config.var, "induction variable")->capture_default_str();
  check->add_option("--expect", config.expect, "expected induction verdict")
      ->check(CLI::IsMember({"falsified", "clean"}));
  check->add_flag("--json", config.json, "JSON report");
  check->add_option("--out", config.out, "write the report to this file");

  auto* emit = app.add_subcommand("emit", "Write big-step benchmark problems");
  std::string format, range = "1..5", out_dir;
  emit->add_option("format", format, "smtlib2 or tptp")
      ->required()
      ->check(CLI::IsMember({"smtlib2", "tptp"}));
  emit->add_option("out_dir", out_dir, "output directory");
  emit->add_option("--m", range, "step widths, e.g. 1..5 or 2")->capture_default_str();
  emit->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (ord->parsed()) return cmd_ord(expression);
  if (eval->parsed()) return cmd_eval(eval_model, formula, assignment);
  if (check->parsed()) return cmd_check(config, check_args);
  if (out_dir.empty()) {
    std::cerr << "listind: emit needs an output directory\n";
    return kUsage;
  }
  return cmd_emit(format, range, out_dir);
}
