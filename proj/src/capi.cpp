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

#include "listind/listind.h"

#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "listind/induction.hpp"

struct li_model {
  std::unique_ptr<listind::Model> model;
};

struct AxiomsReport {
  std::vector<listind::AxiomResult> results;
  std::string model;
  std::uint64_t seed;
};

struct InductionReport {
  listind::CheckReport report;
  // Verdict the models predict; nullopt when there is no prediction.
  std::optional<bool> expect_falsified;
};

struct li_report {
  std::variant<AxiomsReport, InductionReport, listind::Certificate> content;
};

namespace {

thread_local std::string last_error;

li_status fail(li_status status, const std::string& message) {
  last_error = message;
  return status;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

li_status give(const std::string& s, char** out) {
  if (!out) return fail(LI_ERR_ARGUMENT, "null output pointer");
  *out = duplicate(s);
  if (!*out) return fail(LI_ERR_INTERNAL, "out of memory");
  return LI_OK;
}

// Maps the library's exceptions onto status codes.
template <typename F>
li_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const listind::ParseError& e) {
    return fail(e.kind() == listind::ParseError::Kind::kSort ? LI_ERR_SORT : LI_ERR_PARSE,
                e.what());
  } catch (const listind::OrdinalSyntaxError& e) {
    return fail(LI_ERR_PARSE, e.what());
  } catch (const listind::LiteralSyntaxError& e) {
    return fail(LI_ERR_PARSE, e.what());
  } catch (const listind::SortError& e) {
    return fail(LI_ERR_SORT, e.what());
  } catch (const listind::DomainError& e) {
    return fail(LI_ERR_DOMAIN, e.what());
  } catch (const std::overflow_error& e) {
    return fail(LI_ERR_DOMAIN, e.what());
  } catch (const listind::EvaluationError& e) {
    return fail(LI_ERR_EVAL, e.what());
  } catch (const listind::IoError& e) {
    return fail(LI_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(LI_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(LI_ERR_INTERNAL, e.what());
  }
}

listind::CheckOptions check_options(const li_options* options) {
  li_options o;
  li_options_default(&o);
  if (options) o = *options;
  listind::CheckOptions c;
  c.seed = o.seed;
  c.budget = o.budget;
  c.bound = o.bound;
  return c;
}

std::uint64_t sample_count(const li_options* options) {
  li_options o;
  li_options_default(&o);
  return options ? options->samples : o.samples;
}

// Predictions for m-step induction: M2 satisfies every open instance; M1(k)
// satisfies every open instance with step width below k, and A(X) fails
// exactly for widths divisible by k.
std::optional<bool> predicted(const listind::Model& model, const listind::Formula& phi,
                              const std::string& var, std::uint64_t m) {
  if (!model.signature().has_predicate) return false;
  const std::uint64_t k = model.step();
  if (m < k) return false;
  if (phi == listind::Formula::predicate(listind::Term::variable(var))) return m % k == 0;
  return std::nullopt;
}

}  // namespace

extern "C" {

const char* li_last_error(void) { return last_error.c_str(); }

const char* li_status_name(li_status status) {
  switch (status) {
    case LI_OK:
      return "ok";
    case LI_ERR_ARGUMENT:
      return "argument";
    case LI_ERR_PARSE:
      return "parse";
    case LI_ERR_SORT:
      return "sort";
    case LI_ERR_DOMAIN:
      return "domain";
    case LI_ERR_EVAL:
      return "evaluation";
    case LI_ERR_IO:
      return "io";
    case LI_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

void li_string_free(char* s) { std::free(s); }

void li_options_default(li_options* options) {
  if (!options) return;
  options->seed = 0;
  options->budget = 200;
  options->bound = 3;
  options->samples = 10000;
}

li_status li_model_create(const char* selector, li_model** out) {
  if (!selector || !out) return fail(LI_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new li_model{listind::make_model(selector)};
    return LI_OK;
  });
}

void li_model_destroy(li_model* model) { delete model; }

li_status li_model_name(const li_model* model, char** out) {
  if (!model) return fail(LI_ERR_ARGUMENT, "null model");
  return give(model->model->name(), out);
}

li_status li_ordinal_eval(const char* expression, char** out) {
  if (!expression) return fail(LI_ERR_ARGUMENT, "null expression");
  return guarded([&] {
    return give(listind::to_string(listind::evaluate_ordinal_expression(expression)), out);
  });
}

li_status li_list_normalize(const char* literal, char** out) {
  if (!literal) return fail(LI_ERR_ARGUMENT, "null literal");
  return guarded([&] { return give(listind::parse_list(literal).to_string(), out); });
}

li_status li_eval(const li_model* model, const char* formula, const char* assignment, int* out) {
  if (!model || !formula || !out) return fail(LI_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const listind::Model& m = *model->model;
    const listind::Formula f = listind::parse_formula(formula, m.signature());
    const listind::Assignment sigma =
        listind::parse_assignment(assignment ? assignment : "");
    *out = listind::eval_formula(m, f, sigma) ? 1 : 0;
    return LI_OK;
  });
}

li_status li_check_axioms(const li_model* model, const li_options* options, li_report** out) {
  if (!model || !out) return fail(LI_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const listind::Model& m = *model->model;
    const std::uint64_t seed = check_options(options).seed;
    auto results =
        listind::check_axioms(m, listind::applicable_axioms(m), seed, sample_count(options));
    *out = new li_report{AxiomsReport{std::move(results), m.name(), seed}};
    return LI_OK;
  });
}

li_status li_check_induction(const li_model* model, const char* formula, const char* var,
                             uint64_t m, const li_options* options, li_report** out) {
  if (!model || !formula || !out) return fail(LI_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const listind::Model& md = *model->model;
    const listind::Formula phi = listind::parse_formula(formula, md.signature());
    if (!listind::is_open(phi))
      return fail(LI_ERR_ARGUMENT, "induction formula must be quantifier-free");
    const std::string v = var ? var : "X";
    const auto inst = listind::build_big_step(phi, v, m);
    auto report = listind::check_instance(md, inst, check_options(options));
    *out = new li_report{InductionReport{std::move(report), predicted(md, phi, v, m)}};
    return LI_OK;
  });
}

li_status li_certificate(const li_model* model, const char* name, const li_options* options,
                         li_report** out) {
  if (!model || !name || !out) return fail(LI_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const listind::Model& md = *model->model;
    const std::string n = name;
    const std::uint64_t seed = check_options(options).seed;
    if (n == "big-step") {
      if (!md.signature().has_predicate || md.step() < 2)
        return fail(LI_ERR_ARGUMENT, "big-step needs model m1:m with m >= 2");
      *out = new li_report{listind::replicate_big_step_failure(
          md.step(), seed, sample_count(options))};
      return LI_OK;
    }
    if (md.signature().has_predicate)
      return fail(LI_ERR_ARGUMENT, n + " needs model m2");
    if (n == "right-cancellation") {
      *out = new li_report{
          listind::replicate_right_cancellation_failure(seed, sample_count(options))};
      return LI_OK;
    }
    if (n == "right-decomposition") {
      *out = new li_report{listind::replicate_right_decomposition_failure()};
      return LI_OK;
    }
    return fail(LI_ERR_ARGUMENT, "unknown certificate '" + n + "'");
  });
}

li_status li_report_json(const li_report* report, char** out) {
  if (!report) return fail(LI_ERR_ARGUMENT, "null report");
  return guarded([&] {
    struct Visitor {
      std::string operator()(const AxiomsReport& r) const {
        return listind::to_json(r.results, r.model, r.seed);
      }
      std::string operator()(const InductionReport& r) const { return listind::to_json(r.report); }
      std::string operator()(const listind::Certificate& c) const { return listind::to_json(c); }
    };
    return give(std::visit(Visitor{}, report->content), out);
  });
}

li_status li_report_text(const li_report* report, char** out) {
  if (!report) return fail(LI_ERR_ARGUMENT, "null report");
  return guarded([&] {
    struct Visitor {
      std::string operator()(const AxiomsReport& r) const {
        return listind::to_text(r.results, r.model);
      }
      std::string operator()(const InductionReport& r) const { return listind::to_text(r.report); }
      std::string operator()(const listind::Certificate& c) const { return listind::to_text(c); }
    };
    return give(std::visit(Visitor{}, report->content), out);
  });
}

li_status li_report_expected(const li_report* report, int* out) {
  if (!report || !out) return fail(LI_ERR_ARGUMENT, "null argument");
  struct Visitor {
    bool operator()(const AxiomsReport& r) const {
      for (const auto& a : r.results)
        if (!a.passed) return false;
      return true;
    }
    bool operator()(const InductionReport& r) const {
      return !r.expect_falsified || *r.expect_falsified == r.report.instance_falsified;
    }
    bool operator()(const listind::Certificate& c) const { return c.valid(); }
  };
  *out = std::visit(Visitor{}, report->content) ? 1 : 0;
  return LI_OK;
}

li_status li_report_instance_falsified(const li_report* report, int* out) {
  if (!report || !out) return fail(LI_ERR_ARGUMENT, "null argument");
  const auto* r = std::get_if<InductionReport>(&report->content);
  if (!r) return fail(LI_ERR_ARGUMENT, "not an induction report");
  *out = r->report.instance_falsified ? 1 : 0;
  return LI_OK;
}

void li_report_destroy(li_report* report) { delete report; }

li_status li_emit_benchmarks(const char* format, const uint64_t* ms, size_t count,
                             const char* out_dir, char** out_paths) {
  if (!format || (!ms && count) || !out_dir) return fail(LI_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const std::string f = format;
    listind::BenchmarkFormat fmt;
    if (f == "smtlib2") fmt = listind::BenchmarkFormat::kSmtLib2;
    else if (f == "tptp") fmt = listind::BenchmarkFormat::kTptp;
    else return fail(LI_ERR_ARGUMENT, "unknown format '" + f + "' (smtlib2 or tptp)");
    for (size_t i = 0; i < count; ++i)
      if (ms[i] == 0) return fail(LI_ERR_ARGUMENT, "m must be at least 1");
    const auto paths = listind::emit_benchmarks({ms, ms + count}, fmt, out_dir);
    std::string joined;
    for (const auto& p : paths) joined += p.string() + "\n";
    if (!out_paths) return LI_OK;
    return give(joined, out_paths);
  });
}

}  // extern "C"
