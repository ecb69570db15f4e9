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

// Induction schema instances, bounded checking against the models, the three
// counterexample certificates, and benchmark emission.

#ifndef LISTIND_INDUCTION_HPP_
#define LISTIND_INDUCTION_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "listind/models.hpp"

namespace listind {

enum class SchemaKind { kOneStep, kBigStep, kDouble, kMultivariate };

const char* schema_kind_name(SchemaKind kind);

struct InductionInstance {
  SchemaKind kind;
  Formula phi = Formula::truth();
  std::vector<std::string> variables;  // induction variables
  std::vector<Natural> steps;          // step width per induction variable
  // Element variables introduced by the step premise, per induction variable.
  std::vector<std::vector<std::string>> step_elements;
  std::vector<std::string> premise_names;
  std::vector<Formula> premises;
  Formula conclusion = Formula::truth();

  // premises -> conclusion, parameters left free.
  Formula axiom() const;
};

// All builders throw std::invalid_argument on malformed requests (wrong
// sort, m = 0, repeated variables, length mismatch). An induction variable
// that does not occur in phi is accepted.
InductionInstance build_one_step(const Formula& phi, const std::string& var);
InductionInstance build_big_step(const Formula& phi, const std::string& var, Natural m);
InductionInstance build_double(const Formula& phi, const std::string& x, const std::string& y);
InductionInstance build_multivariate(const Formula& phi, const std::vector<std::string>& vars,
                                     const std::vector<Natural>& steps);

// Representative list elements: words over alphabet + {f} of length <= bound
// (f the least natural outside the alphabet), NElems with such prefixes and
// start <= bound, and for M2 a restricted family of cycle elements.
// Deterministic order, no duplicates.
std::vector<TransfiniteList> enumerate_domain(const Model& model,
                                              const std::vector<Natural>& alphabet,
                                              Natural bound);

struct CheckOptions {
  std::uint64_t seed = 0;
  std::uint64_t budget = 200;  // random assignments per universal check
  Natural bound = 3;           // enumeration bound B
  std::uint64_t exhaustive_cap = 200000;
};

struct Verdict {
  bool falsified = false;
  Assignment witness;  // replayable when falsified
  Natural bound = 0;   // search bound reported when not falsified
  std::uint64_t evaluated = 0;
  bool exhaustive = false;  // whole enumeration product was covered
  std::string source;       // enumeration, sample, probe or chain
};

// Checks a formula of the form forall v1 ... forall vn. body with open body.
// Free variables of the body other than v1..vn are read from params.
Verdict check_universal(const Model& model, const Formula& closed, const CheckOptions& options,
                        const Assignment& params = {});

// The formula under its leading universal quantifiers.
Formula universal_body(const Formula& f);

struct PremiseCheck {
  std::string name;
  std::string formula;
  Verdict verdict;
};

struct CheckReport {
  std::string model;
  SchemaKind kind;
  std::vector<Natural> steps;
  std::string phi;
  std::vector<PremiseCheck> premises;
  PremiseCheck conclusion;
  bool instance_falsified = false;
  Assignment parameters;
  std::uint64_t seed = 0;
  Natural bound = 0;
};

// "axiom instance falsified" or "no falsification found".
std::string instance_verdict(const CheckReport& report);

// Runs the premises and the conclusion for each parameter choice. When the
// conclusion fails at l while no premise counterexample was found, the
// predecessors of l are searched for a falsified premise before the instance
// is declared falsified.
CheckReport check_instance(const Model& model, const InductionInstance& inst,
                           const CheckOptions& options);

// Open formulas in X over the model's signature.
struct FormulaGenConfig {
  unsigned depth = 3;
  unsigned max_atoms = 3;
  Natural constant_bound = 3;
};
Formula random_open_formula(const Model& model, Rng& rng, const FormulaGenConfig& config = {});

struct CertificateCheck {
  std::string name;
  std::string statement;
  bool exact = false;
  bool passed = false;
  std::string detail;
};

struct Certificate {
  std::string name;
  std::string model;
  Natural m = 0;
  std::vector<std::pair<std::string, std::string>> witnesses;
  std::vector<CertificateCheck> checks;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  bool valid() const;
};

// Throws std::invalid_argument for m < 2.
Certificate replicate_big_step_failure(Natural m, std::uint64_t seed = 0,
                                       std::uint64_t samples = 10000);
Certificate replicate_right_cancellation_failure(std::uint64_t seed = 0,
                                                 std::uint64_t samples = 1000);
Certificate replicate_right_decomposition_failure();

// JSON documents with sorted keys.
std::string to_json(const CheckReport& report);
std::string to_json(const Certificate& certificate);
std::string to_json(const std::vector<AxiomResult>& results, const std::string& model,
                    std::uint64_t seed);

std::string to_text(const CheckReport& report);
std::string to_text(const Certificate& certificate);
std::string to_text(const std::vector<AxiomResult>& results, const std::string& model);

enum class BenchmarkFormat { kSmtLib2, kTptp };

std::string benchmark_big_step(Natural m, BenchmarkFormat format);
std::string benchmark_file_name(Natural m, BenchmarkFormat format);

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One file per m; returns the written paths. Throws IoError when the
// directory cannot be created or written.
std::vector<std::filesystem::path> emit_benchmarks(const std::vector<Natural>& ms,
                                                   BenchmarkFormat format,
                                                   const std::filesystem::path& out_dir);

}  // namespace listind

#endif  // LISTIND_INDUCTION_HPP_
