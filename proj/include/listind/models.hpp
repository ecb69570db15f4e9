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

// The two list structures.
//
//   M1(m): lists are finite words and single NElems; nil, cons as prepend,
//          A holds on all words and on w ^ N_k iff w != () or m does not
//          divide k. No append.
//   M2:    lists are the implemented fragment of transfinite lists; nil,
//          cons, and append as concatenation. No predicate.

#ifndef LISTIND_MODELS_HPP_
#define LISTIND_MODELS_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "listind/logic.hpp"

namespace listind {

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Deterministic draws; the bounded draw does not depend on the standard
// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

class Model {
 public:
  virtual ~Model() = default;

  virtual std::string name() const = 0;
  virtual const Signature& signature() const = 0;
  virtual bool in_domain(const TransfiniteList& l) const = 0;
  // Interpretation of A; throws EvaluationError when A is not in the signature.
  virtual bool holds_A(const TransfiniteList& l) const = 0;
  // Step parameter of M1, 0 for M2.
  virtual Natural step() const { return 0; }
};

class M1 final : public Model {
 public:
  explicit M1(Natural m);
  std::string name() const override { return "m1:" + std::to_string(m_); }
  const Signature& signature() const override { return sig_; }
  bool in_domain(const TransfiniteList& l) const override;
  bool holds_A(const TransfiniteList& l) const override;
  Natural step() const override { return m_; }

 private:
  Natural m_;
  Signature sig_ = Signature::with_predicate();
};

class M2 final : public Model {
 public:
  std::string name() const override { return "m2"; }
  const Signature& signature() const override { return sig_; }
  bool in_domain(const TransfiniteList&) const override { return true; }
  bool holds_A(const TransfiniteList&) const override;

 private:
  Signature sig_ = Signature::with_append();
};

// "m1:3" or "m2". Throws std::invalid_argument on anything else.
std::unique_ptr<Model> make_model(std::string_view selector);

bool m1_holds_A(Natural m, const TransfiniteList& l);

Value eval_term(const Model& model, const Term& t, const Assignment& sigma);
// Open formulas only; quantifiers raise EvaluationError.
bool eval_formula(const Model& model, const Formula& f, const Assignment& sigma);

// Segments l0..ln with t = l0 ^ X ^ l1 ^ ... ^ X ^ ln. Element variables and
// list parameters are read from sigma; an unassigned list variable other than
// `var` raises EvaluationError.
std::vector<TransfiniteList> decompose_term(const Term& t, const Assignment& sigma,
                                            const std::string& var = "X");

// Evaluates l0 ^ x ^ l1 ^ ... ^ x ^ ln.
TransfiniteList recompose(const std::vector<TransfiniteList>& segments, const TransfiniteList& x);

struct StabilizationBound {
  enum class Kind { kAAtom, kM1Equation, kM2Equation, kFormulaSync };
  Kind kind;
  Natural bound = 0;
  std::string trace;
  // Set when the atom does not mention the variable: its truth value is then
  // this constant everywhere.
  std::optional<bool> constant;
};

const char* bound_kind_name(StabilizationBound::Kind kind);

// K with A(t(N_k)) true for all k >= K, m not dividing k.
StabilizationBound a_atom_bound(Natural m, const Term& t, const Assignment& params = {},
                                const std::string& var = "X");

// nullopt when the equation holds for every value of `var`; otherwise K with
// the equation false on all words of length >= K and all N_k, k >= K.
std::optional<StabilizationBound> equation_bound_m1(Natural m, const Formula& equation,
                                                    const Assignment& params = {},
                                                    const std::string& var = "X");

// nullopt when universally true; otherwise N with the equation false at
// (n) ^ l for all n >= N and every l.
std::optional<StabilizationBound> equation_bound_m2(const Formula& equation,
                                                    const Assignment& params = {},
                                                    const std::string& var = "X");

// n0 with phi(lambda ^| n) <-> phi((n)) for all n >= n0. Throws DomainError
// when lambda is a finite word.
StabilizationBound formula_sync_bound(const Formula& phi, const TransfiniteList& lambda,
                                      const Assignment& params = {},
                                      const std::string& var = "X");

// All equation and predicate atoms of an open formula, left to right.
std::vector<Formula> atoms_of(const Formula& f);

// Random domain elements.
class Sampler {
 public:
  // Entries and starts are drawn from [0, value_bound]; prefixes and words
  // have at most length_bound entries.
  Sampler(const Model& model, std::uint64_t seed, Natural value_bound = 6,
          Natural length_bound = 4);
  Sampler(const Model&&, std::uint64_t, Natural = 6, Natural = 4) = delete;

  Natural element();
  NElem nelem();
  Word word();
  TransfiniteList list();
  Rng& rng() { return rng_; }

 private:
  const Model& model_;
  Rng rng_;
  Natural value_bound_;
  Natural length_bound_;
};

struct AxiomResult {
  std::string name;
  std::string formula;
  std::uint64_t samples = 0;
  bool passed = true;
  std::optional<Assignment> counterexample;
};

// Axiom names: "L0.1", "L0.2", "L1.1", "L1.2", "CA".
std::vector<std::string> applicable_axioms(const Model& model);
Formula axiom_formula(const std::string& name);

// Throws std::invalid_argument for unknown names or axioms outside the
// model's signature.
std::vector<AxiomResult> check_axioms(const Model& model, const std::vector<std::string>& axioms,
                                      std::uint64_t seed, std::uint64_t samples);

}  // namespace listind

#endif  // LISTIND_MODELS_HPP_
