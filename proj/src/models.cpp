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

#include "listind/models.hpp"

#include <algorithm>
#include <limits>

namespace listind {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return r % n;
}

// Models.

M1::M1(Natural m) : m_(m) {
  if (m == 0) throw std::invalid_argument("M1 needs a step parameter m >= 1");
}

bool M1::in_domain(const TransfiniteList& l) const { return l.is_word() || l.is_nelem(); }

bool m1_holds_A(Natural m, const TransfiniteList& l) {
  if (l.is_word()) return true;
  if (!l.is_nelem())
    throw EvaluationError(l.to_string() + " is not an element of M1");
  const NElem& n = std::get<NElem>(l.blocks().front());
  return !n.prefix().empty() || n.start() % m != 0;
}

bool M1::holds_A(const TransfiniteList& l) const { return m1_holds_A(m_, l); }

bool M2::holds_A(const TransfiniteList&) const {
  throw EvaluationError("predicate A is not interpreted in m2");
}

std::unique_ptr<Model> make_model(std::string_view selector) {
  if (selector == "m2") return std::make_unique<M2>();
  if (selector.substr(0, 3) == "m1:" && selector.size() > 3) {
    Natural m = 0;
    for (char c : selector.substr(3)) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad model selector '" + std::string(selector) + "'");
      m = checked_add(checked_mul(m, 10), static_cast<Natural>(c - '0'));
    }
    if (m == 0) throw std::invalid_argument("m1 needs m >= 1");
    return std::make_unique<M1>(m);
  }
  throw std::invalid_argument("unknown model '" + std::string(selector) +
                              "' (expected m1:<m> or m2)");
}

// Evaluation.

namespace {

Natural element_value(const Term& t, const Assignment& sigma) {
  switch (t.kind()) {
    case Term::Kind::kElemConst:
      return t.value();
    case Term::Kind::kVariable: {
      auto it = sigma.find(t.name());
      if (it == sigma.end()) throw EvaluationError("unassigned variable " + t.name());
      if (const auto* n = std::get_if<Natural>(&it->second)) return *n;
      throw EvaluationError("variable " + t.name() + " holds a list, expected an element");
    }
    default:
      throw EvaluationError("not an element term: " + to_string(t));
  }
}

TransfiniteList list_value(const Model& model, const Term& t, const Assignment& sigma) {
  switch (t.kind()) {
    case Term::Kind::kNil:
      return {};
    case Term::Kind::kVariable: {
      auto it = sigma.find(t.name());
      if (it == sigma.end()) throw EvaluationError("unassigned variable " + t.name());
      const auto* l = std::get_if<TransfiniteList>(&it->second);
      if (!l) throw EvaluationError("variable " + t.name() + " holds an element, expected a list");
      if (!model.in_domain(*l))
        throw EvaluationError(l->to_string() + " is not an element of " + model.name());
      return *l;
    }
    case Term::Kind::kListConst:
      if (!model.in_domain(t.list()))
        throw EvaluationError(t.list().to_string() + " is not an element of " + model.name());
      return t.list();
    case Term::Kind::kCons:
      return cons(element_value(t.left(), sigma), list_value(model, t.right(), sigma));
    case Term::Kind::kAppend:
      if (!model.signature().has_append)
        throw EvaluationError("append is not interpreted in " + model.name());
      return concat(list_value(model, t.left(), sigma), list_value(model, t.right(), sigma));
    default:
      throw EvaluationError("not a list term: " + to_string(t));
  }
}

}  // namespace

Value eval_term(const Model& model, const Term& t, const Assignment& sigma) {
  if (t.sort() == Sort::kElem) return element_value(t, sigma);
  return list_value(model, t, sigma);
}

bool eval_formula(const Model& model, const Formula& f, const Assignment& sigma) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      return true;
    case Formula::Kind::kFalse:
      return false;
    case Formula::Kind::kEquals:
      if (f.equation_sort() == Sort::kElem)
        return element_value(f.lhs(), sigma) == element_value(f.rhs(), sigma);
      return list_value(model, f.lhs(), sigma) == list_value(model, f.rhs(), sigma);
    case Formula::Kind::kPredicate:
      if (!model.signature().has_predicate)
        throw EvaluationError("predicate A is not interpreted in " + model.name());
      return model.holds_A(list_value(model, f.arg(), sigma));
    case Formula::Kind::kNot:
      return !eval_formula(model, f.body(), sigma);
    case Formula::Kind::kAnd:
      return eval_formula(model, f.left(), sigma) && eval_formula(model, f.right(), sigma);
    case Formula::Kind::kOr:
      return eval_formula(model, f.left(), sigma) || eval_formula(model, f.right(), sigma);
    case Formula::Kind::kImplies:
      return !eval_formula(model, f.left(), sigma) || eval_formula(model, f.right(), sigma);
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      throw EvaluationError("cannot evaluate quantified formula " + to_string(f) +
                            " directly; use the bounded checker");
  }
  return false;
}

// Decomposition.

std::vector<TransfiniteList> decompose_term(const Term& t, const Assignment& sigma,
                                            const std::string& var) {
  switch (t.kind()) {
    case Term::Kind::kNil:
      return {TransfiniteList()};
    case Term::Kind::kListConst:
      return {t.list()};
    case Term::Kind::kVariable:
      if (t.name() == var) return {TransfiniteList(), TransfiniteList()};
      if (auto it = sigma.find(t.name()); it != sigma.end()) {
        if (const auto* l = std::get_if<TransfiniteList>(&it->second)) return {*l};
      }
      throw EvaluationError("list variable " + t.name() + " other than " + var +
                            " in decomposed term");
    case Term::Kind::kCons: {
      auto segs = decompose_term(t.right(), sigma, var);
      segs.front() = cons(element_value(t.left(), sigma), segs.front());
      return segs;
    }
    case Term::Kind::kAppend: {
      auto left = decompose_term(t.left(), sigma, var);
      auto right = decompose_term(t.right(), sigma, var);
      left.back() = concat(left.back(), right.front());
      left.insert(left.end(), right.begin() + 1, right.end());
      return left;
    }
    default:
      throw EvaluationError("not a list term: " + to_string(t));
  }
}

TransfiniteList recompose(const std::vector<TransfiniteList>& segments, const TransfiniteList& x) {
  if (segments.empty()) throw std::invalid_argument("empty decomposition");
  TransfiniteList acc = segments.front();
  for (std::size_t i = 1; i < segments.size(); ++i) acc = concat(concat(acc, x), segments[i]);
  return acc;
}

// Bounds.

const char* bound_kind_name(StabilizationBound::Kind kind) {
  switch (kind) {
    case StabilizationBound::Kind::kAAtom:
      return "a-atom";
    case StabilizationBound::Kind::kM1Equation:
      return "m1-equation";
    case StabilizationBound::Kind::kM2Equation:
      return "m2-equation";
    case StabilizationBound::Kind::kFormulaSync:
      return "formula-sync";
  }
  return "?";
}

namespace {

using Kind = StabilizationBound::Kind;

void require_list_equation(const Formula& e) {
  if (e.kind() != Formula::Kind::kEquals)
    throw std::invalid_argument("expected an equation, got " + to_string(e));
}

std::optional<StabilizationBound> element_equation_bound(Kind kind, const Formula& e,
                                                         const Assignment& params) {
  if (element_value(e.lhs(), params) == element_value(e.rhs(), params)) return std::nullopt;
  return StabilizationBound{kind, 0, "element equation, false under the parameters", false};
}

}  // namespace

StabilizationBound a_atom_bound(Natural m, const Term& t, const Assignment& params,
                                const std::string& var) {
  if (uses_append(t)) throw EvaluationError("append is not interpreted in m1");
  const auto segs = decompose_term(t, params, var);
  if (segs.size() == 1) {
    return {Kind::kAAtom, 0, "atom does not mention " + var + ": truth value is constant",
            m1_holds_A(m, segs.front())};
  }
  const TransfiniteList& w = segs.front();
  if (w.is_empty()) return {Kind::kAAtom, 0, "w = (): K = 0", std::nullopt};
  const Natural last = w.tail().back();
  return {Kind::kAAtom, checked_add(last, 2), "K = last(w) + 2 = " + std::to_string(last) + " + 2",
          std::nullopt};
}

std::optional<StabilizationBound> equation_bound_m1(Natural m, const Formula& equation,
                                                    const Assignment& params,
                                                    const std::string& var) {
  (void)m;  // equations do not involve A
  require_list_equation(equation);
  if (equation.equation_sort() == Sort::kElem)
    return element_equation_bound(Kind::kM1Equation, equation, params);
  if (uses_append(equation.lhs()) || uses_append(equation.rhs()))
    throw EvaluationError("append is not interpreted in m1");
  auto u = decompose_term(equation.lhs(), params, var);
  auto v = decompose_term(equation.rhs(), params, var);
  if (u.size() == 1 && v.size() == 1) {
    if (u == v) return std::nullopt;
    return StabilizationBound{Kind::kM1Equation, 0,
                              var + " not in E: constant sides differ, E is false", false};
  }
  if (u.size() == 2 && v.size() == 2) {
    if (u.front() == v.front()) return std::nullopt;
    return StabilizationBound{Kind::kM1Equation, 0, "both sides w ^ X, w' ^ X with w != w': K = 0",
                              false};
  }
  if (u.size() == 1) std::swap(u, v);
  const TransfiniteList& w = u.front();
  const TransfiniteList& l1 = v.front();
  if (w.length() > l1.length())
    return StabilizationBound{Kind::kM1Equation, 0, "|w| > |l'|: K = 0", std::nullopt};
  if (common_prefix_length(w, l1) < w.length())
    return StabilizationBound{Kind::kM1Equation, 0, "w is not a prefix of l': K = 0",
                              std::nullopt};
  const TransfiniteList l2 = l1.suffix(w.length());
  if (l2.is_word()) {
    const Natural n = l2.tail().size();
    return StabilizationBound{Kind::kM1Equation, n + 1,
                              "l'' = " + l2.to_string() + " standard: K = |l''| + 1",
                              std::nullopt};
  }
  const Natural head = l2.at(Ordinal(0));
  return StabilizationBound{Kind::kM1Equation, checked_add(head, 1),
                            "l'' = " + l2.to_string() + " non-standard: K = (l'')_0 + 1",
                            std::nullopt};
}

std::optional<StabilizationBound> equation_bound_m2(const Formula& equation,
                                                    const Assignment& params,
                                                    const std::string& var) {
  require_list_equation(equation);
  if (equation.equation_sort() == Sort::kElem)
    return element_equation_bound(Kind::kM2Equation, equation, params);
  auto s1 = decompose_term(equation.lhs(), params, var);
  auto s2 = decompose_term(equation.rhs(), params, var);
  if (s1 == s2) return std::nullopt;
  if (s1.size() > s2.size()) std::swap(s1, s2);
  const std::size_t n1 = s1.size() - 1;
  const std::size_t n2 = s2.size() - 1;
  std::size_t j0 = 0;
  while (j0 <= n1 && s1[j0] == s2[j0]) ++j0;
  if (j0 > n1) {
    return StabilizationBound{
        Kind::kM2Equation, 0,
        "segments agree up to n1 < n2: E(X) <-> () = X ^ ..., false everywhere",
        false};
  }
  const Ordinal d = common_prefix_length(s1[j0], s2[j0]);
  const TransfiniteList r1 = s1[j0].suffix(d);
  const TransfiniteList r2 = s2[j0].suffix(d);
  // What each side starts with once the common part is cancelled.
  struct Head {
    enum { kEmpty, kConst, kVar } what;
    Natural value = 0;
  };
  auto head = [](const TransfiniteList& rest, std::size_t j, std::size_t n) {
    if (!rest.is_empty()) return Head{Head::kConst, rest.at(Ordinal(0))};
    return j < n ? Head{Head::kVar, 0} : Head{Head::kEmpty, 0};
  };
  const Head h1 = head(r1, j0, n1);
  const Head h2 = head(r2, j0, n2);
  const std::string at = " at j0 = " + std::to_string(j0);
  if (h1.what == Head::kVar && h2.what == Head::kConst)
    return StabilizationBound{Kind::kM2Equation, checked_add(h2.value, 1),
                              "l'_{j0} empty on one side" + at + ": false for n != " +
                                  std::to_string(h2.value),
                              std::nullopt};
  if (h2.what == Head::kVar && h1.what == Head::kConst)
    return StabilizationBound{Kind::kM2Equation, checked_add(h1.value, 1),
                              "l'_{j0} empty on one side" + at + ": false for n != " +
                                  std::to_string(h1.value),
                              std::nullopt};
  if (h1.what == Head::kConst && h2.what == Head::kConst)
    return StabilizationBound{Kind::kM2Equation, 0,
                              "first entries of l'_{j0} differ" + at + ": false everywhere",
                              false};
  if (h1.what == Head::kEmpty || h2.what == Head::kEmpty)
    return StabilizationBound{Kind::kM2Equation, 0,
                              "one side exhausted" + at + ": false everywhere", false};
  throw std::logic_error("equation_bound_m2: inconsistent decomposition");
}

std::vector<Formula> atoms_of(const Formula& f) {
  std::vector<Formula> out;
  auto walk = [&](auto&& self, const Formula& g) -> void {
    switch (g.kind()) {
      case Formula::Kind::kEquals:
      case Formula::Kind::kPredicate:
        out.push_back(g);
        break;
      case Formula::Kind::kNot:
      case Formula::Kind::kForall:
      case Formula::Kind::kExists:
        self(self, g.body());
        break;
      case Formula::Kind::kAnd:
      case Formula::Kind::kOr:
      case Formula::Kind::kImplies:
        self(self, g.left());
        self(self, g.right());
        break;
      default:
        break;
    }
  };
  walk(walk, f);
  return out;
}

StabilizationBound formula_sync_bound(const Formula& phi, const TransfiniteList& lambda,
                                      const Assignment& params, const std::string& var) {
  if (lambda.is_word())
    throw DomainError("formula_sync_bound needs a non-standard element, got " +
                      lambda.to_string());
  if (!is_open(phi)) throw EvaluationError("formula_sync_bound needs an open formula");
  const Block& first = lambda.blocks().front();
  const NElem lead = std::holds_alternative<NElem>(first) ? std::get<NElem>(first)
                                                          : std::get<Cycle>(first).letters.front();
  const Natural p = lead.prefix().size();
  const Natural k = lead.start();
  Natural n0 = 0;
  std::string trace;
  for (const Formula& atom : atoms_of(phi)) {
    if (atom.kind() == Formula::Kind::kPredicate)
      throw EvaluationError("predicate A is not interpreted in m2");
    if (atom.equation_sort() == Sort::kElem) continue;
    auto eb = equation_bound_m2(atom, params, var);
    if (!eb) continue;
    const Natural ne = eb->bound;
    const Natural need = std::max(ne, checked_add(p, ne > k ? ne - k : 0));
    if (!trace.empty()) trace += "; ";
    trace += to_string(atom) + ": N = " + std::to_string(ne) + ", n >= " + std::to_string(need);
    n0 = std::max(n0, need);
  }
  if (trace.empty()) trace = "no list equation depends on " + var + ": n0 = 0";
  else
    trace = "lambda starts with w ^ N_" + std::to_string(k) + ", |w| = " + std::to_string(p) +
            "; (lambda ^| n)_0 = " + std::to_string(k) + " + n - |w|; " + trace;
  return {Kind::kFormulaSync, n0, trace, std::nullopt};
}

// Sampling.

Sampler::Sampler(const Model& model, std::uint64_t seed, Natural value_bound,
                 Natural length_bound)
    : model_(model), rng_(seed), value_bound_(value_bound), length_bound_(length_bound) {}

Natural Sampler::element() { return rng_.below(value_bound_ + 1); }

Word Sampler::word() {
  Word w(rng_.below(length_bound_ + 1));
  for (auto& x : w) x = element();
  return w;
}

NElem Sampler::nelem() { return NElem(word(), element()); }

TransfiniteList Sampler::list() {
  const bool m2 = model_.signature().has_append;
  const std::uint64_t shape = rng_.below(m2 ? 4 : 2);
  if (shape == 0) return TransfiniteList::word(word());
  if (shape == 1) return TransfiniteList::letter(nelem());
  std::vector<Block> blocks(1 + rng_.below(3));
  for (auto& b : blocks) {
    if (rng_.chance(1, 2)) {
      b = nelem();
    } else {
      std::vector<NElem> letters(1 + rng_.below(2));
      for (auto& l : letters) l = nelem();
      b = Cycle{std::move(letters)};
    }
  }
  return TransfiniteList::from_parts(std::move(blocks), rng_.chance(1, 2) ? word() : Word{});
}

// Axioms.

std::vector<std::string> applicable_axioms(const Model& model) {
  if (model.signature().has_append) return {"L0.1", "L0.2", "L1.1", "L1.2", "CA"};
  return {"L0.1", "L0.2", "CA"};
}

Formula axiom_formula(const std::string& name) {
  if (name == "L0.1") return parse_formula("nil != cons(x, X)");
  if (name == "L0.2") return parse_formula("cons(x, X) = cons(y, Y) -> x = y & X = Y");
  if (name == "L1.1") return parse_formula("nil ++ Y = Y");
  if (name == "L1.2") return parse_formula("cons(x, X) ++ Y = cons(x, X ++ Y)");
  if (name == "CA") return parse_formula("X = nil | exists x':i. exists X':list. X = cons(x', X')");
  throw std::invalid_argument("unknown axiom '" + name + "'");
}

std::vector<AxiomResult> check_axioms(const Model& model, const std::vector<std::string>& axioms,
                                      std::uint64_t seed, std::uint64_t samples) {
  const auto allowed = applicable_axioms(model);
  std::vector<AxiomResult> out;
  for (const std::string& name : axioms) {
    const Formula f = axiom_formula(name);
    if (std::find(allowed.begin(), allowed.end(), name) == allowed.end())
      throw std::invalid_argument("axiom " + name + " is not in the signature of " + model.name());
    Sampler sampler(model, seed);
    AxiomResult result{name, to_string(f), 0, true, std::nullopt};
    const Formula ca_instance = parse_formula("X = cons(x', X')");
    for (std::uint64_t i = 0; i < samples && result.passed; ++i) {
      Assignment sigma;
      const Natural x = sampler.element();
      const TransfiniteList X = sampler.list();
      sigma["x"] = x;
      sigma["X"] = X;
      // Correlated draws make the antecedent of L0.2 true often enough.
      const std::uint64_t mode = sampler.rng().below(3);
      sigma["y"] = mode == 0 ? x : sampler.element();
      sigma["Y"] = mode == 0 ? X : sampler.list();
      bool ok;
      if (name == "CA") {
        if (X.is_empty()) {
          ok = true;
        } else {
          // Witness: head and the suffix after it.
          Assignment w = sigma;
          w["x'"] = X.at(Ordinal(0));
          w["X'"] = X.suffix(Ordinal(1));
          ok = model.in_domain(std::get<TransfiniteList>(w["X'"])) &&
               eval_formula(model, ca_instance, w);
        }
      } else {
        ok = eval_formula(model, f, sigma);
      }
      ++result.samples;
      if (!ok) {
        result.passed = false;
        Assignment used;
        for (const auto& v : free_vars(f)) used[v] = sigma.at(v);
        result.counterexample = used;
      }
    }
    out.push_back(std::move(result));
  }
  return out;
}

}  // namespace listind
