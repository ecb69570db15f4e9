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

#include "listind/induction.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace listind {

const char* schema_kind_name(SchemaKind kind) {
  switch (kind) {
    case SchemaKind::kOneStep:
      return "one-step";
    case SchemaKind::kBigStep:
      return "big-step";
    case SchemaKind::kDouble:
      return "double";
    case SchemaKind::kMultivariate:
      return "multivariate";
  }
  return "?";
}

Formula InductionInstance::axiom() const {
  return Formula::implication(Formula::conjunction_of(premises), conclusion);
}

// Builders.

namespace {

void names_in(const Term& t, std::set<std::string>& out) {
  if (t.kind() == Term::Kind::kVariable) out.insert(t.name());
  if (t.kind() == Term::Kind::kCons || t.kind() == Term::Kind::kAppend) {
    names_in(t.left(), out);
    names_in(t.right(), out);
  }
}

// Every variable name occurring in f, free or bound.
void names_in(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::kEquals:
      names_in(f.lhs(), out);
      names_in(f.rhs(), out);
      break;
    case Formula::Kind::kPredicate:
      names_in(f.arg(), out);
      break;
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      out.insert(f.bound());
      [[fallthrough]];
    case Formula::Kind::kNot:
      names_in(f.body(), out);
      break;
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
    case Formula::Kind::kImplies:
      names_in(f.left(), out);
      names_in(f.right(), out);
      break;
    default:
      break;
  }
}

void require_list_variable(const std::string& v) {
  Sort s;
  try {
    s = variable_sort(v);
  } catch (const SortError&) {
    throw std::invalid_argument("'" + v + "' is not a variable name");
  }
  if (s != Sort::kList)
    throw std::invalid_argument("induction variable " + v + " must have sort list");
}

std::vector<std::string> fresh_elements(Natural count, std::set<std::string>& taken,
                                        Natural& next_index) {
  std::vector<std::string> out;
  for (Natural i = 0; i < count; ++i) {
    std::string name = fresh_variable("x" + std::to_string(next_index++), taken);
    taken.insert(name);
    out.push_back(name);
  }
  return out;
}

std::vector<Term> as_terms(const std::vector<std::string>& names, std::size_t count) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(Term::variable(names[i]));
  return out;
}

}  // namespace

InductionInstance build_one_step(const Formula& phi, const std::string& var) {
  require_list_variable(var);
  std::set<std::string> taken;
  names_in(phi, taken);
  taken.insert(var);
  Natural index = 1;
  const std::string x = fresh_elements(1, taken, index).front();
  const Term X = Term::variable(var);
  InductionInstance inst{SchemaKind::kOneStep, phi, {var}, {1}, {{x}}, {}, {}, Formula::truth()};
  inst.premise_names = {"base", "step"};
  inst.premises.push_back(substitute(phi, var, Term::nil()));
  inst.premises.push_back(Formula::forall(
      var, Formula::forall(x, Formula::implication(
                                  phi, substitute(phi, var, Term::cons(Term::variable(x), X))))));
  inst.conclusion = Formula::forall(var, phi);
  return inst;
}

InductionInstance build_big_step(const Formula& phi, const std::string& var, Natural m) {
  if (m == 0) throw std::invalid_argument("big-step induction needs m >= 1");
  return build_multivariate(phi, {var}, {m});
}

InductionInstance build_double(const Formula& phi, const std::string& x, const std::string& y) {
  require_list_variable(x);
  require_list_variable(y);
  if (x == y) throw std::invalid_argument("double induction needs two distinct variables");
  std::set<std::string> taken;
  names_in(phi, taken);
  taken.insert(x);
  taken.insert(y);
  Natural index = 1;
  const std::string ex = fresh_elements(1, taken, index).front();
  const std::string ey = fresh_elements(1, taken, index).front();
  InductionInstance inst{SchemaKind::kDouble, phi, {x, y}, {1, 1}, {{ex}, {ey}}, {}, {},
                         Formula::truth()};
  inst.premise_names = {"base " + y + " = nil", "base " + x + " = nil", "step"};
  inst.premises.push_back(Formula::forall(x, substitute(phi, y, Term::nil())));
  inst.premises.push_back(Formula::forall(y, substitute(phi, x, Term::nil())));
  Formula next = substitute(phi, x, Term::cons(Term::variable(ex), Term::variable(x)));
  next = substitute(next, y, Term::cons(Term::variable(ey), Term::variable(y)));
  inst.premises.push_back(
      Formula::forall_all({x, y, ex, ey}, Formula::implication(phi, next)));
  inst.conclusion = Formula::forall_all({x, y}, phi);
  return inst;
}

InductionInstance build_multivariate(const Formula& phi, const std::vector<std::string>& vars,
                                     const std::vector<Natural>& steps) {
  if (vars.empty()) throw std::invalid_argument("multivariate induction needs variables");
  if (vars.size() != steps.size())
    throw std::invalid_argument("variables and steps have different lengths");
  for (const auto& v : vars) require_list_variable(v);
  if (std::set<std::string>(vars.begin(), vars.end()).size() != vars.size())
    throw std::invalid_argument("induction variables must be pairwise distinct");
  for (Natural p : steps)
    if (p == 0) throw std::invalid_argument("step widths must be positive");

  std::set<std::string> taken;
  names_in(phi, taken);
  taken.insert(vars.begin(), vars.end());
  Natural index = 1;
  InductionInstance inst{vars.size() == 1 ? SchemaKind::kBigStep : SchemaKind::kMultivariate,
                         phi, vars, steps, {}, {}, {}, Formula::truth()};
  for (Natural p : steps) inst.step_elements.push_back(fresh_elements(p, taken, index));

  for (std::size_t i = 0; i < vars.size(); ++i) {
    std::vector<std::string> others;
    for (std::size_t k = 0; k < vars.size(); ++k)
      if (k != i) others.push_back(vars[k]);
    for (Natural j = 1; j <= steps[i]; ++j) {
      const auto& xs = inst.step_elements[i];
      const Term chain = Term::cons_chain(as_terms(xs, j - 1), Term::nil());
      std::vector<std::string> bound = others;
      bound.insert(bound.end(), xs.begin(), xs.begin() + static_cast<long>(j - 1));
      inst.premises.push_back(Formula::forall_all(bound, substitute(phi, vars[i], chain)));
      inst.premise_names.push_back(vars.size() == 1 ? "base " + std::to_string(j)
                                                    : "base " + vars[i] + " " + std::to_string(j));
    }
  }
  Formula next = phi;
  std::vector<std::string> bound = vars;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const auto& xs = inst.step_elements[i];
    next = substitute(next, vars[i],
                      Term::cons_chain(as_terms(xs, xs.size()), Term::variable(vars[i])));
    bound.insert(bound.end(), xs.begin(), xs.end());
  }
  inst.premises.push_back(Formula::forall_all(bound, Formula::implication(phi, next)));
  inst.premise_names.push_back("step");
  inst.conclusion = Formula::forall_all(vars, phi);
  return inst;
}

// Domain enumeration.

namespace {

std::vector<Word> words_upto(const std::vector<Natural>& letters, Natural max_len) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (Natural len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (Natural a : letters) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

void push_unique(std::vector<TransfiniteList>& out, std::set<TransfiniteList>& seen,
                 TransfiniteList l) {
  if (seen.insert(l).second) out.push_back(std::move(l));
}

}  // namespace

std::vector<TransfiniteList> enumerate_domain(const Model& model,
                                              const std::vector<Natural>& alphabet,
                                              Natural bound) {
  std::set<Natural> letters_set(alphabet.begin(), alphabet.end());
  Natural fresh = 0;
  while (letters_set.count(fresh)) ++fresh;
  letters_set.insert(fresh);
  const std::vector<Natural> letters(letters_set.begin(), letters_set.end());

  std::vector<TransfiniteList> out;
  std::set<TransfiniteList> seen;
  const std::vector<Word> words = words_upto(letters, bound);
  for (const Word& w : words) push_unique(out, seen, TransfiniteList::word(w));
  for (const Word& w : words)
    for (Natural k = 0; k <= bound; ++k)
      push_unique(out, seen, TransfiniteList::letter(NElem(w, k)));

  if (model.signature().has_append) {
    // Cycle elements built from short letters only; the full product over
    // every NElem above is far too large to enumerate.
    std::vector<NElem> core;
    std::set<NElem> core_seen;
    for (const Word& w : words_upto(letters, std::min<Natural>(bound, 1)))
      for (Natural k = 0; k <= std::min<Natural>(bound, 2); ++k)
        if (NElem n(w, k); core_seen.insert(n).second) core.push_back(n);
    std::vector<TransfiniteList> unit_cycles;
    for (const NElem& c : core) unit_cycles.push_back(TransfiniteList::omega_power({c}));
    for (const auto& r : unit_cycles) push_unique(out, seen, r);
    for (const NElem& a : core)
      for (const NElem& b : core)
        if (!(a == b)) push_unique(out, seen, TransfiniteList::omega_power({a, b}));
    for (const auto& r : unit_cycles)
      for (const Word& w : words_upto(letters, std::min<Natural>(bound, 1)))
        if (!w.empty()) push_unique(out, seen, concat(r, TransfiniteList::word(w)));
    for (const NElem& n : core)
      for (const auto& r : unit_cycles)
        push_unique(out, seen, concat(TransfiniteList::letter(n), r));
    for (const auto& r1 : unit_cycles)
      for (const auto& r2 : unit_cycles) push_unique(out, seen, concat(r1, r2));
  }
  return out;
}

// Bounded universal checking.

namespace {

void constants_in(const Term& t, std::set<Natural>& elems, std::vector<TransfiniteList>& lists) {
  switch (t.kind()) {
    case Term::Kind::kElemConst:
      elems.insert(t.value());
      break;
    case Term::Kind::kListConst:
      lists.push_back(t.list());
      break;
    case Term::Kind::kCons:
    case Term::Kind::kAppend:
      constants_in(t.left(), elems, lists);
      constants_in(t.right(), elems, lists);
      break;
    default:
      break;
  }
}

void constants_in(const Formula& f, std::set<Natural>& elems,
                  std::vector<TransfiniteList>& lists) {
  for (const Formula& a : atoms_of(f)) {
    if (a.kind() == Formula::Kind::kPredicate) {
      constants_in(a.arg(), elems, lists);
    } else {
      constants_in(a.lhs(), elems, lists);
      constants_in(a.rhs(), elems, lists);
    }
  }
}

struct Stripped {
  std::vector<std::string> vars;
  Formula body;
};

Stripped strip_universals(const Formula& closed) {
  Stripped s{{}, closed};
  while (s.body.kind() == Formula::Kind::kForall) {
    s.vars.push_back(s.body.bound());
    s.body = s.body.body();
  }
  if (!is_open(s.body))
    throw std::invalid_argument("expected universal quantifiers over an open formula, got " +
                                to_string(closed));
  return s;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::numeric_limits<std::uint64_t>::max();
  return r;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Candidate values for the universally quantified variables of one check.
struct SearchSpace {
  std::vector<Natural> elements;
  std::vector<TransfiniteList> lists;
  std::vector<Natural> alphabet;
};

SearchSpace search_space(const Model& model, const Formula& body, const Assignment& params,
                         Natural bound) {
  std::set<Natural> consts;
  std::vector<TransfiniteList> list_consts;
  constants_in(body, consts, list_consts);
  for (const auto& [name, value] : params) {
    if (const auto* n = std::get_if<Natural>(&value)) consts.insert(*n);
    else list_consts.push_back(std::get<TransfiniteList>(value));
  }
  SearchSpace s;
  s.alphabet.assign(consts.begin(), consts.end());
  s.elements = s.alphabet;
  for (Natural v = 0, added = 0; added <= bound; ++v) {
    if (!consts.count(v)) {
      s.elements.push_back(v);
      ++added;
    }
  }
  std::sort(s.elements.begin(), s.elements.end());
  s.lists = enumerate_domain(model, s.alphabet, bound);
  std::set<TransfiniteList> seen(s.lists.begin(), s.lists.end());
  for (const auto& c : list_consts) {
    for (Natural n = 0; n <= bound; ++n) {
      if (c.length() < Ordinal(n)) break;
      TransfiniteList suffix = c.suffix(Ordinal(n));
      if (model.in_domain(suffix)) push_unique(s.lists, seen, suffix);
    }
  }
  return s;
}

// Largest stabilization bound over the atoms of body, each taken with one
// list variable free and the others unassigned; atoms mentioning several list
// variables are skipped.
Natural atom_bounds(const Model& model, const Formula& body, const std::vector<std::string>& vars,
                    const Assignment& params, const std::vector<Natural>& elements) {
  std::vector<std::string> elem_vars;
  std::vector<std::string> list_vars;
  for (const auto& v : vars)
    (variable_sort(v) == Sort::kElem ? elem_vars : list_vars).push_back(v);
  if (list_vars.empty()) list_vars.push_back("X");
  Natural best = 0;
  const std::size_t combos = 64;
  std::vector<std::size_t> idx(elem_vars.size(), 0);
  for (std::size_t c = 0; c < combos; ++c) {
    Assignment sigma = params;
    for (std::size_t i = 0; i < elem_vars.size(); ++i) sigma[elem_vars[i]] = elements[idx[i]];
    for (const Formula& atom : atoms_of(body)) {
      for (const auto& v : list_vars) {
        try {
          if (atom.kind() == Formula::Kind::kPredicate) {
            best = std::max(best, a_atom_bound(model.step(), atom.arg(), sigma, v).bound);
          } else if (model.signature().has_append) {
            if (auto b = equation_bound_m2(atom, sigma, v)) best = std::max(best, b->bound);
          } else {
            if (auto b = equation_bound_m1(model.step(), atom, sigma, v))
              best = std::max(best, b->bound);
          }
        } catch (const EvaluationError&) {
        }
      }
    }
    // Odometer step; stop once every combination was visited.
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == elements.size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return best;
}

class Search {
 public:
  Search(const Model& model, const Formula& body, const Assignment& params)
      : model_(model), body_(body), params_(params) {}

  // True when body is false under the assignment.
  bool refutes(const Assignment& values) {
    Assignment sigma = params_;
    for (const auto& [k, v] : values) sigma[k] = v;
    ++evaluated_;
    if (eval_formula(model_, body_, sigma)) return false;
    witness_ = std::move(sigma);
    return true;
  }

  std::uint64_t evaluated() const { return evaluated_; }
  Assignment& witness() { return witness_; }

 private:
  const Model& model_;
  const Formula& body_;
  const Assignment& params_;
  std::uint64_t evaluated_ = 0;
  Assignment witness_;
};

}  // namespace

Formula universal_body(const Formula& f) {
  Formula body = f;
  while (body.kind() == Formula::Kind::kForall) body = body.body();
  return body;
}

Verdict check_universal(const Model& model, const Formula& closed, const CheckOptions& options,
                        const Assignment& params) {
  const Stripped s = strip_universals(closed);
  for (const auto& v : free_vars(s.body)) {
    if (std::find(s.vars.begin(), s.vars.end(), v) == s.vars.end() && !params.count(v))
      throw std::invalid_argument("free variable " + v + " has no value");
  }
  const SearchSpace space = search_space(model, s.body, params, options.bound);
  const Natural stabilization = atom_bounds(model, s.body, s.vars, params, space.elements);

  Verdict verdict;
  verdict.bound = std::max(options.bound, stabilization);
  Search search(model, s.body, params);
  auto finish = [&](const char* source) {
    verdict.falsified = true;
    verdict.witness = search.witness();
    verdict.evaluated = search.evaluated();
    verdict.source = source;
    return verdict;
  };

  const std::size_t n = s.vars.size();
  std::vector<std::size_t> sizes(n);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    sizes[i] = variable_sort(s.vars[i]) == Sort::kElem ? space.elements.size()
                                                        : space.lists.size();
    total = saturating_mul(total, sizes[i]);
  }
  auto assignment_at = [&](const std::vector<std::size_t>& idx) {
    Assignment a;
    for (std::size_t i = 0; i < n; ++i) {
      if (variable_sort(s.vars[i]) == Sort::kElem) a[s.vars[i]] = space.elements[idx[i]];
      else a[s.vars[i]] = space.lists[idx[i]];
    }
    return a;
  };

  Rng rng(options.seed);
  if (total <= options.exhaustive_cap) {
    // Odometer with the first variable outermost.
    std::vector<std::size_t> idx(n, 0);
    for (std::uint64_t c = 0; c < total; ++c) {
      if (search.refutes(assignment_at(idx))) return finish("enumeration");
      for (std::size_t i = n; i-- > 0;) {
        if (++idx[i] < sizes[i]) break;
        idx[i] = 0;
      }
    }
    verdict.exhaustive = true;
    if (n == 0) {
      verdict.evaluated = search.evaluated();
      return verdict;
    }
  } else {
    std::vector<std::size_t> idx(n);
    for (std::uint64_t c = 0; c < options.exhaustive_cap; ++c) {
      for (std::size_t i = 0; i < n; ++i) idx[i] = rng.below(sizes[i]);
      if (search.refutes(assignment_at(idx))) return finish("enumeration");
    }
  }

  // Probes past the stabilization bounds, with random values elsewhere.
  std::vector<TransfiniteList> probes;
  const Natural reach = verdict.bound + 2 * (model.step() + 1) + 2;
  for (Natural k = 0; k <= reach; ++k) {
    probes.push_back(TransfiniteList::letter(NElem::tail_from(k)));
    probes.push_back(TransfiniteList::letter(NElem({space.elements.front()}, k)));
    if (model.signature().has_append)
      probes.push_back(TransfiniteList::omega_power({NElem::tail_from(k)}));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (variable_sort(s.vars[v]) != Sort::kList) continue;
    for (const auto& probe : probes) {
      for (int rep = 0; rep < 4; ++rep) {
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = rng.below(sizes[i]);
        Assignment a = assignment_at(idx);
        a[s.vars[v]] = probe;
        if (search.refutes(a)) return finish("probe");
      }
    }
  }

  Sampler sampler(model, mix(options.seed, 1), space.elements.back() + 2, options.bound + 1);
  for (std::uint64_t c = 0; c < options.budget; ++c) {
    Assignment a;
    for (const auto& v : s.vars) {
      if (variable_sort(v) == Sort::kElem) {
        a[v] = sampler.rng().chance(1, 2)
                   ? space.elements[sampler.rng().below(space.elements.size())]
                   : sampler.element();
      } else {
        a[v] = sampler.list();
      }
    }
    if (search.refutes(a)) return finish("sample");
  }
  verdict.evaluated = search.evaluated();
  return verdict;
}

// Instance checking.

namespace {

struct ChainWitness {
  std::size_t premise;
  Assignment sigma;
};

class ChainSearch {
 public:
  ChainSearch(const Model& model, const InductionInstance& inst, const Assignment& params)
      : model_(model),
        inst_(inst),
        params_(params),
        var_(inst.variables.front()),
        width_(inst.steps.front()),
        xs_(inst.step_elements.front()) {}

  std::optional<ChainWitness> from(const TransfiniteList& failing, Natural limit) {
    if (failing.is_word()) return word_chain(failing);
    TransfiniteList cur = failing;
    for (Natural i = 0; i <= limit; ++i) {
      TransfiniteList next = cur.suffix(Ordinal(width_));
      if (holds(next)) return step_witness(cur, next);
      cur = std::move(next);
    }
    // Far enough out the truth values on predecessors match those on words;
    // a failing word then yields the premise counterexample.
    for (Natural n = 0; n <= limit; ++n) {
      TransfiniteList single = TransfiniteList::word({n});
      if (!holds(single)) return word_chain(single);
      TransfiniteList zeros = TransfiniteList::word(Word(n, 0));
      if (!holds(zeros)) return word_chain(zeros);
    }
    return std::nullopt;
  }

 private:
  bool holds(const TransfiniteList& l) {
    Assignment sigma = params_;
    sigma[var_] = l;
    return eval_formula(model_, inst_.phi, sigma);
  }

  // phi fails at w: walk down by the step width until a premise fails.
  std::optional<ChainWitness> word_chain(TransfiniteList w) {
    while (w.tail().size() >= width_) {
      TransfiniteList next = w.suffix(Ordinal(width_));
      if (holds(next)) return step_witness(w, next);
      w = std::move(next);
    }
    const std::size_t base = w.tail().size();
    Assignment sigma = params_;
    for (std::size_t i = 0; i < base; ++i) sigma[xs_[i]] = w.tail()[i];
    return ChainWitness{base, sigma};
  }

  ChainWitness step_witness(const TransfiniteList& failing, const TransfiniteList& holding) {
    Assignment sigma = params_;
    sigma[var_] = holding;
    for (Natural i = 0; i < width_; ++i) sigma[xs_[i]] = failing.at(Ordinal(i));
    return ChainWitness{inst_.premises.size() - 1, sigma};
  }

  const Model& model_;
  const InductionInstance& inst_;
  const Assignment& params_;
  std::string var_;
  Natural width_;
  std::vector<std::string> xs_;
};

Natural chain_limit(const Model& model, const InductionInstance& inst, const Assignment& params,
                    const TransfiniteList& lambda, Natural bound) {
  const Natural width = inst.steps.front();
  Natural reach = bound;
  if (!lambda.is_word()) {
    const Block& first = lambda.blocks().front();
    const NElem& lead = std::holds_alternative<NElem>(first)
                            ? std::get<NElem>(first)
                            : std::get<Cycle>(first).letters.front();
    reach += lead.prefix().size();
    if (model.signature().has_append) {
      try {
        reach = std::max(reach, formula_sync_bound(inst.phi, lambda, params,
                                                   inst.variables.front()).bound);
      } catch (const EvaluationError&) {
      }
    }
  }
  return reach / width + 2 * (model.step() + 2) + 2;
}

std::vector<Assignment> parameter_choices(const Model& model, const InductionInstance& inst,
                                          Natural bound) {
  std::set<std::string> free = free_vars(inst.axiom());
  if (free.empty()) return {Assignment{}};
  std::set<Natural> consts;
  std::vector<TransfiniteList> unused;
  constants_in(inst.phi, consts, unused);
  std::vector<Natural> elements(consts.begin(), consts.end());
  for (Natural v = 0, added = 0; added < 3; ++v)
    if (!consts.count(v)) elements.push_back(v), ++added;
  const auto lists = enumerate_domain(model, {consts.begin(), consts.end()},
                                      std::min<Natural>(bound, 1));
  const std::vector<std::string> names(free.begin(), free.end());
  std::vector<Assignment> out;
  std::vector<std::size_t> idx(names.size(), 0);
  const std::size_t cap = 64;
  while (out.size() < cap) {
    Assignment a;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (variable_sort(names[i]) == Sort::kElem) a[names[i]] = elements[idx[i]];
      else a[names[i]] = lists[idx[i]];
    }
    out.push_back(std::move(a));
    std::size_t i = names.size();
    bool done = true;
    while (i-- > 0) {
      const std::size_t size =
          variable_sort(names[i]) == Sort::kElem ? elements.size() : lists.size();
      if (++idx[i] < size) {
        done = false;
        break;
      }
      idx[i] = 0;
    }
    if (done) break;
  }
  return out;
}

}  // namespace

CheckReport check_instance(const Model& model, const InductionInstance& inst,
                           const CheckOptions& options) {
  for (const auto& p : inst.premises) {
    if (uses_append(p) && !model.signature().has_append)
      throw std::invalid_argument("instance uses append, which " + model.name() + " lacks");
    if (uses_predicate(p) && !model.signature().has_predicate)
      throw std::invalid_argument("instance uses A, which " + model.name() + " lacks");
  }
  const auto choices = parameter_choices(model, inst, options.bound);
  std::optional<CheckReport> candidate;
  for (std::size_t c = 0; c < choices.size(); ++c) {
    const Assignment& params = choices[c];
    CheckReport report;
    report.model = model.name();
    report.kind = inst.kind;
    report.steps = inst.steps;
    report.phi = to_string(inst.phi);
    report.parameters = params;
    report.seed = options.seed;
    Natural bound = options.bound;
    bool clean = true;
    for (std::size_t k = 0; k < inst.premises.size(); ++k) {
      CheckOptions o = options;
      o.seed = mix(options.seed, c * 1000 + k);
      Verdict v = check_universal(model, inst.premises[k], o, params);
      clean = clean && !v.falsified;
      bound = std::max(bound, v.bound);
      report.premises.push_back({inst.premise_names[k], to_string(inst.premises[k]), v});
    }
    CheckOptions o = options;
    o.seed = mix(options.seed, c * 1000 + 999);
    Verdict concl = check_universal(model, inst.conclusion, o, params);
    bound = std::max(bound, concl.bound);
    report.conclusion = {"conclusion", to_string(inst.conclusion), concl};

    const bool single = inst.kind == SchemaKind::kOneStep || inst.kind == SchemaKind::kBigStep;
    if (concl.falsified && clean && single) {
      const auto& lambda = std::get<TransfiniteList>(concl.witness.at(inst.variables.front()));
      ChainSearch chain(model, inst, params);
      if (auto w = chain.from(lambda, chain_limit(model, inst, params, lambda, bound))) {
        const Formula body = universal_body(inst.premises[w->premise]);
        if (!eval_formula(model, body, w->sigma)) {
          Verdict& pv = report.premises[w->premise].verdict;
          pv.falsified = true;
          pv.witness = w->sigma;
          pv.source = "chain";
          clean = false;
        }
      }
    }
    report.bound = bound;
    report.instance_falsified = concl.falsified && clean;
    if (report.instance_falsified) return report;
    if (!candidate || (concl.falsified && !candidate->conclusion.verdict.falsified))
      candidate = std::move(report);
  }
  return *candidate;
}

// Random formulas.

namespace {

class FormulaGenerator {
 public:
  FormulaGenerator(const Model& model, Rng& rng, const FormulaGenConfig& config)
      : model_(model), rng_(rng), config_(config),
        pool_(enumerate_domain(model, {}, config.constant_bound)) {}

  Formula formula() {
    const std::size_t atoms = 1 + rng_.below(config_.max_atoms);
    return combine(atoms, config_.depth);
  }

 private:
  Formula combine(std::size_t atoms, unsigned depth) {
    if (atoms <= 1 || depth <= 1) {
      Formula a = atom();
      return depth >= 1 && rng_.chance(1, 3) ? Formula::negation(a) : a;
    }
    const std::size_t left = 1 + rng_.below(atoms - 1);
    Formula l = combine(left, depth - 1);
    Formula r = combine(atoms - left, depth - 1);
    switch (rng_.below(3)) {
      case 0:
        return Formula::conjunction(l, r);
      case 1:
        return Formula::disjunction(l, r);
      default:
        return Formula::implication(l, r);
    }
  }

  Formula atom() {
    if (model_.signature().has_predicate && rng_.chance(1, 2))
      return Formula::predicate(term(2));
    if (rng_.chance(1, 10)) return Formula::equals(element(), element());
    return Formula::equals(term(2), term(2));
  }

  Term element() { return Term::elem_const(rng_.below(config_.constant_bound + 1)); }

  Term term(unsigned depth) {
    const bool append = model_.signature().has_append;
    const std::uint64_t roll = rng_.below(depth > 0 ? (append ? 9 : 7) : 5);
    if (roll < 3) return Term::variable("X");
    if (roll < 4) return Term::nil();
    if (roll < 5) return Term::list_const(pool_[rng_.below(pool_.size())]);
    if (roll < 7) return Term::cons(element(), term(depth - 1));
    return Term::append(term(depth - 1), term(depth - 1));
  }

  const Model& model_;
  Rng& rng_;
  FormulaGenConfig config_;
  std::vector<TransfiniteList> pool_;
};

}  // namespace

Formula random_open_formula(const Model& model, Rng& rng, const FormulaGenConfig& config) {
  return FormulaGenerator(model, rng, config).formula();
}

}  // namespace listind
