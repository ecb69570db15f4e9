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

#include <cctype>

#include "listind/logic.hpp"

namespace listind {

const char* sort_name(Sort s) { return s == Sort::kElem ? "i" : "list"; }

Sort variable_sort(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
    throw SortError("'" + std::string(name) + "' is not a variable name");
  return std::isupper(static_cast<unsigned char>(name[0])) ? Sort::kList : Sort::kElem;
}

// Terms.

Term Term::variable(std::string name) {
  Sort s = variable_sort(name);
  return Term(std::make_shared<const Node>(Node{Kind::kVariable, s, std::move(name), 0, {}, {}}));
}

Term Term::nil() {
  static const Term n(std::make_shared<const Node>(Node{Kind::kNil, Sort::kList, "", 0, {}, {}}));
  return n;
}

Term Term::cons(Term head, Term tail) {
  if (head.sort() != Sort::kElem)
    throw SortError("cons expects an element as first argument, got " + to_string(head));
  if (tail.sort() != Sort::kList)
    throw SortError("cons expects a list as second argument, got " + to_string(tail));
  return Term(std::make_shared<const Node>(
      Node{Kind::kCons, Sort::kList, "", 0, {}, {std::move(head), std::move(tail)}}));
}

Term Term::append(Term left, Term right) {
  if (left.sort() != Sort::kList || right.sort() != Sort::kList)
    throw SortError("++ expects lists, got " + to_string(left) + " and " + to_string(right));
  return Term(std::make_shared<const Node>(
      Node{Kind::kAppend, Sort::kList, "", 0, {}, {std::move(left), std::move(right)}}));
}

Term Term::elem_const(Natural value) {
  return Term(std::make_shared<const Node>(Node{Kind::kElemConst, Sort::kElem, "", value, {}, {}}));
}

Term Term::list_const(TransfiniteList value) {
  return Term(std::make_shared<const Node>(
      Node{Kind::kListConst, Sort::kList, "", 0, std::move(value), {}}));
}

Term Term::cons_chain(const std::vector<Term>& heads, Term tail) {
  Term out = std::move(tail);
  for (auto it = heads.rbegin(); it != heads.rend(); ++it) out = cons(*it, out);
  return out;
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  return a.kind == b.kind && a.name == b.name && a.value == b.value && a.list == b.list &&
         a.args == b.args;
}

// Formulas.

Formula Formula::truth() {
  static const Formula t(std::make_shared<const Node>(Node{Kind::kTrue, {}, {}, ""}));
  return t;
}

Formula Formula::falsity() {
  static const Formula f(std::make_shared<const Node>(Node{Kind::kFalse, {}, {}, ""}));
  return f;
}

Formula Formula::equals(Term lhs, Term rhs) {
  if (lhs.sort() != rhs.sort())
    throw SortError("equation between " + std::string(sort_name(lhs.sort())) + " term " +
                    to_string(lhs) + " and " + sort_name(rhs.sort()) + " term " +
                    to_string(rhs));
  return Formula(std::make_shared<const Node>(
      Node{Kind::kEquals, {std::move(lhs), std::move(rhs)}, {}, ""}));
}

Formula Formula::predicate(Term arg) {
  if (arg.sort() != Sort::kList) throw SortError("A expects a list, got " + to_string(arg));
  return Formula(std::make_shared<const Node>(Node{Kind::kPredicate, {std::move(arg)}, {}, ""}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::kNot, {}, {std::move(f)}, ""}));
}

Formula Formula::conjunction(Formula a, Formula b) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::kAnd, {}, {std::move(a), std::move(b)}, ""}));
}

Formula Formula::disjunction(Formula a, Formula b) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::kOr, {}, {std::move(a), std::move(b)}, ""}));
}

Formula Formula::implication(Formula a, Formula b) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::kImplies, {}, {std::move(a), std::move(b)}, ""}));
}

Formula Formula::forall(std::string var, Formula body) {
  variable_sort(var);
  return Formula(
      std::make_shared<const Node>(Node{Kind::kForall, {}, {std::move(body)}, std::move(var)}));
}

Formula Formula::exists(std::string var, Formula body) {
  variable_sort(var);
  return Formula(
      std::make_shared<const Node>(Node{Kind::kExists, {}, {std::move(body)}, std::move(var)}));
}

Formula Formula::conjunction_of(const std::vector<Formula>& parts) {
  if (parts.empty()) return truth();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = conjunction(acc, parts[i]);
  return acc;
}

Formula Formula::forall_all(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = forall(*it, body);
  return body;
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  return a.kind == b.kind && a.bound == b.bound && a.terms == b.terms && a.subs == b.subs;
}

// Queries.

namespace {

void collect(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::kVariable:
      out.insert(t.name());
      break;
    case Term::Kind::kCons:
    case Term::Kind::kAppend:
      collect(t.left(), out);
      collect(t.right(), out);
      break;
    default:
      break;
  }
}

void collect(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::kEquals:
      collect(f.lhs(), out);
      collect(f.rhs(), out);
      break;
    case Formula::Kind::kPredicate:
      collect(f.arg(), out);
      break;
    case Formula::Kind::kNot:
      collect(f.body(), out);
      break;
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
    case Formula::Kind::kImplies:
      collect(f.left(), out);
      collect(f.right(), out);
      break;
    case Formula::Kind::kForall:
    case Formula::Kind::kExists: {
      std::set<std::string> inner;
      collect(f.body(), inner);
      inner.erase(f.bound());
      out.insert(inner.begin(), inner.end());
      break;
    }
    default:
      break;
  }
}

template <typename Pred>
bool any_term(const Formula& f, Pred pred) {
  switch (f.kind()) {
    case Formula::Kind::kEquals:
      return pred(f.lhs()) || pred(f.rhs());
    case Formula::Kind::kPredicate:
      return pred(f.arg());
    case Formula::Kind::kNot:
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      return any_term(f.body(), pred);
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
    case Formula::Kind::kImplies:
      return any_term(f.left(), pred) || any_term(f.right(), pred);
    default:
      return false;
  }
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect(t, out);
  return out;
}

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> out;
  collect(f, out);
  return out;
}

bool is_open(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      return false;
    case Formula::Kind::kNot:
      return is_open(f.body());
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
    case Formula::Kind::kImplies:
      return is_open(f.left()) && is_open(f.right());
    default:
      return true;
  }
}

bool uses_append(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kAppend:
      return true;
    case Term::Kind::kCons:
      return uses_append(t.left()) || uses_append(t.right());
    default:
      return false;
  }
}

bool uses_append(const Formula& f) {
  return any_term(f, [](const Term& t) { return uses_append(t); });
}

bool uses_predicate(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kPredicate:
      return true;
    case Formula::Kind::kNot:
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      return uses_predicate(f.body());
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
    case Formula::Kind::kImplies:
      return uses_predicate(f.left()) || uses_predicate(f.right());
    default:
      return false;
  }
}

std::string fresh_variable(const std::string& base, const std::set<std::string>& taken) {
  if (!taken.count(base)) return base;
  for (std::size_t k = 1;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (!taken.count(candidate)) return candidate;
  }
}

// Substitution.

Term substitute(const Term& t, const std::string& var, const Term& replacement) {
  switch (t.kind()) {
    case Term::Kind::kVariable:
      if (t.name() != var) return t;
      if (t.sort() != replacement.sort())
        throw SortError("cannot substitute " + std::string(sort_name(replacement.sort())) +
                        " term " + to_string(replacement) + " for " + var);
      return replacement;
    case Term::Kind::kCons:
      return Term::cons(substitute(t.left(), var, replacement),
                        substitute(t.right(), var, replacement));
    case Term::Kind::kAppend:
      return Term::append(substitute(t.left(), var, replacement),
                          substitute(t.right(), var, replacement));
    default:
      return t;
  }
}

Formula substitute(const Formula& f, const std::string& var, const Term& replacement) {
  if (variable_sort(var) != replacement.sort())
    throw SortError("cannot substitute " + std::string(sort_name(replacement.sort())) +
                    " term " + to_string(replacement) + " for " + var);
  switch (f.kind()) {
    case Formula::Kind::kEquals:
      return Formula::equals(substitute(f.lhs(), var, replacement),
                             substitute(f.rhs(), var, replacement));
    case Formula::Kind::kPredicate:
      return Formula::predicate(substitute(f.arg(), var, replacement));
    case Formula::Kind::kNot:
      return Formula::negation(substitute(f.body(), var, replacement));
    case Formula::Kind::kAnd:
      return Formula::conjunction(substitute(f.left(), var, replacement),
                                  substitute(f.right(), var, replacement));
    case Formula::Kind::kOr:
      return Formula::disjunction(substitute(f.left(), var, replacement),
                                  substitute(f.right(), var, replacement));
    case Formula::Kind::kImplies:
      return Formula::implication(substitute(f.left(), var, replacement),
                                  substitute(f.right(), var, replacement));
    case Formula::Kind::kForall:
    case Formula::Kind::kExists: {
      if (f.bound() == var) return f;
      const std::set<std::string> body_free = free_vars(f.body());
      if (!body_free.count(var)) return f;
      std::string bound = f.bound();
      Formula body = f.body();
      const std::set<std::string> repl_free = free_vars(replacement);
      if (repl_free.count(bound)) {
        std::set<std::string> taken = body_free;
        taken.insert(repl_free.begin(), repl_free.end());
        taken.insert(var);
        std::string renamed = fresh_variable(bound, taken);
        body = substitute(body, bound, Term::variable(renamed));
        bound = renamed;
      }
      body = substitute(body, var, replacement);
      return f.kind() == Formula::Kind::kForall ? Formula::forall(bound, body)
                                                : Formula::exists(bound, body);
    }
    default:
      return f;
  }
}

// Printing.

std::string to_string(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVariable:
      return t.name();
    case Term::Kind::kNil:
      return "nil";
    case Term::Kind::kCons:
      return "cons(" + to_string(t.left()) + ", " + to_string(t.right()) + ")";
    case Term::Kind::kAppend: {
      std::string right = to_string(t.right());
      if (t.right().kind() == Term::Kind::kAppend) right = "(" + right + ")";
      return to_string(t.left()) + " ++ " + right;
    }
    case Term::Kind::kElemConst:
      return std::to_string(t.value());
    case Term::Kind::kListConst:
      return t.list().to_string();
  }
  return "?";
}

namespace {

int precedence(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      return 0;
    case Formula::Kind::kImplies:
      return 1;
    case Formula::Kind::kOr:
      return 2;
    case Formula::Kind::kAnd:
      return 3;
    case Formula::Kind::kNot:
      return f.body().kind() == Formula::Kind::kEquals ? 5 : 4;
    default:
      return 5;
  }
}

std::string wrap(const Formula& f, bool parens) {
  return parens ? "(" + to_string(f) + ")" : to_string(f);
}

}  // namespace

std::string to_string(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      return "true";
    case Formula::Kind::kFalse:
      return "false";
    case Formula::Kind::kEquals:
      return to_string(f.lhs()) + " = " + to_string(f.rhs());
    case Formula::Kind::kPredicate:
      return "A(" + to_string(f.arg()) + ")";
    case Formula::Kind::kNot:
      if (f.body().kind() == Formula::Kind::kEquals)
        return to_string(f.body().lhs()) + " != " + to_string(f.body().rhs());
      return "~" + wrap(f.body(), precedence(f.body()) < 4);
    case Formula::Kind::kAnd:
      return wrap(f.left(), precedence(f.left()) < 3) + " & " +
             wrap(f.right(), precedence(f.right()) <= 3);
    case Formula::Kind::kOr:
      return wrap(f.left(), precedence(f.left()) < 2) + " | " +
             wrap(f.right(), precedence(f.right()) <= 2);
    case Formula::Kind::kImplies:
      return wrap(f.left(), precedence(f.left()) <= 1) + " -> " +
             wrap(f.right(), precedence(f.right()) < 1);
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      return std::string(f.kind() == Formula::Kind::kForall ? "forall " : "exists ") + f.bound() +
             ":" + sort_name(variable_sort(f.bound())) + ". " + to_string(f.body());
  }
  return "?";
}

// Values.

std::string to_string(const Value& v) {
  if (const auto* n = std::get_if<Natural>(&v)) return std::to_string(*n);
  return std::get<TransfiniteList>(v).to_string();
}

std::string to_string(const Assignment& a) {
  std::string out;
  for (const auto& [name, value] : a) {
    if (!out.empty()) out += "; ";
    out += name + "=" + to_string(value);
  }
  return out;
}

}  // namespace listind
