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

// Two-sorted first-order syntax for lists: an element sort `i` and a list
// sort `list`, the constructors nil and cons, optional append (++) and an
// optional unary list predicate A, plus constants naming domain elements.
//
// Variables carry their sort in their spelling: identifiers starting with an
// upper-case letter are lists, lower-case ones are elements.

#ifndef LISTIND_LOGIC_HPP_
#define LISTIND_LOGIC_HPP_

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "listind/transfinite.hpp"

namespace listind {

enum class Sort { kElem, kList };

const char* sort_name(Sort s);

// Sort of a variable name by the case convention; throws SortError for names
// that are not identifiers.
Sort variable_sort(std::string_view name);

struct Signature {
  std::string name;
  bool has_append = false;
  bool has_predicate = false;

  static Signature base() { return {"L0", false, false}; }
  static Signature with_predicate() { return {"LA", false, true}; }
  static Signature with_append() { return {"L1", true, false}; }
  // Everything; used when no model restricts the language.
  static Signature full() { return {"L", true, true}; }
};

class SortError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Term {
 public:
  enum class Kind { kVariable, kNil, kCons, kAppend, kElemConst, kListConst };

  static Term variable(std::string name);
  static Term nil();
  static Term cons(Term head, Term tail);
  static Term append(Term left, Term right);
  static Term elem_const(Natural value);
  static Term list_const(TransfiniteList value);
  // cons(t1, cons(t2, ... cons(tn, tail)))
  static Term cons_chain(const std::vector<Term>& heads, Term tail);

  Kind kind() const { return node_->kind; }
  Sort sort() const { return node_->sort; }
  const std::string& name() const { return node_->name; }
  Natural value() const { return node_->value; }
  const TransfiniteList& list() const { return node_->list; }
  const Term& left() const { return node_->args.at(0); }
  const Term& right() const { return node_->args.at(1); }

  bool operator==(const Term& other) const;

 private:
  struct Node {
    Kind kind;
    Sort sort;
    std::string name;
    Natural value = 0;
    TransfiniteList list;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

class Formula {
 public:
  enum class Kind {
    kTrue, kFalse, kEquals, kPredicate, kNot, kAnd, kOr, kImplies, kForall, kExists
  };

  static Formula truth();
  static Formula falsity();
  // Throws SortError when the sides have different sorts.
  static Formula equals(Term lhs, Term rhs);
  static Formula not_equals(Term lhs, Term rhs) { return negation(equals(std::move(lhs), std::move(rhs))); }
  static Formula predicate(Term arg);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);
  // Folds with conjunction; the empty conjunction is true.
  static Formula conjunction_of(const std::vector<Formula>& parts);
  // forall v1. forall v2. ... body
  static Formula forall_all(const std::vector<std::string>& vars, Formula body);

  Kind kind() const { return node_->kind; }
  bool is_quantifier() const { return kind() == Kind::kForall || kind() == Kind::kExists; }
  const Term& lhs() const { return node_->terms.at(0); }
  const Term& rhs() const { return node_->terms.at(1); }
  const Term& arg() const { return node_->terms.at(0); }
  const Formula& left() const { return node_->subs.at(0); }
  const Formula& right() const { return node_->subs.at(1); }
  const Formula& body() const { return node_->subs.at(0); }
  const std::string& bound() const { return node_->bound; }
  // Sort of an equation.
  Sort equation_sort() const { return lhs().sort(); }

  bool operator==(const Formula& other) const;

 private:
  struct Node {
    Kind kind;
    std::vector<Term> terms;
    std::vector<Formula> subs;
    std::string bound;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

std::set<std::string> free_vars(const Term& t);
std::set<std::string> free_vars(const Formula& f);
bool is_open(const Formula& f);
bool uses_append(const Formula& f);
bool uses_predicate(const Formula& f);
bool uses_append(const Term& t);

// Capture-avoiding substitution of `replacement` for the free occurrences of
// `var`. Throws SortError when the sorts disagree.
Term substitute(const Term& t, const std::string& var, const Term& replacement);
Formula substitute(const Formula& f, const std::string& var, const Term& replacement);

// A variable name of the given sort that avoids `taken`, derived from `base`.
std::string fresh_variable(const std::string& base, const std::set<std::string>& taken);

std::string to_string(const Term& t);
std::string to_string(const Formula& f);

class ParseError : public std::invalid_argument {
 public:
  enum class Kind { kLexical, kSyntax, kSort, kSignature };
  ParseError(Kind kind, const std::string& message, std::size_t column);
  Kind kind() const { return kind_; }
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  Kind kind_;
  std::size_t column_;
  std::string detail_;
};

const char* parse_error_kind_name(ParseError::Kind kind);

Formula parse_formula(std::string_view text, const Signature& signature = Signature::full());
Term parse_term(std::string_view text, const Signature& signature = Signature::full());

// Domain values and variable assignments.
using Value = std::variant<Natural, TransfiniteList>;
using Assignment = std::map<std::string, Value>;

std::string to_string(const Value& v);
// "X=N(0); x=3; Y=rep(N(0)).[1]"
Assignment parse_assignment(std::string_view text);
std::string to_string(const Assignment& a);

}  // namespace listind

#endif  // LISTIND_LOGIC_HPP_
