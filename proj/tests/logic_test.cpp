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

#include <gtest/gtest.h>

#include "listind/logic.hpp"
#include "support.hpp"

namespace listind {
namespace {

Term V(const std::string& n) { return Term::variable(n); }

ParseError::Kind error_kind(std::string_view text, const Signature& sig = Signature::full()) {
  try {
    parse_formula(text, sig);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return ParseError::Kind::kLexical;
}

TEST(Parse, AxiomShapes) {
  const Formula l02 = parse_formula("cons(x, X) = cons(y, Y) -> x = y & X = Y");
  const Formula expected = Formula::implication(
      Formula::equals(Term::cons(V("x"), V("X")), Term::cons(V("y"), V("Y"))),
      Formula::conjunction(Formula::equals(V("x"), V("y")), Formula::equals(V("X"), V("Y"))));
  EXPECT_EQ(l02, expected);
  EXPECT_EQ(parse_formula("nil ++ Y = Y"),
            Formula::equals(Term::append(Term::nil(), V("Y")), V("Y")));
  EXPECT_EQ(parse_formula("nil != cons(x, X)"),
            Formula::not_equals(Term::nil(), Term::cons(V("x"), V("X"))));
}

TEST(Parse, PrecedenceAndAssociativity) {
  EXPECT_EQ(parse_formula("A(X) -> A(Y) -> A(Z)"),
            Formula::implication(Formula::predicate(V("X")),
                                 Formula::implication(Formula::predicate(V("Y")),
                                                      Formula::predicate(V("Z")))));
  EXPECT_EQ(parse_formula("~A(X) & A(Y) | A(Z)"),
            Formula::disjunction(Formula::conjunction(Formula::negation(Formula::predicate(V("X"))),
                                                      Formula::predicate(V("Y"))),
                                 Formula::predicate(V("Z"))));
  EXPECT_EQ(parse_term("X ++ Y ++ Z"),
            Term::append(Term::append(V("X"), V("Y")), V("Z")));
  EXPECT_EQ(parse_formula("forall X:list. exists y. A(cons(y, X))"),
            Formula::forall("X", Formula::exists("y", Formula::predicate(Term::cons(V("y"), V("X"))))));
}

TEST(Parse, DomainLiterals) {
  const Formula f = parse_formula("Y ++ X = rep(N(0)) & X != [1]~N(3)");
  EXPECT_EQ(f.left().rhs().kind(), Term::Kind::kListConst);
  EXPECT_EQ(f.left().rhs().list(), parse_list("rep(N(0))"));
  EXPECT_EQ(to_string(f), "Y ++ X = rep(N(0)) & X != [1]~N(3)");
}

TEST(Parse, ErrorsAreDistinct) {
  try {
    parse_formula("A(nil");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::kSyntax);
    EXPECT_EQ(e.column(), 6u);
  }
  EXPECT_EQ(error_kind("A(X) $ A(Y)"), ParseError::Kind::kLexical);
  EXPECT_EQ(error_kind("A(X) & "), ParseError::Kind::kSyntax);
  EXPECT_EQ(error_kind("cons(X, nil) = nil"), ParseError::Kind::kSort);
  EXPECT_EQ(error_kind("x = X"), ParseError::Kind::kSort);
  EXPECT_EQ(error_kind("forall x:list. A(X)"), ParseError::Kind::kSort);
  EXPECT_EQ(error_kind("X ++ Y = X", Signature::with_predicate()), ParseError::Kind::kSignature);
  EXPECT_EQ(error_kind("A(X)", Signature::with_append()), ParseError::Kind::kSignature);
}

TEST(Print, RoundTripsExamples) {
  for (const char* s : {"nil != cons(x, X)", "cons(x, X) = cons(y, Y) -> x = y & X = Y",
                        "nil ++ Y = Y", "cons(x, X) ++ Y = cons(x, X ++ Y)",
                        "X = nil | (exists x':i. exists X':list. X = cons(x', X'))",
                        "~(A(X) -> A(Y))", "(A(X) -> A(Y)) -> A(Z)", "X ++ (Y ++ Z) = nil",
                        "true & false", "A([1,5]~N(3))"})
    EXPECT_EQ(to_string(parse_formula(s)), s);
}

TEST(Print, RoundTripsGeneratedFormulas) {
  Rng rng(31);
  const std::vector<TransfiniteList> pool = {parse_list("N(0)"), parse_list("[7]"),
                                             parse_list("rep(N(0)).[5]"), parse_list("[]")};
  testing::FormulaGenerator gen(rng, pool);
  for (int i = 0; i < 2000; ++i) {
    const Formula f = gen.formula(4);
    const std::string text = to_string(f);
    ASSERT_EQ(parse_formula(text), f) << text;
  }
}

// Text of a random term of sort `sort`; exactly one argument position, chosen
// when `mutate` first fires, carries a term of the other sort.
class IllSortedText {
 public:
  explicit IllSortedText(Rng& rng) : rng_(rng) {}

  std::string formula() {
    done_ = false;
    std::string out;
    switch (rng_.below(3)) {
      case 0:
        out = "A(" + term(Sort::kList, 2) + ")";
        break;
      case 1:
        out = term(Sort::kList, 2) + " = " + term(Sort::kList, 2);
        break;
      default:
        out = term(Sort::kElem, 0) + " = " + term(Sort::kElem, 0);
    }
    if (!done_) out = "A(" + plain(Sort::kElem, 0) + ")";
    return out;
  }

 private:
  std::string term(Sort sort, unsigned depth) {
    if (!done_ && rng_.chance(1, 4)) {
      done_ = true;
      return plain(sort == Sort::kList ? Sort::kElem : Sort::kList, depth);
    }
    if (sort == Sort::kElem) return rng_.chance(1, 2) ? "x" : "4";
    switch (depth == 0 ? rng_.below(3) : rng_.below(5)) {
      case 0:
        return "X";
      case 1:
        return "nil";
      case 2:
        return "[1,2]";
      case 3:
        return "cons(" + term(Sort::kElem, depth - 1) + ", " + term(Sort::kList, depth - 1) + ")";
      default:
        return "(" + term(Sort::kList, depth - 1) + " ++ " + term(Sort::kList, depth - 1) + ")";
    }
  }

  std::string plain(Sort sort, unsigned depth) {
    if (sort == Sort::kElem) return "y";
    return depth > 0 ? "cons(3, Y)" : "Y";
  }

  Rng& rng_;
  bool done_ = false;
};

TEST(SortChecker, RejectsEveryMutatedFormula) {
  Rng rng(32);
  IllSortedText gen(rng);
  for (int i = 0; i < 1000; ++i) {
    const std::string text = gen.formula();
    try {
      parse_formula(text);
      ADD_FAILURE() << "accepted " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.kind(), ParseError::Kind::kSort) << text << ": " << e.what();
    }
  }
}

TEST(SortChecker, Factories) {
  EXPECT_THROW(Term::cons(V("X"), Term::nil()), SortError);
  EXPECT_THROW(Formula::equals(V("x"), V("X")), SortError);
  EXPECT_THROW(Formula::predicate(V("x")), SortError);
  EXPECT_EQ(variable_sort("X'"), Sort::kList);
  EXPECT_EQ(variable_sort("x1"), Sort::kElem);
}

TEST(Substitute, Examples) {
  const Formula a = parse_formula("A(X)");
  EXPECT_EQ(substitute(a, "X", Term::nil()), parse_formula("A(nil)"));
  EXPECT_EQ(substitute(a, "X", parse_term("cons(x1, X)")), parse_formula("A(cons(x1, X))"));
  const Formula shadow = parse_formula("forall X. A(X)");
  EXPECT_EQ(substitute(shadow, "X", Term::nil()), shadow);
  EXPECT_THROW(substitute(a, "X", V("x")), SortError);
}

TEST(Substitute, AvoidsCapture) {
  const Formula f = parse_formula("forall x. A(cons(x, X))");
  const Formula g = substitute(f, "X", parse_term("cons(x, nil)"));
  EXPECT_EQ(to_string(g), "forall x_1:i. A(cons(x_1, cons(x, nil)))");
  EXPECT_EQ(free_vars(g), (std::set<std::string>{"x"}));
}

TEST(Substitute, FreeVariableLaw) {
  Rng rng(33);
  const std::vector<TransfiniteList> pool = {parse_list("N(2)")};
  testing::FormulaGenerator gen(rng, pool);
  testing::TermGenerator terms(rng, true, pool, {"Y", "Z"});
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    const Formula f = gen.formula(3);
    if (!free_vars(f).count("X")) continue;
    const Term t = terms.list(2);
    std::set<std::string> expected = free_vars(f);
    expected.erase("X");
    for (const auto& v : free_vars(t)) expected.insert(v);
    EXPECT_EQ(free_vars(substitute(f, "X", t)), expected) << to_string(f);
    ++checked;
  }
  EXPECT_GT(checked, 300);
}

TEST(FreshVariable, AvoidsTaken) {
  EXPECT_EQ(fresh_variable("x1", {"x"}), "x1");
  EXPECT_EQ(fresh_variable("x1", {"x1", "x1_1"}), "x1_2");
}

TEST(Assignment, ParsesAndPrints) {
  const Assignment a = parse_assignment("Y=N(0); X=rep(N(0)); x=3");
  EXPECT_EQ(std::get<TransfiniteList>(a.at("X")), parse_list("rep(N(0))"));
  EXPECT_EQ(std::get<Natural>(a.at("x")), 3u);
  EXPECT_EQ(to_string(a), "X=rep(N(0)); Y=N(0); x=3");
  EXPECT_EQ(parse_assignment(to_string(a)), a);
  EXPECT_THROW(parse_assignment("x=N(0)"), ParseError);
  EXPECT_THROW(parse_assignment("X=3"), ParseError);
  EXPECT_TRUE(parse_assignment("").empty());
}

}  // namespace
}  // namespace listind
