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

// Big-step induction problems: the premises of I^m(A) as assumptions and
// forall X A(X) as the goal.

#include <fstream>
#include <sstream>

#include "listind/induction.hpp"

namespace listind {

namespace {

// SMT-LIB2.

std::string smt_term(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVariable:
      return t.name();
    case Term::Kind::kNil:
      return "nil";
    case Term::Kind::kCons:
      return "(cons " + smt_term(t.left()) + " " + smt_term(t.right()) + ")";
    default:
      throw std::invalid_argument("no SMT-LIB rendering for " + to_string(t));
  }
}

std::string smt_sort(const std::string& var) {
  return variable_sort(var) == Sort::kList ? "list" : "elem";
}

std::string smt_formula(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      return "true";
    case Formula::Kind::kFalse:
      return "false";
    case Formula::Kind::kEquals:
      return "(= " + smt_term(f.lhs()) + " " + smt_term(f.rhs()) + ")";
    case Formula::Kind::kPredicate:
      return "(A " + smt_term(f.arg()) + ")";
    case Formula::Kind::kNot:
      return "(not " + smt_formula(f.body()) + ")";
    case Formula::Kind::kAnd:
      return "(and " + smt_formula(f.left()) + " " + smt_formula(f.right()) + ")";
    case Formula::Kind::kOr:
      return "(or " + smt_formula(f.left()) + " " + smt_formula(f.right()) + ")";
    case Formula::Kind::kImplies:
      return "(=> " + smt_formula(f.left()) + " " + smt_formula(f.right()) + ")";
    case Formula::Kind::kForall:
    case Formula::Kind::kExists: {
      const Formula::Kind kind = f.kind();
      std::string binders;
      Formula body = f;
      while (body.kind() == kind) {
        binders += (binders.empty() ? "(" : " (") + body.bound() + " " + smt_sort(body.bound()) + ")";
        body = body.body();
      }
      return std::string(kind == Formula::Kind::kForall ? "(forall (" : "(exists (") + binders +
             ") " + smt_formula(body) + ")";
    }
  }
  return "";
}

// TPTP tff. Variables are upper case there, so element variables get an E
// prefix.

std::string tptp_var(const std::string& name) {
  return variable_sort(name) == Sort::kList ? name : "E" + name;
}

std::string tptp_term(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kVariable:
      return tptp_var(t.name());
    case Term::Kind::kNil:
      return "nil";
    case Term::Kind::kCons:
      return "cons(" + tptp_term(t.left()) + "," + tptp_term(t.right()) + ")";
    default:
      throw std::invalid_argument("no TPTP rendering for " + to_string(t));
  }
}

std::string tptp_formula(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      return "$true";
    case Formula::Kind::kFalse:
      return "$false";
    case Formula::Kind::kEquals:
      return tptp_term(f.lhs()) + " = " + tptp_term(f.rhs());
    case Formula::Kind::kPredicate:
      return "a(" + tptp_term(f.arg()) + ")";
    case Formula::Kind::kNot:
      if (f.body().kind() == Formula::Kind::kEquals)
        return tptp_term(f.body().lhs()) + " != " + tptp_term(f.body().rhs());
      return "~ " + tptp_formula(f.body());
    case Formula::Kind::kAnd:
      return "( " + tptp_formula(f.left()) + " & " + tptp_formula(f.right()) + " )";
    case Formula::Kind::kOr:
      return "( " + tptp_formula(f.left()) + " | " + tptp_formula(f.right()) + " )";
    case Formula::Kind::kImplies:
      return "( " + tptp_formula(f.left()) + " => " + tptp_formula(f.right()) + " )";
    case Formula::Kind::kForall:
    case Formula::Kind::kExists: {
      const Formula::Kind kind = f.kind();
      std::string binders;
      Formula body = f;
      while (body.kind() == kind) {
        binders += (binders.empty() ? "" : ",") + tptp_var(body.bound()) + ":" +
                   (variable_sort(body.bound()) == Sort::kList ? "list" : "elem");
        body = body.body();
      }
      return std::string(kind == Formula::Kind::kForall ? "! [" : "? [") + binders + "] : " +
             tptp_formula(body);
    }
  }
  return "";
}

Formula closure(const Formula& f) {
  const auto free = free_vars(f);
  return Formula::forall_all({free.begin(), free.end()}, f);
}

std::string premise_label(const std::string& name) {
  std::string out;
  for (char c : name) out += c == ' ' ? '_' : c;
  return out;
}

}  // namespace

std::string benchmark_big_step(Natural m, BenchmarkFormat format) {
  if (m == 0) throw std::invalid_argument("benchmarks need m >= 1");
  const InductionInstance inst =
      build_big_step(Formula::predicate(Term::variable("X")), "X", m);
  std::ostringstream out;
  if (format == BenchmarkFormat::kSmtLib2) {
    out << "; big-step list induction, m = " << m << "\n";
    out << "; premises of the m-step induction instance for A(X), negated conclusion\n";
    out << "(set-logic UFDT)\n";
    out << "(set-info :status unsat)\n";
    out << "(declare-sort elem 0)\n";
    out << "(declare-datatypes ((list 0)) (((nil) (cons (head elem) (tail list)))))\n";
    out << "(declare-fun A (list) Bool)\n";
    for (const auto& p : inst.premises) out << "(assert " << smt_formula(p) << ")\n";
    out << "(assert (not " << smt_formula(inst.conclusion) << "))\n";
    out << "(check-sat)\n";
    return out.str();
  }
  out << "% big-step list induction, m = " << m << "\n";
  out << "% premises of the m-step induction instance for a(X) as axioms\n";
  out << "tff(elem_type, type, elem: $tType).\n";
  out << "tff(list_type, type, list: $tType).\n";
  out << "tff(nil_type, type, nil: list).\n";
  out << "tff(cons_type, type, cons: (elem * list) > list).\n";
  out << "tff(a_type, type, a: list > $o).\n";
  out << "tff(nil_not_cons, axiom, " << tptp_formula(closure(axiom_formula("L0.1"))) << ").\n";
  out << "tff(cons_injective, axiom, " << tptp_formula(closure(axiom_formula("L0.2"))) << ").\n";
  for (std::size_t i = 0; i < inst.premises.size(); ++i)
    out << "tff(" << premise_label(inst.premise_names[i]) << ", axiom, "
        << tptp_formula(inst.premises[i]) << ").\n";
  out << "tff(goal, conjecture, " << tptp_formula(inst.conclusion) << ").\n";
  return out.str();
}

std::string benchmark_file_name(Natural m, BenchmarkFormat format) {
  return "big_step_m" + std::to_string(m) +
         (format == BenchmarkFormat::kSmtLib2 ? ".smt2" : ".p");
}

std::vector<std::filesystem::path> emit_benchmarks(const std::vector<Natural>& ms,
                                                   BenchmarkFormat format,
                                                   const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  for (Natural m : ms) {
    const std::string text = benchmark_big_step(m, format);
    const auto path = out_dir / benchmark_file_name(m, format);
    std::ofstream file(path, std::ios::binary);
    file << text;
    file.close();
    if (!file) throw IoError("cannot write " + path.string());
    written.push_back(path);
  }
  return written;
}

}  // namespace listind
