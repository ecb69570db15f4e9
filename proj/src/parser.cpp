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

// Recursive-descent parser for formulas and terms.
//
//   formula  := implies
//   implies  := or ("->" implies)?
//   or       := and ("|" and)*
//   and      := unary ("&" unary)*
//   unary    := "~" unary | ("forall" | "exists") binders "." implies | atom
//   binders  := VAR (":" sort)? ("," VAR (":" sort)?)*
//   atom     := "true" | "false" | "A" "(" term ")" | term ("=" | "!=") term
//             | "(" formula ")"
//   term     := primary ("++" primary)*
//   primary  := VAR | "nil" | "cons" "(" term "," term ")" | NUMBER | LITERAL
//             | "(" term ")"

#include <cctype>
#include <optional>

#include "listind/logic.hpp"

namespace listind {

ParseError::ParseError(Kind kind, const std::string& message, std::size_t column)
    : std::invalid_argument(std::string(parse_error_kind_name(kind)) + " error: " + message +
                            " at column " + std::to_string(column)),
      kind_(kind),
      column_(column),
      detail_(message) {}

const char* parse_error_kind_name(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::kLexical:
      return "lexical";
    case ParseError::Kind::kSyntax:
      return "syntax";
    case ParseError::Kind::kSort:
      return "sort";
    case ParseError::Kind::kSignature:
      return "signature";
  }
  return "parse";
}

namespace {

enum class Tok {
  kIdent, kNumber, kLiteral, kLParen, kRParen, kComma, kDot, kColon,
  kEq, kNeq, kAppend, kNot, kAnd, kOr, kImplies, kEnd
};

struct Token {
  Tok type;
  std::size_t column;  // 1-based
  std::string text;
  Natural number = 0;
  TransfiniteList literal;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
}

bool is_reserved(const std::string& s) {
  static const char* const kWords[] = {"nil", "cons", "A", "N", "rep", "forall",
                                       "exists", "true", "false"};
  for (const char* w : kWords)
    if (s == w) return true;
  return false;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t pos = 0;
  auto lexical = [&](const std::string& what) -> ParseError {
    return ParseError(ParseError::Kind::kLexical, what, pos + 1);
  };
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    const std::size_t col = pos + 1;
    const char c = text[pos];
    if (starts_list_literal(text, pos)) {
      try {
        TransfiniteList lit = parse_list_at(text, pos);
        out.push_back({Tok::kLiteral, col, "", 0, std::move(lit)});
      } catch (const LiteralSyntaxError& e) {
        throw ParseError(ParseError::Kind::kSyntax, "malformed list literal", e.column());
      } catch (const std::overflow_error&) {
        throw ParseError(ParseError::Kind::kLexical, "number too large", col);
      }
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Natural n = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        try {
          n = checked_add(checked_mul(n, 10), static_cast<Natural>(text[pos] - '0'));
        } catch (const std::overflow_error&) {
          throw ParseError(ParseError::Kind::kLexical, "number too large", col);
        }
        ++pos;
      }
      out.push_back({Tok::kNumber, col, std::string(text.substr(col - 1, pos - col + 1)), n, {}});
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t end = pos;
      while (end < text.size() && is_ident_char(text[end])) ++end;
      out.push_back({Tok::kIdent, col, std::string(text.substr(pos, end - pos)), 0, {}});
      pos = end;
      continue;
    }
    auto two = text.substr(pos, 2);
    Tok type;
    std::size_t width = 1;
    if (two == "!=") {
      type = Tok::kNeq, width = 2;
    } else if (two == "++") {
      type = Tok::kAppend, width = 2;
    } else if (two == "->") {
      type = Tok::kImplies, width = 2;
    } else {
      switch (c) {
        case '(': type = Tok::kLParen; break;
        case ')': type = Tok::kRParen; break;
        case ',': type = Tok::kComma; break;
        case '.': type = Tok::kDot; break;
        case ':': type = Tok::kColon; break;
        case '=': type = Tok::kEq; break;
        case '~': type = Tok::kNot; break;
        case '&': type = Tok::kAnd; break;
        case '|': type = Tok::kOr; break;
        default:
          throw lexical(std::string("unexpected character '") + c + "'");
      }
    }
    out.push_back({type, col, std::string(text.substr(pos, width)), 0, {}});
    pos += width;
  }
  out.push_back({Tok::kEnd, text.size() + 1, "", 0, {}});
  return out;
}

const char* describe(Tok t) {
  switch (t) {
    case Tok::kIdent: return "identifier";
    case Tok::kNumber: return "number";
    case Tok::kLiteral: return "list literal";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kComma: return "','";
    case Tok::kDot: return "'.'";
    case Tok::kColon: return "':'";
    case Tok::kEq: return "'='";
    case Tok::kNeq: return "'!='";
    case Tok::kAppend: return "'++'";
    case Tok::kNot: return "'~'";
    case Tok::kAnd: return "'&'";
    case Tok::kOr: return "'|'";
    case Tok::kImplies: return "'->'";
    case Tok::kEnd: return "end of input";
  }
  return "token";
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, Signature signature)
      : toks_(std::move(tokens)), sig_(std::move(signature)) {}

  Formula formula_to_end() {
    Formula f = implies();
    expect(Tok::kEnd);
    return f;
  }

  Term term_to_end() {
    Term t = term();
    expect(Tok::kEnd);
    return t;
  }

 private:
  Formula implies() {
    Formula lhs = disjunction();
    if (accept(Tok::kImplies)) return Formula::implication(lhs, implies());
    return lhs;
  }

  Formula disjunction() {
    Formula acc = conjunction();
    while (accept(Tok::kOr)) acc = Formula::disjunction(acc, conjunction());
    return acc;
  }

  Formula conjunction() {
    Formula acc = unary();
    while (accept(Tok::kAnd)) acc = Formula::conjunction(acc, unary());
    return acc;
  }

  Formula unary() {
    if (accept(Tok::kNot)) return Formula::negation(unary());
    if (peek_ident("forall") || peek_ident("exists")) {
      const bool universal = peek().text == "forall";
      ++pos_;
      std::vector<std::string> vars;
      do {
        vars.push_back(binder());
      } while (accept(Tok::kComma));
      expect(Tok::kDot);
      Formula body = implies();
      for (auto it = vars.rbegin(); it != vars.rend(); ++it)
        body = universal ? Formula::forall(*it, body) : Formula::exists(*it, body);
      return body;
    }
    return atom();
  }

  std::string binder() {
    const Token& t = peek();
    if (t.type != Tok::kIdent || is_reserved(t.text))
      syntax("expected a variable after quantifier", t);
    ++pos_;
    if (accept(Tok::kColon)) {
      const Token& s = peek();
      if (s.type != Tok::kIdent || (s.text != "i" && s.text != "list"))
        syntax("expected sort 'i' or 'list'", s);
      const Sort declared = s.text == "i" ? Sort::kElem : Sort::kList;
      if (declared != variable_sort(t.text))
        throw ParseError(ParseError::Kind::kSort,
                         "variable " + t.text + " has sort " +
                             sort_name(variable_sort(t.text)) + ", not " + s.text,
                         s.column);
      ++pos_;
    }
    return t.text;
  }

  Formula atom() {
    const Token& t = peek();
    if (peek_ident("true")) {
      ++pos_;
      return Formula::truth();
    }
    if (peek_ident("false")) {
      ++pos_;
      return Formula::falsity();
    }
    if (peek_ident("A") && peek(1).type == Tok::kLParen) {
      if (!sig_.has_predicate)
        throw ParseError(ParseError::Kind::kSignature,
                         "predicate A is not in signature " + sig_.name, t.column);
      pos_ += 2;
      Term arg = term();
      expect(Tok::kRParen);
      return sorted([&] { return Formula::predicate(arg); }, t);
    }
    if (t.type == Tok::kLParen) {
      // Either a parenthesized formula or a parenthesized term on the left of
      // an equation; try the formula reading first.
      const std::size_t start = pos_;
      std::optional<ParseError> formula_error;
      try {
        ++pos_;
        Formula inner = implies();
        expect(Tok::kRParen);
        const Tok next = peek().type;
        if (next != Tok::kEq && next != Tok::kNeq && next != Tok::kAppend) return inner;
      } catch (const ParseError& e) {
        if (e.kind() != ParseError::Kind::kSyntax) throw;
        formula_error = e;
      }
      pos_ = start;
      try {
        return equation();
      } catch (const ParseError& e) {
        if (formula_error && formula_error->column() > e.column()) throw *formula_error;
        throw;
      }
    }
    return equation();
  }

  Formula equation() {
    Term lhs = term();
    const Token& op = peek();
    if (op.type != Tok::kEq && op.type != Tok::kNeq)
      syntax(std::string("expected '=' or '!=' but found ") + describe(op.type), op);
    ++pos_;
    Term rhs = term();
    return sorted(
        [&] {
          return op.type == Tok::kEq ? Formula::equals(lhs, rhs) : Formula::not_equals(lhs, rhs);
        },
        op);
  }

  Term term() {
    Term acc = primary();
    while (peek().type == Tok::kAppend) {
      const Token& op = peek();
      if (!sig_.has_append)
        throw ParseError(ParseError::Kind::kSignature,
                         "'++' is not in signature " + sig_.name, op.column);
      ++pos_;
      Term rhs = primary();
      acc = sorted([&] { return Term::append(acc, rhs); }, op);
    }
    return acc;
  }

  Term primary() {
    const Token& t = peek();
    switch (t.type) {
      case Tok::kNumber:
        ++pos_;
        return Term::elem_const(t.number);
      case Tok::kLiteral:
        ++pos_;
        return Term::list_const(t.literal);
      case Tok::kLParen: {
        ++pos_;
        Term inner = term();
        expect(Tok::kRParen);
        return inner;
      }
      case Tok::kIdent:
        break;
      default:
        syntax(std::string("expected a term but found ") + describe(t.type), t);
    }
    if (t.text == "nil") {
      ++pos_;
      return Term::nil();
    }
    if (t.text == "cons") {
      ++pos_;
      expect(Tok::kLParen);
      Term head = term();
      expect(Tok::kComma);
      Term tail = term();
      expect(Tok::kRParen);
      return sorted([&] { return Term::cons(head, tail); }, t);
    }
    if (is_reserved(t.text)) syntax("unexpected keyword '" + t.text + "'", t);
    ++pos_;
    return Term::variable(t.text);
  }

  template <typename F>
  auto sorted(F&& build, const Token& at) -> decltype(build()) {
    try {
      return build();
    } catch (const SortError& e) {
      throw ParseError(ParseError::Kind::kSort, e.what(), at.column);
    }
  }

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool peek_ident(std::string_view word) const {
    return peek().type == Tok::kIdent && peek().text == word;
  }
  bool accept(Tok type) {
    if (peek().type != type) return false;
    ++pos_;
    return true;
  }
  void expect(Tok type) {
    if (!accept(type))
      syntax(std::string("expected ") + describe(type) + " but found " + describe(peek().type),
             peek());
  }
  [[noreturn]] void syntax(const std::string& what, const Token& at) const {
    throw ParseError(ParseError::Kind::kSyntax, what, at.column);
  }

  std::vector<Token> toks_;
  Signature sig_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text, const Signature& signature) {
  return Parser(tokenize(text), signature).formula_to_end();
}

Term parse_term(std::string_view text, const Signature& signature) {
  return Parser(tokenize(text), signature).term_to_end();
}

Assignment parse_assignment(std::string_view text) {
  Assignment out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (true) {
    skip();
    if (pos >= text.size()) break;
    if (text[pos] == ';') {
      ++pos;
      continue;
    }
    const std::size_t name_col = pos + 1;
    if (!is_ident_start(text[pos]))
      throw ParseError(ParseError::Kind::kSyntax, "expected a variable name", name_col);
    std::size_t end = pos;
    while (end < text.size() && is_ident_char(text[end])) ++end;
    std::string name(text.substr(pos, end - pos));
    if (is_reserved(name))
      throw ParseError(ParseError::Kind::kSyntax, "'" + name + "' is reserved", name_col);
    pos = end;
    skip();
    if (pos >= text.size() || text[pos] != '=')
      throw ParseError(ParseError::Kind::kSyntax, "expected '='", pos + 1);
    ++pos;
    skip();
    const std::size_t value_col = pos + 1;
    if (variable_sort(name) == Sort::kElem) {
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError(ParseError::Kind::kSort,
                         "element variable " + name + " needs a natural number", value_col);
      Natural n = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        try {
          n = checked_add(checked_mul(n, 10), static_cast<Natural>(text[pos] - '0'));
        } catch (const std::overflow_error&) {
          throw ParseError(ParseError::Kind::kLexical, "number too large", value_col);
        }
        ++pos;
      }
      out[name] = n;
    } else {
      if (!starts_list_literal(text, pos))
        throw ParseError(ParseError::Kind::kSort,
                         "list variable " + name + " needs a list literal", value_col);
      try {
        out[name] = parse_list_at(text, pos);
      } catch (const LiteralSyntaxError& e) {
        throw ParseError(ParseError::Kind::kSyntax, "malformed list literal", e.column());
      }
    }
    skip();
    if (pos < text.size() && text[pos] != ';')
      throw ParseError(ParseError::Kind::kSyntax, "expected ';'", pos + 1);
  }
  return out;
}

}  // namespace listind
