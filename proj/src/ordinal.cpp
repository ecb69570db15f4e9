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

#include "listind/ordinal.hpp"

#include <cctype>
#include <limits>

namespace listind {

Natural checked_add(Natural a, Natural b) {
  Natural r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("natural number overflow in addition");
  return r;
}

Natural checked_mul(Natural a, Natural b) {
  Natural r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("natural number overflow in multiplication");
  return r;
}

Ordinal::Ordinal(Natural n) {
  if (n > 0) terms_.push_back({0, n});
}

Ordinal Ordinal::from_terms(const std::vector<Term>& terms) {
  Ordinal sum;
  for (const Term& t : terms) sum = sum + omega_power(t.exponent, t.coefficient);
  return sum;
}

Ordinal Ordinal::omega_power(Natural exponent, Natural coefficient) {
  if (coefficient == 0) return Ordinal();
  return Ordinal(std::vector<Term>{{exponent, coefficient}});
}

Natural Ordinal::finite_value() const {
  if (!is_finite())
    throw DomainError("ordinal " + to_string() + " is not finite");
  return terms_.empty() ? 0 : terms_.front().coefficient;
}

Natural Ordinal::coefficient(Natural exponent) const {
  for (const Term& t : terms_)
    if (t.exponent == exponent) return t.coefficient;
  return 0;
}

std::strong_ordering Ordinal::operator<=>(const Ordinal& other) const {
  const auto& a = terms_;
  const auto& b = other.terms_;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i].exponent != b[i].exponent) return a[i].exponent <=> b[i].exponent;
    if (a[i].coefficient != b[i].coefficient)
      return a[i].coefficient <=> b[i].coefficient;
  }
  return a.size() <=> b.size();
}

Ordering compare(const Ordinal& a, const Ordinal& b) {
  auto c = a <=> b;
  if (c < 0) return Ordering::kLess;
  if (c > 0) return Ordering::kGreater;
  return Ordering::kEqual;
}

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Natural lead = b.terms_.front().exponent;
  std::vector<Ordinal::Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  Natural carried = 0;
  for (const auto& t : a.terms_) {
    if (t.exponent > lead) {
      out.push_back(t);
    } else if (t.exponent == lead) {
      carried = t.coefficient;
    } else {
      break;
    }
  }
  out.push_back({lead, checked_add(carried, b.terms_.front().coefficient)});
  out.insert(out.end(), b.terms_.begin() + 1, b.terms_.end());
  return Ordinal(std::move(out));
}

Ordinal operator*(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  const Ordinal::Term lead = a.terms_.front();
  Ordinal product;
  // Left distributivity: a*(w^e*c + rest) = a*w^e*c + a*rest.
  for (const auto& t : b.terms_) {
    if (t.exponent > 0) {
      product = product + Ordinal::omega_power(
                              checked_add(lead.exponent, t.exponent),
                              t.coefficient);
    } else {
      // a*c = w^e1*(c1*c) + (a without its leading term).
      std::vector<Ordinal::Term> terms = a.terms_;
      terms.front().coefficient = checked_mul(lead.coefficient, t.coefficient);
      product = product + Ordinal(std::move(terms));
    }
  }
  return product;
}

Ordinal subtract_left(const Ordinal& a, const Ordinal& b) {
  if (b > a)
    throw DomainError("cannot subtract " + b.to_string() + " from " +
                      a.to_string());
  const auto& at = a.terms();
  const auto& bt = b.terms();
  std::size_t i = 0;
  while (i < bt.size() && at[i] == bt[i]) ++i;
  if (i == bt.size())
    return Ordinal::from_terms({at.begin() + static_cast<long>(i), at.end()});
  // Here b[i] < a[i]; the remaining terms of b are absorbed.
  std::vector<Ordinal::Term> rest(at.begin() + static_cast<long>(i), at.end());
  if (at[i].exponent == bt[i].exponent)
    rest.front().coefficient = at[i].coefficient - bt[i].coefficient;
  return Ordinal::from_terms(rest);
}

DivMod divmod(const Ordinal& x, const Ordinal& a) {
  if (a.is_zero()) throw DomainError("division by the zero ordinal");
  const Natural e1 = a.terms().front().exponent;
  const Natural c1 = a.terms().front().coefficient;
  std::vector<Ordinal::Term> quotient;
  std::vector<Ordinal::Term> low;  // terms of x with exponent <= e1
  for (const auto& t : x.terms()) {
    if (t.exponent > e1)
      quotient.push_back({t.exponent - e1, t.coefficient});
    else
      low.push_back(t);
  }
  const Ordinal low_part = Ordinal::from_terms(low);
  // Largest k with a*k <= low_part; a*k = w^e1*(c1*k) + tail(a) for k >= 1.
  Natural k = low_part.coefficient(e1) / c1;
  while (k > 0 && a * Ordinal(k) > low_part) --k;
  if (k > 0) quotient.push_back({0, k});
  return {Ordinal::from_terms(quotient), subtract_left(low_part, a * Ordinal(k))};
}

std::string Ordinal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.exponent == 0) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += "w";
    if (t.exponent > 1) out += "^" + std::to_string(t.exponent);
    if (t.coefficient > 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, bool allow_extensions)
      : text_(text), extended_(allow_extensions) {}

  OrdinalValue parse_top() {
    skip_space();
    OrdinalValue value;
    if (extended_ && peek_word("divmod")) {
      pos_ += 6;
      expect('(');
      Ordinal x = parse_sum();
      expect(',');
      Ordinal a = parse_sum();
      expect(')');
      value = divmod(x, a);
    } else {
      value = parse_sum();
    }
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  Ordinal parse_sum() {
    Ordinal acc = parse_product();
    for (;;) {
      skip_space();
      if (accept('+')) {
        acc = acc + parse_product();
      } else if (extended_ && accept('-')) {
        acc = subtract_left(acc, parse_product());
      } else {
        return acc;
      }
    }
  }

  Ordinal parse_product() {
    Ordinal acc = parse_power();
    while (skip_space(), accept('*')) acc = acc * parse_power();
    return acc;
  }

  Ordinal parse_power() {
    skip_space();
    if (accept('(')) {
      Ordinal inner = parse_sum();
      expect(')');
      return inner;
    }
    if (accept('w')) {
      skip_space();
      if (accept('^')) {
        skip_space();
        return Ordinal::omega_power(parse_natural());
      }
      return Ordinal::omega();
    }
    return Ordinal(parse_natural());
  }

  Natural parse_natural() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail(pos_ >= text_.size() ? "unexpected end of input" : "expected a number");
    Natural n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      n = checked_add(checked_mul(n, 10), static_cast<Natural>(text_[pos_] - '0'));
      ++pos_;
    }
    return n;
  }

  bool peek_word(std::string_view w) const { return text_.substr(pos_, w.size()) == w; }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_space();
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw OrdinalSyntaxError(what + " at column " + std::to_string(pos_ + 1), pos_ + 1);
  }

  std::string_view text_;
  bool extended_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal parse_ordinal(std::string_view text) {
  return std::get<Ordinal>(ExpressionParser(text, false).parse_top());
}

OrdinalValue evaluate_ordinal_expression(std::string_view text) {
  return ExpressionParser(text, true).parse_top();
}

std::string to_string(const OrdinalValue& value) {
  if (const auto* o = std::get_if<Ordinal>(&value)) return o->to_string();
  const auto& dm = std::get<DivMod>(value);
  return "(" + dm.quotient.to_string() + ", " + dm.remainder.to_string() + ")";
}

}  // namespace listind
