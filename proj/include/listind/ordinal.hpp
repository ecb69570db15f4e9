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

// Ordinals below w^w in Cantor normal form.
//
// An ordinal is a finite sum  w^e1*c1 + ... + w^en*cn  with e1 > ... > en and
// every ci >= 1. Exponents and coefficients are 64-bit naturals; any
// arithmetic that would leave that range throws std::overflow_error.

#ifndef LISTIND_ORDINAL_HPP_
#define LISTIND_ORDINAL_HPP_

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace listind {

using Natural = std::uint64_t;

// Raised for partial operations applied outside their domain
// (b - a with a > b, division by zero, indexing past the end, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

Natural checked_add(Natural a, Natural b);
Natural checked_mul(Natural a, Natural b);

class Ordinal {
 public:
  struct Term {
    Natural exponent;
    Natural coefficient;
    bool operator==(const Term&) const = default;
  };

  Ordinal() = default;
  Ordinal(Natural n);  // NOLINT: naturals are ordinals

  // Builds from arbitrary terms, which need not be in normal form; they are
  // summed left to right.
  static Ordinal from_terms(const std::vector<Term>& terms);
  static Ordinal omega_power(Natural exponent, Natural coefficient = 1);
  static Ordinal omega() { return omega_power(1); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const {
    return terms_.empty() || terms_.front().exponent == 0;
  }
  bool is_limit() const {
    return !terms_.empty() && terms_.back().exponent > 0;
  }
  bool is_successor() const {
    return !terms_.empty() && terms_.back().exponent == 0;
  }
  // Value of a finite ordinal; throws DomainError otherwise.
  Natural finite_value() const;
  // Coefficient of w^e (0 when absent).
  Natural coefficient(Natural exponent) const;

  std::strong_ordering operator<=>(const Ordinal& other) const;
  bool operator==(const Ordinal& other) const = default;

  friend Ordinal operator+(const Ordinal& a, const Ordinal& b);
  friend Ordinal operator*(const Ordinal& a, const Ordinal& b);

  // Canonical text: "w^2*3 + w*2 + 5", "w", "0".
  std::string to_string() const;

 private:
  explicit Ordinal(std::vector<Term> terms) : terms_(std::move(terms)) {}

  std::vector<Term> terms_;
};

enum class Ordering { kLess, kEqual, kGreater };
Ordering compare(const Ordinal& a, const Ordinal& b);

// The unique d with b + d = a. Requires b <= a.
Ordinal subtract_left(const Ordinal& a, const Ordinal& b);

struct DivMod {
  Ordinal quotient;
  Ordinal remainder;
  bool operator==(const DivMod&) const = default;
};

// The unique (d, r) with x = a*d + r and r < a. Requires a > 0.
DivMod divmod(const Ordinal& x, const Ordinal& a);

class OrdinalSyntaxError : public std::invalid_argument {
 public:
  OrdinalSyntaxError(const std::string& message, std::size_t column)
      : std::invalid_argument(message), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

// Parses the literal syntax: sums of terms "w^e*c", "w*c", "w^e", "w", "n",
// with parentheses and ordinal products. Non-normal input is evaluated, so
// "1 + w" parses to w.
Ordinal parse_ordinal(std::string_view text);

// Expressions over ordinal literals with "+", "-" (left subtraction), "*",
// parentheses, and a top-level "divmod(x, a)".
using OrdinalValue = std::variant<Ordinal, DivMod>;
OrdinalValue evaluate_ordinal_expression(std::string_view text);
std::string to_string(const OrdinalValue& value);

}  // namespace listind

#endif  // LISTIND_ORDINAL_HPP_
