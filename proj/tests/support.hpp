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

// Generators and independent oracles shared by the unit and acceptance tests.

#ifndef LISTIND_TESTS_SUPPORT_HPP_
#define LISTIND_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include "listind/induction.hpp"

namespace listind::testing {

// Ordinals.

// Coefficient vector: v[e] is the coefficient of w^e.
using Digits = std::vector<Natural>;

inline Digits digits_of(const Ordinal& a) {
  Digits d;
  for (const auto& t : a.terms()) {
    if (d.size() <= t.exponent) d.resize(t.exponent + 1, 0);
    d[t.exponent] = t.coefficient;
  }
  return d;
}

inline Ordinal from_digits(const Digits& d) {
  std::vector<Ordinal::Term> terms;
  for (std::size_t e = d.size(); e-- > 0;)
    if (d[e]) terms.push_back({e, d[e]});
  return Ordinal::from_terms(terms);
}

// a + b: the terms of a below the leading exponent of b vanish, the leading
// coefficients meet.
inline Digits digits_add(const Digits& a, const Digits& b) {
  std::size_t lead = b.size();
  while (lead > 0 && b[lead - 1] == 0) --lead;
  if (lead == 0) return a;
  const std::size_t e = lead - 1;
  Digits out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = e + 1; i < a.size(); ++i) out[i] = a[i];
  out[e] = (e < a.size() ? a[e] : 0) + b[e];
  for (std::size_t i = 0; i < e; ++i) out[i] = b[i];
  return out;
}

// a * b by left distributivity over the terms of b: a * w^f = w^(lead(a)+f)
// for f > 0, and a * d multiplies the leading coefficient.
inline Digits digits_mul(const Digits& a, const Digits& b) {
  std::size_t lead_a = a.size();
  while (lead_a > 0 && a[lead_a - 1] == 0) --lead_a;
  if (lead_a == 0) return {};
  const std::size_t ea = lead_a - 1;
  Digits out;
  for (std::size_t f = b.size(); f-- > 0;) {
    if (!b[f]) continue;
    Digits part;
    if (f > 0) {
      part.assign(ea + f + 1, 0);
      part[ea + f] = b[f];
    } else {
      part = a;
      part.resize(lead_a);
      part[ea] = a[ea] * b[f];
    }
    out = digits_add(out, part);
  }
  return out;
}

// Below w^5 * 9.
inline Ordinal random_ordinal(Rng& rng, Natural max_exponent = 5, Natural max_coefficient = 8) {
  Digits d(max_exponent + 1, 0);
  for (auto& c : d) c = rng.chance(1, 2) ? rng.below(max_coefficient + 1) : 0;
  return from_digits(d);
}

// Transfinite lists.

// Small NElems whose values collide often, so that canonicalization and
// absorption paths are exercised.
inline NElem random_nelem(Rng& rng, Natural values = 4) {
  Word w(rng.below(3));
  const Natural start = rng.below(values);
  for (auto& x : w) x = rng.below(values);
  if (!w.empty() && start > 0 && rng.chance(1, 3)) w.back() = start - 1;
  return NElem(w, start);
}

inline Word random_word(Rng& rng, Natural max_len = 3, Natural values = 4) {
  Word w(rng.below(max_len + 1));
  for (auto& x : w) x = rng.below(values);
  return w;
}

// Lists of the implemented fragment built from possibly non-canonical parts:
// repeated cycles, letters equal to the following cycle's last letter, words
// that merge into NElem prefixes.
inline TransfiniteList random_fragment(Rng& rng, Natural max_blocks = 3) {
  std::vector<Block> blocks(rng.below(max_blocks + 1));
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (rng.chance(1, 2)) {
      blocks[i] = random_nelem(rng);
    } else {
      std::vector<NElem> letters(1 + rng.below(2));
      for (auto& l : letters) l = random_nelem(rng);
      if (rng.chance(1, 4)) letters.insert(letters.end(), letters.begin(), letters.end());
      if (i > 0 && rng.chance(1, 3) && std::holds_alternative<NElem>(blocks[i - 1]))
        blocks[i - 1] = letters.back();
      blocks[i] = Cycle{letters};
    }
  }
  return TransfiniteList::from_parts(std::move(blocks), random_word(rng));
}

// Positions at which two lists are compared: every block boundary and the
// offsets 0..P inside each block, P = longest prefix + product of cycle
// lengths, for both structures.
inline std::vector<Ordinal> probe_positions(const TransfiniteList& a, const TransfiniteList& b) {
  Natural longest = 0;
  Natural product = 1;
  for (const auto* l : {&a, &b}) {
    longest = std::max<Natural>(longest, l->tail().size());
    for (const auto& block : l->blocks()) {
      if (const auto* n = std::get_if<NElem>(&block)) {
        longest = std::max<Natural>(longest, n->prefix().size());
      } else {
        const auto& c = std::get<Cycle>(block);
        product *= c.letters.size();
        for (const auto& n : c.letters)
          longest = std::max<Natural>(longest, n.prefix().size());
      }
    }
  }
  const Natural p = longest + product;
  std::vector<Ordinal> out;
  for (const auto* l : {&a, &b}) {
    Ordinal at;
    for (const auto& block : l->blocks()) {
      const bool cycle = std::holds_alternative<Cycle>(block);
      for (Natural j = 0; j <= (cycle ? p : 0); ++j)
        for (Natural i = 0; i <= p; ++i)
          out.push_back(at + Ordinal::omega() * Ordinal(j) + Ordinal(i));
      at = at + (cycle ? Ordinal::omega_power(2) : Ordinal::omega());
    }
    for (Natural i = 0; i <= l->tail().size(); ++i) out.push_back(at + Ordinal(i));
  }
  return out;
}

// True when some probe distinguishes a and b, or their lengths differ.
inline bool probes_distinguish(const TransfiniteList& a, const TransfiniteList& b) {
  if (a.length() != b.length()) return true;
  for (const auto& p : probe_positions(a, b)) {
    if (!(p < a.length())) continue;
    if (a.at(p) != b.at(p)) return true;
  }
  return false;
}

// Logic.

// Terms in the single list variable X plus element variables x, y, built
// from the model's signature; list constants come from `pool`.
class TermGenerator {
 public:
  TermGenerator(Rng& rng, bool append, std::vector<TransfiniteList> pool,
                std::vector<std::string> list_vars = {"X"})
      : rng_(rng), append_(append), pool_(std::move(pool)), list_vars_(std::move(list_vars)) {}

  Term element() {
    switch (rng_.below(3)) {
      case 0:
        return Term::variable("x");
      case 1:
        return Term::variable("y");
      default:
        return Term::elem_const(rng_.below(10));
    }
  }

  Term list(unsigned depth) {
    const std::uint64_t roll = rng_.below(depth == 0 ? 4 : (append_ ? 9 : 7));
    if (roll < 2) return Term::variable(list_vars_[rng_.below(list_vars_.size())]);
    if (roll < 3) return Term::nil();
    if (roll < 4) return pool_.empty() ? Term::nil()
                                       : Term::list_const(pool_[rng_.below(pool_.size())]);
    if (roll < 7) return Term::cons(element(), list(depth - 1));
    return Term::append(list(depth - 1), list(depth - 1));
  }

 private:
  Rng& rng_;
  bool append_;
  std::vector<TransfiniteList> pool_;
  std::vector<std::string> list_vars_;
};

// Formulas of depth <= `depth` over the full signature, with quantifiers.
class FormulaGenerator {
 public:
  FormulaGenerator(Rng& rng, std::vector<TransfiniteList> pool)
      : rng_(rng), terms_(rng, true, std::move(pool), {"X", "Y"}) {}

  Formula formula(unsigned depth) {
    const std::uint64_t roll = rng_.below(depth == 0 ? 3 : 10);
    switch (roll) {
      case 0:
        return Formula::predicate(terms_.list(2));
      case 1:
        return Formula::equals(terms_.list(2), terms_.list(2));
      case 2:
        return rng_.chance(1, 2) ? Formula::equals(terms_.element(), terms_.element())
                                 : (rng_.chance(1, 2) ? Formula::truth() : Formula::falsity());
      case 3:
        return Formula::negation(formula(depth - 1));
      case 4:
        return Formula::conjunction(formula(depth - 1), formula(depth - 1));
      case 5:
        return Formula::disjunction(formula(depth - 1), formula(depth - 1));
      case 6:
        return Formula::implication(formula(depth - 1), formula(depth - 1));
      case 7:
        return Formula::forall(rng_.chance(1, 2) ? "X" : "x", formula(depth - 1));
      case 8:
        return Formula::exists(rng_.chance(1, 2) ? "Y" : "y", formula(depth - 1));
      default:
        return Formula::not_equals(terms_.list(1), terms_.list(1));
    }
  }

 private:
  Rng& rng_;
  TermGenerator terms_;
};

}  // namespace listind::testing

#endif  // LISTIND_TESTS_SUPPORT_HPP_
