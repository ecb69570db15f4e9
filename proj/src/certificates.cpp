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

#include <algorithm>

#include "listind/induction.hpp"

namespace listind {

bool Certificate::valid() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

namespace {

bool is_cons_chain_over_nil(const Term& t) {
  const Term* cur = &t;
  while (cur->kind() == Term::Kind::kCons) cur = &cur->right();
  return cur->kind() == Term::Kind::kNil;
}

TransfiniteList nk(Natural k) { return TransfiniteList::letter(NElem::tail_from(k)); }

// Domain elements of M1 whose first letters tend to trigger absorption under
// cons: N_k, short-prefixed NElems and words.
TransfiniteList structured_list(Rng& rng, Natural m) {
  const Natural k = rng.below(4 * m + 8);
  switch (rng.below(3)) {
    case 0:
      return nk(k);
    case 1: {
      Word w;
      for (Natural i = 0, n = 1 + rng.below(3); i < n; ++i) w.push_back(rng.below(k + 3));
      return TransfiniteList::letter(NElem(w, k));
    }
    default: {
      Word w;
      for (Natural i = 0, n = rng.below(5); i < n; ++i) w.push_back(rng.below(k + 3));
      return TransfiniteList::word(w);
    }
  }
}

}  // namespace

Certificate replicate_big_step_failure(Natural m, std::uint64_t seed, std::uint64_t samples) {
  if (m < 2) throw std::invalid_argument("the big-step certificate needs m >= 2");
  const M1 model(m);
  const Formula phi = Formula::predicate(Term::variable("X"));
  const InductionInstance inst = build_big_step(phi, "X", m);

  Certificate cert;
  cert.name = "big-step";
  cert.model = model.name();
  cert.m = m;
  cert.seed = seed;
  cert.samples = samples;
  cert.witnesses = {{"X", nk(0).to_string()}};

  // Base premises: each argument of A is cons(x1, ..., cons(x_{i-1}, nil)).
  {
    CertificateCheck c{"base premises", "", true, true, ""};
    for (Natural i = 0; i < m; ++i) {
      const Formula body = universal_body(inst.premises[i]);
      c.statement += (i ? "; " : "") + to_string(inst.premises[i]);
      if (body.kind() != Formula::Kind::kPredicate || !is_cons_chain_over_nil(body.arg()))
        c.passed = false;
    }
    c.passed = c.passed && m1_holds_A(m, TransfiniteList::word({})) &&
               m1_holds_A(m, TransfiniteList::word(Word(m - 1, 0)));
    c.detail = c.passed ? "every base argument evaluates to a word of length < " +
                              std::to_string(m) + "; A holds on all words"
                        : "a base argument is not a cons chain over nil";
    cert.checks.push_back(c);
  }

  // Step premise, by cases on X.
  {
    CertificateCheck c{"step premise", to_string(inst.premises.back()), true, true, ""};
    // X a word: cons keeps it a word. X = w ^ N_k with w canonical and
    // nonempty: the prepended prefix still ends in w's last letter. X = N_k:
    // the result is N_{k-m} exactly when x = (k-m, ..., k-1), and m | k-m iff
    // m | k, which the premise A(N_k) excludes.
    bool identities = true;
    for (Natural k = 0; k <= 64 && identities; ++k) {
      Word run;
      for (Natural i = 0; i < m; ++i) run.push_back(k + i);
      TransfiniteList prepended = nk(k + m);
      for (Natural i = m; i-- > 0;) prepended = cons(run[i], prepended);
      identities = prepended == nk(k) &&
                   (m1_holds_A(m, nk(k + m)) == m1_holds_A(m, nk(k)));
    }
    bool prefix_kept = true;
    Rng rng(seed);
    for (int i = 0; i < 1000 && prefix_kept; ++i) {
      const Natural k = rng.below(20);
      Word w{rng.below(20)};
      if (w.back() + 1 == k) w.back() = k;
      TransfiniteList l = TransfiniteList::letter(NElem(w, k));
      TransfiniteList r = cons(rng.below(25), l);
      prefix_kept = !r.is_word() && r.is_nelem() &&
                    !std::get<NElem>(r.blocks().front()).prefix().empty();
    }
    c.passed = identities && prefix_kept;
    c.detail = "cons of (k, ..., k+" + std::to_string(m - 1) + ") onto N_(k+" +
               std::to_string(m) + ") equals N_k for k <= 64 with matching A; " +
               "nonempty canonical prefixes survive cons on 1000 draws";
    cert.checks.push_back(c);
  }

  // Conclusion witness.
  {
    CertificateCheck c{"conclusion witness", "A(N(0)) is false", true, false, ""};
    c.passed = !m1_holds_A(m, nk(0)) && !eval_formula(model, phi, {{"X", nk(0)}});
    c.detail = "prefix empty and " + std::to_string(m) + " divides 0";
    cert.checks.push_back(c);
  }

  // Sampled confirmations of the premises.
  {
    CertificateCheck c{"sampled premises", "", false, true, ""};
    Sampler sampler(model, seed + 1, 4 * m + 8, m + 2);
    Rng& rng = sampler.rng();
    const Formula step_body = universal_body(inst.premises.back());
    const auto& xs = inst.step_elements.front();
    std::uint64_t steps = 0;
    std::uint64_t bases = 0;
    for (std::uint64_t s = 0; s < samples && c.passed; ++s) {
      Assignment sigma;
      if (s % 4 == 3) {
        const Natural i = rng.below(m);
        for (Natural j = 0; j < i; ++j) sigma[xs[j]] = sampler.element();
        c.passed = eval_formula(model, universal_body(inst.premises[i]), sigma);
        ++bases;
        continue;
      }
      TransfiniteList l = s % 2 ? structured_list(rng, m) : sampler.list();
      sigma["X"] = l;
      const auto k = l.is_nelem() ? std::get<NElem>(l.blocks().front()).start() : 0;
      const bool aligned = s % 4 == 2 && l.is_nelem() && k >= m;
      for (Natural j = 0; j < m; ++j)
        sigma[xs[j]] = aligned ? k - m + j : (rng.chance(1, 2) ? k + j : sampler.element());
      c.passed = eval_formula(model, step_body, sigma);
      if (!c.passed) c.detail = "step fails at " + to_string(sigma);
      ++steps;
    }
    c.statement = std::to_string(samples) + " premise instances";
    if (c.passed)
      c.detail = std::to_string(steps) + " step and " + std::to_string(bases) +
                 " base instances hold";
    cert.checks.push_back(c);
  }
  return cert;
}

Certificate replicate_right_cancellation_failure(std::uint64_t seed, std::uint64_t samples) {
  const M2 model;
  const TransfiniteList y = nk(0);
  const TransfiniteList x = TransfiniteList::omega_power({NElem::tail_from(0)});
  Certificate cert;
  cert.name = "right-cancellation";
  cert.model = model.name();
  cert.seed = seed;
  cert.samples = samples;
  cert.witnesses = {{"X", x.to_string()}, {"Y", y.to_string()}};

  cert.checks.push_back({"absorption", "N(0) . rep(N(0)) = rep(N(0))", true,
                         concat(y, x) == x, "canonical forms coincide"});
  cert.checks.push_back({"nonempty", "N(0) != []", true, !y.is_empty(),
                         "length " + y.length().to_string()});
  {
    const Formula f = parse_formula("Y ++ X = X & Y != nil", Signature::with_append());
    const bool holds = eval_formula(model, f, {{"X", x}, {"Y", y}});
    cert.checks.push_back({"evaluation", to_string(f), true, holds,
                           holds ? "true in m2, so Y ++ X = X -> Y = nil fails"
                                 : "evaluated to false"});
  }
  {
    // Finite prefixes do not absorb: w ^ rep(N(0)) and rep(N(0)) differ at
    // some position <= |w|.
    CertificateCheck c{"finite prefixes", "w ++ rep(N(0)) != rep(N(0)) for words w != []",
                       false, true, ""};
    Sampler sampler(model, seed);
    for (std::uint64_t s = 0; s < samples && c.passed; ++s) {
      Word w = sampler.word();
      if (w.empty()) w.push_back(sampler.element());
      const TransfiniteList joined = concat(TransfiniteList::word(w), x);
      bool differs = false;
      for (Natural i = 0; i <= w.size() && !differs; ++i)
        differs = joined.at(Ordinal(i)) != x.at(Ordinal(i));
      c.passed = differs && !(joined == x);
      if (!c.passed) c.detail = "no difference for " + TransfiniteList::word(w).to_string();
    }
    if (c.passed) c.detail = std::to_string(samples) + " words checked";
    cert.checks.push_back(c);
  }
  return cert;
}

Certificate replicate_right_decomposition_failure() {
  const TransfiniteList n0 = nk(0);
  Certificate cert;
  cert.name = "right-decomposition";
  cert.model = M2().name();
  cert.witnesses = {{"X", n0.to_string()}};
  cert.checks.push_back({"nonempty", "N(0) != []", true, !n0.is_empty(), ""});
  cert.checks.push_back({"limit length", "|N(0)| = w", true, n0.length() == Ordinal::omega(),
                         "length " + n0.length().to_string()});
  cert.checks.push_back({"no last element", "no Y, y with N(0) = Y ++ [y]", true,
                         !n0.last_decomposition().has_value(),
                         "a successor length is needed for a last element"});
  {
    const auto w = TransfiniteList::word({1, 2}).last_decomposition();
    const bool ok = w && w->first == TransfiniteList::word({1}) && w->second == 2;
    cert.checks.push_back({"control word", "[1,2] = [1] ++ [2]", true, ok, ""});
  }
  {
    const TransfiniteList l = parse_list("rep(N(0)).[5]");
    const auto d = l.last_decomposition();
    const bool ok = d && d->first == TransfiniteList::omega_power({NElem::tail_from(0)}) &&
                    d->second == 5;
    cert.checks.push_back({"control limit", "rep(N(0)).[5] = rep(N(0)) ++ [5]", true, ok, ""});
  }
  return cert;
}

}  // namespace listind
