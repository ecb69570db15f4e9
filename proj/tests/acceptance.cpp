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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 when all
// pass.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "listind/induction.hpp"
#include "support.hpp"

namespace listind {
namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

Outcome verdict(std::uint64_t violations, std::uint64_t checked, const std::string& what) {
  return {violations == 0, std::to_string(violations) + " violations in " +
                               std::to_string(checked) + " " + what};
}

TransfiniteList nk(Natural k) { return TransfiniteList::letter(NElem::tail_from(k)); }

Outcome ordinal_laws() {
  Rng rng(1);
  std::uint64_t bad = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const Ordinal a = testing::random_ordinal(rng), b = testing::random_ordinal(rng),
                  c = testing::random_ordinal(rng);
    bad += !((a + b) + c == a + (b + c));
    bad += !((a * b) * c == a * (b * c));
    bad += !(subtract_left(a + b, a) == b);
    if (b <= a) bad += !(b + subtract_left(a, b) == a);
    if (!b.is_zero()) {
      const DivMod d = divmod(a, b);
      bad += !(b * d.quotient + d.remainder == a && d.remainder < b);
    }
    bad += (a + b == a + c) != (b == c);
    bad += !(a + b == testing::from_digits(testing::digits_add(testing::digits_of(a),
                                                               testing::digits_of(b))));
  }
  return verdict(bad, n, "ordinal triples");
}

Outcome sequence_laws() {
  Rng rng(2);
  std::uint64_t bad = 0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const auto a = testing::random_fragment(rng), b = testing::random_fragment(rng),
               c = testing::random_fragment(rng);
    const auto ab = concat(a, b);
    bad += !(concat(ab, c) == concat(a, concat(b, c)));
    bad += (ab == concat(a, c)) != (b == c);
    bad += !(ab.length() == a.length() + b.length());
    bad += !(ab.suffix(a.length()) == b);
  }
  return verdict(bad, n, "fragment triples");
}

Outcome axiom_suites() {
  std::uint64_t bad = 0, suites = 0;
  std::string failed;
  for (const char* selector : {"m1:1", "m1:2", "m1:3", "m1:5", "m2"}) {
    const auto model = make_model(selector);
    const std::vector<std::string> axioms =
        model->signature().has_append
            ? std::vector<std::string>{"L0.1", "L0.2", "L1.1", "L1.2", "CA"}
            : std::vector<std::string>{"L0.1", "L0.2"};
    for (const auto& r : check_axioms(*model, axioms, 3, 10000)) {
      ++suites;
      if (!r.passed || r.samples != 10000) {
        ++bad;
        failed += std::string(" ") + selector + "/" + r.name;
      }
    }
  }
  return {bad == 0, std::to_string(suites) + " axiom suites of 10000 samples, " +
                        std::to_string(bad) + " failed" + failed};
}

Outcome big_step_separation() {
  std::uint64_t bad = 0;
  std::string notes;
  for (Natural m = 2; m <= 6; ++m) {
    const Certificate c = replicate_big_step_failure(m, m, 10000);
    bool witness = false, step = false, conclusion = false, sampled = false;
    for (const auto& w : c.witnesses) witness |= w.first == "X" && w.second == "N(0)";
    for (const auto& k : c.checks) {
      step |= k.name == "step premise" && k.exact && k.passed;
      conclusion |= k.name == "conclusion witness" && k.exact && k.passed;
      sampled |= k.name == "sampled premises" && k.passed;
    }
    if (!(c.valid() && witness && step && conclusion && sampled && c.samples == 10000)) {
      ++bad;
      notes += " certificate m=" + std::to_string(m);
    }
    const M1 model(m);
    for (Natural j = 1; j < m; ++j) {
      CheckOptions options;
      options.seed = m * 10 + j;
      if (check_instance(model, build_big_step(parse_formula("A(X)"), "X", j), options)
              .instance_falsified) {
        ++bad;
        notes += " I^" + std::to_string(j) + " in m1:" + std::to_string(m);
      }
    }
  }
  return {bad == 0, "certificates m=2..6 with 10000 samples, I^j for j<m clean; " +
                        std::to_string(bad) + " failures" + notes};
}

Outcome right_cancellation() {
  const auto start = std::chrono::steady_clock::now();
  const Certificate a = replicate_right_cancellation_failure(0, 1000);
  const Certificate b = replicate_right_decomposition_failure();
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const TransfiniteList cyc = TransfiniteList::omega_power({NElem::tail_from(0)});
  const bool exact = concat(nk(0), cyc) == cyc && !(nk(0) == TransfiniteList()) &&
                     !nk(0).last_decomposition();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f s", seconds);
  return {a.valid() && b.valid() && exact && seconds < 1.0,
          std::string("right-cancellation ") + (a.valid() ? "valid" : "INVALID") +
              ", right-decomposition " + (b.valid() ? "valid" : "INVALID") + ", " + buf};
}

Outcome m2_open_induction() {
  const M2 m2;
  Rng rng(6);
  std::uint64_t bad = 0, checks = 0;
  std::string first;
  for (int i = 0; i < 500; ++i) {
    const Formula phi = random_open_formula(m2, rng);
    for (Natural m = 1; m <= 4; ++m) {
      CheckOptions options;
      options.seed = i * 4 + m;
      options.exhaustive_cap = 20000;
      ++checks;
      if (check_instance(m2, build_big_step(phi, "X", m), options).instance_falsified) {
        if (!bad) first = " first: " + to_string(phi) + " m=" + std::to_string(m);
        ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(bad) + " falsified instances in " + std::to_string(checks) +
                        " checks" + first};
}

Outcome stabilization_bounds() {
  Rng rng(7);
  std::uint64_t bad = 0;
  const int per_kind = 1000;

  // A-atoms and M1 equations.
  for (int i = 0; i < per_kind; ++i) {
    const Natural m = 1 + rng.below(5);
    const M1 model(m);
    Sampler sampler(model, 1000 + i);
    std::vector<TransfiniteList> pool;
    for (int j = 0; j < 4; ++j) pool.push_back(sampler.list());
    testing::TermGenerator gen(rng, false, pool);
    const Assignment params = {{"x", sampler.element()}, {"y", sampler.element()}};

    const Term t = gen.list(3);
    const auto ka = a_atom_bound(m, t, params);
    const Formula e = Formula::equals(gen.list(2), gen.list(2));
    const auto ke = equation_bound_m1(m, e, params);
    for (Natural k = 0; k <= 50; ++k) {
      Assignment sigma = params;
      sigma["X"] = nk(ka.bound + k);
      const bool a = eval_formula(model, Formula::predicate(t), sigma);
      if (ka.constant) {
        bad += a != *ka.constant;
      } else if ((ka.bound + k) % m != 0) {
        bad += !a;
      }
      if (ke) {
        sigma["X"] = nk(ke->bound + k);
        bad += eval_formula(model, e, sigma);
        Word w(ke->bound + k);
        for (auto& v : w) v = rng.below(8);
        sigma["X"] = TransfiniteList::word(w);
        bad += eval_formula(model, e, sigma);
      } else {
        sigma["X"] = sampler.list();
        bad += !eval_formula(model, e, sigma);
      }
    }
  }

  // M2 equations and formula synchronization.
  const M2 m2;
  for (int i = 0; i < per_kind; ++i) {
    Sampler sampler(m2, 5000 + i);
    std::vector<TransfiniteList> pool;
    for (int j = 0; j < 4; ++j) pool.push_back(sampler.list());
    testing::TermGenerator gen(rng, true, pool);
    const Assignment params = {{"x", sampler.element()}, {"y", sampler.element()}};
    const Formula e = Formula::equals(gen.list(2), gen.list(2));
    const auto ke = equation_bound_m2(e, params);

    const Formula phi = random_open_formula(m2, rng);
    TransfiniteList lambda = sampler.list();
    if (lambda.blocks().empty()) lambda = concat(lambda, nk(rng.below(5)));
    const auto ks = formula_sync_bound(phi, lambda);

    for (Natural k = 0; k <= 50; ++k) {
      Assignment sigma = params;
      if (ke) {
        sigma["X"] = concat(TransfiniteList::word({ke->bound + k}), sampler.list());
        bad += eval_formula(m2, e, sigma);
      } else {
        sigma["X"] = sampler.list();
        bad += !eval_formula(m2, e, sigma);
      }
      const Natural n = ks.bound + k;
      bad += eval_formula(m2, phi, {{"X", lambda.suffix(n)}}) !=
             eval_formula(m2, phi, {{"X", TransfiniteList::word({n})}});
    }
  }
  return verdict(bad, 4 * per_kind, "bounds (4 kinds x 1000, window of 51)");
}

Outcome term_decomposition() {
  const M2 m2;
  Sampler sampler(m2, 8);
  std::vector<TransfiniteList> pool;
  for (int i = 0; i < 8; ++i) pool.push_back(sampler.list());
  Rng rng(8);
  testing::TermGenerator gen(rng, true, pool);
  std::uint64_t bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const Term t = gen.list(3);
    for (int j = 0; j < 50; ++j) {
      const Assignment params = {{"x", sampler.element()}, {"y", sampler.element()}};
      const auto segs = decompose_term(t, params);
      Assignment sigma = params;
      const TransfiniteList x = sampler.list();
      sigma["X"] = x;
      bad += !(std::get<TransfiniteList>(eval_term(m2, t, sigma)) == recompose(segs, x));
    }
  }
  return verdict(bad, 50000, "term/assignment pairs");
}

Outcome acyclicity() {
  std::uint64_t bad = 0;
  std::uint64_t evaluated = 0;
  std::string notes;
  for (const char* selector : {"m1:2", "m2"}) {
    const auto model = make_model(selector);
    for (int n = 1; n <= 5; ++n) {
      std::string prefix = "forall X.", chain = "X";
      for (int i = n; i >= 1; --i) chain = "cons(x" + std::to_string(i) + ", " + chain + ")";
      for (int i = 1; i <= n; ++i) prefix += " forall x" + std::to_string(i) + ".";
      CheckOptions options;
      options.bound = 6;
      options.exhaustive_cap = std::uint64_t{1} << 40;
      const auto v = check_universal(*model, parse_formula(prefix + " X != " + chain), options);
      evaluated += v.evaluated;
      if (v.falsified || !v.exhaustive) {
        ++bad;
        notes += std::string(" ") + selector + " n=" + std::to_string(n) +
                 (v.falsified ? " falsified" : " not exhaustive");
      }
    }
  }
  return {bad == 0, "n=1..5 in m1:2 and m2 at B=6, " + std::to_string(evaluated) +
                        " assignments, " + std::to_string(bad) + " failures" + notes};
}

Outcome round_trip_and_golden() {
  Rng rng(10);
  const std::vector<TransfiniteList> pool = {parse_list("N(0)"), parse_list("[3]~N(1)"),
                                             parse_list("rep(N(0),N(2)).[4]"), parse_list("[]")};
  testing::FormulaGenerator gen(rng, pool);
  std::uint64_t bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const Formula f = gen.formula(4);
    bad += !(parse_formula(to_string(f)) == f);
  }
  std::uint64_t golden_bad = 0;
  for (Natural m = 1; m <= 3; ++m) {
    std::ifstream in(std::filesystem::path(LISTIND_GOLDEN_DIR) /
                         ("big_step_m" + std::to_string(m) + ".smt2"),
                     std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    golden_bad += !in || ss.str() != benchmark_big_step(m, BenchmarkFormat::kSmtLib2);
  }
  return {bad == 0 && golden_bad == 0,
          std::to_string(bad) + " round-trip failures in 1000 formulas, " +
              std::to_string(golden_bad) + " golden mismatches for m=1..3"};
}

struct Criterion {
  const char* title;
  double limit_seconds;  // 0 for none
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace listind

int main() {
  using namespace listind;
  const std::vector<Criterion> criteria = {
      {"ordinal laws", 30, ordinal_laws},
      {"sequence laws", 120, sequence_laws},
      {"axiom suites", 0, axiom_suites},
      {"big-step separation", 0, big_step_separation},
      {"right cancellation and decomposition", 1, right_cancellation},
      {"M2 open big-step induction", 0, m2_open_induction},
      {"stabilization bounds", 0, stabilization_bounds},
      {"term decomposition", 0, term_decomposition},
      {"acyclicity", 0, acyclicity},
      {"round-trip and golden benchmarks", 0, round_trip_and_golden},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.passed = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit)";
    }
    failures += !o.passed;
    std::printf("criterion %2zu %s  %s: %s [%.2f s]\n", i + 1, o.passed ? "PASS" : "FAIL", c.title,
                o.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
