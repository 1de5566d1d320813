// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "dsearch/counting.hpp"
#include "dsearch/planted.hpp"

using namespace dsearch;

namespace {

CnfFormula formula(int n, const std::vector<std::vector<int>>& clauses) {
  std::vector<Clause> cs;
  for (const auto& c : clauses) {
    std::vector<Literal> lits;
    for (int code : c) lits.push_back(Literal::from_dimacs(code));
    cs.push_back(Clause(std::move(lits)));
  }
  return CnfFormula(n, std::move(cs));
}

// independent enumeration oracle, straight off evaluate()
BigInt enumerate_count(const CnfFormula& f) {
  BigInt c = 0;
  for (uint64_t m = 0; m < (uint64_t(1) << f.variable_count()); ++m)
    c += f.evaluate(Assignment::from_mask(f.variable_count(), m)) ? 1 : 0;
  return c;
}

}  // namespace

TEST_SUITE_BEGIN("counting");

TEST_CASE("exact_count examples") {
  CHECK(exact_count(CnfFormula::tautology(3)) == 8);
  CHECK(exact_count(formula(2, {{1}, {-1}})) == 0);

  const CnfFormula f = formula(4, {{1, 2}, {3, 4}});
  CHECK(enumerate_count(f) == 9);
  CHECK(exact_count(f) == 9);
  CHECK(dpll_count(f) == 9);
}

TEST_CASE("brute force limit") {
  // 30 occurring variables exceed the default limit; dpll still answers
  std::vector<std::vector<int>> clauses;
  for (int v = 1; v <= 30; ++v) clauses.push_back({v});
  const CnfFormula f = formula(30, clauses);
  CHECK_THROWS_AS(brute_force_count(f), LimitExceeded);
  CHECK(dpll_count(f) == 1);
  CHECK(exact_count(f) == 1);  // routes to dpll
}

TEST_CASE("count is over the full cube even for absent variables") {
  const CnfFormula f = formula(6, {{1}});
  CHECK(exact_count(f) == 32);
  CHECK(dpll_count(f) == 32);
}

TEST_CASE("brute force and dpll agree on random formulas") {
  for (uint64_t seed = 1; seed <= 300; ++seed) {
    const int n = 4 + static_cast<int>(seed % 13);  // 4..16
    const int m = std::max(1, n + static_cast<int>(seed % 9) - 2);
    const CnfFormula f = random_cnf(n, m, std::min(3, n), seed * 101);
    CHECK(brute_force_count(f) == dpll_count(f));
  }
}

TEST_CASE("approx_bias contract") {
  CostCounter cost;
  const ExactCounter counter;
  CHECK(counter.bias(CnfFormula::tautology(5), cost).value == 1);
  CHECK(approx_bias(CnfFormula::tautology(5), Rat(1, 10)).value == 1);

  const CnfFormula f = formula(2, {{1, 2}});
  CHECK(counter.bias(f, cost).value == Rat(3, 4));
  CHECK(approx_bias(f, Rat(0)).value == Rat(3, 4));
  // a vacuous contract still returns the exact bias
  CHECK(approx_bias(f, Rat(1)).value == Rat(3, 4));
  CHECK(approx_bias(f, Rat(1)).guaranteed_accuracy == Rat(1));
  CHECK_THROWS(approx_bias(f, Rat(-1)));

  // any delta: the exact value satisfies |value - E[F]| <= delta vacuously
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    const CnfFormula g = random_cnf(10, 12, 3, seed * 7);
    const Rat exact = exact_bias(g);
    for (const Rat& delta : {Rat(0), Rat(1, 100), Rat(1, 10)}) {
      const AdversarialCounter adv(delta, Skew::Jitter, seed);
      Rat err = adv.bias(g, cost).value - exact;
      if (err < 0) err = -err;
      CHECK(err <= delta);
    }
  }
}

TEST_CASE("adversarial counter") {
  CostCounter cost;
  const CnfFormula f = formula(2, {{1}});  // bias 1/2

  CHECK(AdversarialCounter(Rat(0), Skew::Jitter, 9).bias(f, cost).value == Rat(1, 2));
  CHECK(AdversarialCounter(Rat(1, 10), Skew::Down, 9).bias(f, cost).value == Rat(2, 5));
  CHECK(AdversarialCounter(Rat(1, 10), Skew::Up, 9).bias(f, cost).value == Rat(3, 5));

  // clamped to [0,1]
  CHECK(AdversarialCounter(Rat(3, 4), Skew::Down, 9).bias(formula(2, {{1}, {2}}), cost).value ==
        0);
  CHECK(AdversarialCounter(Rat(3, 4), Skew::Up, 9).bias(CnfFormula::tautology(2), cost).value ==
        1);

  // deterministic: identical inputs, identical outputs
  const AdversarialCounter adv(Rat(1, 20), Skew::Jitter, 1234);
  const CnfFormula g = random_cnf(8, 10, 3, 5);
  CHECK(adv.bias(g, cost).value == adv.bias(g, cost).value);
}

TEST_CASE("restriction additivity over every variable") {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    const int n = 6 + static_cast<int>(seed % 7);  // 6..12
    const CnfFormula f = random_cnf(n, n, 3, seed * 3571);
    const Rat whole = exact_bias(f);
    for (int v = 1; v <= n; ++v) {
      Restriction r0 = Restriction::all_stars(n), r1 = Restriction::all_stars(n);
      r0.fix(v, false);
      r1.fix(v, true);
      CHECK(whole == (exact_bias(f.restricted(r0)) + exact_bias(f.restricted(r1))) / 2);
    }
  }
}

TEST_CASE("cost counters accumulate and merge") {
  CostCounter a, b;
  const ExactCounter counter;
  counter.bias(formula(3, {{1, 2}}), a);
  CHECK(a.counter_calls == 1);
  CHECK(a.assignments_enumerated > 0);
  b.merge(a);
  b.merge(a);
  CHECK(b.counter_calls == 2);
}

TEST_SUITE_END();
