// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <sstream>

#include "dsearch/cnf.hpp"
#include "dsearch/counting.hpp"
#include "dsearch/dimacs.hpp"
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

uint64_t count_sat(const CnfFormula& f) {
  uint64_t c = 0;
  for (uint64_t m = 0; m < (uint64_t(1) << f.variable_count()); ++m) c += f.evaluate_mask(m);
  return c;
}

}  // namespace

TEST_SUITE_BEGIN("cnf_core");

TEST_CASE("clause normalization merges duplicates and flags tautologies") {
  const Clause merged({Literal(2, true), Literal(1, false), Literal(2, true)});
  CHECK(merged.width() == 2);
  CHECK(merged.literals()[0].var() == 1);
  CHECK_FALSE(merged.is_tautology());

  const Clause taut({Literal(3, true), Literal(1, true), Literal(3, false)});
  CHECK(taut.is_tautology());

  const Clause empty;
  CHECK(empty.is_empty());
}

TEST_CASE("evaluate") {
  const CnfFormula none = CnfFormula::tautology(3);
  CHECK(none.evaluate(Assignment::from_string("000")));
  CHECK(none.evaluate(Assignment::from_string("111")));

  const CnfFormula contra = formula(2, {{1}, {-1}});
  CHECK_FALSE(contra.evaluate(Assignment::from_string("10")));

  const CnfFormula f = formula(3, {{1, 2}, {-1, 3}});
  CHECK(f.evaluate(Assignment::from_string("101")));

  CHECK_THROWS(f.evaluate(Assignment::from_string("10")));
}

TEST_CASE("restrict examples") {
  const CnfFormula f = formula(3, {{1, 2}, {-1, 3}});

  CHECK(f.restricted(Restriction::all_stars(3)) == f);

  const CnfFormula single = formula(2, {{1, 2}});
  Restriction fix1 = Restriction::all_stars(2);
  fix1.fix(1, true);
  CHECK(single.restricted(fix1).clause_count() == 0);

  Restriction fix0 = Restriction::all_stars(3);
  fix0.fix(1, false);
  const CnfFormula g = f.restricted(fix0);
  CHECK(g == formula(3, {{2}}));

  // semantics against every completion
  for (uint64_t m = 0; m < 8; ++m) {
    const Assignment x = Assignment::from_mask(3, m);
    CHECK(g.evaluate(x) == f.evaluate(overlay(fix0, x)));
  }

  CHECK_THROWS(f.restricted(Restriction::all_stars(2)));
}

TEST_CASE("restrict collapses to canonical forms") {
  const CnfFormula f = formula(2, {{1}, {2}});
  Restriction kill = Restriction::all_stars(2);
  kill.fix(1, false);
  const CnfFormula g = f.restricted(kill);
  CHECK(g.has_empty_clause());
  CHECK(g.clause_count() == 1);  // canonical unsatisfiable form

  const CnfFormula taut = formula(2, {{1, -1}});
  CHECK(taut.restricted(Restriction::all_stars(2)).clause_count() == 0);
}

TEST_CASE("compose") {
  const Restriction pi = Restriction::from_string("01*1*");
  CHECK(compose(Restriction::all_stars(5), pi) == pi);

  const Restriction outer = Restriction::from_string("1*0*");
  const Restriction inner = Restriction::from_string("*1");
  CHECK(compose(outer, inner).to_string() == "1*01");

  CHECK_THROWS(compose(outer, Restriction::from_string("*")));

  // positional bookkeeping oracle on seeded cases
  for (uint64_t seed = 1; seed <= 200; ++seed) {
    const int n = 3 + static_cast<int>(seed % 8);
    std::string outer_s(n, '*');
    for (int i = 0; i < n; ++i) {
      const uint64_t h = mix64(seed * 64 + i);
      outer_s[i] = "01*"[h % 3];
    }
    const Restriction o = Restriction::from_string(outer_s);
    std::string inner_s(o.star_count(), '*');
    for (size_t i = 0; i < inner_s.size(); ++i) inner_s[i] = "01*"[mix64(seed * 131 + i) % 3];
    const Restriction in = Restriction::from_string(inner_s);

    std::string expect = outer_s;
    size_t j = 0;
    for (char& ch : expect)
      if (ch == '*') ch = inner_s[j++];
    CHECK(compose(o, in).to_string() == expect);
  }
}

TEST_CASE("composing restrictions that fix half the stars shrinks them geometrically") {
  const int n = 16;
  Restriction acc = Restriction::all_stars(n);
  int t = 0;
  while (!acc.star_free()) {
    ++t;
    const int s = acc.star_count();
    const int fix = (s + 1) / 2;  // at least p/2 = 1/2 of the remaining stars
    Restriction inner = Restriction::all_stars(s);
    for (int i = 1; i <= fix; ++i) inner.fix(i, true);
    acc = compose(acc, inner);
    // star count <= n*(1-p/2)^t with p = 1
    double bound = n;
    for (int i = 0; i < t; ++i) bound *= 0.5;
    CHECK(static_cast<double>(acc.star_count()) <= bound + 1e-9);
  }
  CHECK(acc.to_string() == std::string(n, '1'));
}

TEST_CASE("trim") {
  const CnfFormula narrow = formula(3, {{1, 2}});
  CHECK(narrow.trimmed(3) == narrow);

  const CnfFormula wide = formula(5, {{1, 2, 3, 4, 5}});
  const CnfFormula cut = wide.trimmed(3);
  CHECK(cut == formula(5, {{1, 2, 3}}));
  CHECK(count_sat(wide) == 31);
  CHECK(count_sat(cut) == 28);
  CHECK(count_sat(cut) >= count_sat(wide) - (uint64_t(1) << (5 - 3)));

  CHECK_THROWS(wide.trimmed(0));
}

TEST_CASE("trim at w = log2(2M/eps) loses at most eps/2 of the bias") {
  const Rat eps(1, 8);
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    const int n = 8 + static_cast<int>(seed % 5);
    const CnfFormula f = random_cnf(n, 6, std::min(7, n), seed * 31);
    // smallest w with 2^w >= 2M/eps
    int w = 1;
    while (rat_pow2(w) < Rat(2 * f.clause_count()) / eps) ++w;
    const CnfFormula g = f.trimmed(w);
    const Rat bias_f(BigInt(count_sat(f)), pow2(n));
    const Rat bias_g(BigInt(count_sat(g)), pow2(n));
    CHECK(bias_g >= bias_f - eps / 2);
    // trimmed satisfying set is a subset
    for (uint64_t m = 0; m < (uint64_t(1) << n); ++m)
      if (g.evaluate_mask(m)) CHECK(f.evaluate_mask(m));
  }
}

TEST_CASE("pad") {
  const CnfFormula big = formula(2, {{1}, {2}, {1, 2}});
  CHECK(big.padded() == big);

  const CnfFormula small = formula(3, {{1, 2, 3}});
  const CnfFormula padded = small.padded();
  CHECK(padded.clause_count() == 3);
  CHECK(count_sat(padded) == count_sat(small));
  const Rat bias_before(BigInt(count_sat(small)), pow2(3));
  const Rat bias_after(BigInt(count_sat(padded)), pow2(3));
  CHECK(bias_before == bias_after);
}

TEST_CASE("width") {
  CHECK(CnfFormula::tautology(4).width() == 0);
  CHECK(formula(3, {{1}, {2}}).width() == 1);
  CHECK(formula(5, {{1, 2}, {1, 2, 3, 4, 5}}).width() == 5);
}

TEST_CASE("restriction accessors and serialization") {
  const Restriction pi = Restriction::from_string("0*1*");
  CHECK(pi.size() == 4);
  CHECK(pi.star_count() == 2);
  CHECK(pi.fixed_count() == 2);
  CHECK(pi.star_positions() == std::vector<int>{2, 4});
  CHECK(pi.to_string() == "0*1*");
  CHECK_FALSE(pi.star_free());
  CHECK_THROWS(pi.to_assignment());
  CHECK(Restriction::from_string("011").to_assignment().to_string() == "011");
  CHECK_THROWS(Restriction::from_string("01x"));
}

TEST_CASE("dimacs parse and serialize") {
  const std::string text = "c a comment\np cnf 4 3\n1 -2 0\n3 4 0\n-1 0\n";
  const CnfFormula f = parse_dimacs_string(text);
  CHECK(f.variable_count() == 4);
  CHECK(f.clause_count() == 3);
  CHECK(parse_dimacs_string(to_dimacs_string(f)) == f);

  CHECK_THROWS_AS(parse_dimacs_string("p cnf x\n"), DimacsError);
  CHECK_THROWS_AS(parse_dimacs_string("1 2 0\n"), DimacsError);
  CHECK_THROWS_AS(parse_dimacs_string("p cnf 2 1\n1 3 0\n"), DimacsError);
  CHECK_THROWS_AS(parse_dimacs_string("p cnf 2 1\n1 2\n"), DimacsError);
  CHECK_THROWS_AS(parse_dimacs_string("p cnf 2 2\n1 0\n"), DimacsError);
  try {
    parse_dimacs_string("p cnf 2 1\n1 zebra 0\n");
    CHECK(false);
  } catch (const DimacsError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("tautological clauses survive the dimacs round trip") {
  const CnfFormula padded = formula(3, {{1, 2, 3}}).padded();
  const CnfFormula back = parse_dimacs_string(to_dimacs_string(padded));
  CHECK(back == padded);
  CHECK(back.clause_count() == 3);
}

TEST_SUITE_END();
