// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <sstream>

#include "dsearch/planted.hpp"
#include "dsearch/search.hpp"

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

StagewiseConfig practical_config(const CnfFormula& f, const Rat& eps,
                                 const Rat& delta_count = Rat(0)) {
  PracticalOverrides ov;
  ov.p_log2 = 1;
  ov.delta_count = delta_count;
  const CnfFormula padded = f.padded();
  StagewiseConfig config;
  config.params = compute_parameters(padded.clause_count(), padded.variable_count(), eps, 1.0,
                                     ParamMode::Practical, ov);
  return config;
}

std::string trace_csv(const SearchTrace& trace) {
  std::ostringstream out;
  trace.write_csv(out);
  return out.str();
}

}  // namespace

TEST_SUITE_BEGIN("search");

TEST_CASE("naive search on (x1|x2) with an exact counter") {
  const CnfFormula f = formula(2, {{1, 2}});
  const ExactCounter counter;
  const SearchTrace trace = search_naive(f, Rat(3, 4), counter);
  CHECK(trace.outcome == Outcome::Satisfied);
  REQUIRE(trace.assignment.has_value());
  CHECK(f.evaluate(*trace.assignment));
  CHECK(trace.cost.counter_calls == 4);  // exactly 2n
  // ledger: audited bias never below eps - 2*i*delta (delta = 0 here)
  for (size_t i = 0; i < trace.stages.size(); ++i) {
    REQUIRE(trace.stages[i].audited_bias.has_value());
    CHECK(*trace.stages[i].audited_bias >= Rat(3, 4));
  }
}

TEST_CASE("naive search under the adversarial counter at delta = eps/(4n)") {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    const PlantedInstance inst = generate_planted(10, 7, 3, Rat(1, 4), seed * 13);
    const Rat eps(1, 4);
    const Rat delta = eps / (4 * 10);
    const AdversarialCounter counter(delta, Skew::Jitter, seed);
    const SearchTrace trace = search_naive(inst.formula, eps, counter);
    CHECK(trace.outcome == Outcome::Satisfied);
    CHECK(inst.formula.evaluate(*trace.assignment));
    CHECK(trace.cost.counter_calls == 20);
    for (size_t i = 0; i < trace.stages.size(); ++i) {
      REQUIRE(trace.stages[i].audited_bias.has_value());
      CHECK(*trace.stages[i].audited_bias >= eps - Rat(2 * (i + 1)) * delta);
    }
  }
}

TEST_CASE("an over-budget adversarial counter can mislead, and the failure is detected") {
  const CnfFormula f = formula(2, {{1, 2}});  // bias 3/4
  const Rat eps(3, 4);
  int failures = 0;
  for (uint64_t seed = 0; seed < 200; ++seed) {
    const AdversarialCounter counter(eps, Skew::Jitter, seed);  // delta = eps, over budget
    const SearchTrace trace = search_naive(f, eps, counter);
    if (trace.outcome == Outcome::Satisfied) {
      CHECK(f.evaluate(*trace.assignment));  // success is always genuine
    } else {
      CHECK(trace.outcome == Outcome::PromiseViolation);
      CHECK_FALSE(trace.assignment.has_value());
      ++failures;
    }
  }
  CHECK(failures > 0);  // the budget really is load-bearing
}

TEST_CASE("stagewise search on a constant-1 formula") {
  const CnfFormula f = CnfFormula::tautology(6);
  const ExactCounter counter;
  const SearchTrace trace = search_stagewise(f, Rat(1, 2), practical_config(f, Rat(1, 2)), counter);
  CHECK(trace.outcome == Outcome::Satisfied);
  CHECK(f.evaluate(*trace.assignment));
  CHECK(BigInt(trace.stages.size()) <= trace.stage_budget);
  CHECK(trace.stages.back().prefix.star_free());
}

TEST_CASE("stagewise search satisfies planted instances and keeps its ledgers") {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    const int n = 8 + static_cast<int>(seed % 5);  // 8..12
    const PlantedInstance inst = generate_planted(n, (3 * n) / 4, 3, Rat(1, 4), seed * 7);
    const Rat eps(1, 4);
    const StagewiseConfig config = practical_config(inst.formula, eps);
    const ExactCounter counter;
    const SearchTrace trace = search_stagewise(inst.formula, eps, config, counter);
    REQUIRE(trace.outcome == Outcome::Satisfied);
    CHECK(inst.formula.evaluate(*trace.assignment));
    CHECK(BigInt(trace.stages.size()) <= trace.stage_budget);

    // free variables shrink geometrically: n_t after stage t <= n*(3/4)^t
    Rat bound(n);
    for (const StageRecord& rec : trace.stages) {
      bound = bound * 3 / 4;
      CHECK(Rat(rec.prefix.star_count()) <= bound);
    }
    // audited bias stays above eps - t*tau
    for (size_t t = 0; t < trace.stages.size(); ++t) {
      REQUIRE(trace.stages[t].audited_bias.has_value());
      CHECK(*trace.stages[t].audited_bias >= eps - Rat(t + 1) * config.params.tau);
    }
  }
}

TEST_CASE("stagewise traces are byte-identical across runs") {
  const PlantedInstance inst = generate_planted(10, 7, 3, Rat(1, 4), 99);
  const StagewiseConfig config = practical_config(inst.formula, Rat(1, 4));
  const ExactCounter counter;
  const SearchTrace a = search_stagewise(inst.formula, Rat(1, 4), config, counter);
  const SearchTrace b = search_stagewise(inst.formula, Rat(1, 4), config, counter);
  CHECK(trace_csv(a) == trace_csv(b));
  CHECK(a.summary_json() == b.summary_json());
}

TEST_CASE("stagewise search reports a promise violation on an unsatisfiable formula") {
  const CnfFormula f = formula(4, {{1}, {-1}});
  const ExactCounter counter;
  const SearchTrace trace = search_stagewise(f, Rat(1, 4), practical_config(f, Rat(1, 4)), counter);
  CHECK(trace.outcome == Outcome::PromiseViolation);
  CHECK_FALSE(trace.assignment.has_value());
}

TEST_CASE("stagewise candidate counts match the support arithmetic") {
  const PlantedInstance inst = generate_planted(8, 6, 3, Rat(1, 4), 5);
  const StagewiseConfig config = practical_config(inst.formula, Rat(1, 4));
  const ExactCounter counter;
  const SearchTrace trace = search_stagewise(inst.formula, Rat(1, 4), config, counter);
  // stage 1 at n=8, p=1/2 exhaustive stars, uniform fill: sum over |L| >= 2
  // of C(8,l) * 2^l distinct candidates
  uint64_t expect = 0;
  for (int l = 2; l <= 8; ++l) {
    uint64_t binom = 1;
    for (int i = 0; i < l; ++i) binom = binom * (8 - i) / (i + 1);
    expect += binom << l;
  }
  REQUIRE(!trace.stages.empty());
  CHECK(trace.stages[0].candidates == expect);
  CHECK(trace.stages[0].counter_calls == expect);
}

TEST_CASE("search on the trimmed formula yields assignments valid for the original") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const CnfFormula f = random_cnf(10, 5, 7, seed * 3);  // wide clauses, high bias
    const CnfFormula padded = f.padded();
    const Rat eps(1, 2);  // 2M/eps = 40, so w = 6 and the width-7 clauses shrink
    REQUIRE(exact_bias(f) >= eps);
    int w = 1;
    while (rat_pow2(w) < Rat(2 * padded.clause_count()) / eps) ++w;
    const CnfFormula trimmed = padded.trimmed(w);
    const ExactCounter counter;
    const SearchTrace trace = search_naive(trimmed, eps / 2, counter);
    REQUIRE(trace.outcome == Outcome::Satisfied);
    CHECK(f.evaluate(*trace.assignment));  // subset property in action
  }
}

TEST_CASE("prg enumeration baseline") {
  const CnfFormula f = formula(3, {{1, 2}, {-1, 3}});
  CostCounter cost;
  const auto hit = search_prg_enumeration(f, UniformDistribution(3), &cost);
  REQUIRE(hit.has_value());
  CHECK(f.evaluate(*hit));

  CHECK_FALSE(search_prg_enumeration(formula(2, {{1}, {-1}}), UniformDistribution(2)).has_value());

  // measured fooling error below the bias forces a hit
  const CnfFormula g = formula(4, {{1}});  // bias 1/2
  const SmallBiasDistribution d(4, Rat(1, 8));
  const std::vector<CnfFormula> corpus = {g};
  REQUIRE(measure_fooling_error(d, corpus).measured_error < exact_bias(g));
  CHECK(search_prg_enumeration(g, d).has_value());
}

TEST_CASE("small-bias mode for nearly-always-satisfied formulas") {
  CHECK(search_smallbias_high_eps(CnfFormula::tautology(5)).has_value());

  // exactly one falsifying assignment and M <= n: success is guaranteed
  const CnfFormula f = formula(6, {{1, 2, 3, 4, 5, 6}});
  REQUIRE(exact_bias(f) >= Rat(1) - Rat(1, 4 * f.clause_count()));
  const auto hit = search_smallbias_high_eps(f);
  REQUIRE(hit.has_value());
  CHECK(f.evaluate(*hit));

  // outside the precondition nothing is promised, but the call is safe
  (void)search_smallbias_high_eps(formula(3, {{1}}));
}

TEST_CASE("unknown-eps wrapper halves down to success") {
  // bias in [1/4, 1/2): succeeds by the second attempt
  const CnfFormula f = formula(4, {{1, 2}, {1, 3}, {2, 4}, {-3, -4}});
  const Rat bias = exact_bias(f);
  REQUIRE(bias >= Rat(1, 4));
  REQUIRE(bias < Rat(1, 2));
  const ExactCounter counter;
  const SearchTrace trace = search_with_unknown_eps(
      f, [&](const Rat& eps) { return search_naive(f, eps, counter); });
  CHECK(trace.outcome == Outcome::Satisfied);
  CHECK(trace.eps_attempts <= 2);
  CHECK(f.evaluate(*trace.assignment));
}

TEST_CASE("unknown-eps wrapper succeeds immediately on a constant-1 formula") {
  const CnfFormula f = CnfFormula::tautology(5);
  const ExactCounter counter;
  const SearchTrace trace = search_with_unknown_eps(
      f, [&](const Rat& eps) { return search_naive(f, eps, counter); });
  CHECK(trace.outcome == Outcome::Satisfied);
  CHECK(trace.eps_attempts == 1);  // eps = 1/2 already holds
}

TEST_CASE("unknown-eps wrapper hits the floor after six attempts on unsat input") {
  const CnfFormula f = formula(3, {{1}, {-1}});
  const ExactCounter counter;
  const SearchTrace trace = search_with_unknown_eps(
      f, [&](const Rat& eps) { return search_naive(f, eps, counter); }, Rat(1, 64));
  CHECK(trace.outcome == Outcome::EpsFloorReached);
  CHECK(trace.eps_attempts == 6);
}

TEST_CASE("audit catches a counter that lies about its accuracy") {
  // reverses every estimate while declaring delta = 0, so the argmax lands
  // on a bias-0 restriction; the stage audit must flag the loss rather than
  // let the run continue on a dead subformula
  struct ReversingCounter : BiasCounter {
    BiasEstimate bias(const CnfFormula& g, CostCounter& cost) const override {
      ++cost.counter_calls;
      return {1 - exact_bias(g), Rat(0)};
    }
    Rat accuracy() const override { return Rat(0); }
  } liar;

  for (uint64_t seed = 1; seed <= 5; ++seed) {
    const PlantedInstance inst = generate_planted(9, 7, 3, Rat(1, 4), seed * 37);
    const StagewiseConfig config = practical_config(inst.formula, Rat(1, 4));
    const SearchTrace trace = search_stagewise(inst.formula, Rat(1, 4), config, liar);
    CHECK(trace.outcome == Outcome::AuditFailure);
    CHECK_FALSE(trace.assignment.has_value());
    CHECK_FALSE(trace.detail.empty());
  }
}

TEST_CASE("prg enumeration rejects mismatched dimensions") {
  CHECK_THROWS(search_prg_enumeration(formula(3, {{1}}), UniformDistribution(4)));
}

TEST_CASE("trace serialization carries the pinned columns") {
  const CnfFormula f = formula(2, {{1, 2}});
  const ExactCounter counter;
  const SearchTrace trace = search_naive(f, Rat(1, 2), counter);
  const std::string csv = trace_csv(trace);
  CHECK(csv.rfind("stage,n_t,candidates,chosen_restriction,est_bias_num,est_bias_den,"
                  "audited_bias_num,audited_bias_den,counter_calls\n",
                  0) == 0);
  CHECK(trace.summary_json().find("\"outcome\"") != std::string::npos);
}

TEST_SUITE_END();
