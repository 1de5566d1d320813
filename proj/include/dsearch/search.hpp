// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dsearch/cnf.hpp"
#include "dsearch/counting.hpp"
#include "dsearch/exact.hpp"
#include "dsearch/framework.hpp"
#include "dsearch/params.hpp"
#include "dsearch/prg.hpp"
#include "dsearch/stars.hpp"

namespace dsearch {

enum class Outcome {
  Satisfied,
  NotFound,
  PromiseViolation,    // all candidates estimated below threshold, or the
                       // final assignment fails to satisfy F
  StageBudgetExceeded, // more than T stages would be needed
  AuditFailure,        // a stage lost more bias than its slack budget
  EpsFloorReached,     // unknown-eps wrapper exhausted its schedule
};

std::string to_string(Outcome o);

struct StageRecord {
  int stage = 0;
  int live_vars = 0;  // n_t, free variables entering the stage
  uint64_t candidates = 0;
  std::string chosen;  // stage restriction over the n_t live variables
  Rat estimated_bias;
  std::optional<Rat> audited_bias;  // exact recount, when enumerable
  uint64_t counter_calls = 0;       // calls issued during this stage
  Restriction prefix;               // composed global restriction after the stage
};

struct SearchTrace {
  std::vector<StageRecord> stages;
  Outcome outcome = Outcome::NotFound;
  std::optional<Assignment> assignment;
  std::string detail;
  CostCounter cost;
  BigInt stage_budget;  // T
  Rat eps;
  int eps_attempts = 1;  // > 1 only under the unknown-eps wrapper

  // columns: stage,n_t,candidates,chosen_restriction,est_bias_num,
  // est_bias_den,audited_bias_num,audited_bias_den,counter_calls
  void write_csv(std::ostream& out) const;
  std::string summary_json() const;
};

enum class FillKind { Uniform, Kwise, SmallBias };

struct FillSpec {
  FillKind kind = FillKind::Uniform;
  int k = 3;             // Kwise
  Rat delta = Rat(1, 8); // SmallBias
};

std::shared_ptr<const EnumerableDistribution> make_fill(int n, const FillSpec& spec,
                                                        int limit = kDefaultExhaustiveLimit);

struct StagewiseConfig {
  ParameterSet params;  // practical mode; p_log2, T, tau and budgets drive the run
  StarFamily stars = StarFamily::Exhaustive;
  int star_k = 2;
  FillSpec fill;
  int exhaustive_limit = kDefaultExhaustiveLimit;
  int audit_limit = kDefaultExhaustiveLimit;  // exact recounts up to this many live vars
  int star_seed_bit_limit = 26;
};

// Restriction-by-restriction search: each stage enumerates the gentle
// restrictions over the surviving live variables, keeps the candidate with
// the largest estimated bias, recurses on the restricted formula, and halts
// as soon as the composed restriction is star-free.
SearchTrace search_stagewise(const CnfFormula& f, const Rat& eps, const StagewiseConfig& config,
                             const BiasCounter& counter);

// Bit-by-bit decision-to-search reduction: n stages, two counter calls per
// stage, keep the branch with the larger estimate (ties to 0).
SearchTrace search_naive(const CnfFormula& f, const Rat& eps, const BiasCounter& counter,
                         int audit_limit = kDefaultExhaustiveLimit);

// First output of the distribution, in seed order, that satisfies F.
std::optional<Assignment> search_prg_enumeration(const CnfFormula& f,
                                                 const EnumerableDistribution& d,
                                                 CostCounter* cost = nullptr);

// Enumerates a 1/(4M)-biased space; guaranteed to succeed when
// E[F] >= 1 - 1/(4M), since the falsifying probability of each clause is
// then at most 1/(4M) and the space shifts each by at most another 1/(4M).
std::optional<Assignment> search_smallbias_high_eps(const CnfFormula& f,
                                                    CostCounter* cost = nullptr);

// Runs `inner` with eps = 1/2, 1/4, ..., down to eps_floor, returning the
// first satisfied trace with costs aggregated across attempts.
SearchTrace search_with_unknown_eps(const CnfFormula& f,
                                    const std::function<SearchTrace(const Rat&)>& inner,
                                    const Rat& eps_floor = Rat(1, 64));

}  // namespace dsearch
