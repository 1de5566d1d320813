// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "dsearch/cnf.hpp"
#include "dsearch/counting.hpp"
#include "dsearch/exact.hpp"
#include "dsearch/prg.hpp"
#include "dsearch/stars.hpp"

namespace dsearch {

// Exact verification of the bias-preservation inequality for a fixed star
// set L and fill distribution D:
//
//   E_{x,y}[F(x on [n]\L, y on L)] >= E_U[F] - (delta_PRG + delta_SL)
//
// where delta_SL is the measured probability (over uniform rho fixing
// [n]\L) that F|rho is wider than w', and delta_PRG is the measured worst
// fooling error of D on the restricted formulas that did become narrow.
// Narrow formulas are their own width-w' lower 0-approximators, so with
// these measured values the inequality is a theorem; `holds` must be true.
struct BiasPreservationReport {
  uint64_t star_mask = 0;
  Rat delta_sl_measured;
  Rat delta_prg_measured;
  Rat base_bias;  // E_U[F]
  Rat lhs;        // E_{x,y}[F(x_{[n]\L}, y_L)]
  Rat rhs_bound;  // base_bias - (delta_prg + delta_sl)
  bool holds = false;
};

BiasPreservationReport verify_bias_preservation(const CnfFormula& f, uint64_t star_mask,
                                                const EnumerableDistribution& fill, int w_prime,
                                                int limit = kDefaultExhaustiveLimit);

// One stage: cycle through the gentle support, estimate the bias of every
// restricted formula, keep the argmax (ties to the lowest enumeration
// index, stars-major fill-minor).
struct StageResult {
  Restriction chosen;
  BiasEstimate estimated_bias;
  uint64_t candidates_examined = 0;
  BigInt support_size;
  Rat slack_budget;  // delta_PRG + delta_sand + delta_SL + 2*delta_count
};

// slack_base carries the distribution-side budget (delta_PRG + delta_sand +
// delta_SL); a uniform fill warrants 0 since the fill average equals the
// bias and the argmax cannot fall below the mean.
StageResult select_stage(const CnfFormula& f, const GentleRestrictions& gentle,
                         const BiasCounter& counter, const Rat& slack_base, CostCounter& cost);

// Realized bias loss E_U[F] - E_U[F|chosen], exact. The stage guarantee
// audit passes iff the loss is at most result.slack_budget.
Rat stage_slack_audit(const CnfFormula& f, const StageResult& result,
                      int limit = kDefaultExhaustiveLimit);

}  // namespace dsearch
