// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#include "dsearch/framework.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace dsearch {

namespace {

Restriction fix_mask_coords(int n, uint64_t mask, uint64_t bits_ascending) {
  Restriction pi = Restriction::all_stars(n);
  int j = 0;
  for (int v = 1; v <= n; ++v) {
    if (!((mask >> (v - 1)) & 1)) continue;
    pi.fix(v, (bits_ascending >> j) & 1);
    ++j;
  }
  return pi;
}

}  // namespace

BiasPreservationReport verify_bias_preservation(const CnfFormula& f, uint64_t star_mask,
                                                const EnumerableDistribution& fill, int w_prime,
                                                int limit) {
  const int n = f.variable_count();
  if (n > limit) throw LimitExceeded("verify_bias_preservation: n exceeds exhaustive limit");
  if (fill.length() != n)
    throw std::invalid_argument("verify_bias_preservation: fill dimension mismatch");

  const uint64_t all = (uint64_t(1) << n) - 1;
  const uint64_t complement = all & ~star_mask;
  const int fixed = std::popcount(complement);

  // L-pattern histogram of the fill distribution, one pass over its seeds.
  GatherOnMask gather(star_mask, n);
  std::vector<uint64_t> fill_hist(uint64_t(1) << std::popcount(star_mask), 0);
  for (uint64_t s = 0; s < fill.support_size(); ++s) ++fill_hist[gather(fill.sample(s))];

  BiasPreservationReport report;
  report.star_mask = star_mask;

  BigInt bad_rho = 0;        // width(F|rho) > w'
  Rat worst_fooling;         // over the narrow restrictions
  BigInt lhs_num = 0;        // sum over (rho, fill outcome) of F
  BigInt base_num = 0;       // sum over all completions (for E_U[F])
  const uint64_t rho_count = uint64_t(1) << fixed;
  const int stars = std::popcount(star_mask);

  for (uint64_t bits = 0; bits < rho_count; ++bits) {
    const Restriction rho = fix_mask_coords(n, complement, bits);
    const CnfFormula g = f.restricted(rho);

    // E_U[F|rho] and E_D[F|rho], both exact; g's free coordinates are L
    uint64_t sat_uniform = 0;
    BigInt sat_fill = 0;
    for (uint64_t q = 0; q < (uint64_t(1) << stars); ++q) {
      // overlay pattern q on the star coordinates; fixed coords of rho are
      // irrelevant to g, set to rho's values for clarity
      uint64_t x = 0;
      int j = 0;
      for (int v = 1; v <= n; ++v) {
        if ((star_mask >> (v - 1)) & 1) {
          if ((q >> j) & 1) x |= uint64_t(1) << (v - 1);
          ++j;
        } else if (rho.is_fixed(v) && rho.value(v)) {
          x |= uint64_t(1) << (v - 1);
        }
      }
      if (g.evaluate_mask(x)) {
        ++sat_uniform;
        sat_fill += BigInt(fill_hist[q]);
      }
    }
    base_num += sat_uniform;
    lhs_num += sat_fill;

    if (g.width() > w_prime) {
      ++bad_rho;
    } else {
      Rat err = Rat(BigInt(sat_uniform), pow2(static_cast<unsigned>(stars))) -
                Rat(sat_fill, BigInt(fill.support_size()));
      if (err < 0) err = -err;
      if (err > worst_fooling) worst_fooling = err;
    }
  }

  report.delta_sl_measured = Rat(bad_rho, BigInt(rho_count));
  report.delta_prg_measured = worst_fooling;
  report.base_bias = Rat(base_num, pow2(static_cast<unsigned>(fixed + stars)));
  report.lhs = Rat(lhs_num, BigInt(rho_count) * BigInt(fill.support_size()));
  report.rhs_bound = report.base_bias - (report.delta_prg_measured + report.delta_sl_measured);
  report.holds = report.lhs >= report.rhs_bound;
  return report;
}

StageResult select_stage(const CnfFormula& f, const GentleRestrictions& gentle,
                         const BiasCounter& counter, const Rat& slack_base, CostCounter& cost) {
  const int n = f.variable_count();
  if (gentle.length() != n) throw std::invalid_argument("select_stage: dimension mismatch");
  if (gentle.stars().support().empty()) throw std::runtime_error("select_stage: empty support");

  auto oracle = counter.make_stage_oracle(f);
  const EnumerableDistribution& fill = gentle.fill();

  StageResult result;
  result.support_size = gentle.support_size();
  result.slack_budget = slack_base + 2 * counter.accuracy();

  bool have_best = false;
  Rat best_estimate;
  uint64_t best_mask = 0;
  uint64_t best_pattern = 0;

  std::vector<uint32_t> patterns;
  for (const auto& entry : gentle.stars().support()) {
    const uint64_t mask = entry.mask;
    const int l = std::popcount(mask);
    patterns.clear();
    if (fill.is_identity_uniform()) {
      // distinct fill patterns on L appear in plain numeric order
      patterns.resize(uint64_t(1) << l);
      for (uint64_t q = 0; q < patterns.size(); ++q) patterns[q] = static_cast<uint32_t>(q);
    } else {
      GatherOnMask gather(mask, n);
      std::vector<uint8_t> seen(uint64_t(1) << l, 0);
      for (uint64_t s = 0; s < fill.support_size(); ++s) {
        const uint32_t q = gather(fill.sample(s));
        if (!seen[q]) {
          seen[q] = 1;
          patterns.push_back(q);
        }
      }
    }
    const std::vector<Rat> estimates = oracle->fiber_biases(mask, patterns, cost);
    result.candidates_examined += patterns.size();
    for (size_t i = 0; i < patterns.size(); ++i) {
      // candidates run in enumeration order, so a strict improvement is
      // exactly the lowest-index tie-break
      if (!have_best || estimates[i] > best_estimate) {
        have_best = true;
        best_estimate = estimates[i];
        best_mask = mask;
        best_pattern = patterns[i];
      }
    }
  }
  cost.candidates_examined += result.candidates_examined;

  // expand the winning pattern back onto the coordinates of L
  uint64_t fill_bits = 0;
  int j = 0;
  for (int v = 1; v <= n; ++v) {
    if (!((best_mask >> (v - 1)) & 1)) continue;
    if ((best_pattern >> j) & 1) fill_bits |= uint64_t(1) << (v - 1);
    ++j;
  }
  result.chosen = GentleRestrictions::outcome(n, best_mask, fill_bits);
  result.estimated_bias = {best_estimate, counter.accuracy()};
  return result;
}

Rat stage_slack_audit(const CnfFormula& f, const StageResult& result, int limit) {
  return exact_bias(f, limit) - exact_bias(f.restricted(result.chosen), limit);
}

}  // namespace dsearch
