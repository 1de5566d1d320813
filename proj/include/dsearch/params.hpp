// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dsearch/exact.hpp"

namespace dsearch {

// All tuned quantities of one search run. Logarithms are base 2 except
// where a field says otherwise (T and the 192*ln(M) term inside w' use
// natural log). In paper mode every value follows the closed-form choices;
// in practical mode the error budgets are caller-supplied dyadic rationals
// (paper-mode p is astronomically small at any feasible instance size) and
// the per-stage budget constraint is checked exactly.
enum class ParamMode { Paper, Practical };

struct ParameterSet {
  ParamMode mode = ParamMode::Paper;
  uint64_t clause_count = 0;   // M (after padding, so M >= n)
  uint64_t variable_count = 0; // n
  Rat eps;                     // promised satisfying fraction
  double constant_c = 1.0;     // the universal switching-lemma constant C

  double w = 0;        // log2(2M/eps)
  int trim_width = 0;  // ceil(w), the width the pipeline trims to
  double w_prime = 0;  // 16*C*log2(w) + 4*log2(192*ln(M)/eps)
  double eta = 0;      // 1/(w*log2(log2(M)/eps))
  double p = 0;        // star density; closed form: eta^(2*C*log2(w))
  int p_log2 = 1;      // practical mode: p = 2^-p_log2 exactly

  BigInt stage_budget;  // T = ceil(2*ln(n)/p), at least 1
  Rat tau;              // eps/(2T); tau*T == eps/2 exactly by construction

  // budgets, exact rationals (paper mode: dyadic images of the formulas)
  Rat delta_count;  // tau/3
  Rat delta_prg;    // tau/6
  Rat delta_sand;   // p*tau/48
  Rat delta_sl;     // 2*(delta_sand + eta^(w'/4))/p

  // seed-length estimates from the cost model at unit hidden constants
  double r_sl = 0;
  double r_prg = 0;

  Rat slack_base() const { return delta_prg + delta_sand + delta_sl; }
  Rat stage_slack() const { return slack_base() + 2 * delta_count; }

  friend bool operator==(const ParameterSet&, const ParameterSet&) = default;
};

struct PracticalOverrides {
  int p_log2 = 1;
  Rat delta_count = Rat(0);
  Rat delta_prg = Rat(0);
  Rat delta_sand = Rat(0);
  Rat delta_sl = Rat(0);
};

// Paper mode evaluates the closed forms; practical mode applies the
// overrides and enforces delta_PRG + delta_sand + delta_SL + 2*delta_count
// <= tau exactly. Requires 1 <= n <= M (pad first) and 0 < eps <= 1.
ParameterSet compute_parameters(uint64_t clause_count, uint64_t variable_count, const Rat& eps,
                                double constant_c = 1.0, ParamMode mode = ParamMode::Paper,
                                std::optional<PracticalOverrides> overrides = std::nullopt);

struct PropositionReport {
  // p <= eta / (w*log2(1/delta_sand))^(C*log2(w))
  bool ineq1 = false;
  double ineq1_lhs = 0, ineq1_rhs = 0;
  // delta_PRG + delta_sand + delta_SL + 2*delta_count <= tau, exact
  bool ineq2 = false;
  Rat ineq2_lhs, ineq2_rhs;
  // eta^(w'/4) <= eps*p^2/(192*ln(n)), the step the proof reduces to
  bool eta_power_ok = false;
  double eta_power_lhs = 0, eta_power_rhs = 0;
};

// Never throws on a falsified inequality; the report carries the margins.
PropositionReport verify_proposition(const ParameterSet& ps);

struct CostModelReport {
  double r_sl = 0;          // seed length for the star distribution
  double r_prg = 0;         // seed length for the narrow-CNF PRG
  double log2_t_count = 0;  // log2 of the counting time bound
  double log2_stage = 0;    // r_sl + r_prg + log2_t_count
  double log2_total = 0;    // log2_stage + log2(T)
  double total = 0;         // 2^log2_total; +inf when out of double range
};

struct CostModelConstants {
  double c_sl = 1.0;
  double c_prg = 1.0;
  double c_count = 1.0;
};

// Evaluates the seed-length and runtime formulas numerically with
// configurable hidden constants. A model, not a measurement.
CostModelReport cost_model(const ParameterSet& ps, const CostModelConstants& c = {});

std::string parameter_set_to_json(const ParameterSet& ps);
ParameterSet parameter_set_from_json(const std::string& text);

}  // namespace dsearch
