// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#include "dsearch/params.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace dsearch {

namespace {

using nlohmann::json;

// Smallest integer width with 2^w >= 2M/eps, by exact comparison.
int exact_trim_width(uint64_t clause_count, const Rat& eps) {
  const Rat target = Rat(2 * BigInt(clause_count)) / eps;
  int w = 1;
  while (rat_pow2(w) < target) ++w;
  return w;
}

BigInt stage_budget_for(uint64_t n, double p) {
  if (p <= 0) throw std::domain_error("stage budget: p must be positive");
  const double t = 2.0 * std::log(static_cast<double>(n)) / p;
  BigInt budget = big_ceil(t);
  if (budget < 1) budget = 1;
  return budget;
}

}  // namespace

ParameterSet compute_parameters(uint64_t clause_count, uint64_t variable_count, const Rat& eps,
                                double constant_c, ParamMode mode,
                                std::optional<PracticalOverrides> overrides) {
  if (variable_count < 1 || clause_count < variable_count)
    throw std::invalid_argument("compute_parameters: need 1 <= n <= M (pad first)");
  if (eps <= 0 || eps > 1) throw std::invalid_argument("compute_parameters: eps must be in (0,1]");
  if (constant_c <= 0) throw std::invalid_argument("compute_parameters: C must be positive");

  ParameterSet ps;
  ps.mode = mode;
  ps.clause_count = clause_count;
  ps.variable_count = variable_count;
  ps.eps = eps;
  ps.constant_c = constant_c;

  const double eps_d = to_double(eps);
  const double m_d = static_cast<double>(clause_count);
  ps.w = std::log2(2.0 * m_d) - std::log2(eps_d);
  ps.trim_width = exact_trim_width(clause_count, eps);

  const double log_w = std::log2(ps.w);
  const double x = ps.w * (std::log2(std::log2(m_d)) - std::log2(eps_d));
  ps.w_prime = 16.0 * constant_c * log_w + 4.0 * std::log2(192.0 * std::log(m_d) / eps_d);

  if (mode == ParamMode::Paper) {
    if (!(x > 1.0))
      throw std::domain_error("compute_parameters: w*log2(log2(M)/eps) must exceed 1 in paper mode");
    ps.eta = 1.0 / x;
    ps.p = std::pow(1.0 / x, 2.0 * constant_c * log_w);
    ps.p_log2 = 0;
    ps.stage_budget = stage_budget_for(variable_count, ps.p);
    ps.tau = eps / (2 * Rat(ps.stage_budget));
    ps.delta_count = ps.tau / 3;
    ps.delta_prg = ps.tau / 6;
    ps.delta_sand = rat_from_double(ps.p) * ps.tau / 48;
    const Rat eta_pow = rat_from_double(std::pow(ps.eta, ps.w_prime / 4.0));
    ps.delta_sl = 2 * (ps.delta_sand + eta_pow) / rat_from_double(ps.p);
  } else {
    PracticalOverrides ov = overrides.value_or(PracticalOverrides{});
    if (ov.p_log2 < 0) throw std::invalid_argument("practical mode: p_log2 must be >= 0");
    ps.p_log2 = ov.p_log2;
    ps.p = std::ldexp(1.0, -ov.p_log2);
    ps.eta = x > 1.0 ? 1.0 / x : 0.0;  // reference value only
    ps.stage_budget = stage_budget_for(variable_count, ps.p);
    ps.tau = eps / (2 * Rat(ps.stage_budget));
    ps.delta_count = ov.delta_count;
    ps.delta_prg = ov.delta_prg;
    ps.delta_sand = ov.delta_sand;
    ps.delta_sl = ov.delta_sl;
    if (ps.delta_count < 0 || ps.delta_prg < 0 || ps.delta_sand < 0 || ps.delta_sl < 0)
      throw std::invalid_argument("practical mode: budgets must be non-negative");
    if (ps.stage_slack() > ps.tau)
      throw std::invalid_argument(
          "practical mode: delta_PRG + delta_sand + delta_SL + 2*delta_count exceeds tau");
  }
  const CostModelReport seeds = cost_model(ps);
  ps.r_sl = seeds.r_sl;
  ps.r_prg = seeds.r_prg;
  return ps;
}

PropositionReport verify_proposition(const ParameterSet& ps) {
  if (ps.mode != ParamMode::Paper)
    throw std::invalid_argument("verify_proposition: paper-mode parameter set required");
  PropositionReport report;

  const double log_w = std::log2(ps.w);
  const double log_inv_sand = -log2_rat(ps.delta_sand);
  report.ineq1_lhs = ps.p;
  report.ineq1_rhs = ps.eta / std::pow(ps.w * log_inv_sand, ps.constant_c * log_w);
  report.ineq1 = report.ineq1_lhs <= report.ineq1_rhs;

  report.ineq2_lhs = ps.stage_slack();
  report.ineq2_rhs = ps.tau;
  report.ineq2 = report.ineq2_lhs <= report.ineq2_rhs;

  report.eta_power_lhs = std::pow(ps.eta, ps.w_prime / 4.0);
  report.eta_power_rhs = to_double(ps.eps) * ps.p * ps.p /
                         (192.0 * std::log(static_cast<double>(ps.variable_count)));
  report.eta_power_ok = report.eta_power_lhs <= report.eta_power_rhs;
  return report;
}

CostModelReport cost_model(const ParameterSet& ps, const CostModelConstants& c) {
  CostModelReport r;
  // inner logs floored at 0 so degenerate desk-scale inputs stay finite;
  // the hidden constants absorb the same slack the O(.) does
  auto lg = [](double z) { return std::log2(std::max(z, 1.0)); };
  const double n_d = static_cast<double>(ps.variable_count);
  const double m_d = static_cast<double>(ps.clause_count);
  const double log_w = lg(ps.w);
  const double log_inv_sand = ps.delta_sand > 0 ? -log2_rat(ps.delta_sand)
                                                : std::numeric_limits<double>::infinity();
  const double log_inv_prg = ps.delta_prg > 0 ? -log2_rat(ps.delta_prg)
                                              : std::numeric_limits<double>::infinity();

  r.r_sl = c.c_sl * (log_w * (lg(n_d) + ps.w_prime * lg(ps.eta > 0 ? log_w / ps.eta : 1.0)) +
                     ps.w * lg(ps.w * log_inv_sand));

  r.r_prg = c.c_prg * (ps.w_prime * ps.w_prime * std::pow(lg(ps.w_prime * log_inv_prg), 2.0) +
                       ps.w_prime * lg(ps.w_prime) * log_inv_prg + lg(lg(n_d)));

  const double log_wc = ps.delta_count > 0 ? lg(ps.w) - log2_rat(ps.delta_count)
                                           : std::numeric_limits<double>::infinity();
  const double loglog_wc = lg(log_wc);
  r.log2_t_count = c.c_count * (lg(m_d) + log_wc * lg(n_d) + ps.w * lg(lg(n_d)) +
                                ps.w * log_wc * loglog_wc * loglog_wc);

  r.log2_stage = r.r_sl + r.r_prg + r.log2_t_count;
  r.log2_total = r.log2_stage + log2_big(ps.stage_budget);
  r.total = r.log2_total < 1020 ? std::exp2(r.log2_total)
                                : std::numeric_limits<double>::infinity();
  return r;
}

namespace {

// non-finite doubles (legal for the seed-length estimates when a budget is
// zero) round-trip as strings
json json_double(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
}

double parse_double(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    return std::numeric_limits<double>::quiet_NaN();
  }
  return j.get<double>();
}

}  // namespace

std::string parameter_set_to_json(const ParameterSet& ps) {
  json j;
  j["mode"] = ps.mode == ParamMode::Paper ? "paper" : "practical";
  j["M"] = ps.clause_count;
  j["n"] = ps.variable_count;
  j["eps"] = rat_to_string(ps.eps);
  j["C"] = ps.constant_c;
  j["w"] = ps.w;
  j["trim_width"] = ps.trim_width;
  j["w_prime"] = ps.w_prime;
  j["eta"] = ps.eta;
  j["p"] = ps.p;
  j["p_log2"] = ps.p_log2;
  j["T"] = ps.stage_budget.str();
  j["r_SL"] = json_double(ps.r_sl);
  j["r_PRG"] = json_double(ps.r_prg);
  j["tau"] = rat_to_string(ps.tau);
  j["delta_count"] = rat_to_string(ps.delta_count);
  j["delta_PRG"] = rat_to_string(ps.delta_prg);
  j["delta_sand"] = rat_to_string(ps.delta_sand);
  j["delta_SL"] = rat_to_string(ps.delta_sl);
  return j.dump(2);
}

ParameterSet parameter_set_from_json(const std::string& text) {
  const json j = json::parse(text);
  ParameterSet ps;
  ps.mode = j.at("mode").get<std::string>() == "paper" ? ParamMode::Paper : ParamMode::Practical;
  ps.clause_count = j.at("M").get<uint64_t>();
  ps.variable_count = j.at("n").get<uint64_t>();
  ps.eps = rat_parse(j.at("eps").get<std::string>());
  ps.constant_c = j.at("C").get<double>();
  ps.w = j.at("w").get<double>();
  ps.trim_width = j.at("trim_width").get<int>();
  ps.w_prime = j.at("w_prime").get<double>();
  ps.eta = j.at("eta").get<double>();
  ps.p = j.at("p").get<double>();
  ps.p_log2 = j.at("p_log2").get<int>();
  ps.stage_budget = BigInt(j.at("T").get<std::string>());
  ps.r_sl = parse_double(j.at("r_SL"));
  ps.r_prg = parse_double(j.at("r_PRG"));
  ps.tau = rat_parse(j.at("tau").get<std::string>());
  ps.delta_count = rat_parse(j.at("delta_count").get<std::string>());
  ps.delta_prg = rat_parse(j.at("delta_PRG").get<std::string>());
  ps.delta_sand = rat_parse(j.at("delta_sand").get<std::string>());
  ps.delta_sl = rat_parse(j.at("delta_SL").get<std::string>());
  return ps;
}

}  // namespace dsearch
