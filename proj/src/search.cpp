// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#include "dsearch/search.hpp"

#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dsearch {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Satisfied: return "satisfied";
    case Outcome::NotFound: return "not-found";
    case Outcome::PromiseViolation: return "promise-violation";
    case Outcome::StageBudgetExceeded: return "stage-budget-exceeded";
    case Outcome::AuditFailure: return "audit-failure";
    case Outcome::EpsFloorReached: return "eps-floor-reached";
  }
  return "?";
}

void SearchTrace::write_csv(std::ostream& out) const {
  out << "stage,n_t,candidates,chosen_restriction,est_bias_num,est_bias_den,"
         "audited_bias_num,audited_bias_den,counter_calls\n";
  for (const StageRecord& s : stages) {
    out << s.stage << "," << s.live_vars << "," << s.candidates << "," << s.chosen << ","
        << numerator(s.estimated_bias) << "," << denominator(s.estimated_bias) << ",";
    if (s.audited_bias)
      out << numerator(*s.audited_bias) << "," << denominator(*s.audited_bias);
    else
      out << ",";
    out << "," << s.counter_calls << "\n";
  }
}

std::string SearchTrace::summary_json() const {
  nlohmann::json j;
  j["outcome"] = to_string(outcome);
  j["satisfied"] = outcome == Outcome::Satisfied;
  j["assignment"] = assignment ? nlohmann::json(assignment->to_string()) : nlohmann::json();
  j["detail"] = detail;
  j["stages"] = stages.size();
  j["stage_budget"] = stage_budget.str();
  j["eps"] = rat_to_string(eps);
  j["eps_attempts"] = eps_attempts;
  j["counter_calls"] = cost.counter_calls;
  j["assignments_enumerated"] = cost.assignments_enumerated;
  j["candidates_examined"] = cost.candidates_examined;
  return j.dump(2);
}

std::shared_ptr<const EnumerableDistribution> make_fill(int n, const FillSpec& spec, int limit) {
  switch (spec.kind) {
    case FillKind::Uniform:
      return std::make_shared<UniformDistribution>(n, limit);
    case FillKind::Kwise:
      return std::make_shared<KwiseDistribution>(n, std::min(spec.k, n));
    case FillKind::SmallBias:
      return std::make_shared<SmallBiasDistribution>(n, spec.delta);
  }
  throw std::logic_error("unknown fill kind");
}

namespace {

// The restricted formula re-indexed onto its live variables 1..n_t.
CnfFormula project_to_live(const CnfFormula& f, const std::vector<int>& live) {
  std::vector<int> local(f.variable_count() + 1, 0);
  for (size_t i = 0; i < live.size(); ++i) local[live[i]] = static_cast<int>(i) + 1;
  std::vector<Clause> clauses;
  clauses.reserve(f.clause_count());
  for (const Clause& c : f.clauses()) {
    if (c.is_tautology()) continue;
    std::vector<Literal> lits;
    lits.reserve(c.literals().size());
    for (Literal lit : c.literals()) {
      if (local[lit.var()] == 0)
        throw std::logic_error("project_to_live: clause mentions a fixed variable");
      lits.emplace_back(local[lit.var()], lit.positive());
    }
    clauses.push_back(Clause(std::move(lits)));
  }
  return CnfFormula(static_cast<int>(live.size()), std::move(clauses));
}

}  // namespace

SearchTrace search_stagewise(const CnfFormula& f, const Rat& eps, const StagewiseConfig& config,
                             const BiasCounter& counter) {
  const ParameterSet& ps = config.params;
  SearchTrace trace;
  trace.eps = eps;
  trace.stage_budget = ps.stage_budget;

  const int n = f.variable_count();
  Restriction prefix = Restriction::all_stars(n);
  CnfFormula current = f;
  std::optional<Rat> prev_audited;
  if (n <= config.audit_limit) prev_audited = exact_bias(f, config.audit_limit);

  BigInt t = 0;
  while (!prefix.star_free()) {
    ++t;
    if (t > trace.stage_budget) {
      trace.outcome = Outcome::StageBudgetExceeded;
      trace.detail = "composed restriction still has stars after T stages";
      return trace;
    }
    const int stage = static_cast<int>(t);
    const std::vector<int> live = prefix.star_positions();
    const int n_t = static_cast<int>(live.size());
    const CnfFormula local_f = project_to_live(current, live);

    // per-stage components over the n_t live coordinates; the global
    // budgets (tau, deltas) stay frozen for the whole run
    const StarDistribution stars = StarDistribution::make(
        n_t, ps.p_log2, config.stars, config.star_k, config.star_seed_bit_limit);
    const ConditionedStars conditioned(stars);
    GentleRestrictions gentle(conditioned, make_fill(n_t, config.fill, config.exhaustive_limit));

    const uint64_t calls_before = trace.cost.counter_calls;
    StageResult sr = select_stage(local_f, gentle, counter, ps.slack_base(), trace.cost);

    const Rat threshold = eps - Rat(t) * ps.tau - counter.accuracy();
    if (sr.estimated_bias.value < threshold) {
      trace.outcome = Outcome::PromiseViolation;
      trace.detail = "stage " + std::to_string(stage) +
                     ": best estimate below eps - t*tau - delta_count";
      return trace;
    }

    prefix = compose(prefix, sr.chosen);
    current = f.restricted(prefix);

    StageRecord rec;
    rec.stage = stage;
    rec.live_vars = n_t;
    rec.candidates = sr.candidates_examined;
    rec.chosen = sr.chosen.to_string();
    rec.estimated_bias = sr.estimated_bias.value;
    rec.counter_calls = trace.cost.counter_calls - calls_before;
    rec.prefix = prefix;
    if (n_t <= config.audit_limit) {
      rec.audited_bias = exact_bias(local_f.restricted(sr.chosen), config.audit_limit);
      if (prev_audited && *prev_audited - *rec.audited_bias > sr.slack_budget) {
        trace.stages.push_back(rec);
        trace.outcome = Outcome::AuditFailure;
        trace.detail = "stage " + std::to_string(stage) + ": bias loss " +
                       rat_to_string(*prev_audited - *rec.audited_bias) + " exceeds budget " +
                       rat_to_string(sr.slack_budget);
        return trace;
      }
      prev_audited = rec.audited_bias;
    } else {
      prev_audited.reset();
    }
    trace.stages.push_back(std::move(rec));
  }

  const Assignment result = prefix.to_assignment();
  if (f.evaluate(result)) {
    trace.outcome = Outcome::Satisfied;
    trace.assignment = result;
  } else {
    trace.outcome = Outcome::PromiseViolation;
    trace.detail = "final assignment does not satisfy F";
  }
  return trace;
}

SearchTrace search_naive(const CnfFormula& f, const Rat& eps, const BiasCounter& counter,
                         int audit_limit) {
  const int n = f.variable_count();
  SearchTrace trace;
  trace.eps = eps;
  trace.stage_budget = n;

  Restriction prefix = Restriction::all_stars(n);
  CnfFormula current = f;
  for (int i = 1; i <= n; ++i) {
    Restriction fix0 = Restriction::all_stars(n);
    fix0.fix(i, false);
    Restriction fix1 = Restriction::all_stars(n);
    fix1.fix(i, true);
    const uint64_t calls_before = trace.cost.counter_calls;
    const BiasEstimate est0 = counter.bias(current.restricted(fix0), trace.cost);
    const BiasEstimate est1 = counter.bias(current.restricted(fix1), trace.cost);
    const bool bit = est1.value > est0.value;  // tie keeps 0
    prefix.fix(i, bit);
    current = current.restricted(bit ? fix1 : fix0);

    StageRecord rec;
    rec.stage = i;
    rec.live_vars = n - i + 1;
    rec.candidates = 2;
    Restriction local = Restriction::all_stars(n - i + 1);
    local.fix(1, bit);
    rec.chosen = local.to_string();
    rec.estimated_bias = bit ? est1.value : est0.value;
    rec.counter_calls = trace.cost.counter_calls - calls_before;
    rec.prefix = prefix;
    if (n <= audit_limit) rec.audited_bias = exact_bias(current, audit_limit);
    trace.stages.push_back(std::move(rec));
  }

  const Assignment result = prefix.to_assignment();
  if (f.evaluate(result)) {
    trace.outcome = Outcome::Satisfied;
    trace.assignment = result;
  } else {
    trace.outcome = Outcome::PromiseViolation;
    trace.detail = "final assignment does not satisfy F";
  }
  return trace;
}

std::optional<Assignment> search_prg_enumeration(const CnfFormula& f,
                                                 const EnumerableDistribution& d,
                                                 CostCounter* cost) {
  if (f.variable_count() != d.length())
    throw std::invalid_argument("search_prg_enumeration: dimension mismatch");
  for (uint64_t s = 0; s < d.support_size(); ++s) {
    const uint64_t x = d.sample(s);
    if (cost) ++cost->assignments_enumerated;
    if (f.evaluate_mask(x)) return Assignment::from_mask(f.variable_count(), x);
  }
  return std::nullopt;
}

std::optional<Assignment> search_smallbias_high_eps(const CnfFormula& f, CostCounter* cost) {
  const int m = std::max(1, f.clause_count());
  const SmallBiasDistribution d(f.variable_count(), Rat(1, 4 * m));
  return search_prg_enumeration(f, d, cost);
}

SearchTrace search_with_unknown_eps(const CnfFormula& f,
                                    const std::function<SearchTrace(const Rat&)>& inner,
                                    const Rat& eps_floor) {
  CostCounter total;
  int attempts = 0;
  for (Rat eps(1, 2);; eps /= 2) {
    ++attempts;
    SearchTrace trace = inner(eps);
    total.merge(trace.cost);
    if (trace.outcome == Outcome::Satisfied) {
      // never trust the inner trace
      if (!trace.assignment || !f.evaluate(*trace.assignment))
        throw std::logic_error("unknown-eps wrapper: satisfied trace without valid assignment");
      trace.cost = total;
      trace.eps_attempts = attempts;
      return trace;
    }
    if (eps <= eps_floor) {
      trace.outcome = Outcome::EpsFloorReached;
      trace.detail = "no satisfying assignment found down to eps = " + rat_to_string(eps);
      trace.cost = total;
      trace.eps_attempts = attempts;
      return trace;
    }
  }
}

}  // namespace dsearch
