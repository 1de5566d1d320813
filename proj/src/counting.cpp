// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#include "dsearch/counting.hpp"

#include <algorithm>
#include <bit>
#include <optional>

namespace dsearch {

uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

BigInt brute_force_count(const CnfFormula& f, int limit, CostCounter* cost) {
  if (f.has_empty_clause()) return 0;
  const std::vector<int> vars = f.occurring_vars();
  const int o = static_cast<int>(vars.size());
  if (o > limit) throw LimitExceeded("brute_force_count: " + std::to_string(o) +
                                     " occurring variables exceed limit " + std::to_string(limit));
  // clauses re-indexed onto the occurring variables
  std::vector<int> local(f.variable_count() + 1, 0);
  for (int i = 0; i < o; ++i) local[vars[i]] = i;
  std::vector<std::vector<std::pair<int, uint64_t>>> clauses;  // (local bit, wanted value)
  for (const Clause& c : f.clauses()) {
    if (c.is_tautology()) continue;
    std::vector<std::pair<int, uint64_t>> lits;
    lits.reserve(c.literals().size());
    for (Literal lit : c.literals())
      lits.emplace_back(local[lit.var()], lit.positive() ? 1u : 0u);
    clauses.push_back(std::move(lits));
  }
  uint64_t count = 0;
  const uint64_t total = uint64_t(1) << o;
  for (uint64_t m = 0; m < total; ++m) {
    bool sat = true;
    for (const auto& cl : clauses) {
      bool clause_sat = false;
      for (auto [bit, want] : cl) {
        if (((m >> bit) & 1) == want) {
          clause_sat = true;
          break;
        }
      }
      if (!clause_sat) {
        sat = false;
        break;
      }
    }
    count += sat;
  }
  if (cost) cost->assignments_enumerated += total;
  return BigInt(count) << static_cast<unsigned>(f.variable_count() - o);
}

namespace {

// nullopt if assigning the literal produces an empty clause
std::optional<std::vector<std::vector<int>>> assign_literal(
    const std::vector<std::vector<int>>& clauses, int lit) {
  std::vector<std::vector<int>> out;
  out.reserve(clauses.size());
  for (const auto& c : clauses) {
    if (std::find(c.begin(), c.end(), lit) != c.end()) continue;  // satisfied
    std::vector<int> kept;
    kept.reserve(c.size());
    for (int l : c)
      if (l != -lit) kept.push_back(l);
    if (kept.empty()) return std::nullopt;
    out.push_back(std::move(kept));
  }
  return out;
}

BigInt dpll_rec(std::vector<std::vector<int>> clauses, int free_vars, CostCounter* cost) {
  // unit propagation
  for (;;) {
    auto unit = std::find_if(clauses.begin(), clauses.end(),
                             [](const auto& c) { return c.size() == 1; });
    if (unit == clauses.end()) break;
    int lit = (*unit)[0];
    auto next = assign_literal(clauses, lit);
    if (cost) ++cost->assignments_enumerated;
    if (!next) return 0;
    clauses = std::move(*next);
    --free_vars;
  }
  if (clauses.empty()) return pow2(static_cast<unsigned>(free_vars));
  // lowest-index variable still occurring in an active clause
  int branch = 0;
  for (const auto& c : clauses)
    for (int l : c) {
      int v = l < 0 ? -l : l;
      if (branch == 0 || v < branch) branch = v;
    }
  BigInt total = 0;
  for (int sign : {+1, -1}) {
    auto next = assign_literal(clauses, sign * branch);
    if (cost) ++cost->assignments_enumerated;
    if (next) total += dpll_rec(std::move(*next), free_vars - 1, cost);
  }
  return total;
}

}  // namespace

BigInt dpll_count(const CnfFormula& f, CostCounter* cost) {
  if (f.has_empty_clause()) return 0;
  std::vector<std::vector<int>> clauses;
  clauses.reserve(f.clause_count());
  for (const Clause& c : f.clauses()) {
    if (c.is_tautology()) continue;
    std::vector<int> lits;
    lits.reserve(c.literals().size());
    for (Literal lit : c.literals()) lits.push_back(lit.dimacs());
    clauses.push_back(std::move(lits));
  }
  return dpll_rec(std::move(clauses), f.variable_count(), cost);
}

BigInt exact_count(const CnfFormula& f, int limit, CostCounter* cost) {
  if (static_cast<int>(f.occurring_vars().size()) <= limit)
    return brute_force_count(f, limit, cost);
  return dpll_count(f, cost);
}

Rat exact_bias(const CnfFormula& f, int limit, CostCounter* cost) {
  return Rat(exact_count(f, limit, cost), pow2(static_cast<unsigned>(f.variable_count())));
}

BiasEstimate approx_bias(const CnfFormula& f, const Rat& delta, int limit, CostCounter* cost) {
  if (delta < 0) throw std::invalid_argument("approx_bias: negative accuracy");
  if (cost) ++cost->counter_calls;
  return {exact_bias(f, limit, cost), delta};
}

GatherOnMask::GatherOnMask(uint64_t mask, int word_bits) {
  const int bytes = (word_bits + 7) / 8;
  tables_.assign(bytes, std::vector<uint32_t>(256, 0));
  int out_base = 0;
  for (int b = 0; b < bytes; ++b) {
    const uint32_t mbyte = (mask >> (8 * b)) & 0xffu;
    for (uint32_t v = 0; v < 256; ++v) {
      uint32_t q = 0;
      int out = 0;
      for (int bit = 0; bit < 8; ++bit) {
        if (!((mbyte >> bit) & 1)) continue;
        q |= ((v >> bit) & 1) << out;
        ++out;
      }
      tables_[b][v] = q << out_base;
    }
    out_base += std::popcount(mbyte);
  }
}

namespace {

class ExactStageOracle : public StageOracle {
 public:
  ExactStageOracle(const CnfFormula& f, int limit) : f_(f), limit_(limit) {
    if (f.variable_count() > limit_)
      throw LimitExceeded("stage oracle: formula too large to enumerate");
  }

  std::vector<Rat> fiber_biases(uint64_t mask, std::span<const uint32_t> patterns,
                                CostCounter& cost) override {
    ensure_sats(cost);
    const int n = f_.variable_count();
    const int l = std::popcount(mask);
    GatherOnMask gather(mask, n);
    buckets_.assign(uint64_t(1) << l, 0);
    for (uint32_t s : sats_) ++buckets_[gather(s)];
    cost.assignments_enumerated += sats_.size();
    cost.counter_calls += patterns.size();
    const BigInt den = pow2(static_cast<unsigned>(n - l));
    std::vector<Rat> out;
    out.reserve(patterns.size());
    for (uint32_t q : patterns) out.emplace_back(BigInt(buckets_[q]), den);
    return out;
  }

 private:
  void ensure_sats(CostCounter& cost) {
    if (built_) return;
    const uint64_t total = uint64_t(1) << f_.variable_count();
    sats_.reserve(total / 4);
    for (uint64_t m = 0; m < total; ++m)
      if (f_.evaluate_mask(m)) sats_.push_back(static_cast<uint32_t>(m));
    cost.assignments_enumerated += total;
    built_ = true;
  }

  CnfFormula f_;
  int limit_;
  bool built_ = false;
  std::vector<uint32_t> sats_;
  std::vector<uint32_t> buckets_;
};

class GenericStageOracle : public StageOracle {
 public:
  GenericStageOracle(const CnfFormula& f, const BiasCounter& counter)
      : f_(f), counter_(counter) {}

  std::vector<Rat> fiber_biases(uint64_t mask, std::span<const uint32_t> patterns,
                                CostCounter& cost) override {
    std::vector<Rat> out;
    out.reserve(patterns.size());
    for (uint32_t q : patterns) {
      Restriction pi = Restriction::all_stars(f_.variable_count());
      int bit = 0;
      for (int v = 1; v <= f_.variable_count(); ++v) {
        if (!((mask >> (v - 1)) & 1)) continue;
        pi.fix(v, (q >> bit) & 1);
        ++bit;
      }
      out.push_back(counter_.bias(f_.restricted(pi), cost).value);
    }
    return out;
  }

 private:
  CnfFormula f_;
  const BiasCounter& counter_;
};

class AdversarialStageOracle : public StageOracle {
 public:
  AdversarialStageOracle(const CnfFormula& f, const AdversarialCounter& counter, int limit)
      : exact_(f, limit), counter_(counter), fp_(f.fingerprint()) {}

  std::vector<Rat> fiber_biases(uint64_t mask, std::span<const uint32_t> patterns,
                                CostCounter& cost) override {
    std::vector<Rat> out = exact_.fiber_biases(mask, patterns, cost);
    for (size_t i = 0; i < out.size(); ++i)
      out[i] = counter_.perturb(out[i], mix64(fp_ ^ mix64(mask ^ mix64(patterns[i]))));
    return out;
  }

 private:
  ExactStageOracle exact_;
  const AdversarialCounter& counter_;
  uint64_t fp_;
};

}  // namespace

std::unique_ptr<StageOracle> BiasCounter::make_stage_oracle(const CnfFormula& f) const {
  return std::make_unique<GenericStageOracle>(f, *this);
}

BiasEstimate ExactCounter::bias(const CnfFormula& f, CostCounter& cost) const {
  ++cost.counter_calls;
  return {exact_bias(f, limit_, &cost), Rat(0)};
}

std::unique_ptr<StageOracle> ExactCounter::make_stage_oracle(const CnfFormula& f) const {
  return std::make_unique<ExactStageOracle>(f, limit_);
}

Rat AdversarialCounter::perturb(const Rat& exact, uint64_t digest) const {
  Rat v;
  switch (skew_) {
    case Skew::Down: v = exact - delta_; break;
    case Skew::Up: v = exact + delta_; break;
    case Skew::Jitter: {
      const uint64_t h = mix64(seed_ ^ digest);
      const Rat u(BigInt(h >> 48), BigInt(65536));
      if ((h >> 47) & 1)
        v = exact - delta_ * u;
      else
        v = exact + delta_ * u;
      break;
    }
  }
  if (v < 0) v = 0;
  if (v > 1) v = 1;
  return v;
}

BiasEstimate AdversarialCounter::bias(const CnfFormula& f, CostCounter& cost) const {
  ++cost.counter_calls;
  Rat exact = exact_bias(f, limit_, &cost);
  return {perturb(exact, f.fingerprint()), delta_};
}

std::unique_ptr<StageOracle> AdversarialCounter::make_stage_oracle(const CnfFormula& f) const {
  return std::make_unique<AdversarialStageOracle>(f, *this, limit_);
}

}  // namespace dsearch
