// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#include "dsearch/planted.hpp"

#include <stdexcept>

#include "dsearch/counting.hpp"

namespace dsearch {

namespace {

// Deterministic across platforms: splitmix64 stream, rejection-free modulo.
// std::uniform_int_distribution is implementation-defined, so not used here.
class SeededStream {
 public:
  explicit SeededStream(uint64_t seed) : state_(seed) {}
  uint64_t next() { return mix64(state_++); }
  uint64_t below(uint64_t bound) { return next() % bound; }
  bool coin() { return next() & 1; }

 private:
  uint64_t state_;
};

}  // namespace

PlantedInstance generate_planted(int n, int clause_target, int k, const Rat& target_eps,
                                 uint64_t seed, int max_resamples) {
  if (n < 1 || n > kDefaultExhaustiveLimit)
    throw std::invalid_argument("generate_planted: n must be in [1, exhaustive limit]");
  if (k < 1 || k > n) throw std::invalid_argument("generate_planted: need 1 <= k <= n");
  if (clause_target < 0) throw std::invalid_argument("generate_planted: negative clause count");

  SeededStream rng(mix64(seed) ^ 0x5eedf00dULL);
  for (int attempt = 0; attempt < max_resamples; ++attempt) {
    Assignment witness(n);
    for (int v = 1; v <= n; ++v) witness.set(v, rng.coin());

    std::vector<Clause> clauses;
    clauses.reserve(clause_target);
    for (int c = 0; c < clause_target; ++c) {
      // k distinct variables
      std::vector<int> vars;
      while (static_cast<int>(vars.size()) < k) {
        const int v = 1 + static_cast<int>(rng.below(n));
        bool dup = false;
        for (int u : vars) dup |= (u == v);
        if (!dup) vars.push_back(v);
      }
      std::vector<Literal> lits;
      lits.reserve(k);
      for (int v : vars) lits.emplace_back(v, rng.coin());
      // steer the clause onto the witness: flip one literal if needed
      bool sat = false;
      for (const Literal& lit : lits) sat |= (witness.get(lit.var()) == lit.positive());
      if (!sat) {
        const auto at = static_cast<size_t>(rng.below(k));
        lits[at] = Literal(lits[at].var(), witness.get(lits[at].var()));
      }
      clauses.push_back(Clause(std::move(lits)));
    }

    CnfFormula f(n, std::move(clauses));
    const Rat bias = exact_bias(f);
    if (bias >= target_eps) {
      if (!f.evaluate(witness)) throw std::logic_error("generate_planted: witness invariant broken");
      return {std::move(f), std::move(witness), bias, seed};
    }
  }
  throw std::runtime_error("generate_planted: resample budget exhausted for n=" +
                           std::to_string(n) + " M=" + std::to_string(clause_target) +
                           " k=" + std::to_string(k));
}

CnfFormula random_cnf(int n, int clauses, int k, uint64_t seed) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("random_cnf: bad shape");
  SeededStream rng(mix64(seed) ^ 0x0c9f5a1eULL);
  std::vector<Clause> out;
  out.reserve(clauses);
  for (int c = 0; c < clauses; ++c) {
    std::vector<int> vars;
    while (static_cast<int>(vars.size()) < k) {
      const int v = 1 + static_cast<int>(rng.below(n));
      bool dup = false;
      for (int u : vars) dup |= (u == v);
      if (!dup) vars.push_back(v);
    }
    std::vector<Literal> lits;
    lits.reserve(k);
    for (int v : vars) lits.emplace_back(v, rng.coin());
    out.push_back(Clause(std::move(lits)));
  }
  return CnfFormula(n, std::move(out));
}

}  // namespace dsearch
