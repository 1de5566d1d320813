// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "dsearch/cnf.hpp"
#include "dsearch/exact.hpp"

namespace dsearch {

inline constexpr int kDefaultExhaustiveLimit = 24;

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Work accounting for a driver run. Merging is order-independent.
struct CostCounter {
  uint64_t counter_calls = 0;
  uint64_t assignments_enumerated = 0;
  uint64_t candidates_examined = 0;

  void merge(const CostCounter& other) {
    counter_calls += other.counter_calls;
    assignments_enumerated += other.assignments_enumerated;
    candidates_examined += other.candidates_examined;
  }
};

struct BiasEstimate {
  Rat value;                // in [0,1]
  Rat guaranteed_accuracy;  // delta_count
};

// |F^-1(1)| over the full cube {0,1}^n, by enumeration of the variables that
// actually occur (absent variables contribute a power-of-two factor). Throws
// LimitExceeded when more than `limit` variables occur.
BigInt brute_force_count(const CnfFormula& f, int limit = kDefaultExhaustiveLimit,
                         CostCounter* cost = nullptr);

// Same count via DPLL: unit propagation plus branching on the lowest-index
// variable still occurring in an active clause. No enumeration limit.
BigInt dpll_count(const CnfFormula& f, CostCounter* cost = nullptr);

// Brute force when few enough variables occur, DPLL otherwise.
BigInt exact_count(const CnfFormula& f, int limit = kDefaultExhaustiveLimit,
                   CostCounter* cost = nullptr);

Rat exact_bias(const CnfFormula& f, int limit = kDefaultExhaustiveLimit,
               CostCounter* cost = nullptr);

// The counting contract at accuracy delta. Backed by the exact counter at
// this scale, so the returned value is the true bias and satisfies any
// delta >= 0 vacuously.
BiasEstimate approx_bias(const CnfFormula& f, const Rat& delta,
                         int limit = kDefaultExhaustiveLimit, CostCounter* cost = nullptr);

// Compresses the masked bits of a word into a dense pattern (LSB = lowest
// set bit of the mask), via per-byte lookup tables.
class GatherOnMask {
 public:
  GatherOnMask(uint64_t mask, int word_bits);
  uint32_t operator()(uint64_t word) const {
    uint32_t q = 0;
    for (size_t b = 0; b < tables_.size(); ++b) q |= tables_[b][(word >> (8 * b)) & 0xffu];
    return q;
  }

 private:
  std::vector<std::vector<uint32_t>> tables_;
};

// Per-formula oracle handed to the stage-selection loop: batched bias
// estimates for all candidate fixings of one coordinate set.
class StageOracle {
 public:
  virtual ~StageOracle() = default;

  // Estimates of the bias of f|pi where pi fixes the variables in `mask`
  // (bit i-1 <-> variable i) to each `pattern` (bit j <-> j-th lowest set
  // bit of mask). One logical counter call per pattern.
  virtual std::vector<Rat> fiber_biases(uint64_t mask, std::span<const uint32_t> patterns,
                                        CostCounter& cost) = 0;
};

// Deterministic bias oracle with additive accuracy guarantee.
class BiasCounter {
 public:
  virtual ~BiasCounter() = default;
  virtual BiasEstimate bias(const CnfFormula& f, CostCounter& cost) const = 0;
  virtual Rat accuracy() const = 0;
  // Default oracle evaluates candidates one restriction at a time.
  virtual std::unique_ptr<StageOracle> make_stage_oracle(const CnfFormula& f) const;
};

// delta = 0: exact counting. The stage oracle builds the satisfying set of
// the stage formula once and answers all fiber queries from it.
class ExactCounter : public BiasCounter {
 public:
  explicit ExactCounter(int limit = kDefaultExhaustiveLimit) : limit_(limit) {}
  BiasEstimate bias(const CnfFormula& f, CostCounter& cost) const override;
  Rat accuracy() const override { return Rat(0); }
  std::unique_ptr<StageOracle> make_stage_oracle(const CnfFormula& f) const override;
  int limit() const { return limit_; }

 private:
  int limit_;
};

// Exact bias perturbed by a deterministic amount of magnitude <= delta,
// clamped to [0,1]. Down/Up shift by the full delta; Jitter derives both
// sign and magnitude from (seed, query digest). Stress-tests every
// consumer's tolerance to a worst-case legal counter.
enum class Skew { Down, Up, Jitter };

class AdversarialCounter : public BiasCounter {
 public:
  AdversarialCounter(Rat delta, Skew skew, uint64_t seed,
                     int limit = kDefaultExhaustiveLimit)
      : delta_(std::move(delta)), skew_(skew), seed_(seed), limit_(limit) {}
  BiasEstimate bias(const CnfFormula& f, CostCounter& cost) const override;
  Rat accuracy() const override { return delta_; }
  std::unique_ptr<StageOracle> make_stage_oracle(const CnfFormula& f) const override;

  Rat perturb(const Rat& exact, uint64_t digest) const;

 private:
  Rat delta_;
  Skew skew_;
  uint64_t seed_;
  int limit_;
};

// splitmix64; the library's only hash, used for all seeded derivations.
uint64_t mix64(uint64_t x);

}  // namespace dsearch
