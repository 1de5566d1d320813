// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "dsearch/cnf.hpp"
#include "dsearch/exact.hpp"

namespace dsearch {

// A generated CNF with a known witness and exactly computed bias; the test
// ground truth for every driver.
struct PlantedInstance {
  CnfFormula formula;
  Assignment witness;
  Rat true_bias;
  uint64_t seed = 0;
};

// Random k-CNF over n variables with M clauses, each steered to be satisfied
// by a hidden witness, resampled until the brute-forced bias reaches
// target_eps. Fully deterministic in the seed. Throws when the resample
// budget runs out (the (n, M, k, target) combination is infeasible).
PlantedInstance generate_planted(int n, int clause_target, int k, const Rat& target_eps,
                                 uint64_t seed, int max_resamples = 4000);

// Plain random k-CNF (no planting, no bias control); distinct variables per
// clause, random polarities. Deterministic in the seed.
CnfFormula random_cnf(int n, int clauses, int k, uint64_t seed);

}  // namespace dsearch
