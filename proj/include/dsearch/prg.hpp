// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dsearch/cnf.hpp"
#include "dsearch/counting.hpp"
#include "dsearch/exact.hpp"

namespace dsearch {

// A seeded, fully enumerable uniform distribution over a multiset of 2^r
// strings in {0,1}^n. sample() is total and deterministic; bit i-1 of the
// returned mask holds coordinate i.
class EnumerableDistribution {
 public:
  virtual ~EnumerableDistribution() = default;

  int length() const { return n_; }     // n
  int seed_bits() const { return r_; }  // r
  uint64_t support_size() const { return uint64_t(1) << r_; }

  virtual uint64_t sample(uint64_t seed) const = 0;

  // True for the identity generator; callers may then treat seed == output.
  virtual bool is_identity_uniform() const { return false; }

 protected:
  EnumerableDistribution(int n, int r);

  int n_;
  int r_;
};

// r = n, generator = identity.
class UniformDistribution final : public EnumerableDistribution {
 public:
  explicit UniformDistribution(int n, int limit = kDefaultExhaustiveLimit);
  uint64_t sample(uint64_t seed) const override { return seed; }
  bool is_identity_uniform() const override { return true; }
};

// Every k coordinates exactly uniform: output bit i is the low bit of a
// degree-(k-1) polynomial over GF(2^b), 2^b >= n, evaluated at point i-1;
// the seed is the k coefficients. r = k*b.
class KwiseDistribution final : public EnumerableDistribution {
 public:
  KwiseDistribution(int n, int k);
  uint64_t sample(uint64_t seed) const override;
  int independence() const { return k_; }
  int field_bits() const { return field_bits_; }

 private:
  int k_;
  int field_bits_;
};

// Powering construction: seed = (alpha, beta) in GF(2^m)^2, output bit i is
// the F2 inner product <alpha^i, beta>, i = 0..n-1. Every nonempty XOR of
// coordinates has bias at most (n-1)/2^m <= delta. r = 2m.
class SmallBiasDistribution final : public EnumerableDistribution {
 public:
  SmallBiasDistribution(int n, const Rat& delta);
  uint64_t sample(uint64_t seed) const override;
  int field_bits() const { return m_; }
  const Rat& target_bias() const { return delta_; }

 private:
  int m_;
  Rat delta_;
};

// r = 0; every seed yields the same point. Test fixture.
class PointMassDistribution final : public EnumerableDistribution {
 public:
  PointMassDistribution(int n, uint64_t point) : EnumerableDistribution(n, 0), point_(point) {}
  uint64_t sample(uint64_t) const override { return point_; }

 private:
  uint64_t point_;
};

// E_D[F], exact over the full seed space.
Rat distribution_mean(const EnumerableDistribution& d, const CnfFormula& f);

struct FoolingReport {
  Rat measured_error;        // max over corpus of |E_D[F] - E_U[F]|
  size_t worst_index = 0;    // argmax position in the corpus
  int width_bound = 0;       // class descriptor: max clause width seen
  size_t corpus_size = 0;
};

FoolingReport measure_fooling_error(const EnumerableDistribution& d,
                                    std::span<const CnfFormula> corpus,
                                    int limit = kDefaultExhaustiveLimit);

// max over nonempty S of |E_D[(-1)^{XOR_S x}]|, via one Walsh-Hadamard
// transform of the support histogram. n <= 24.
Rat max_xor_bias(const EnumerableDistribution& d);

// One bit string per line, seed order; for cross-implementation diffing.
void dump_support(const EnumerableDistribution& d, std::ostream& out);

}  // namespace dsearch
