// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dsearch/cnf.hpp"
#include "dsearch/exact.hpp"
#include "dsearch/prg.hpp"

namespace dsearch {

// p-regular distributions over subsets L of [n]: every coordinate lands in L
// with probability exactly p = 2^-a over the seed space. L is the set the
// stage will fix; the switching restriction stars L and fills [n]\L.
enum class StarFamily { Exhaustive, KwiseSelect, Blockwise };

StarFamily star_family_from_string(const std::string& name);
std::string to_string(StarFamily family);

class StarDistribution {
 public:
  // p = 2^-p_log2 (dyadic only). KwiseSelect takes the independence k.
  static StarDistribution make(int n, int p_log2, StarFamily family, int k = 2,
                               int seed_bit_limit = 26);

  // Degenerate single-set distribution (seed length 0). Not p-regular; a
  // fixture for pinning L in stage-level tests. p_log2 only sets the
  // conditioning threshold downstream.
  static StarDistribution point(int n, uint64_t mask, int p_log2 = 1);

  int length() const { return n_; }
  int p_log2() const { return a_; }
  Rat p() const { return rat_pow2(-a_); }
  StarFamily family() const { return family_; }
  int seed_bits() const { return seed_bits_; }
  uint64_t support_size() const { return uint64_t(1) << seed_bits_; }

  uint64_t sample_mask(uint64_t seed) const;  // subset L as a bitmask

  // Aggregated support, ordered by first appearance in seed order.
  struct Entry {
    uint64_t mask;
    uint64_t count;
    uint64_t first_seed;
  };
  const std::vector<Entry>& support() const { return support_; }

 private:
  StarDistribution() = default;

  int n_ = 0;
  int a_ = 0;
  StarFamily family_ = StarFamily::Exhaustive;
  int k_ = 2;
  int seed_bits_ = 0;
  int field_bits_ = 0;  // KwiseSelect
  int groups_ = 0;      // Blockwise
  std::optional<uint64_t> point_mask_;
  std::vector<Entry> support_;
};

// Serialization of star sets: sorted 1-based index list, e.g. "{1,4,7}".
std::string star_set_to_string(uint64_t mask, int n);

// The base distribution conditioned on |L| >= p*n/2. Base order preserved.
class ConditionedStars {
 public:
  explicit ConditionedStars(StarDistribution base);

  const StarDistribution& base() const { return base_; }
  int length() const { return base_.length(); }
  Rat p() const { return base_.p(); }
  Rat threshold() const { return p() * length() / 2; }
  const std::vector<StarDistribution::Entry>& support() const { return support_; }
  uint64_t surviving_count() const { return surviving_; }
  Rat survival_fraction() const {
    return Rat(BigInt(surviving_), BigInt(base_.support_size()));
  }

 private:
  StarDistribution base_;
  std::vector<StarDistribution::Entry> support_;
  uint64_t surviving_ = 0;
};

// R_gentle: draw L from the conditioned stars and y from the fill
// distribution; the outcome fixes L according to y and stars the rest, so
// every outcome fixes at least p*n/2 coordinates.
class GentleRestrictions {
 public:
  GentleRestrictions(ConditionedStars stars, std::shared_ptr<const EnumerableDistribution> fill);

  const ConditionedStars& stars() const { return stars_; }
  const EnumerableDistribution& fill() const { return *fill_; }
  int length() const { return stars_.length(); }
  BigInt support_size() const {
    return BigInt(stars_.surviving_count()) * BigInt(fill_->support_size());
  }

  static Restriction outcome(int n, uint64_t star_mask, uint64_t fill_mask);

 private:
  ConditionedStars stars_;
  std::shared_ptr<const EnumerableDistribution> fill_;
};

// Fraction of (L, rho) pairs -- L from the conditioned stars, rho uniform
// over {0,1}^([n]\L) -- whose restricted formula is syntactically narrow:
// width(F|rho) <= w'. Narrowness is a sufficient condition for the
// restricted function to have a width-w' lower 0-approximator (itself).
struct SwitchingReport {
  Rat fraction_simplified;
  int target_width = 0;
  enum class Method { SyntacticWidth, DecisionTreeDepth } method = Method::SyntacticWidth;
  bool sampled = false;  // true if rho was sampled rather than enumerated
};

struct SwitchingOptions {
  SwitchingReport::Method method = SwitchingReport::Method::SyntacticWidth;
  int exact_limit = 12;           // enumerate rho exactly up to this many fixed coords
  int samples_per_set = 256;      // rho samples beyond the limit
  uint64_t sample_seed = 1;
};

SwitchingReport switching_proxy_report(const CnfFormula& f, const ConditionedStars& stars,
                                       int w_prime, const SwitchingOptions& opts = {});

// Minimum decision-tree depth by memoized recursion; practical for n <= 6.
int decision_tree_depth(const CnfFormula& f);

}  // namespace dsearch
