// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#include "dsearch/stars.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "dsearch/counting.hpp"
#include "dsearch/gf2.hpp"

namespace dsearch {

StarFamily star_family_from_string(const std::string& name) {
  if (name == "exhaustive") return StarFamily::Exhaustive;
  if (name == "kwise-select") return StarFamily::KwiseSelect;
  if (name == "blockwise") return StarFamily::Blockwise;
  throw std::invalid_argument("unknown star family: " + name);
}

std::string to_string(StarFamily family) {
  switch (family) {
    case StarFamily::Exhaustive: return "exhaustive";
    case StarFamily::KwiseSelect: return "kwise-select";
    case StarFamily::Blockwise: return "blockwise";
  }
  return "?";
}

StarDistribution StarDistribution::make(int n, int p_log2, StarFamily family, int k,
                                        int seed_bit_limit) {
  if (n < 1 || n > 63) throw std::invalid_argument("star distribution: n out of range");
  if (p_log2 < 0) throw std::invalid_argument("star distribution: p must be a dyadic in (0,1]");
  StarDistribution d;
  d.n_ = n;
  d.a_ = p_log2;
  d.family_ = family;
  d.k_ = k;
  if (p_log2 == 0) {
    d.seed_bits_ = 0;  // p = 1: L = [n] for every seed
  } else {
    switch (family) {
      case StarFamily::Exhaustive:
        d.seed_bits_ = p_log2 * n;
        break;
      case StarFamily::KwiseSelect: {
        if (k < 1) throw std::invalid_argument("kwise-select: k must be >= 1");
        d.field_bits_ = std::max(p_log2, gf2::field_bits_for(static_cast<uint64_t>(n)));
        d.seed_bits_ = k * d.field_bits_;
        break;
      }
      case StarFamily::Blockwise:
        d.groups_ = (n + 3) / 4;  // contiguous blocks of four coordinates
        d.seed_bits_ = p_log2 * d.groups_;
        break;
    }
  }
  if (d.seed_bits_ > seed_bit_limit)
    throw LimitExceeded("star distribution: seed length " + std::to_string(d.seed_bits_) +
                        " exceeds enumeration limit " + std::to_string(seed_bit_limit));

  // aggregate the full support, first-seen seed order
  std::unordered_map<uint64_t, size_t> index;
  const uint64_t seeds = uint64_t(1) << d.seed_bits_;
  for (uint64_t s = 0; s < seeds; ++s) {
    const uint64_t mask = d.sample_mask(s);
    auto [it, inserted] = index.try_emplace(mask, d.support_.size());
    if (inserted)
      d.support_.push_back({mask, 1, s});
    else
      ++d.support_[it->second].count;
  }
  return d;
}

StarDistribution StarDistribution::point(int n, uint64_t mask, int p_log2) {
  if (n < 1 || n > 63) throw std::invalid_argument("star distribution: n out of range");
  StarDistribution d;
  d.n_ = n;
  d.a_ = p_log2;
  d.family_ = StarFamily::Exhaustive;
  d.seed_bits_ = 0;
  d.point_mask_ = mask & ((uint64_t(1) << n) - 1);
  d.support_.push_back({*d.point_mask_, 1, 0});
  return d;
}

uint64_t StarDistribution::sample_mask(uint64_t seed) const {
  if (point_mask_) return *point_mask_;
  const uint64_t all = (n_ >= 64) ? ~uint64_t(0) : ((uint64_t(1) << n_) - 1);
  if (a_ == 0) return all;
  uint64_t mask = 0;
  switch (family_) {
    case StarFamily::Exhaustive: {
      const uint64_t block = (uint64_t(1) << a_) - 1;
      for (int i = 0; i < n_; ++i)
        if (((seed >> (a_ * i)) & block) == 0) mask |= uint64_t(1) << i;
      break;
    }
    case StarFamily::KwiseSelect: {
      const uint32_t fmask = (1u << field_bits_) - 1;
      const uint32_t low = (1u << a_) - 1;
      for (int i = 0; i < n_; ++i) {
        uint32_t acc = 0;
        for (int j = k_ - 1; j >= 0; --j) {
          const auto coeff = static_cast<uint32_t>((seed >> (j * field_bits_)) & fmask);
          acc = gf2::mul(acc, static_cast<uint32_t>(i), field_bits_) ^ coeff;
        }
        if ((acc & low) == 0) mask |= uint64_t(1) << i;
      }
      break;
    }
    case StarFamily::Blockwise: {
      const uint64_t block = (uint64_t(1) << a_) - 1;
      for (int i = 0; i < n_; ++i)
        if (((seed >> (a_ * (i / 4))) & block) == 0) mask |= uint64_t(1) << i;
      break;
    }
  }
  return mask;
}

std::string star_set_to_string(uint64_t mask, int n) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if (!((mask >> i) & 1)) continue;
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

ConditionedStars::ConditionedStars(StarDistribution base) : base_(std::move(base)) {
  // |L| >= p*n/2  <=>  |L| * 2^(a+1) >= n, exactly
  const int n = base_.length();
  const int a = base_.p_log2();
  for (const auto& entry : base_.support()) {
    if ((static_cast<uint64_t>(std::popcount(entry.mask)) << (a + 1)) >=
        static_cast<uint64_t>(n)) {
      support_.push_back(entry);
      surviving_ += entry.count;
    }
  }
  if (support_.empty())
    throw std::runtime_error("conditioned star support is empty (degenerate base family)");
}

GentleRestrictions::GentleRestrictions(ConditionedStars stars,
                                       std::shared_ptr<const EnumerableDistribution> fill)
    : stars_(std::move(stars)), fill_(std::move(fill)) {
  if (!fill_) throw std::invalid_argument("gentle restrictions: missing fill distribution");
  if (fill_->length() != stars_.length())
    throw std::invalid_argument("gentle restrictions: dimension mismatch");
}

Restriction GentleRestrictions::outcome(int n, uint64_t star_mask, uint64_t fill_mask) {
  Restriction pi = Restriction::all_stars(n);
  for (int v = 1; v <= n; ++v)
    if ((star_mask >> (v - 1)) & 1) pi.fix(v, (fill_mask >> (v - 1)) & 1);
  return pi;
}

namespace {

// rho fixes the coordinates of fixed_mask according to bits, ascending.
Restriction complement_restriction(int n, uint64_t fixed_mask, uint64_t bits) {
  Restriction rho = Restriction::all_stars(n);
  int j = 0;
  for (int v = 1; v <= n; ++v) {
    if (!((fixed_mask >> (v - 1)) & 1)) continue;
    rho.fix(v, (bits >> j) & 1);
    ++j;
  }
  return rho;
}

bool simplifies(const CnfFormula& f, const Restriction& rho, int w_prime,
                SwitchingReport::Method method) {
  const CnfFormula g = f.restricted(rho);
  if (method == SwitchingReport::Method::SyntacticWidth) return g.width() <= w_prime;
  return decision_tree_depth(g) <= w_prime;
}

}  // namespace

SwitchingReport switching_proxy_report(const CnfFormula& f, const ConditionedStars& stars,
                                       int w_prime, const SwitchingOptions& opts) {
  if (f.variable_count() != stars.length())
    throw std::invalid_argument("switching report: dimension mismatch");
  const int n = f.variable_count();
  SwitchingReport report;
  report.target_width = w_prime;
  report.method = opts.method;
  const uint64_t all = (uint64_t(1) << n) - 1;
  Rat weighted;
  for (const auto& entry : stars.support()) {
    const uint64_t fixed_mask = all & ~entry.mask;
    const int fixed = std::popcount(fixed_mask);
    if (fixed <= opts.exact_limit) {
      uint64_t good = 0;
      for (uint64_t bits = 0; bits < (uint64_t(1) << fixed); ++bits)
        good += simplifies(f, complement_restriction(n, fixed_mask, bits), w_prime, opts.method);
      weighted += Rat(BigInt(entry.count) * BigInt(good), pow2(static_cast<unsigned>(fixed)));
    } else {
      report.sampled = true;
      uint64_t good = 0;
      for (int s = 0; s < opts.samples_per_set; ++s) {
        const uint64_t bits =
            mix64(opts.sample_seed ^ mix64(entry.first_seed ^ static_cast<uint64_t>(s)));
        good += simplifies(f, complement_restriction(n, fixed_mask, bits), w_prime, opts.method);
      }
      weighted += Rat(BigInt(entry.count) * BigInt(good), BigInt(opts.samples_per_set));
    }
  }
  report.fraction_simplified = weighted / Rat(BigInt(stars.surviving_count()));
  return report;
}

int decision_tree_depth(const CnfFormula& f) {
  const std::vector<int> vars = f.occurring_vars();
  const int o = static_cast<int>(vars.size());
  if (o > 6) throw LimitExceeded("decision_tree_depth: more than 6 occurring variables");
  if (f.has_empty_clause()) return 0;
  // truth table over the occurring variables
  uint64_t table = 0;
  for (uint64_t m = 0; m < (uint64_t(1) << o); ++m) {
    uint64_t full = 0;
    for (int j = 0; j < o; ++j)
      if ((m >> j) & 1) full |= uint64_t(1) << (vars[j] - 1);
    if (f.evaluate_mask(full)) table |= uint64_t(1) << m;
  }
  std::map<std::pair<int, uint64_t>, int> memo;
  auto rec = [&](auto&& self, int arity, uint64_t t) -> int {
    const uint64_t full = (arity == 6) ? ~uint64_t(0) : ((uint64_t(1) << (1 << arity)) - 1);
    t &= full;
    if (t == 0 || t == full) return 0;
    auto it = memo.find({arity, t});
    if (it != memo.end()) return it->second;
    int best = arity;
    for (int j = 0; j < arity; ++j) {
      // split the table on variable j
      uint64_t lo = 0, hi = 0;
      int lo_at = 0, hi_at = 0;
      for (uint64_t m = 0; m < (uint64_t(1) << arity); ++m) {
        const bool bit = (t >> m) & 1;
        if ((m >> j) & 1)
          hi |= uint64_t(bit) << hi_at++;
        else
          lo |= uint64_t(bit) << lo_at++;
      }
      const int d = 1 + std::max(self(self, arity - 1, lo), self(self, arity - 1, hi));
      best = std::min(best, d);
      if (best == 1) break;
    }
    memo[{arity, t}] = best;
    return best;
  };
  return rec(rec, o, table);
}

}  // namespace dsearch
