// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#include "dsearch/prg.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>

#include "dsearch/gf2.hpp"

namespace dsearch {

EnumerableDistribution::EnumerableDistribution(int n, int r) : n_(n), r_(r) {
  if (n < 1 || n > 63) throw std::invalid_argument("distribution length out of range");
  if (r < 0 || r > 40) throw LimitExceeded("seed length too large to enumerate");
}

UniformDistribution::UniformDistribution(int n, int limit) : EnumerableDistribution(n, n) {
  if (n > limit) throw LimitExceeded("uniform distribution exceeds exhaustive limit");
}

KwiseDistribution::KwiseDistribution(int n, int k)
    : EnumerableDistribution(n, k * gf2::field_bits_for(static_cast<uint64_t>(n))),
      k_(k),
      field_bits_(gf2::field_bits_for(static_cast<uint64_t>(n))) {
  if (k < 1 || k > n) throw std::invalid_argument("k-wise: need 1 <= k <= n");
}

uint64_t KwiseDistribution::sample(uint64_t seed) const {
  const uint32_t fmask = (1u << field_bits_) - 1;
  uint64_t out = 0;
  for (int i = 0; i < n_; ++i) {
    const auto point = static_cast<uint32_t>(i);
    // Horner evaluation, highest coefficient first
    uint32_t acc = 0;
    for (int j = k_ - 1; j >= 0; --j) {
      const auto coeff = static_cast<uint32_t>((seed >> (j * field_bits_)) & fmask);
      acc = gf2::mul(acc, point, field_bits_) ^ coeff;
    }
    out |= static_cast<uint64_t>(acc & 1u) << i;
  }
  return out;
}

namespace {

int smallbias_field_bits(int n, const Rat& delta) {
  if (delta <= 0) throw std::invalid_argument("small-bias: delta must be positive");
  // smallest m with (n-1)/2^m <= delta
  int m = 1;
  while (Rat(n - 1, pow2(static_cast<unsigned>(m))) > delta) {
    if (++m > 20) throw LimitExceeded("small-bias: seed length too large to enumerate");
  }
  return m;
}

}  // namespace

SmallBiasDistribution::SmallBiasDistribution(int n, const Rat& delta)
    : EnumerableDistribution(n, 2 * smallbias_field_bits(n, delta)),
      m_(smallbias_field_bits(n, delta)),
      delta_(delta) {}

uint64_t SmallBiasDistribution::sample(uint64_t seed) const {
  const uint32_t fmask = (1u << m_) - 1;
  const auto alpha = static_cast<uint32_t>(seed & fmask);
  const auto beta = static_cast<uint32_t>((seed >> m_) & fmask);
  uint64_t out = 0;
  uint32_t power = 1;  // alpha^0
  for (int i = 0; i < n_; ++i) {
    out |= static_cast<uint64_t>(std::popcount(power & beta) & 1) << i;
    power = gf2::mul(power, alpha, m_);
  }
  return out;
}

Rat distribution_mean(const EnumerableDistribution& d, const CnfFormula& f) {
  if (f.variable_count() != d.length())
    throw std::invalid_argument("distribution_mean: dimension mismatch");
  uint64_t sat = 0;
  for (uint64_t s = 0; s < d.support_size(); ++s) sat += f.evaluate_mask(d.sample(s));
  return Rat(BigInt(sat), BigInt(d.support_size()));
}

FoolingReport measure_fooling_error(const EnumerableDistribution& d,
                                    std::span<const CnfFormula> corpus, int limit) {
  if (d.length() > limit) throw LimitExceeded("fooling measurement exceeds exhaustive limit");
  FoolingReport report;
  report.corpus_size = corpus.size();
  for (size_t i = 0; i < corpus.size(); ++i) {
    const CnfFormula& f = corpus[i];
    report.width_bound = std::max(report.width_bound, f.width());
    Rat err = distribution_mean(d, f) - exact_bias(f, limit);
    if (err < 0) err = -err;
    if (err > report.measured_error) {
      report.measured_error = err;
      report.worst_index = i;
    }
  }
  return report;
}

Rat max_xor_bias(const EnumerableDistribution& d) {
  const int n = d.length();
  if (n > kDefaultExhaustiveLimit) throw LimitExceeded("xor bias check: n too large");
  std::vector<int64_t> h(uint64_t(1) << n, 0);
  for (uint64_t s = 0; s < d.support_size(); ++s) ++h[d.sample(s)];
  // in-place Walsh-Hadamard transform
  for (int bit = 0; bit < n; ++bit) {
    const uint64_t half = uint64_t(1) << bit;
    for (uint64_t x = 0; x < h.size(); ++x) {
      if (x & half) continue;
      const int64_t a = h[x], b = h[x | half];
      h[x] = a + b;
      h[x | half] = a - b;
    }
  }
  int64_t worst = 0;
  for (uint64_t s = 1; s < h.size(); ++s) worst = std::max(worst, h[s] < 0 ? -h[s] : h[s]);
  return Rat(BigInt(worst), BigInt(d.support_size()));
}

void dump_support(const EnumerableDistribution& d, std::ostream& out) {
  for (uint64_t s = 0; s < d.support_size(); ++s) {
    uint64_t x = d.sample(s);
    std::string line(d.length(), '0');
    for (int i = 0; i < d.length(); ++i)
      if ((x >> i) & 1) line[i] = '1';
    out << line << "\n";
  }
}

}  // namespace dsearch
