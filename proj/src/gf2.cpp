// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#include "dsearch/gf2.hpp"

#include <stdexcept>

namespace dsearch::gf2 {

namespace {

// Minimal-weight irreducible polynomials over GF(2), index = degree.
constexpr uint32_t kModuli[kMaxFieldBits + 1] = {
    0,
    0x3,      // x + 1
    0x7,      // x^2 + x + 1
    0xB,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x83,     // x^7 + x + 1
    0x11B,    // x^8 + x^4 + x^3 + x + 1
    0x211,    // x^9 + x^4 + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1053,   // x^12 + x^6 + x^4 + x + 1
    0x201B,   // x^13 + x^4 + x^3 + x + 1
    0x4443,   // x^14 + x^10 + x^6 + x + 1
    0x8003,   // x^15 + x + 1
    0x1100B,  // x^16 + x^12 + x^3 + x + 1
};

void check_bits(int bits) {
  if (bits < 1 || bits > kMaxFieldBits) throw std::invalid_argument("gf2: unsupported field width");
}

}  // namespace

uint32_t modulus(int bits) {
  check_bits(bits);
  return kModuli[bits];
}

uint32_t mul(uint32_t a, uint32_t b, int bits) {
  check_bits(bits);
  const uint32_t mod = kModuli[bits];
  const uint32_t high = 1u << bits;
  uint32_t acc = 0;
  while (b != 0) {
    if (b & 1u) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a & high) a ^= mod;
  }
  return acc;
}

uint32_t pow(uint32_t a, uint64_t e, int bits) {
  check_bits(bits);
  uint32_t acc = 1;
  while (e != 0) {
    if (e & 1u) acc = mul(acc, a, bits);
    a = mul(a, a, bits);
    e >>= 1;
  }
  return acc;
}

int field_bits_for(uint64_t min_size) {
  int b = 1;
  while ((uint64_t(1) << b) < min_size) {
    ++b;
    if (b > kMaxFieldBits) throw std::invalid_argument("gf2: field too large");
  }
  return b;
}

bool field_sane(int bits) {
  check_bits(bits);
  const uint32_t mod = kModuli[bits];
  // Trial division by every polynomial of degree 1..bits/2.
  auto degree = [](uint32_t poly) {
    int d = -1;
    while (poly) {
      ++d;
      poly >>= 1;
    }
    return d;
  };
  for (int d = 1; 2 * d <= bits; ++d) {
    for (uint32_t cand = (1u << d); cand < (2u << d); ++cand) {
      uint32_t rem = mod;
      while (degree(rem) >= d) rem ^= cand << (degree(rem) - d);
      if (rem == 0) return false;
    }
  }
  return true;
}

}  // namespace dsearch::gf2
