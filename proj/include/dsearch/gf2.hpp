// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace dsearch::gf2 {

// Fields GF(2^b) for 1 <= b <= 16, elements packed into the low b bits of a
// uint32_t. Multiplication is shift-and-xor followed by reduction modulo a
// fixed irreducible polynomial per width (see gf2.cpp; irreducibility is
// verified by the unit tests, not assumed).

inline constexpr int kMaxFieldBits = 16;

// Irreducible modulus for GF(2^b), bit b set.
uint32_t modulus(int bits);

uint32_t mul(uint32_t a, uint32_t b, int bits);

inline uint32_t add(uint32_t a, uint32_t b) { return a ^ b; }

// a^e by square-and-multiply.
uint32_t pow(uint32_t a, uint64_t e, int bits);

// Smallest b with 2^b >= min_size (at least 1).
int field_bits_for(uint64_t min_size);

// True iff modulus(bits) really defines a field: x^(2^b) == x mod the
// modulus and x^(2^(b/q)) != x for every prime q dividing b.
bool field_sane(int bits);

}  // namespace dsearch::gf2
