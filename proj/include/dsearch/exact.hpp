// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dsearch {

// All biases, error budgets and probabilities in this library are exact
// rationals; floating point only appears in the parameter cost model.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt pow2(unsigned k) { return BigInt(1) << k; }

// 2^k as a rational, k may be negative.
inline Rat rat_pow2(int k) {
  if (k >= 0) return Rat(pow2(static_cast<unsigned>(k)));
  return Rat(1, pow2(static_cast<unsigned>(-k)));
}

// Every finite double is a dyadic rational; the conversion is exact.
inline Rat rat_from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("rat_from_double: non-finite value");
  if (v == 0.0) return Rat(0);
  int exp = 0;
  double mant = std::frexp(v, &exp);  // v = mant * 2^exp, |mant| in [0.5, 1)
  auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  return Rat(BigInt(scaled)) * rat_pow2(exp - 53);
}

inline double to_double(const Rat& r) { return static_cast<double>(r); }

// Smallest integer >= v, exact with respect to the double argument.
inline BigInt big_ceil(double v) {
  Rat r = rat_from_double(v);
  BigInt q = numerator(r) / denominator(r);  // truncates toward zero
  if (Rat(q) < r) ++q;
  return q;
}

// log2 of a positive big integer, safe far beyond double range.
inline double log2_big(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log2_big: non-positive argument");
  const unsigned bits = boost::multiprecision::msb(x);
  if (bits <= 900) return std::log2(static_cast<double>(x));
  const BigInt top = x >> (bits - 52);
  return static_cast<double>(bits - 52) + std::log2(static_cast<double>(top));
}

inline double log2_rat(const Rat& r) {
  return log2_big(numerator(r)) - log2_big(denominator(r));
}

inline std::string rat_to_string(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(BigInt(s));
  BigInt num(s.substr(0, slash));
  BigInt den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rat_parse: zero denominator");
  return Rat(num, den);
}

}  // namespace dsearch
