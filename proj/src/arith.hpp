// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

// Integer and rational helpers shared by every module.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace kirillov {

using Integer = mpz_class;
using Rational = mpq_class;

bool is_prime(long n);

/// p-adic valuation of a nonzero integer.
long vp(const Integer& x, long p);
/// p-adic valuation of a nonzero rational.
long vp(const Rational& x, long p);

Integer ipow(long base, unsigned long exp);
Rational rpow(const Rational& base, long exp);
/// p^e as a rational, e may be negative.
Rational ppow(long p, long e);

long gcd_l(long a, long b);
long lcm_l(long a, long b);
long euler_phi(long n);
std::vector<long> divisors(long n);

/// Multiplicative order of a modulo n (gcd(a,n)=1).
long mult_order(long a, long n);
/// Inverse of a modulo n, result in [0, n).
long inv_mod(long a, long n);
/// Non-negative remainder.
inline long mod_l(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

/// Reduce a rational r with v_p(denominator) <= k... into Z/p^k, requires the
/// p-free part of the denominator to be invertible mod p^k.
Integer rational_mod(const Rational& r, const Integer& modulus);

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

}  // namespace kirillov
