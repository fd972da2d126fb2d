// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

// Small random generators for the property tests.

#pragma once

#include <random>

#include "polyvec.hpp"
#include "scalar.hpp"
#include "welem.hpp"
#include "wfunction.hpp"

namespace kirillov::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return range(0, 1) == 1; }

  /// Small numerators; denominators mix powers of p with other primes.
  Rational rational(long p) {
    Rational r(range(-30, 30), range(1, 7));
    r.canonicalize();
    r *= ppow(p, range(-2, 2));
    return r;
  }

  Rational nonzero_rational(long p) {
    for (;;) {
      Rational r = rational(p);
      if (r != 0) return r;
    }
  }

  Scalar cyclotomic(long m, long p) {
    std::vector<Rational> c;
    const long d = euler_phi(m);
    for (long i = 0; i < d; ++i) c.push_back(coin() ? rational(p) : Rational(0));
    return Scalar::from_basis(m, c);
  }

  WElem welem(long p, int max_depth) {
    const int depth = static_cast<int>(range(0, max_depth));
    if (depth == 0) return WElem::zero(p);
    const long mod = ipow(p, static_cast<unsigned long>(depth)).get_si();
    Rational r(range(0, mod - 1), mod);
    r.canonicalize();
    return WElem::from_rational(p, r);
  }

  WFunction<Scalar> wfunction(long p, int max_depth, int terms) {
    WFunction<Scalar> f;
    for (int i = 0; i < terms; ++i) f.add(welem(p, max_depth), Scalar(Rational(range(-9, 9))));
    return f;
  }

  PolyVec polyvec(int n, long p) {
    PolyVec out(n);
    for (int i = 0; i <= n; ++i) out[static_cast<size_t>(i)] = Scalar(rational(p));
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace kirillov::testing
