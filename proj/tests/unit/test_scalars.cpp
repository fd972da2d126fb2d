// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <set>

#include "character.hpp"
#include "errors.hpp"
#include "gen.hpp"
#include "linsolve.hpp"
#include "valuation.hpp"

using namespace kirillov;
using kirillov::testing::Gen;

TEST_CASE("rational valuations count factors of p") {
  const EmbeddingOracle oracle(5);
  CHECK(oracle.valuation(Scalar(50)) == Valuation(2));
  CHECK(oracle.valuation(Scalar(Rational(3, 5))) == Valuation(-1));
  CHECK(oracle.valuation(Scalar(0)).is_infinite());
}

TEST_CASE("zeta_4 - 2 has valuation 1 at p = 5") {
  // zeta_4 goes to the Teichmuller lift of 2; that lift is 7 mod 25.
  const EmbeddingOracle oracle(5);
  CHECK(oracle.hensel_seed(4) == 2);
  CHECK(oracle.unit_root(4, 2) == 7);
  CHECK(oracle.valuation(Scalar::root_of_unity(4, 1) - Scalar(2)) == Valuation(1));
  CHECK(oracle.valuation(Scalar::root_of_unity(4, 1) - Scalar(7)) >= Valuation(2));
}

TEST_CASE("uniformizers of cyclotomic towers") {
  const EmbeddingOracle o5(5), o3(3), o2(2);
  CHECK(o5.valuation(Scalar::root_of_unity(5, 1) - Scalar(1)) == Valuation(Rational(1, 4)));
  CHECK(o5.valuation(Scalar::root_of_unity(25, 1) - Scalar(1)) == Valuation(Rational(1, 20)));
  CHECK(o3.valuation(Scalar::root_of_unity(9, 2) - Scalar(1)) == Valuation(Rational(1, 6)));
  CHECK(o2.valuation(Scalar::root_of_unity(8, 1) - Scalar(1)) == Valuation(Rational(1, 4)));
  // zeta_20 - zeta_4 = zeta_4 (zeta_5 - 1) after choosing compatible roots.
  const Scalar z20 = Scalar::root_of_unity(20, 1);
  CHECK(o5.valuation(z20.pow(5) - Scalar::root_of_unity(4, 1)) .is_infinite());
  CHECK(o5.valuation(z20.pow(4) - Scalar(1)) == Valuation(Rational(1, 4)));
  // Units of mixed conductor.
  CHECK(o5.valuation(z20 * Scalar(Rational(3, 25))) == Valuation(-2));
}

TEST_CASE("precision cap raises AmbiguousValuation") {
  const EmbeddingOracle small(5, 8, 16);
  const Scalar x = Scalar(ppow(5, 20)) * (Scalar::root_of_unity(4, 1) + Scalar(1));
  CHECK_THROWS_AS(small.valuation(x), Error);
  try {
    small.valuation(x);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ambiguous_valuation);
  }
  const EmbeddingOracle big(5);
  CHECK(big.valuation(x) == Valuation(20));
}

TEST_CASE("field axioms on random cyclotomic scalars") {
  Gen g(11);
  const long moduli[] = {1, 3, 4, 5, 12, 20, 25};
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar a = g.cyclotomic(moduli[g.range(0, 6)], 5);
    const Scalar b = g.cyclotomic(moduli[g.range(0, 6)], 5);
    const Scalar c = g.cyclotomic(moduli[g.range(0, 6)], 5);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == Scalar(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
  }
}

TEST_CASE("cyclotomic identities") {
  for (long m : {3L, 4L, 5L, 9L, 12L, 20L, 25L}) {
    Scalar s(0);
    for (long k = 0; k < m; ++k) s += Scalar::root_of_unity(m, k);
    CHECK(s.is_zero());
    CHECK(Scalar::root_of_unity(m, 1).pow(m) == Scalar(1));
    CHECK(Scalar::root_of_unity(m, 3).lifted(2 * m) == Scalar::root_of_unity(2 * m, 6));
  }
  // zeta_4^2 = -1 demotes to the rationals.
  const Scalar minus_one = Scalar::root_of_unity(4, 1).pow(2);
  CHECK(minus_one.is_rational());
  CHECK(minus_one == Scalar(-1));
}

TEST_CASE("ultrametric inequality on random pairs") {
  Gen g(12);
  const EmbeddingOracle oracle(5);
  const long moduli[] = {1, 4, 5, 20, 25};
  int strict_cases = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Scalar x = g.cyclotomic(moduli[g.range(0, 4)], 5);
    const Scalar y = g.cyclotomic(moduli[g.range(0, 4)], 5);
    const Valuation vx = oracle.valuation(x), vy = oracle.valuation(y), vs = oracle.valuation(x + y);
    CHECK(vs >= min(vx, vy));
    if (vx != vy) {
      CHECK(vs == min(vx, vy));
      ++strict_cases;
    }
    CHECK(oracle.valuation(x * y) == vx + vy);
  }
  CHECK(strict_cases > 100);
}

TEST_CASE("doubling the working precision never moves a finite valuation") {
  Gen g(13);
  const EmbeddingOracle oracle(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar x = g.cyclotomic(trial % 2 ? 20 : 25, 5);
    if (x.is_zero()) continue;
    const auto v64 = oracle.try_valuation(x, 64);
    const auto v128 = oracle.try_valuation(x, 128);
    REQUIRE(v64.has_value());
    REQUIRE(v128.has_value());
    CHECK(*v64 == *v128);
  }
}

TEST_CASE("quadratic Gauss sums") {
  SUBCASE("p = 5") {
    const FieldParams f = FieldParams::desk(5);
    const CharacterSpec eps = CharacterSpec::from_exponent(f, 1, 2, Scalar(1));
    CHECK(eps.value(2) == Scalar(-1));
    const Scalar tau = gauss_sum(eps, f);
    CHECK(tau * tau == Scalar(5));
    CHECK(EmbeddingOracle(5).valuation(tau) == Valuation(Rational(1, 2)));
  }
  SUBCASE("p = 3") {
    const FieldParams f = FieldParams::desk(3);
    const CharacterSpec eps = CharacterSpec::from_exponent(f, 1, 1, Scalar(1));
    CHECK(eps.value(2) == Scalar(-1));
    const Scalar tau = gauss_sum(eps, f);
    CHECK(tau * tau == Scalar(-3));
  }
}

TEST_CASE("Gauss sum product identity for every tame character") {
  for (long p : {3L, 5L, 7L}) {
    const FieldParams f = FieldParams::desk(p);
    for (const auto& eps : characters_of_conductor(f, 1)) {
      const Scalar lhs = gauss_sum(eps, f) * gauss_sum(eps.inverse(), f);
      CHECK(lhs == eps.value(p - 1) * Scalar(p));
    }
  }
}

TEST_CASE("tame Gauss sum valuations follow Stickelberger") {
  // Independent check of the embedding: over all nontrivial tame characters,
  // the valuations of tau are exactly a/(p-1), a = 1..p-2.
  for (long p : {3L, 5L, 7L}) {
    const FieldParams f = FieldParams::desk(p);
    const EmbeddingOracle oracle(p);
    std::set<Rational> seen;
    for (const auto& eps : characters_of_conductor(f, 1)) seen.insert(oracle.valuation(gauss_sum(eps, f)).value());
    std::set<Rational> expected;
    for (long a = 1; a <= p - 2; ++a) {
      Rational r(a, p - 1);
      r.canonicalize();
      expected.insert(r);
    }
    CHECK(seen == expected);
  }
}

TEST_CASE("wild Gauss sums satisfy the product identity") {
  const FieldParams f = FieldParams::desk(5);
  int count = 0;
  for (const auto& eps : characters_of_conductor(f, 2)) {
    if (++count > 6) break;
    CHECK(gauss_sum(eps, f) * gauss_sum(eps.inverse(), f) == eps.value(24) * Scalar(25));
  }
  CHECK(count > 0);
}

TEST_CASE("gauss_sum rejects unramified characters") {
  const FieldParams f = FieldParams::desk(5);
  CHECK_THROWS_AS(gauss_sum(CharacterSpec::unramified(f, Scalar(1)), f), Error);
}

TEST_CASE("characters are homomorphisms with the stated conductor") {
  for (long p : {2L, 3L, 5L}) {
    const FieldParams f = FieldParams::desk(p);
    for (int nu = 1; nu <= (p == 2 ? 4 : 2); ++nu) {
      for (const auto& eps : characters_of_conductor(f, nu)) {
        const long mod = eps.modulus();
        for (long a : eps.units())
          for (long b : eps.units()) CHECK(eps.value(a * b % mod) == eps.value(a) * eps.value(b));
        CHECK(eps.conductor() == nu);
      }
    }
  }
}

TEST_CASE("solve_linear") {
  SUBCASE("identity") {
    Matrix a{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}};
    const auto sol = solve_linear(a, {Scalar(3), Scalar(Rational(2, 7))});
    CHECK(sol.particular == std::vector<Scalar>{Scalar(3), Scalar(Rational(2, 7))});
    CHECK(sol.kernel.empty());
  }
  SUBCASE("zero 1x1") {
    Matrix a{{Scalar(0)}};
    const auto sol = solve_linear(a, {Scalar(0)});
    CHECK(sol.kernel.size() == 1);
    CHECK_THROWS_AS(solve_linear(a, {Scalar(1)}), Error);
  }
  SUBCASE("random 4x6 systems, residual check") {
    Gen g(14);
    for (int trial = 0; trial < 50; ++trial) {
      Matrix a(4, std::vector<Scalar>(6));
      for (auto& row : a)
        for (auto& x : row) x = g.coin() ? Scalar(g.rational(5)) : g.cyclotomic(4, 5);
      std::vector<Scalar> x0(6);
      for (auto& x : x0) x = Scalar(g.rational(5));
      std::vector<Scalar> b(4, Scalar(0));
      for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 6; ++j) b[i] += a[i][j] * x0[j];
      const auto sol = solve_linear(a, b);
      for (size_t i = 0; i < 4; ++i) {
        Scalar r(0);
        for (size_t j = 0; j < 6; ++j) r += a[i][j] * sol.particular[j];
        CHECK(r == b[i]);
        for (const auto& k : sol.kernel) {
          Scalar z(0);
          for (size_t j = 0; j < 6; ++j) z += a[i][j] * k[j];
          CHECK(z.is_zero());
        }
      }
      CHECK(sol.kernel.size() >= 2);
    }
  }
}
