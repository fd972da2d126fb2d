// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "errors.hpp"
#include "expansion.hpp"
#include "fixtures.hpp"
#include "gen.hpp"
#include "operators.hpp"
#include "pointwise.hpp"
#include "search.hpp"
#include "solver.hpp"

using namespace kirillov;
using kirillov::testing::Gen;

namespace {

const EmbeddingOracle oracle5(5);

struct NamedParams {
  const char* name;
  RepParams params;
};

std::vector<NamedParams> regimes_p5() {
  using namespace kirillov::testing;
  return {
      {"unramified boundary n=1", unramified(5, 1, 0, 1, Rational(1, 25))},
      {"unramified interior n=1", unramified(5, 1, 0, Rational(1, 5), Rational(2, 5))},
      {"unramified n=2 m=1", unramified(5, 2, 1, Rational(1, 5), Rational(1, 625))},
      {"degenerate n=1", degenerate(5, 1, 0, Scalar(Rational(1, 5)))},
      {"degenerate n=0", degenerate(5, 0, 0, scalar_with_valuation(5, Rational(-1, 2)))},
      {"tame", ramified(5, 1, 0, 0, Scalar(1), Scalar(Rational(1, 5)))},
      {"tame m=1", ramified(5, 1, 2, 1, Scalar(Rational(1, 5)), Scalar(Rational(1, 25)))},
      {"wild", ramified(5, 2, 3, 0, Scalar(5), Scalar(Rational(1, 25)))},
  };
}

GeneratorCoeffs single(long p, int n, int k, const WElem& beta, const PolyVec& prime, const PolyVec& second) {
  GeneratorCoeffs c(p, n);
  c.set(k, beta, prime, second);
  return c;
}

Rational random_unit(Gen& g, long p) {
  for (;;) {
    Rational u(g.range(1, 40), g.range(1, 9));
    u.canonicalize();
    if (vp(u, p) == 0) return u;
  }
}

}  // namespace

TEST_CASE("expand: a single generator at level 0 gives a geometric row") {
  const auto params = kirillov::testing::unramified(5, 0, 0, 3, Rational(1, 15));
  const auto table = expand(single(5, 0, 0, WElem::zero(5), PolyVec::constant(0, 1), PolyVec(0)), params, 4);
  for (int l = 0; l <= 4; ++l) {
    REQUIRE(table.row(l).size() == 1);
    CHECK(*table.row(l).find(WElem::zero(5)) == PolyVec::constant(0, Scalar(3).pow(l)));
  }
  CHECK(table.row(-1).empty());
}

TEST_CASE("expand: a frequency is pushed forward by pi each level") {
  const auto params = kirillov::testing::unramified(5, 0, 0, 1, Rational(2, 5));
  const WElem beta = WElem::parse(5, "7/25");
  const auto table = expand(single(5, 0, -2, beta, PolyVec(0), PolyVec::constant(0, 1)), params, 0);
  CHECK(table.row(-2).find(beta) != nullptr);
  CHECK(*table.row(-1).find(WElem::parse(5, "2/5")) == PolyVec::constant(0, Scalar(Rational(2, 5))));
  CHECK(*table.row(0).find(WElem::zero(5)) == PolyVec::constant(0, Scalar(Rational(4, 25))));
}

TEST_CASE("closed form agrees with the single-step recursion") {
  for (const auto& [name, params] : regimes_p5()) {
    CAPTURE(name);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      const auto coeffs = random_valid_coeffs(params, rng, -3, 1, 2, 5);
      CHECK(same_rows(expand(coeffs, params, 2), expand_closed_form(coeffs, params, 2)));
    }
  }
}

TEST_CASE("two-step identities hold on random inputs") {
  for (const auto& [name, params] : regimes_p5()) {
    CAPTURE(name);
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
      const auto coeffs = random_valid_coeffs(params, rng, -3, 1, 2, 5);
      const auto table = expand(coeffs, params, 3);
      const auto v = verify_two_step(table, params);
      CHECK_MESSAGE(!v.has_value(), "level ", v ? v->level : 0);
      if (params.regime() == Regime::degenerate) CHECK(!verify_degenerate_second(table, params).has_value());
    }
  }
}

TEST_CASE("degenerate regime: the first C'' row vanishes") {
  const auto params = kirillov::testing::degenerate(5, 1, 0, Scalar(Rational(1, 5)));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto coeffs = random_valid_coeffs(params, rng, -2, 0, 2, 4);
    const auto table = expand(coeffs, params, 2);
    CHECK(AmplitudeTable::at(table.second, table.k0).empty());
  }
  CHECK_THROWS_AS(verify_degenerate_second(expand(GeneratorCoeffs(5, 0), kirillov::testing::unramified(5, 0, 0, 1, Rational(2, 5))),
                                           kirillov::testing::unramified(5, 0, 0, 1, Rational(2, 5))),
                  Error);
}

TEST_CASE("an injected fault is pinpointed") {
  const auto params = kirillov::testing::unramified(5, 1, 0, 1, Rational(1, 25));
  std::mt19937_64 rng(5);
  const auto coeffs = random_valid_coeffs(params, rng, -2, 1, 1, 4);
  auto table = expand(coeffs, params, 3);
  REQUIRE(!verify_two_step(table, params).has_value());
  const WElem gamma = WElem::parse(5, "3/5");
  table.total[2].add(gamma, PolyVec::constant(1, 1));
  const auto v = verify_two_step(table, params);
  REQUIRE(v.has_value());
  CHECK(v->level == 1);
  CHECK(v->gamma == gamma);
}

TEST_CASE("vanishing off the integers") {
  const auto params = kirillov::testing::unramified(5, 0, 0, 1, Rational(2, 5));
  std::mt19937_64 rng(8);
  CHECK(vanishes_outside_integers(expand(random_valid_coeffs(params, rng, 0, 2, 2, 5), params), params.field()));
  const auto bad = single(5, 0, -1, WElem::zero(5), PolyVec::constant(0, 1), PolyVec(0));
  CHECK_FALSE(vanishes_outside_integers(expand(bad, params), params.field()));
}

TEST_CASE("solve_vanishing: small cases") {
  const auto params = kirillov::testing::unramified(5, 0, 0, 1, Rational(2, 5));
  CHECK(solve_vanishing(SupportTemplate{}, params, oracle5).basis.empty());

  const auto free = solve_vanishing(SupportTemplate::box(5, 0, 1, 1), params, oracle5);
  CHECK(free.constraints == 0);
  CHECK(free.basis.size() == free.unknowns);
  for (const auto& b : free.basis) CHECK(b.entries().size() == 1);

  // Level -1 only: c' + c'' must be constant on each fiber over a depth-1 frequency.
  // 25 cells, two unknowns each, 5 fibers with 4 equations each.
  const auto space = solve_vanishing(SupportTemplate::box(5, -1, -1, 2), params, oracle5);
  CHECK(space.unknowns == 50);
  CHECK(space.basis.size() == 30);
  for (const auto& phi : space.basis) {
    const Row total = phi.row_prime(-1) + phi.row_second(-1);
    for (const auto& gamma : elements_of_depth_at_most(5, 1)) {
      const auto members = fiber(gamma, 5);
      const PolyVec* first = total.find(members.front());
      for (const auto& alpha : members) {
        const PolyVec* v = total.find(alpha);
        CHECK(((first == nullptr && v == nullptr) || (first && v && *first == *v)));
      }
    }
  }
}

TEST_CASE("solve_vanishing outputs vanish off O_F and perturbations break it") {
  for (const auto& [name, params] : regimes_p5()) {
    CAPTURE(name);
    const long p = params.field().p;
    const auto space = solve_vanishing(SupportTemplate::box(p, -2, 0, 1), params, oracle5);
    REQUIRE(!space.basis.empty());
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 10; ++trial) {
      const auto phi = random_combination(space.basis, rng);
      phi.validate(params, oracle5);
      CHECK(vanishes_outside_integers(expand(phi, params), params.field()));
      auto broken = phi;
      broken.add(-1, WElem::parse(p, "1/5"), PolyVec::constant(params.weight().n, Scalar(ppow(p, 1 + params.weight().m))),
                 PolyVec(params.weight().n));
      CHECK_FALSE(vanishes_outside_integers(expand(broken, params), params.field()));
    }
  }
}

TEST_CASE("evaluate examples") {
  const auto params = kirillov::testing::unramified(5, 0, 0, 1, Rational(2, 5));
  const auto f0 = expand(single(5, 0, 0, WElem::zero(5), PolyVec::constant(0, 1), PolyVec(0)), params);
  for (long u : {1, 2, 3, 4, 6, 7}) CHECK(evaluate(f0, 0, u) == PolyVec::constant(0, 1));

  Row c;
  c.set(WElem::parse(5, "1/5"), PolyVec::constant(0, 1));
  CHECK(fourier_sum(c, 1, 0) == PolyVec::constant(0, Scalar::root_of_unity(5, -1)));

  CHECK_THROWS_AS(evaluate(f0, 4, 1), Error);
  CHECK_THROWS_AS(evaluate(f0, 0, 5), Error);
}

TEST_CASE("a C_1 pattern evaluates to zero on units") {
  Gen g(21);
  for (int trial = 0; trial < 20; ++trial) {
    const WElem gamma = g.welem(5, 1);
    Row c;
    const PolyVec value = g.polyvec(1, 5);
    for (const auto& alpha : fiber(gamma, 5)) c.set(alpha, value);
    for (long u = 1; u <= 30; ++u)
      if (u % 5 != 0) CHECK(fourier_sum(c, u, 1).is_zero());
  }
}

TEST_CASE("the amplitude table reproduces the direct pointwise sum") {
  for (const auto& [name, params] : regimes_p5()) {
    CAPTURE(name);
    std::mt19937_64 rng(13);
    Gen g(14);
    for (int trial = 0; trial < 5; ++trial) {
      const auto coeffs = random_valid_coeffs(params, rng, -2, 1, 2, 4);
      const auto table = expand(coeffs, params, 2);
      for (int s = 0; s < 6; ++s) {
        const int l = static_cast<int>(g.range(-2, 2));
        const Rational u = random_unit(g, 5);
        CHECK(evaluate(table, l, u) == evaluate_direct(coeffs, params, l, u));
      }
    }
  }
}

TEST_CASE("mirabolic action: examples") {
  const auto params = kirillov::testing::unramified(5, 1, 0, 1, Rational(1, 25));
  std::mt19937_64 rng(15);
  const auto coeffs = random_valid_coeffs(params, rng, -1, 1, 1, 3);
  CHECK(mirabolic_act(1, 0, coeffs, params, oracle5) == coeffs);

  const auto f0 = single(5, 1, 0, WElem::zero(5), PolyVec::monomial(1, 1), PolyVec(1));
  for (int k : {-1, 1, 2}) {
    const WElem beta = WElem::parse(5, "3/25");
    const Rational a = ppow(5, -k);
    const Rational b = -a * beta.to_rational();
    const auto moved = mirabolic_act(a, b, f0, params, oracle5);
    const Matrix2 g{Scalar(a), Scalar(b), 0, 1};
    CHECK(moved == single(5, 1, k, beta, act_tau(g, PolyVec::monomial(1, 1), params.weight()), PolyVec(1)));
  }
}

TEST_CASE("mirabolic action matches the pointwise action") {
  for (const auto& [name, params] : regimes_p5()) {
    CAPTURE(name);
    std::mt19937_64 rng(16);
    Gen g(17);
    const long p = params.field().p;
    for (int trial = 0; trial < 4; ++trial) {
      const auto coeffs = random_valid_coeffs(params, rng, -2, 1, 2, 4);
      const int j = static_cast<int>(g.range(-2, 2));
      const Rational w = random_unit(g, p);
      const Rational a = ppow(p, j) * w;
      const Rational b = g.rational(p);
      const Matrix2 m{Scalar(a), Scalar(b), 0, 1};
      const auto acted = mirabolic_act(a, b, coeffs, params, oracle5);
      const auto before = expand(coeffs, params, 6);
      const auto after = expand(acted, params, 6);
      for (int s = 0; s < 20; ++s) {
        const int l = static_cast<int>(g.range(-3, 3));
        const Rational u = random_unit(g, p);
        const PolyVec lhs = evaluate(after, l, u);
        const PolyVec rhs = act_tau(m, psi(p, b * ppow(p, l) * u) * evaluate_direct(coeffs, params, l + j, w * u),
                                    params.weight());
        CHECK(lhs == rhs);
        if (l + j <= before.l_max && l + j >= -8) CHECK(evaluate(before, l + j, w * u) == evaluate_direct(coeffs, params, l + j, w * u));
      }
    }
  }
}

TEST_CASE("invalid coefficients are rejected with the entry named") {
  const auto params = kirillov::testing::unramified(5, 1, 0, 1, Rational(1, 25));
  GeneratorCoeffs bad(5, 1);
  bad.set(0, WElem::zero(5), PolyVec::monomial(1, 0, Scalar(Rational(1, 5))), PolyVec(1));
  try {
    bad.validate(params, oracle5);
    FAIL("expected InvalidCoeffs");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_coeffs);
    CHECK(std::string(e.what()).find("c'_0(0)") != std::string::npos);
  }
}
