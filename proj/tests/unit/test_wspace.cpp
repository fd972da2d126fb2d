// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <set>

#include "errors.hpp"
#include "gen.hpp"
#include "operators.hpp"

using namespace kirillov;
using kirillov::testing::Gen;

namespace {

WElem w(long num, int depth) { return WElem::from_fraction(5, num, depth); }

WFunction<Scalar> indicator_w1(long p) {
  WFunction<Scalar> f;
  for (const auto& b : w1_elements(p)) f.set(b, Scalar(1));
  return f;
}

}  // namespace

TEST_CASE("multiplication by pi") {
  CHECK(w(1, 1).mul_by_pi() == WElem::zero(5));
  CHECK(w(7, 2).mul_by_pi() == w(2, 1));
  CHECK(WElem::zero(5).mul_by_pi() == WElem::zero(5));
  CHECK(w(7, 2).str() == "7/25");
  CHECK(WElem::parse(5, "32/25") == w(7, 2));
  CHECK(WElem::parse(5, "-1/5") == w(4, 1));
}

TEST_CASE("fibers") {
  const auto f0 = fiber(WElem::zero(5), 5);
  CHECK(f0 == std::vector<WElem>{WElem::zero(5), w(1, 1), w(2, 1), w(3, 1), w(4, 1)});
  const auto f1 = fiber(w(1, 1), 5);
  std::vector<WElem> expected{w(1, 2), w(6, 2), w(11, 2), w(16, 2), w(21, 2)};
  CHECK(std::set<WElem>(f1.begin(), f1.end()) == std::set<WElem>(expected.begin(), expected.end()));
  Gen g(21);
  for (int i = 0; i < 100; ++i) {
    const WElem beta = g.welem(5, 4);
    const auto fb = fiber(beta, 5);
    CHECK(std::set<WElem>(fb.begin(), fb.end()).size() == 5);
    for (const auto& a : fb) CHECK(a.mul_by_pi() == beta);
  }
}

TEST_CASE("suspension") {
  CHECK(suspend(WFunction<Scalar>::delta(w(1, 1), Scalar(1))) == WFunction<Scalar>::delta(WElem::zero(5), Scalar(1)));
  const auto s = suspend(indicator_w1(5));
  REQUIRE(s.find(WElem::zero(5)) != nullptr);
  CHECK(*s.find(WElem::zero(5)) == Scalar(5));
  CHECK(s.size() == 1);
}

TEST_CASE("convolution") {
  for (long p : {3L, 5L}) {
    const FieldParams field = FieldParams::desk(p);
    Gen g(22 + p);
    for (const auto& xi : characters_of_conductor(field, 1)) {
      const ConvolutionOperator e(xi), e_inv(xi.inverse());
      const auto delta = e.apply(WFunction<Scalar>::delta(WElem::zero(p), Scalar(1)));
      CHECK(delta.size() == static_cast<size_t>(p - 1));
      for (const auto& [beta, v] : delta) CHECK(beta.depth() == 1);
      for (int trial = 0; trial < 100; ++trial) {
        const auto f = g.wfunction(p, 3, 6);
        CHECK(suspend(e.apply(f)).empty());
        CHECK(e.apply(e_inv.apply(e.apply(f))) == e.apply(f));
        // E_xi kills C_1.
        const auto c1 = pi_pullback(g.wfunction(p, 2, 4), field);
        CHECK(in_C1(c1, field));
        CHECK(e.apply(c1).empty());
        // Complementary idempotents.
        const auto p1 = project_C1(f, field);
        const auto p0 = project_C0(f, xi);
        CHECK(p0 + p1 == f);
        CHECK(project_C1(p1, field) == p1);
        CHECK(project_C0(p0, xi) == p0);
        CHECK(project_C1(p0, field).empty());
        CHECK(in_C1(p1, field));
        CHECK(in_C0(p0, field));
        // Linearity.
        const Scalar s(g.rational(p));
        CHECK(e.apply(s * f) == s * e.apply(f));
        CHECK(suspend(s * f) == s * suspend(f));
      }
    }
  }
}

TEST_CASE("E_xi with trivial character is rejected") {
  const FieldParams field = FieldParams::desk(5);
  CHECK_THROWS_AS(ConvolutionOperator(CharacterSpec::unramified(field, Scalar(1))), Error);
}

TEST_CASE("projection onto C_1 of a delta") {
  const FieldParams field = FieldParams::desk(5);
  const auto p1 = project_C1(WFunction<Scalar>::delta(WElem::zero(5), Scalar(1)), field);
  CHECK(p1 == Scalar(Rational(1, 5)) * indicator_w1(5));
}

TEST_CASE("C_1 and C_0 predicates") {
  const FieldParams field = FieldParams::desk(5);
  CHECK(in_C1(indicator_w1(5), field));
  auto f = WFunction<Scalar>::delta(WElem::zero(5), Scalar(1));
  f.add(w(1, 1), Scalar(-1));
  CHECK(in_C0(f, field));
  CHECK_FALSE(in_C1(f, field));
  const auto d = WFunction<Scalar>::delta(WElem::zero(5), Scalar(1));
  CHECK_FALSE(in_C1(d, field));
  CHECK_FALSE(in_C0(d, field));
  CHECK(in_C1(WFunction<Scalar>{}, field));
  CHECK(in_C0(WFunction<Scalar>{}, field));
}
