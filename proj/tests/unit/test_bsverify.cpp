// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <filesystem>

#include "errors.hpp"
#include "expansion.hpp"
#include "fixtures.hpp"
#include "search.hpp"
#include "solver.hpp"
#include "theorem.hpp"

using namespace kirillov;

namespace {

const EmbeddingOracle oracle5(5);

GeneratorCoeffs f0_prime(long p, int n) {
  GeneratorCoeffs c(p, n);
  c.set(0, WElem::zero(p), PolyVec::constant(n, 1), PolyVec(n));
  return c;
}

Valuation row_valuation(const Row& row, const EmbeddingOracle& oracle) {
  Valuation v;
  for (const auto& [beta, c] : row)
    for (const auto& x : c.coeffs()) v = min(v, oracle.valuation(x));
  return v;
}

}  // namespace

TEST_CASE("Breuil-Schneider conditions") {
  using kirillov::testing::unramified;
  CHECK(check_bs_conditions(unramified(5, 0, 0, 1, Rational(2, 5)), oracle5).holds());
  const BSCheck unbounded = check_bs_conditions(unramified(5, 0, 0, Rational(1, 25), 5), oracle5);
  CHECK(unbounded.unitary);
  CHECK_FALSE(unbounded.bounded);
  CHECK(check_bs_conditions(unramified(5, 1, 0, Rational(1, 5), Rational(2, 5)), oracle5).holds());
  CHECK_FALSE(check_bs_conditions(unramified(5, 1, 0, 1, 1 + Rational(1, 5)), oracle5).unitary);
  const auto deg = kirillov::testing::degenerate(5, 0, 0, scalar_with_valuation(5, Rational(-1, 2)));
  CHECK(check_bs_conditions(deg, oracle5).holds());
}

TEST_CASE("the level-0 generator passes") {
  const auto params = kirillov::testing::unramified(5, 0, 0, 1, Rational(2, 5));
  const TheoremCheck check = check_theorem12(f0_prime(5, 0), params, oracle5);
  CHECK(check.all_pass());
  CHECK(check.checked == 1);
}

TEST_CASE("an amplitude pushed below M_0 is reported with its margin") {
  const auto params = kirillov::testing::unramified(5, 1, 0, 1, Rational(1, 25));
  auto table = expand(f0_prime(5, 1), params, 0);
  table.total[0] = Scalar(ppow(5, -3)) * table.total[0];
  const TheoremCheck check = check_theorem12(table, params, oracle5);
  REQUIRE(check.violations.size() == 1);
  CHECK(check.violations[0].level == 0);
  CHECK(check.violations[0].beta == WElem::zero(5));
  // 1 sits in M_0(0) = 5^-1 O_E[u] with two digits to spare.
  CHECK(check.violations[0].margin == Valuation(Rational(-1)));
}

TEST_CASE("solver-generated functions pass at p=5, n=1") {
  const auto params = kirillov::testing::unramified(5, 1, 0, 1, Rational(1, 25));
  const auto space = solve_vanishing(SupportTemplate::box(5, -2, 0, 1), params, oracle5);
  REQUIRE(!space.basis.empty());
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const auto phi = random_combination(space.basis, rng);
    CHECK(check_theorem12(phi, params, oracle5).all_pass());
  }
}

TEST_CASE("check_theorem12 refuses functions that do not vanish off O_F") {
  const auto params = kirillov::testing::unramified(5, 0, 0, 1, Rational(2, 5));
  GeneratorCoeffs c(5, 0);
  c.set(-1, WElem::zero(5), PolyVec::constant(0, 1), PolyVec(0));
  CHECK_THROWS_AS(check_theorem12(c, params, oracle5), Error);
}

TEST_CASE("scaling the input shifts amplitude valuations by the same amount") {
  const auto params = kirillov::testing::unramified(5, 1, 0, Rational(1, 5), Rational(2, 5));
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto phi = random_valid_coeffs(params, rng, -2, 1, 2, 4);
    const auto a = expand(phi, params, 1);
    const auto b = expand(phi.scaled(Scalar(5)), params, 1);
    for (int l = a.k0; l <= 1; ++l) {
      const Valuation va = row_valuation(a.row(l), oracle5);
      const Valuation vb = row_valuation(b.row(l), oracle5);
      if (va.is_infinite()) {
        CHECK(vb.is_infinite());
      } else {
        CHECK(vb == va + Valuation(Rational(1)));
      }
    }
  }
}

TEST_CASE("integral-structure certificate") {
  const auto p0 = kirillov::testing::unramified(5, 0, 0, 1, Rational(2, 5));
  const PolyVec w0 = certificate_prop13(p0);
  CHECK(w0 == PolyVec::constant(0, Scalar(Rational(1, 25))));
  CHECK(oracle5.valuation(w0[0]) == Valuation(Rational(-2)));
  CHECK_FALSE(certificate_lattice(p0).contains(rational_coeffs(w0)));

  const auto p1 = kirillov::testing::unramified(5, 1, 0, 1, Rational(1, 25));
  const LocalLattice sum = certificate_lattice(p1);
  const PolyVec w1 = certificate_prop13(p1);
  CHECK(w1 == Scalar(Rational(1, 5)) * to_polyvec(sum.basis().front()));
  CHECK_FALSE(sum.contains(rational_coeffs(w1)));
  // Each M_0(beta) sits inside the sum.
  for (const auto& beta : w1_elements(5))
    CHECK(sum.contains(LocalLattice::from_disk(lattice_M(0, beta, p1.weight(), p1.field()))));
}

TEST_CASE("valuation patterns sit on the Breuil-Schneider region") {
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 1; ++m) {
      const WeightParams w{m, n};
      for (Regime r : {Regime::unramified, Regime::degenerate}) {
        for (const auto& pattern : valuation_patterns(r, w, 5, true))
          for (const auto& params : realize_pattern(5, w, r, pattern)) {
            CAPTURE(params.describe());
            CHECK(check_bs_conditions(params, oracle5).holds());
            CHECK(oracle5.valuation(params.lambda()) == Valuation(pattern.v_lambda));
          }
      }
    }
  for (const auto& pattern : valuation_patterns(Regime::tame, WeightParams{1, 0}, 5, false)) {
    const auto all = realize_pattern(5, WeightParams{1, 0}, Regime::tame, pattern);
    CHECK(all.size() == 3);
    for (const auto& params : all) CHECK(check_bs_conditions(params, oracle5).holds());
  }
  // lambda = q mu at n = m = 0 is bumped to an irreducible choice.
  const auto bumped = realize_pattern(5, WeightParams{0, 0}, Regime::unramified,
                                      valuation_patterns(Regime::unramified, WeightParams{0, 0}, 5, false).front());
  REQUIRE(bumped.size() == 1);
  CHECK(bumped[0].mu() == Scalar(Rational(2, 5)));
}

TEST_CASE("search: verdicts and determinism") {
  SearchGrid grid;
  grid.trials = 4;
  grid.k0s = {-1};
  const SearchReport a = run_search(grid, {});
  CHECK(a.verdict == Verdict::all_pass);
  CHECK(a.trials_run == 16);
  CHECK(a.cache_hits == 0);
  const SearchReport b = run_search(grid, {});
  CHECK(a.json.dump() == b.json.dump());

  SearchGrid other = grid;
  other.seed = 2;
  CHECK(run_search(other, {}).json.dump() != a.json.dump());

  SearchOptions two;
  two.workers = 2;
  CHECK(run_search(grid, two).json.dump() == a.json.dump());

  SearchGrid empty = grid;
  empty.primes.clear();
  const SearchReport e = run_search(empty, {});
  CHECK(e.verdict == Verdict::inconclusive);
  CHECK(e.json["cases"].empty());
}

TEST_CASE("search: exploratory weights are never asserted") {
  SearchGrid grid;
  grid.primes = {2};
  grid.ns = {2};
  grid.trials = 3;
  grid.k0s = {-1};
  const SearchReport r = run_search(grid, {});
  CHECK(r.verdict == Verdict::inconclusive);
  for (const auto& c : r.json["cases"]) {
    CHECK_FALSE(c["asserted"].get<bool>());
    CHECK(c["verdict"].get<std::string>().rfind("exploratory", 0) == 0);
  }
}

TEST_CASE("search: the cache is reused") {
  const auto dir = std::filesystem::temp_directory_path() / "kirillov-test-cache";
  std::filesystem::remove_all(dir);
  SearchGrid grid;
  grid.ns = {1};
  grid.trials = 3;
  grid.k0s = {-2};
  SearchOptions options;
  options.cache_dir = dir.string();
  const SearchReport first = run_search(grid, options);
  const SearchReport second = run_search(grid, options);
  CHECK(first.cache_hits == 0);
  CHECK(second.cache_hits == second.trials_run);
  for (const auto& c : second.json["cases"])
    for (const auto& t : c["trials"]) CHECK(t["cached"].get<bool>());
  auto strip = [](Json j) {
    for (auto& c : j["cases"]) {
      c.erase("solver");
      for (auto& t : c["trials"]) t.erase("cached");
    }
    return j.dump();
  };
  CHECK(strip(first.json) == strip(second.json));
  std::filesystem::remove_all(dir);
}
