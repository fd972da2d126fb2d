// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#include "suites.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "errors.hpp"
#include "expansion.hpp"
#include "operators.hpp"
#include "pointwise.hpp"
#include "random.hpp"
#include "search.hpp"
#include "solver.hpp"

namespace kirillov {
namespace {

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& what) {
    ++result_.checks;
    if (ok || !result_.passed) return;
    result_.passed = false;
    result_.first_failure = what();
  }

  SuiteResult done() { return result_; }

 private:
  SuiteResult result_;
};

long pick(std::mt19937_64& rng, long lo, long hi) { return draw(rng, lo, hi); }

WElem random_welem(std::mt19937_64& rng, long p, int max_depth) {
  const int depth = static_cast<int>(pick(rng, 0, max_depth));
  long mod = 1;
  for (int i = 0; i < depth; ++i) mod *= p;
  return WElem::from_fraction(p, pick(rng, 0, mod - 1), depth);
}

Scalar small_scalar(std::mt19937_64& rng) { return Scalar(Rational(pick(rng, -9, 9))); }

// A third of the samples are C_1 patterns, a third C_0 patterns, the rest arbitrary.
WFunction<Scalar> random_pattern(std::mt19937_64& rng, long p, int max_depth) {
  WFunction<Scalar> f;
  const long kind = pick(rng, 0, 2);
  const int terms = static_cast<int>(pick(rng, 1, 4));
  for (int i = 0; i < terms; ++i) {
    const WElem gamma = random_welem(rng, p, max_depth - 1);
    const auto members = fiber(gamma, p);
    if (kind == 0) {
      const Scalar v = small_scalar(rng);
      for (const auto& a : members) f.add(a, v);
    } else if (kind == 1) {
      Scalar total(0);
      for (size_t j = 1; j < members.size(); ++j) {
        const Scalar v = small_scalar(rng);
        f.add(members[j], v);
        total += v;
      }
      f.add(members.front(), -total);
    } else {
      f.add(random_welem(rng, p, max_depth), small_scalar(rng));
    }
  }
  return f;
}

SuiteResult fourier_suite(const SuiteConfig& c) {
  Tally t("fourier");
  const long p = c.p;
  const FieldParams field = FieldParams::desk(p);
  const int depth = 2;
  const long period = p * p;
  std::mt19937_64 rng(derive_seed(c.seed, 1, 0));
  for (int trial = 0; trial < 2 * c.trials; ++trial) {
    const WFunction<Scalar> f = random_pattern(rng, p, depth);
    Row row;
    for (const auto& [beta, v] : f) row.set(beta, PolyVec::constant(0, v));
    // Units and elements of pi O_F, each through a full set of residues mod p^depth.
    bool zero_on_units = true, zero_on_pi_o = true;
    for (long x = 0; x < period; ++x) {
      const bool zero = fourier_sum(row, x, 0).is_zero();
      if (x % p != 0) zero_on_units = zero_on_units && zero;
      else zero_on_pi_o = zero_on_pi_o && zero;
    }
    t.check(in_C1(f, field) == zero_on_units, [&] { return "C_1 predicate disagrees with the sum on units"; });
    t.check(in_C0(f, field) == zero_on_pi_o, [&] { return "C_0 predicate disagrees with the sum on pi O_F"; });
  }
  return t.done();
}

PolyVec random_poly(std::mt19937_64& rng, int n, long p) {
  PolyVec out(n);
  for (int i = 0; i <= n; ++i) {
    Rational r(pick(rng, -30, 30), pick(rng, 1, 6));
    r.canonicalize();
    out[static_cast<size_t>(i)] = Scalar(r * ppow(p, pick(rng, -3, 3)));
  }
  return out;
}

SuiteResult lattice_suite(const SuiteConfig& c) {
  Tally t("lattice");
  const long p = c.p;
  const FieldParams field = FieldParams::desk(p);
  const EmbeddingOracle oracle(p);
  std::mt19937_64 rng(derive_seed(c.seed, 2, 0));
  for (int n : c.ns) {
    const WeightParams w{0, n};
    for (int l = -3; l <= 3; ++l) {
      if (w.below_q(field.q)) {
        for (const auto& gamma : elements_of_depth_at_most(p, 2)) {
          // Intersecting N_{l+1} over a fiber of gamma is the disk lattice N_l(gamma).
          t.check(literal_fiber_intersection(l, gamma, w, field) ==
                      LocalLattice::from_disk(intersect_over_fiber(l, gamma, w, field)),
                  [&] {
                    return "fiber intersection differs at n=" + std::to_string(n) + " l=" + std::to_string(l) +
                           " gamma=" + gamma.str();
                  });
          const auto small = LocalLattice::from_disk(lattice_N(l, gamma, w, field));
          const auto big = LocalLattice::from_disk(lattice_N(l + 1, gamma.mul_by_pi(), w, field));
          t.check(big.contains(small), [&] {
            return "N_l(beta) not inside N_{l+1}(pi beta) at n=" + std::to_string(n) + " l=" + std::to_string(l) +
                   " beta=" + gamma.str();
          });
        }
      }
      const int samples = std::max(1, c.trials / 10);
      for (int s = 0; s < samples; ++s) {
        const WElem beta = random_welem(rng, p, 2);
        const PolyVec poly = random_poly(rng, n, p);
        const DiskLattice norm = lattice_N_norm(l, beta, w, field);
        if (w.below_q(field.q)) {
          t.check(lattice_N(l, beta, w, field).contains(poly, oracle) == norm.contains(poly, oracle),
                  [&] { return "basis and sup-norm membership disagree"; });
        }
        if (norm.contains(poly, oracle)) {
          t.check(lattice_N_norm(l + 1, beta.mul_by_pi(), w, field).contains(poly, oracle),
                  [&] { return "sup-norm inclusion fails at level " + std::to_string(l); });
        }
      }
    }
  }
  // (u^q - u)/pi is bounded by 1 on the integers yet has a coordinate of valuation -1.
  const int q = static_cast<int>(field.q);
  PolyVec witness(q);
  witness[static_cast<size_t>(q)] = Scalar(Rational(1, p));
  witness[1] = Scalar(Rational(-1, p));
  const WeightParams wq{0, q};
  const DiskLattice by_norm = lattice_N_norm(0, WElem::zero(p), wq, field);
  const DiskLattice by_basis(field, wq, 0, WElem::zero(p), Rational(0), MembershipRoute::basis);
  t.check(by_norm.contains(witness, oracle), [] { return "sharpness witness is not sup-bounded by 1"; });
  t.check(!by_basis.contains(witness, oracle), [] { return "sharpness witness lies in the basis span"; });
  return t.done();
}

SuiteResult recursion_suite(const std::string& name, const std::vector<RepParams>& grid, const SuiteConfig& c,
                            std::uint64_t stream) {
  Tally t(name);
  std::mt19937_64 rng(derive_seed(c.seed, stream, 0));
  for (const auto& params : grid) {
    for (int trial = 0; trial < c.trials; ++trial) {
      const GeneratorCoeffs coeffs = random_valid_coeffs(params, rng, -3, 1, 2, 5);
      const AmplitudeTable table = expand(coeffs, params, 3);
      auto where = [&](const char* what) {
        return [&params, what] { return std::string(what) + " for " + params.describe(); };
      };
      t.check(same_rows(table, expand_closed_form(coeffs, params, 3)), where("closed form differs from the recursion"));
      t.check(!verify_two_step(table, params).has_value(), where("two-step identity fails"));
      if (params.regime() == Regime::degenerate) {
        t.check(AmplitudeTable::at(table.second, table.k0).empty(), where("first C'' row is not zero"));
        t.check(!verify_degenerate_second(table, params).has_value(), where("C'' two-step identity fails"));
      }
    }
  }
  return t.done();
}

std::vector<RepParams> pattern_grid(long p, const std::vector<int>& ns, const std::vector<int>& ms, Regime regime,
                                    bool interior) {
  std::vector<RepParams> out;
  for (int n : ns)
    for (int m : ms) {
      const WeightParams w{m, n};
      for (const auto& pattern : valuation_patterns(regime, w, p, interior))
        for (auto& params : realize_pattern(p, w, regime, pattern)) out.push_back(std::move(params));
    }
  return out;
}

SuiteResult operators_suite(const SuiteConfig& c) {
  Tally t("operators");
  const long p = c.p;
  const FieldParams field = FieldParams::desk(p);
  std::mt19937_64 rng(derive_seed(c.seed, 4, 0));
  for (const auto& xi : characters_of_conductor(field, 1)) {
    const ConvolutionOperator e(xi), e_inv(xi.inverse());
    for (int trial = 0; trial < c.trials; ++trial) {
      const WFunction<Scalar> f = random_pattern(rng, p, 3);
      const auto ef = e.apply(f);
      const auto p1 = project_C1(f, field);
      const auto p0 = e.apply(e_inv.apply(f));
      auto label = [&](const char* what) { return [&xi, what] { return std::string(what) + " for " + xi.label(); }; };
      t.check(suspend(ef).empty(), label("S E_xi is not zero"));
      t.check(e.apply(e_inv.apply(ef)) == ef, label("E_xi E_xi^-1 E_xi differs from E_xi"));
      t.check(p0 + p1 == f, label("P_0 + P_1 is not the identity"));
      t.check(project_C1(p1, field) == p1, label("P_1 is not idempotent"));
      t.check(e.apply(e_inv.apply(p0)) == p0, label("P_0 is not idempotent"));
      t.check(project_C1(p0, field).empty(), label("P_1 P_0 is not zero"));
      t.check(e.apply(e_inv.apply(p1)).empty(), label("P_0 P_1 is not zero"));
      t.check(in_C1(p1, field) && in_C0(p0, field), label("projections land outside C_1 / C_0"));
    }
  }
  return t.done();
}

SuiteResult gauss_suite(const SuiteConfig& c) {
  Tally t("gauss");
  const FieldParams field = FieldParams::desk(c.p);
  const EmbeddingOracle oracle(c.p);
  for (const auto& eps : characters_of_conductor(field, 1)) {
    const Scalar tau_inv = gauss_sum(eps, field);
    const Scalar tau = gauss_sum(eps.inverse(), field);
    auto label = [&](const char* what) { return [&eps, what] { return std::string(what) + " for " + eps.label(); }; };
    t.check(tau * tau_inv == eps.value(c.p - 1) * Scalar(field.q), label("tau(eps) tau(eps^-1) != eps(-1) q"));
    const Valuation v = oracle.valuation(tau_inv);
    t.check(v + oracle.valuation(tau) == Valuation(Rational(1)), label("valuations of tau(eps) and tau(eps^-1) do not sum to 1"));
    t.check(Valuation(Rational(0)) < v && v < Valuation(Rational(1)), label("v(tau) outside (0, 1)"));
  }
  return t.done();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"fourier",    "lattice",         "unramified-recursion", "operators",
                                              "tame-recursion", "degenerate-recursion", "gauss"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& c) {
  if (!is_prime(c.p)) throw Error(ErrorCode::invalid_argument, "p must be prime");
  if (c.trials < 0) throw Error(ErrorCode::invalid_argument, "trials must be nonnegative");
  for (int n : c.ns)
    if (n < 0) throw Error(ErrorCode::invalid_argument, "weight n must be nonnegative");
  if (name == "fourier") return fourier_suite(c);
  if (name == "lattice") return lattice_suite(c);
  if (name == "operators") return c.p == 2 ? SuiteResult{name, true, 0, ""} : operators_suite(c);
  if (name == "gauss") return c.p == 2 ? SuiteResult{name, true, 0, ""} : gauss_suite(c);
  if (name == "unramified-recursion")
    return recursion_suite(name, pattern_grid(c.p, c.ns, {0, 1}, Regime::unramified, true), c, 3);
  if (name == "tame-recursion")
    return recursion_suite(name, c.p == 2 ? std::vector<RepParams>{} : pattern_grid(c.p, {0}, {0, 1}, Regime::tame, false), c, 5);
  if (name == "degenerate-recursion")
    return recursion_suite(name, pattern_grid(c.p, c.ns, {0, 1}, Regime::degenerate, false), c, 6);
  throw Error(ErrorCode::invalid_argument, "unknown suite '" + name + "'");
}

}  // namespace kirillov
