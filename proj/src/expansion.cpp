// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#include "expansion.hpp"

#include "errors.hpp"
#include "operators.hpp"

namespace kirillov {
namespace {

AmplitudeTable blank(const GeneratorCoeffs& coeffs, const RepParams& params, int l_max) {
  if (coeffs.p() != params.field().p || coeffs.n() != params.weight().n)
    throw Error(ErrorCode::regime_mismatch, "coefficients were built for different p or n");
  AmplitudeTable t;
  t.regime = params.regime();
  t.p = coeffs.p();
  t.n = coeffs.n();
  t.k0 = coeffs.k0().value_or(0);
  t.l_max = l_max;
  for (int l = t.k0; l <= l_max; ++l) {
    t.gen_prime[l] = coeffs.row_prime(l);
    t.gen_second[l] = coeffs.row_second(l);
  }
  return t;
}

void finish(AmplitudeTable& t, const RepParams& params) {
  if (params.ramified()) {
    const ConvolutionOperator e(params.chi1()), e_inv(params.chi1().inverse());
    for (int l = t.k0; l <= t.l_max; ++l) {
      t.total[l] = e.apply(t.prime[l]) + t.second[l];
      t.tilde[l] = e_inv.apply(t.second[l]) + t.prime[l];
    }
  } else {
    for (int l = t.k0; l <= t.l_max; ++l) t.total[l] = t.prime[l] + t.second[l];
  }
}

// Push a generator row forward to level l: c at (k, alpha) lands on pi^{l-k} alpha.
void push(Row& out, const Row& gens, int steps, const Scalar& weight) {
  for (const auto& [alpha, c] : gens) out.add(alpha.mul_by_pi_power(steps), weight * c);
}

std::optional<IdentityViolation> first_difference(int level, const Row& lhs, const Row& rhs) {
  const Row diff = lhs - rhs;
  if (diff.empty()) return std::nullopt;
  return IdentityViolation{level, diff.begin()->first};
}

}  // namespace

const Row& AmplitudeTable::at(const std::map<int, Row>& rows, int l) {
  static const Row empty;
  auto it = rows.find(l);
  return it == rows.end() ? empty : it->second;
}

AmplitudeTable expand(const GeneratorCoeffs& coeffs, const RepParams& params, int l_max) {
  AmplitudeTable t = blank(coeffs, params, l_max);
  const Scalar& lambda = params.lambda();
  const Scalar& mu = params.mu();
  if (params.regime() == Regime::degenerate) {
    // C''_l = lambda S (C''_{l-1} - D_{l-1}) with D_l = lambda S D_{l-1} + c''_l.
    Row d_prev;
    for (int l = t.k0; l <= l_max; ++l) {
      const Row& c1 = t.gen_prime[l];
      const Row& c2 = t.gen_second[l];
      if (l == t.k0) {
        t.prime[l] = c1;
        t.second[l] = Row{};
        d_prev = c2;
        continue;
      }
      t.prime[l] = lambda * suspend(t.prime[l - 1]) + c1;
      t.second[l] = lambda * suspend(t.second[l - 1] - d_prev);
      d_prev = lambda * suspend(d_prev) + c2;
    }
  } else {
    for (int l = t.k0; l <= l_max; ++l) {
      if (l == t.k0) {
        t.prime[l] = t.gen_prime[l];
        t.second[l] = t.gen_second[l];
        continue;
      }
      t.prime[l] = lambda * suspend(t.prime[l - 1]) + t.gen_prime[l];
      t.second[l] = mu * suspend(t.second[l - 1]) + t.gen_second[l];
    }
  }
  finish(t, params);
  return t;
}

AmplitudeTable expand_closed_form(const GeneratorCoeffs& coeffs, const RepParams& params, int l_max) {
  AmplitudeTable t = blank(coeffs, params, l_max);
  const bool degenerate = params.regime() == Regime::degenerate;
  for (int l = t.k0; l <= l_max; ++l) {
    Row c1, c2;
    for (int k = t.k0; k <= l; ++k) {
      push(c1, t.gen_prime[k], l - k, params.lambda().pow(l - k));
      if (degenerate)
        push(c2, t.gen_second[k], l - k, Scalar(k - l) * params.lambda().pow(l - k));
      else
        push(c2, t.gen_second[k], l - k, params.mu().pow(l - k));
    }
    t.prime[l] = std::move(c1);
    t.second[l] = std::move(c2);
  }
  finish(t, params);
  return t;
}

bool same_rows(const AmplitudeTable& a, const AmplitudeTable& b) {
  if (a.k0 != b.k0 || a.l_max != b.l_max) return false;
  for (int l = a.k0; l <= a.l_max; ++l) {
    if (!(a.row(l) == b.row(l))) return false;
    if (!(AmplitudeTable::at(a.prime, l) == AmplitudeTable::at(b.prime, l))) return false;
    if (!(AmplitudeTable::at(a.second, l) == AmplitudeTable::at(b.second, l))) return false;
    if (!(AmplitudeTable::at(a.tilde, l) == AmplitudeTable::at(b.tilde, l))) return false;
  }
  return true;
}

std::optional<IdentityViolation> verify_two_step(const AmplitudeTable& t, const RepParams& params) {
  const Scalar& lambda = params.lambda();
  const Scalar& mu = params.mu();
  auto C = [&](int l) -> const Row& { return t.row(l); };
  auto g1 = [&](int l) -> const Row& { return AmplitudeTable::at(t.gen_prime, l); };
  auto g2 = [&](int l) -> const Row& { return AmplitudeTable::at(t.gen_second, l); };
  if (params.ramified()) {
    for (int l = t.k0 + 1; l <= t.l_max; ++l) {
      const Row rhs1 = lambda * suspend(AmplitudeTable::at(t.tilde, l - 1)) + g1(l);
      if (auto v = first_difference(l - 1, AmplitudeTable::at(t.prime, l), rhs1)) return v;
      const Row rhs2 = mu * suspend(C(l - 1)) + g2(l);
      if (auto v = first_difference(l - 1, AmplitudeTable::at(t.second, l), rhs2)) return v;
    }
    return std::nullopt;
  }
  const Row base = params.regime() == Regime::degenerate ? g1(t.k0) : g1(t.k0) + g2(t.k0);
  if (auto v = first_difference(t.k0 - 1, C(t.k0), base)) return v;
  for (int l = t.k0; l < t.l_max; ++l) {
    Row rhs;
    if (params.regime() == Regime::degenerate) {
      rhs = Scalar(2) * lambda * suspend(C(l)) - lambda * lambda * suspend(suspend(C(l - 1))) -
            lambda * suspend(g2(l) + g1(l)) + g1(l + 1);
    } else {
      rhs = (lambda + mu) * suspend(C(l)) - lambda * mu * suspend(suspend(C(l - 1))) -
            suspend(lambda * g2(l) + mu * g1(l)) + g1(l + 1) + g2(l + 1);
    }
    if (auto v = first_difference(l, C(l + 1), rhs)) return v;
  }
  return std::nullopt;
}

std::optional<IdentityViolation> verify_degenerate_second(const AmplitudeTable& t, const RepParams& params) {
  if (params.regime() != Regime::degenerate)
    throw Error(ErrorCode::regime_mismatch, "the C'' recursion with (k-l) weights is specific to lambda = mu");
  const Scalar& lambda = params.lambda();
  auto C2 = [&](int l) -> const Row& { return AmplitudeTable::at(t.second, l); };
  auto g2 = [&](int l) -> const Row& { return AmplitudeTable::at(t.gen_second, l); };
  if (auto v = first_difference(t.k0 - 1, C2(t.k0), Row{})) return v;
  if (t.k0 < t.l_max)
    if (auto v = first_difference(t.k0, C2(t.k0 + 1), Scalar(-1) * lambda * suspend(g2(t.k0)))) return v;
  for (int l = t.k0 + 1; l < t.l_max; ++l) {
    const Row rhs = Scalar(2) * lambda * suspend(C2(l)) - lambda * lambda * suspend(suspend(C2(l - 1))) -
                    lambda * suspend(g2(l));
    if (auto v = first_difference(l, C2(l + 1), rhs)) return v;
  }
  return std::nullopt;
}

bool vanishes_outside_integers(const AmplitudeTable& table, const FieldParams& field) {
  for (int l = table.k0; l < 0 && l <= table.l_max; ++l)
    if (!in_C1(table.row(l), field)) return false;
  return true;
}

}  // namespace kirillov
