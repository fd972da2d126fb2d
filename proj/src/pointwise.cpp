// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#include "pointwise.hpp"

#include "errors.hpp"

namespace kirillov {
namespace {

Rational require_unit(long p, const Rational& u) {
  if (u == 0 || vp(u, p) != 0) throw Error(ErrorCode::invalid_argument, "evaluation point needs a unit part");
  return u;
}

Scalar eps_value(const CharacterSpec& eps, const Rational& unit) {
  if (eps.conductor() == 0) return Scalar(1);
  return eps.value(rational_mod(unit, Integer(eps.modulus())).get_si());
}

}  // namespace

Scalar psi(long p, const Rational& r) {
  const WElem w = WElem::from_rational(p, r);
  if (w.is_zero()) return Scalar(1);
  return Scalar::root_of_unity(ipow(p, static_cast<unsigned long>(w.depth())).get_si(), w.numerator());
}

PolyVec fourier_sum(const Row& c, const Rational& x, int n) {
  PolyVec out(n);
  for (const auto& [beta, v] : c) out += psi(beta.p(), -beta.to_rational() * x) * v;
  return out;
}

PolyVec evaluate(const AmplitudeTable& table, int l, const Rational& unit) {
  require_unit(table.p, unit);
  if (l > table.l_max)
    throw Error(ErrorCode::horizon_exceeded,
                "level " + std::to_string(l) + " is beyond the truncation level " + std::to_string(table.l_max));
  return fourier_sum(table.row(l), unit, table.n);
}

PolyVec evaluate_direct(const GeneratorCoeffs& coeffs, const RepParams& params, int l, const Rational& unit) {
  const long p = params.field().p;
  require_unit(p, unit);
  const bool degenerate = params.regime() == Regime::degenerate;
  const Scalar eps = params.ramified() ? eps_value(params.chi1(), unit) : Scalar(1);
  PolyVec out(params.weight().n);
  for (const auto& [cell, pair] : coeffs.entries()) {
    const int k = cell.first;
    if (k > l) break;
    const Scalar phase = psi(p, -cell.second.to_rational() * ppow(p, l - k) * unit);
    const Scalar f1 = eps * params.lambda().pow(l - k);
    const Scalar f2 = degenerate ? Scalar(k - l) * params.lambda().pow(l - k) : params.mu().pow(l - k);
    out += (phase * f1) * pair.prime;
    out += (phase * f2) * pair.second;
  }
  return out;
}

GeneratorCoeffs mirabolic_act(const Rational& a, const Rational& b, const GeneratorCoeffs& coeffs,
                              const RepParams& params, const EmbeddingOracle& oracle) {
  const long p = params.field().p;
  if (a == 0) throw Error(ErrorCode::invalid_argument, "a = 0 has no decomposition pi^j w");
  const long j = vp(a, p);
  const Rational w = a / ppow(p, j);
  const Matrix2 g{Scalar(a), Scalar(b), Scalar(0), Scalar(1)};
  const Scalar chi_w = params.ramified() ? eps_value(params.chi1(), w) : Scalar(1);
  GeneratorCoeffs out(coeffs.p(), coeffs.n());
  for (const auto& [cell, pair] : coeffs.entries()) {
    const int k = cell.first - static_cast<int>(j);
    const WElem beta = cell.second.scaled_by_unit(w) - WElem::from_rational(p, ppow(p, k) * b);
    out.add(k, beta, chi_w * act_tau(g, pair.prime, params.weight()), act_tau(g, pair.second, params.weight()));
  }
  out.validate(params, oracle);
  return out;
}

}  // namespace kirillov
