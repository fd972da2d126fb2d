// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#include "params.hpp"

#include <sstream>

#include "errors.hpp"

namespace kirillov {

const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::unramified: return "unramified";
    case Regime::tame: return "tame";
    case Regime::wild: return "wild";
    case Regime::degenerate: return "degenerate";
  }
  return "?";
}

Regime parse_regime(const std::string& text) {
  for (Regime r : {Regime::unramified, Regime::tame, Regime::wild, Regime::degenerate})
    if (text == to_string(r)) return r;
  throw Error(ErrorCode::invalid_argument, "unknown regime '" + text + "'");
}

RepParams RepParams::unramified(FieldParams field, WeightParams weight, Scalar lambda, Scalar mu) {
  return make(field, weight, Regime::unramified, CharacterSpec::unramified(field, std::move(lambda)),
              CharacterSpec::unramified(field, std::move(mu)));
}

RepParams RepParams::degenerate(FieldParams field, WeightParams weight, Scalar lambda) {
  return make(field, weight, Regime::degenerate, CharacterSpec::unramified(field, lambda),
              CharacterSpec::unramified(field, lambda));
}

RepParams RepParams::ramified(FieldParams field, WeightParams weight, CharacterSpec eps, Scalar mu) {
  const Regime regime = eps.conductor() >= 2 ? Regime::wild : Regime::tame;
  return make(field, weight, regime, std::move(eps), CharacterSpec::unramified(field, std::move(mu)));
}

RepParams RepParams::make(FieldParams field, WeightParams weight, Regime regime, CharacterSpec chi1,
                          CharacterSpec chi2) {
  RepParams out(field, weight, regime, std::move(chi1), std::move(chi2));
  out.validate();
  return out;
}

void RepParams::validate() const {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::regime_mismatch, why); };
  if (!is_prime(field_.p)) throw Error(ErrorCode::invalid_argument, "p must be prime");
  if (field_.q != field_.p) fail("only F = Q_p (q = p) is implemented");
  if (weight_.n < 0) throw Error(ErrorCode::invalid_argument, "weight n must be nonnegative");
  if (chi1_.field() != field_ || chi2_.field() != field_) fail("characters belong to a different field");
  if (lambda().is_zero() || mu().is_zero()) fail("lambda and mu must be nonzero");
  if (chi2_.conductor() != 0) fail("chi2 must be unramified (twist the ramification into chi1)");
  const Scalar q(field_.q);
  switch (regime_) {
    case Regime::unramified:
      if (chi1_.conductor() != 0) fail("unramified regime needs an unramified chi1");
      if (lambda() == mu()) fail("lambda = mu belongs to the degenerate regime");
      if (lambda() == q * mu() || mu() == q * lambda()) fail("lambda/mu = q^(+-1): the induced representation is reducible");
      break;
    case Regime::degenerate:
      if (chi1_.conductor() != 0) fail("degenerate regime needs an unramified chi1");
      if (lambda() != mu()) fail("degenerate regime needs lambda = mu");
      break;
    case Regime::tame:
    case Regime::wild:
      if (chi1_.conductor() == 0) fail("ramified regime needs a ramified chi1");
      if ((chi1_.conductor() == 1) != (regime_ == Regime::tame)) fail("conductor does not match tame/wild");
      if (weight_.n != 0) fail("ramified regimes are only modelled for n = 0");
      break;
  }
}

std::string RepParams::describe() const {
  std::ostringstream os;
  os << to_string(regime_) << " p=" << field_.p << " n=" << weight_.n << " m=" << weight_.m << " lambda=" << lambda()
     << " mu=" << mu();
  if (ramified()) os << " eps=" << chi1_.label();
  return os.str();
}

}  // namespace kirillov
