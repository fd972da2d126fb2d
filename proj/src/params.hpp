// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "character.hpp"
#include "polyvec.hpp"

namespace kirillov {

/// unramified: chi1, chi2 unramified, lambda != mu.
/// tame / wild: chi1 = eps of conductor 1 / >= 2, chi2 unramified, n = 0.
/// degenerate: chi1 = omega chi2 unramified, lambda = mu.
enum class Regime { unramified, tame, wild, degenerate };

const char* to_string(Regime regime);
Regime parse_regime(const std::string& text);

/// rho = det^m Sym^n (x) Ind(chi1, chi2) with lambda = chi1(pi), mu = omega chi2(pi).
class RepParams {
 public:
  static RepParams unramified(FieldParams field, WeightParams weight, Scalar lambda, Scalar mu);
  static RepParams degenerate(FieldParams field, WeightParams weight, Scalar lambda);
  /// eps carries lambda; the regime is tame or wild according to its conductor.
  static RepParams ramified(FieldParams field, WeightParams weight, CharacterSpec eps, Scalar mu);
  /// Checks that the characters fit the regime. Throws RegimeMismatch.
  static RepParams make(FieldParams field, WeightParams weight, Regime regime, CharacterSpec chi1, CharacterSpec chi2);

  const FieldParams& field() const { return field_; }
  const WeightParams& weight() const { return weight_; }
  Regime regime() const { return regime_; }
  const CharacterSpec& chi1() const { return chi1_; }
  const CharacterSpec& chi2() const { return chi2_; }
  const Scalar& lambda() const { return chi1_.lambda(); }
  const Scalar& mu() const { return chi2_.lambda(); }
  bool ramified() const { return regime_ == Regime::tame || regime_ == Regime::wild; }

  std::string describe() const;

 private:
  RepParams(FieldParams field, WeightParams weight, Regime regime, CharacterSpec chi1, CharacterSpec chi2)
      : field_(field), weight_(weight), regime_(regime), chi1_(std::move(chi1)), chi2_(std::move(chi2)) {}
  void validate() const;

  FieldParams field_;
  WeightParams weight_;
  Regime regime_;
  CharacterSpec chi1_;
  CharacterSpec chi2_;
};

}  // namespace kirillov
