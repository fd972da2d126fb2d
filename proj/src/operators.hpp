// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

// Operators on finitely supported functions on W: suspension S, pullback Pi,
// convolution E_xi with a ramified character, and the projections onto
// C_1 (functions of pi*beta) and C_0 (vanishing coset sums).

#pragma once

#include <utility>
#include <vector>

#include "character.hpp"
#include "errors.hpp"
#include "wfunction.hpp"

namespace kirillov {

/// (Sf)(beta) = sum over pi*alpha = beta of f(alpha).
template <class V>
WFunction<V> suspend(const WFunction<V>& f) {
  WFunction<V> out;
  for (const auto& [alpha, v] : f) out.add(alpha.mul_by_pi(), v);
  return out;
}

/// (Pi f)(beta) = f(pi*beta).
template <class V>
WFunction<V> pi_pullback(const WFunction<V>& f, const FieldParams& field) {
  WFunction<V> out;
  for (const auto& [gamma, v] : f)
    for (const auto& alpha : fiber(gamma, field.q)) out.set(alpha, v);
  return out;
}

/// E_xi f(beta) = tau(xi^-1)/q^nu * sum_u xi^-1(u) f(beta - pi^-nu u).
class ConvolutionOperator {
 public:
  explicit ConvolutionOperator(const CharacterSpec& xi) {
    if (xi.conductor() == 0) throw Error(ErrorCode::trivial_character, "E_xi needs a ramified character");
    const FieldParams& field = xi.field();
    factor_ = gauss_sum(xi, field) * Scalar(Rational(1) / Rational(Integer(xi.modulus())));
    const CharacterSpec inv = xi.inverse();
    for (long u : xi.units())
      terms_.emplace_back(WElem::from_fraction(field.p, u, xi.conductor()), inv.value(u));
  }

  const Scalar& factor() const { return factor_; }

  template <class V>
  WFunction<V> apply(const WFunction<V>& f) const {
    WFunction<V> out;
    for (const auto& [beta, v] : f)
      for (const auto& [shift, weight] : terms_) out.add(beta + shift, weight * v);
    return factor_ * out;
  }

 private:
  Scalar factor_;
  std::vector<std::pair<WElem, Scalar>> terms_;
};

template <class V>
WFunction<V> convolve(const CharacterSpec& xi, const WFunction<V>& f) {
  return ConvolutionOperator(xi).apply(f);
}

/// P_1 = (1/q) Pi S.
template <class V>
WFunction<V> project_C1(const WFunction<V>& f, const FieldParams& field) {
  return Scalar(Rational(1, field.q)) * pi_pullback(suspend(f), field);
}

/// P_0 = E_xi E_{xi^-1}, xi any ramified character.
template <class V>
WFunction<V> project_C0(const WFunction<V>& f, const CharacterSpec& xi) {
  return convolve(xi, convolve(xi.inverse(), f));
}

/// f(beta) depends only on pi*beta.
template <class V>
bool in_C1(const WFunction<V>& f, const FieldParams& field) {
  const auto shifts = w1_elements(field.p);
  for (const auto& [beta, v] : f) {
    for (const auto& t : shifts) {
      const V* other = f.find(beta + t);
      if (other == nullptr || !(*other == v)) return false;
    }
  }
  return true;
}

/// Every W_1-coset sum vanishes.
template <class V>
bool in_C0(const WFunction<V>& f, const FieldParams& field) {
  const auto shifts = w1_elements(field.p);
  for (const auto& [beta, v] : f) {
    V sum = v;
    for (const auto& t : shifts) {
      if (t.is_zero()) continue;
      if (const V* other = f.find(beta + t)) sum += *other;
    }
    if (!sum.is_zero()) return false;
  }
  return true;
}

}  // namespace kirillov
