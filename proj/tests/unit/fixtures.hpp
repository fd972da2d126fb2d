// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "params.hpp"

namespace kirillov::testing {

inline RepParams unramified(long p, int n, int m, const Rational& lambda, const Rational& mu) {
  return RepParams::unramified(FieldParams::desk(p), WeightParams{m, n}, Scalar(lambda), Scalar(mu));
}

inline RepParams degenerate(long p, int n, int m, const Scalar& lambda) {
  return RepParams::degenerate(FieldParams::desk(p), WeightParams{m, n}, lambda);
}

// Character number `which` of conductor nu, carrying lambda, against an unramified mu.
inline RepParams ramified(long p, int nu, size_t which, int m, const Scalar& lambda, const Scalar& mu) {
  const FieldParams field = FieldParams::desk(p);
  const auto eps = characters_of_conductor(field, nu).at(which);
  return RepParams::ramified(field, WeightParams{m, 0},
                             CharacterSpec::from_generator_exponents(field, nu, eps.exponents(), lambda), mu);
}

}  // namespace kirillov::testing
