// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

// Annulus expansions phi = sum_l sum_beta C_l(beta) psi_beta(-pi^-l x) phi_l(x)
// of elements of Lambda, and the identities they satisfy.

#pragma once

#include <map>
#include <optional>

#include "coeffs.hpp"

namespace kirillov {

using Row = WFunction<PolyVec>;

struct AmplitudeTable {
  Regime regime = Regime::unramified;
  long p = 5;
  int n = 0;
  int k0 = 0;
  int l_max = 3;
  std::map<int, Row> total;   // C_l
  std::map<int, Row> prime;   // C'_l
  std::map<int, Row> second;  // C''_l
  std::map<int, Row> tilde;   // E_{eps^-1} C''_l + C'_l, ramified regimes only
  std::map<int, Row> gen_prime;   // c'_l
  std::map<int, Row> gen_second;  // c''_l

  /// Row of `rows` at level l; empty outside the computed range.
  static const Row& at(const std::map<int, Row>& rows, int l);
  const Row& row(int l) const { return at(total, l); }
};

/// Rows k0 <= l <= l_max from the single-step recursions.
AmplitudeTable expand(const GeneratorCoeffs& coeffs, const RepParams& params, int l_max = 3);
/// Same table from the closed sums over generators.
AmplitudeTable expand_closed_form(const GeneratorCoeffs& coeffs, const RepParams& params, int l_max = 3);

bool same_rows(const AmplitudeTable& a, const AmplitudeTable& b);

struct IdentityViolation {
  int level;  // the identity for C_{level+1} failed
  WElem gamma;
};

/// Unramified: C_{l+1} = (lambda+mu) S C_l - lambda mu S^2 C_{l-1} - S(lambda c''_l + mu c'_l) + c_{l+1}.
/// Degenerate: C_{l+1} = 2 lambda S C_l - lambda^2 S^2 C_{l-1} - lambda S(c''_l + c'_l) + c'_{l+1}.
/// Ramified: C'_l = lambda S C~_{l-1} + c'_l and C''_l = mu S C_{l-1} + c''_l.
/// Returns the first failure, or nullopt when every level checks out.
std::optional<IdentityViolation> verify_two_step(const AmplitudeTable& table, const RepParams& params);

/// Degenerate regime only: C''_{k0} = 0, C''_{k0+1} = -lambda S c''_{k0} and
/// C''_{l+1} = 2 lambda S C''_l - lambda^2 S^2 C''_{l-1} - lambda S c''_l.
std::optional<IdentityViolation> verify_degenerate_second(const AmplitudeTable& table, const RepParams& params);

/// C_l lies in C_1 for every k0 <= l < 0.
bool vanishes_outside_integers(const AmplitudeTable& table, const FieldParams& field);

}  // namespace kirillov
