// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

// Breuil-Schneider conditions, the amplitude bounds for functions vanishing
// off O_F, and the certificate that the integral span is not all of V.

#pragma once

#include <string>
#include <vector>

#include "expansion.hpp"

namespace kirillov {

struct BSCheck {
  bool unitary = false;   // v(lambda) + v(mu) + 2m + v(q) + n = 0
  bool bounded = false;   // v(lambda) + m >= -v(q) - n and the same for mu
  bool holds() const { return unitary && bounded; }
};

BSCheck check_bs_conditions(const RepParams& params, const EmbeddingOracle& oracle);

struct BoundViolation {
  int level;
  WElem beta;
  std::string part;  // "C" for lattice membership, "C'" / "C''" for the ramified bounds
  Valuation margin;  // negative: by how much the bound fails
};

struct TheoremCheck {
  int k0 = 0;
  size_t checked = 0;
  Valuation tightest;  // smallest margin seen; infinite when nothing was checked
  std::vector<BoundViolation> violations;
  bool all_pass() const { return violations.empty(); }
};

/// Checks C_l(beta) in M_l(beta) (unramified, degenerate) or
/// v(C'_l), v(C''_l) >= -v(q) - m l (ramified) for k0 <= l <= 0. Rows with
/// l < 0 are first replaced by their projection onto C_1. Throws NotVanishing
/// when phi does not vanish off O_F.
TheoremCheck check_theorem12(const AmplitudeTable& table, const RepParams& params, const EmbeddingOracle& oracle);
TheoremCheck check_theorem12(const GeneratorCoeffs& coeffs, const RepParams& params, const EmbeddingOracle& oracle);

/// The lattice sum of M_0(beta) over beta in W_1.
LocalLattice certificate_lattice(const RepParams& params);

/// A vector C outside the sum of M_0(beta) over W_1: p^-1 times a basis
/// vector, scaled by further powers of p^-1 until it leaves the sum.
PolyVec certificate_prop13(const RepParams& params);

}  // namespace kirillov
