// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

// Elements of Lambda supported on a finite template that vanish off O_F.

#pragma once

#include <random>
#include <string>
#include <vector>

#include "coeffs.hpp"

namespace kirillov {

struct SupportTemplate {
  std::vector<Cell> cells;

  /// Cells (k, beta) with k_lo <= k <= k_hi and depth(beta) <= depth.
  static SupportTemplate box(long p, int k_lo, int k_hi, int depth);
  std::string describe() const;
};

struct VanishingSpace {
  std::vector<GeneratorCoeffs> basis;
  size_t unknowns = 0;
  size_t constraints = 0;
};

/// Basis of the phi supported on the template whose rows C_l, l < 0, lie in
/// C_1. Unknowns are coordinates in the spanning set
/// pi^{-km} (pi^-k)^{n-i} (u - pi^-k beta)^i of each cell; each basis vector
/// is rescaled by a power of p so that its coordinates are integral with
/// minimal valuation in [0, 1).
VanishingSpace solve_vanishing(const SupportTemplate& support, const RepParams& params, const EmbeddingOracle& oracle);

/// `entries` random cells with levels in [k_lo, k_hi] and depth <= depth,
/// coefficients small integer combinations of the spanning set (so valid).
GeneratorCoeffs random_valid_coeffs(const RepParams& params, std::mt19937_64& rng, int k_lo, int k_hi, int depth,
                                    int entries);

/// Integer combination of basis vectors with coefficients in [-3, 3], each
/// vector used with probability 1/2; never returns zero for a nonempty basis.
GeneratorCoeffs random_combination(const std::vector<GeneratorCoeffs>& basis, std::mt19937_64& rng);

}  // namespace kirillov
