// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

// Exact point values of elements of Lambda in Q(zeta_{p^K}), and the
// mirabolic action on generator coefficients.

#pragma once

#include "expansion.hpp"

namespace kirillov {

/// psi(r) = zeta_{p^k}^a for r = a/p^k mod 1.
Scalar psi(long p, const Rational& r);

/// sum_beta c(beta) psi(-beta x).
PolyVec fourier_sum(const Row& c, const Rational& x, int n);

/// phi(pi^l u) read off row l of the expansion; u must be a p-adic unit.
/// Throws HorizonExceeded above the truncation level.
PolyVec evaluate(const AmplitudeTable& table, int l, const Rational& unit);

/// phi(pi^l u) summed generator by generator, without the expansion.
PolyVec evaluate_direct(const GeneratorCoeffs& coeffs, const RepParams& params, int l, const Rational& unit);

/// Coefficients of rho(g) phi for g = (a b; 0 1), where
/// rho(g) phi(x) = tau(g)(psi(b x) phi(a x)). With a = pi^j w, the entry at
/// (k, beta) moves to (k - j, w beta - pi^{k-j} b) and its coefficient becomes
/// chi(w) tau(g) c. The result is validated.
GeneratorCoeffs mirabolic_act(const Rational& a, const Rational& b, const GeneratorCoeffs& coeffs,
                              const RepParams& params, const EmbeddingOracle& oracle);

}  // namespace kirillov
