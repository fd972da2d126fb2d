// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "scalar.hpp"

namespace kirillov {

/// Exact p-adic valuation, normalized so that v(p) = 1; v(0) = +inf.
class Valuation {
 public:
  Valuation() : infinite_(true) {}
  Valuation(const Rational& v) : infinite_(false), value_(v) {}  // NOLINT(google-explicit-constructor)
  Valuation(long v) : infinite_(false), value_(v) {}  // NOLINT(google-explicit-constructor)
  Valuation(int v) : infinite_(false), value_(v) {}  // NOLINT(google-explicit-constructor)

  static Valuation infinity() { return Valuation(); }

  bool is_infinite() const { return infinite_; }
  const Rational& value() const;

  friend Valuation operator+(const Valuation& a, const Valuation& b);
  friend bool operator==(const Valuation& a, const Valuation& b);
  friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
  friend bool operator<(const Valuation& a, const Valuation& b);
  friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

  /// "inf" or an exact rational string.
  std::string str() const;

 private:
  bool infinite_;
  Rational value_;
};

Valuation min(const Valuation& a, const Valuation& b);

/// Computes valuations of cyclotomic scalars through one fixed embedding
/// Q(zeta_m) -> Qbar_p. Supported conductors are m = p^a * d with d | p-1:
/// zeta_d goes to the Teichmuller lift of the smallest residue of exact order
/// d, zeta_{p^a} to a root of the Eisenstein polynomial Phi_{p^a}(1 + w).
class EmbeddingOracle {
 public:
  explicit EmbeddingOracle(long p, unsigned initial_precision = 64, unsigned precision_cap = 1024);

  long p() const { return p_; }
  unsigned initial_precision() const { return initial_precision_; }
  unsigned precision_cap() const { return precision_cap_; }

  /// Valuation at one working precision (p-adic digits); nullopt when the
  /// element is indistinguishable from 0 at that precision.
  std::optional<Valuation> try_valuation(const Scalar& x, unsigned precision) const;

  /// Exact valuation with precision doubling up to the cap. Throws
  /// AmbiguousValuation when the cap is reached.
  Valuation valuation(const Scalar& x) const;

  /// Smallest residue in [1, p) of multiplicative order d.
  long hensel_seed(long d) const;
  /// Teichmuller lift of hensel_seed(d) modulo p^precision.
  Integer unit_root(long d, unsigned precision) const;

  /// Human-readable record of where zeta_m is sent.
  std::string describe(long m) const;

 private:
  long p_;
  unsigned initial_precision_;
  unsigned precision_cap_;
};

inline Valuation valuation(const Scalar& x, const EmbeddingOracle& oracle) { return oracle.valuation(x); }

}  // namespace kirillov
