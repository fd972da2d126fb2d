// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <vector>

#include "arith.hpp"

namespace kirillov {

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree
/// first. Cached; safe to call from several threads.
const std::vector<long>& cyclotomic_polynomial(long m);

/// Exact element of Q(zeta_m): a dense rational coefficient vector in the
/// power basis 1, zeta, ..., zeta^(phi(m)-1), reduced modulo Phi_m.
/// Plain rationals use conductor 1. Elements of different conductors combine
/// in Q(zeta_lcm). Values that land in Q are demoted back to conductor 1.
class Scalar {
 public:
  Scalar() : conductor_(1), coeffs_{Rational(0)} {}
  Scalar(int v) : Scalar(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : Scalar(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& r) : conductor_(1), coeffs_{r} { coeffs_[0].canonicalize(); }  // NOLINT(google-explicit-constructor)

  /// zeta_order^exponent.
  static Scalar root_of_unity(long order, long exponent);
  /// sum_i sums[i] * zeta_order^i for a vector indexed modulo `order`.
  static Scalar from_power_sums(long order, std::vector<Rational> sums);
  /// Element given in the reduced power basis of Q(zeta_m); any length is
  /// accepted and reduced.
  static Scalar from_basis(long m, std::vector<Rational> coeffs);

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return conductor_ == 1; }
  /// Requires is_rational().
  const Rational& rational() const;

  /// Same element viewed in Q(zeta_m); m must be a multiple of conductor().
  Scalar lifted(long m) const;
  Scalar inverse() const;
  Scalar pow(long e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  Scalar(long m, std::vector<Rational> coeffs) : conductor_(m), coeffs_(std::move(coeffs)) {}
  void demote();

  long conductor_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace kirillov
