// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <vector>

#include "scalar.hpp"

namespace kirillov {

/// det^m (x) Sym^n.
struct WeightParams {
  int m = 0;
  int n = 0;

  bool below_q(long q) const { return n < q; }
  friend bool operator==(const WeightParams&, const WeightParams&) = default;
};

/// Element sum_i c_i u^i of E[u] of degree <= n; always n+1 coefficients.
/// A default-constructed PolyVec is an untyped zero that adopts the length
/// of whatever is added to it.
class PolyVec {
 public:
  PolyVec() = default;
  explicit PolyVec(int n) : coeffs_(static_cast<size_t>(n) + 1, Scalar(0)) {}
  explicit PolyVec(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {}

  static PolyVec constant(int n, const Scalar& c);
  static PolyVec monomial(int n, int i, const Scalar& c = Scalar(1));

  int degree_bound() const { return static_cast<int>(coeffs_.size()) - 1; }
  size_t size() const { return coeffs_.size(); }
  const Scalar& operator[](size_t i) const { return coeffs_[i]; }
  Scalar& operator[](size_t i) { return coeffs_[i]; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  Scalar evaluate(const Scalar& u) const;
  /// Coefficients in t of P(a + b t).
  PolyVec compose_affine(const Scalar& a, const Scalar& b) const;

  PolyVec& operator+=(const PolyVec& o);
  PolyVec& operator-=(const PolyVec& o);
  friend PolyVec operator+(PolyVec a, const PolyVec& b) { return a += b; }
  friend PolyVec operator-(PolyVec a, const PolyVec& b) { return a -= b; }
  friend PolyVec operator*(const Scalar& s, const PolyVec& p);
  friend bool operator==(const PolyVec& a, const PolyVec& b);
  friend bool operator!=(const PolyVec& a, const PolyVec& b) { return !(a == b); }

 private:
  std::vector<Scalar> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const PolyVec& p);

struct Matrix2 {
  Scalar a{1}, b{0}, c{0}, d{1};

  Scalar det() const { return a * d - b * c; }
  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y);
};

/// tau(g) u^i = (ad - bc)^m (a + cu)^(n-i) (b + du)^i, extended linearly.
/// Throws SingularMatrix when det g = 0.
PolyVec act_tau(const Matrix2& g, const PolyVec& poly, const WeightParams& w);

}  // namespace kirillov
