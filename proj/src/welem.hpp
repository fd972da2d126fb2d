// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <string>
#include <vector>

#include "arith.hpp"

namespace kirillov {

/// Element of W = Q_p / Z_p, stored as its canonical representative
/// num / p^depth in [0, 1) with p not dividing num (or num = depth = 0).
class WElem {
 public:
  WElem() = default;

  static WElem zero(long p) { return WElem(p, 0, 0); }
  static WElem from_fraction(long p, long num, int depth);
  static WElem from_rational(long p, const Rational& r);
  static WElem parse(long p, const std::string& text);

  long p() const { return p_; }
  long numerator() const { return num_; }
  int depth() const { return depth_; }
  bool is_zero() const { return num_ == 0; }

  Rational to_rational() const;
  /// pi * beta; depth drops by one.
  WElem mul_by_pi() const;
  /// pi^k * beta for k >= 0.
  WElem mul_by_pi_power(int k) const;
  /// w * beta for a p-adic unit w.
  WElem scaled_by_unit(const Rational& w) const;

  WElem operator+(const WElem& o) const;
  WElem operator-(const WElem& o) const;
  WElem operator-() const;

  std::string str() const;

  friend bool operator==(const WElem&, const WElem&) = default;
  friend std::strong_ordering operator<=>(const WElem&, const WElem&) = default;

 private:
  WElem(long p, long num, int depth) : depth_(depth), num_(num), p_(p) {}

  // Member order fixes the ordering: by depth, then numerator.
  int depth_ = 0;
  long num_ = 0;
  long p_ = 0;
};

/// The q solutions alpha of pi * alpha = beta.
std::vector<WElem> fiber(const WElem& beta, long q);
/// W_1 = pi^-1 O / O, in increasing order.
std::vector<WElem> w1_elements(long p);
/// All beta of depth <= d, ordered by depth then numerator.
std::vector<WElem> elements_of_depth_at_most(long p, int d);

}  // namespace kirillov
