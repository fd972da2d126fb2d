// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#include "welem.hpp"

#include "errors.hpp"

namespace kirillov {
namespace {

long pow_l(long p, int k) {
  long r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > (1L << 62) / p) throw Error(ErrorCode::unsupported, "frequency depth too large");
    r *= p;
  }
  return r;
}

}  // namespace

WElem WElem::from_fraction(long p, long num, int depth) {
  if (depth < 0) throw Error(ErrorCode::invalid_argument, "negative depth");
  long mod = pow_l(p, depth);
  num = mod_l(num, mod);
  while (depth > 0 && num % p == 0) {
    num /= p;
    mod /= p;
    --depth;
  }
  if (num == 0) depth = 0;
  return WElem(p, num, depth);
}

WElem WElem::from_rational(long p, const Rational& input) {
  Rational r = input;
  r.canonicalize();
  if (r == 0) return zero(p);
  const long v = vp(r, p);
  if (v >= 0) return zero(p);
  const int depth = static_cast<int>(-v);
  const Integer modulus(pow_l(p, depth));
  // r = a / (p^k b') ; the image is (a * b'^-1 mod p^k) / p^k.
  const Rational scaled = r * Rational(modulus);
  const Integer num = rational_mod(scaled, modulus);
  return from_fraction(p, num.get_si(), depth);
}

WElem WElem::parse(long p, const std::string& text) { return from_rational(p, parse_rational(text)); }

Rational WElem::to_rational() const {
  Rational r(Integer(num_), Integer(pow_l(p_, depth_)));
  r.canonicalize();
  return r;
}

WElem WElem::mul_by_pi() const {
  if (depth_ == 0) return zero(p_);
  return from_fraction(p_, num_, depth_ - 1);
}

WElem WElem::mul_by_pi_power(int k) const {
  if (k < 0) throw Error(ErrorCode::invalid_argument, "pi^k * beta needs k >= 0 on W");
  if (k >= depth_) return zero(p_);
  return from_fraction(p_, num_, depth_ - k);
}

WElem WElem::scaled_by_unit(const Rational& w) const {
  if (vp(w, p_) != 0) throw Error(ErrorCode::invalid_argument, "scaling factor is not a p-adic unit");
  if (depth_ == 0) return *this;
  const Integer modulus(pow_l(p_, depth_));
  const Integer wm = rational_mod(w, modulus);
  const Integer prod = (Integer(num_) * wm) % modulus;
  return from_fraction(p_, prod.get_si(), depth_);
}

WElem WElem::operator+(const WElem& o) const {
  if (p_ != o.p_ && !is_zero() && !o.is_zero()) throw Error(ErrorCode::invalid_argument, "mixed primes in W");
  const long p = p_ ? p_ : o.p_;
  const int d = std::max(depth_, o.depth_);
  const long mod = pow_l(p, d);
  const long a = num_ * (mod / pow_l(p, depth_));
  const long b = o.num_ * (mod / pow_l(p, o.depth_));
  return from_fraction(p, (a + b) % mod, d);
}

WElem WElem::operator-() const { return from_fraction(p_, -num_, depth_); }

WElem WElem::operator-(const WElem& o) const { return *this + (-o); }

std::string WElem::str() const {
  if (num_ == 0) return "0";
  return std::to_string(num_) + "/" + std::to_string(pow_l(p_, depth_));
}

std::vector<WElem> fiber(const WElem& beta, long q) {
  const long p = beta.p();
  if (q != p) throw Error(ErrorCode::unsupported, "only q = p is implemented");
  std::vector<WElem> out;
  out.reserve(static_cast<size_t>(q));
  // alpha = beta / p + j / p for j in [0, q).
  for (long j = 0; j < q; ++j)
    out.push_back(WElem::from_fraction(p, beta.numerator() + j * pow_l(p, beta.depth()), beta.depth() + 1));
  return out;
}

std::vector<WElem> w1_elements(long p) { return fiber(WElem::zero(p), p); }

std::vector<WElem> elements_of_depth_at_most(long p, int d) {
  std::vector<WElem> out{WElem::zero(p)};
  for (int k = 1; k <= d; ++k) {
    const long mod = pow_l(p, k);
    for (long a = 1; a < mod; ++a)
      if (a % p != 0) out.push_back(WElem::from_fraction(p, a, k));
  }
  return out;
}

}  // namespace kirillov
