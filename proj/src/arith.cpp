// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#include "arith.hpp"

#include <numeric>

#include "errors.hpp"

namespace kirillov {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::parse: return "ParseError";
    case ErrorCode::invalid_coeffs: return "InvalidCoeffs";
    case ErrorCode::regime_mismatch: return "RegimeMismatch";
    case ErrorCode::trivial_character: return "TrivialCharacter";
    case ErrorCode::ambiguous_valuation: return "AmbiguousValuation";
    case ErrorCode::inconsistent: return "Inconsistent";
    case ErrorCode::weight_too_large: return "WeightTooLarge";
    case ErrorCode::not_vanishing: return "NotVanishing";
    case ErrorCode::horizon_exceeded: return "HorizonExceeded";
    case ErrorCode::singular_matrix: return "SingularMatrix";
    case ErrorCode::unsupported: return "Unsupported";
    case ErrorCode::io: return "IOError";
  }
  return "Unknown";
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long vp(const Integer& x, long p) {
  if (x == 0) throw Error(ErrorCode::invalid_argument, "valuation of zero integer");
  Integer y = abs(x);
  long v = 0;
  Integer q, r;
  const Integer pp(p);
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), y.get_mpz_t(), pp.get_mpz_t());
    if (r != 0) break;
    y = q;
    ++v;
  }
  return v;
}

long vp(const Rational& x, long p) {
  return vp(Integer(x.get_num()), p) - vp(Integer(x.get_den()), p);
}

Integer ipow(long base, unsigned long exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return r;
}

Rational rpow(const Rational& base, long exp) {
  if (exp == 0) return 1;
  if (exp < 0) {
    if (base == 0) throw Error(ErrorCode::invalid_argument, "zero to a negative power");
    Rational inv = 1 / base;
    return rpow(inv, -exp);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exp));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational ppow(long p, long e) {
  if (e >= 0) return Rational(ipow(p, static_cast<unsigned long>(e)));
  return Rational(Integer(1), ipow(p, static_cast<unsigned long>(-e)));
}

long gcd_l(long a, long b) { return std::gcd(a, b); }
long lcm_l(long a, long b) { return std::lcm(a, b); }

long euler_phi(long n) {
  long result = n;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

long mult_order(long a, long n) {
  if (n == 1) return 1;
  long x = mod_l(a, n);
  long k = 1;
  while (x != 1) {
    x = (x * mod_l(a, n)) % n;
    ++k;
    if (k > n) throw Error(ErrorCode::invalid_argument, "element is not a unit");
  }
  return k;
}

long inv_mod(long a, long n) {
  long t = 0, new_t = 1, r = n, new_r = mod_l(a, n);
  while (new_r != 0) {
    long q = r / new_r;
    long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error(ErrorCode::invalid_argument, "not invertible modulo n");
  return mod_l(t, n);
}

Integer rational_mod(const Rational& r, const Integer& modulus) {
  Integer den = r.get_den();
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw Error(ErrorCode::invalid_argument, "denominator not invertible modulo p^k");
  Integer out = (Integer(r.get_num()) * inv) % modulus;
  if (out < 0) out += modulus;
  return out;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  std::string s = text;
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0)
    throw Error(ErrorCode::parse, "not an exact rational: '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace kirillov
