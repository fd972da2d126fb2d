// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#include "valuation.hpp"

#include <sstream>

#include "errors.hpp"

namespace kirillov {

const Rational& Valuation::value() const {
  if (infinite_) throw Error(ErrorCode::invalid_argument, "infinite valuation has no finite value");
  return value_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) return Valuation::infinity();
  return Valuation(Rational(a.value_ + b.value_));
}

bool operator==(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

bool operator<(const Valuation& a, const Valuation& b) {
  if (a.infinite_) return false;
  if (b.infinite_) return true;
  return a.value_ < b.value_;
}

std::string Valuation::str() const { return infinite_ ? "inf" : value_.get_str(); }

Valuation min(const Valuation& a, const Valuation& b) { return b < a ? b : a; }

EmbeddingOracle::EmbeddingOracle(long p, unsigned initial_precision, unsigned precision_cap)
    : p_(p), initial_precision_(initial_precision), precision_cap_(precision_cap) {
  if (!is_prime(p)) throw Error(ErrorCode::invalid_argument, "p must be prime");
  if (initial_precision == 0 || precision_cap < initial_precision)
    throw Error(ErrorCode::invalid_argument, "bad precision settings");
}

long EmbeddingOracle::hensel_seed(long d) const {
  if ((p_ - 1) % d != 0)
    throw Error(ErrorCode::unsupported, "root of unity of order " + std::to_string(d) + " is not in Z_" + std::to_string(p_));
  for (long g = 1; g < p_; ++g)
    if (mult_order(g, p_) == d) return g;
  throw Error(ErrorCode::unsupported, "no residue of the requested order");
}

Integer EmbeddingOracle::unit_root(long d, unsigned precision) const {
  const Integer modulus = ipow(p_, precision);
  const Integer g(hensel_seed(d));
  Integer r;
  const Integer e = ipow(p_, precision);  // g^(p^N) is the Teichmuller lift mod p^N
  mpz_powm(r.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

namespace {

struct ConductorSplit {
  long ppart;  // p^a
  long a;
  long rest;   // d, coprime to p
};

ConductorSplit split_conductor(long m, long p) {
  ConductorSplit s{1, 0, m};
  while (s.rest % p == 0) {
    s.rest /= p;
    s.ppart *= p;
    ++s.a;
  }
  return s;
}

// Bezout coefficients: x*a + y*b = 1 for coprime a, b.
std::pair<long, long> bezout(long a, long b) {
  long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const long q = old_r / r;
    long tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  return {old_s, old_t};
}

}  // namespace

std::optional<Valuation> EmbeddingOracle::try_valuation(const Scalar& x, unsigned precision) const {
  if (x.is_zero()) return Valuation::infinity();
  if (x.is_rational()) return Valuation(vp(x.rational(), p_));

  const long m = x.conductor();
  const ConductorSplit split = split_conductor(m, p_);
  const long d = split.rest;
  if ((p_ - 1) % d != 0)
    throw Error(ErrorCode::unsupported,
                "conductor " + std::to_string(m) + " needs a residue field extension of F_" + std::to_string(p_));

  // Clear denominators.
  Integer den = 1;
  for (const auto& c : x.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  const long v_den = vp(den, p_);
  const Integer modulus = ipow(p_, precision);
  std::vector<Integer> a;
  a.reserve(x.coeffs().size());
  for (const auto& c : x.coeffs()) {
    Integer ai = Integer(c.get_num()) * (den / Integer(c.get_den()));
    ai %= modulus;
    if (ai < 0) ai += modulus;
    a.push_back(ai);
  }

  // Powers of the unit root.
  std::vector<Integer> theta_pow(static_cast<size_t>(d), Integer(1));
  if (d > 1) {
    const Integer theta = unit_root(d, precision);
    for (long r = 1; r < d; ++r) theta_pow[static_cast<size_t>(r)] = (theta_pow[static_cast<size_t>(r - 1)] * theta) % modulus;
  }

  if (split.a == 0) {
    Integer acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * theta_pow[i % static_cast<size_t>(d)];
    acc %= modulus;
    if (acc == 0) return std::nullopt;
    return Valuation(Rational(vp(acc, p_) - v_den));
  }

  const long big_p = split.ppart;
  const long e = big_p - big_p / p_;
  const auto [e1, e2] = bezout(big_p, d);  // e1*P + e2*d = 1; zeta_m -> theta^e1 * Z^e2
  std::vector<Integer> poly_z(static_cast<size_t>(big_p), Integer(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const long li = static_cast<long>(i);
    const long r = mod_l(e1 * li, d);
    const long s = mod_l(e2 * li, big_p);
    poly_z[static_cast<size_t>(s)] += a[i] * theta_pow[static_cast<size_t>(r)];
  }
  // Reduce modulo Phi_P(Z) = sum_{k<p} Z^(k*P/p).
  const long step = big_p / p_;
  for (long s = big_p - 1; s >= e; --s) {
    Integer c = poly_z[static_cast<size_t>(s)] % modulus;
    if (c == 0) continue;
    poly_z[static_cast<size_t>(s)] = 0;
    for (long k = 0; k < p_ - 1; ++k) poly_z[static_cast<size_t>(s - e + k * step)] -= c;
  }
  // Taylor shift Z = 1 + w.
  Rational best;
  bool found = false;
  for (long j = 0; j < e; ++j) {
    Integer bj = 0;
    Integer binom;
    for (long s = j; s < e; ++s) {
      if (poly_z[static_cast<size_t>(s)] == 0) continue;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(s), static_cast<unsigned long>(j));
      bj += poly_z[static_cast<size_t>(s)] * binom;
    }
    bj %= modulus;
    if (bj == 0) continue;
    Rational frac(j, e);
    frac.canonicalize();
    const Rational v = Rational(vp(bj, p_)) + frac;
    if (!found || v < best) {
      best = v;
      found = true;
    }
  }
  if (!found) return std::nullopt;
  best.canonicalize();
  return Valuation(Rational(best - v_den));
}

Valuation EmbeddingOracle::valuation(const Scalar& x) const {
  if (x.is_zero()) return Valuation::infinity();
  for (unsigned prec = initial_precision_; prec <= precision_cap_; prec *= 2) {
    if (auto v = try_valuation(x, prec)) return *v;
  }
  throw Error(ErrorCode::ambiguous_valuation,
              "valuation exceeds the precision cap of " + std::to_string(precision_cap_) + " digits");
}

std::string EmbeddingOracle::describe(long m) const {
  const ConductorSplit split = split_conductor(m, p_);
  std::ostringstream os;
  os << "zeta_" << m << " -> ";
  if (split.rest > 1) os << "teichmuller(" << hensel_seed(split.rest) << " mod " << p_ << ")";
  if (split.rest > 1 && split.a > 0) os << " * ";
  if (split.a > 0) os << "root of Phi_" << split.ppart << "(1+w)";
  if (split.rest == 1 && split.a == 0) os << "1";
  return os.str();
}

}  // namespace kirillov
