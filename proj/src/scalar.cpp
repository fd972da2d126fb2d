// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#include "scalar.hpp"

#include <map>
#include <mutex>
#include <ostream>

#include "errors.hpp"

namespace kirillov {
namespace {

std::vector<long> poly_exact_div(std::vector<long> num, const std::vector<long>& den) {
  // den is monic.
  const size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (size_t i = num.size(); i-- > dn;) {
    long c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

/// Reduce `poly` modulo Phi_m in place, leaving exactly phi(m) coefficients.
void reduce_mod_cyclotomic(std::vector<Rational>& poly, long m) {
  const auto& phi_poly = cyclotomic_polynomial(m);
  const size_t deg = phi_poly.size() - 1;
  std::vector<std::pair<size_t, long>> low;
  for (size_t j = 0; j < deg; ++j)
    if (phi_poly[j] != 0) low.emplace_back(j, phi_poly[j]);
  for (size_t d = poly.size(); d-- > deg;) {
    if (poly[d] == 0) continue;
    const Rational c = poly[d];
    for (const auto& [j, a] : low) poly[d - deg + j] -= c * a;
    poly[d] = 0;
  }
  poly.resize(deg, Rational(0));
}

/// Solve a dense square rational system; throws on singular input.
std::vector<Rational> solve_dense(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const size_t n = a.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::singular_matrix, "singular cyclotomic multiplication matrix");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    const Rational inv = 1 / a[col][col];
    for (size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(long m) {
  static std::mutex mu;
  static std::map<long, std::vector<long>> cache;
  if (m < 1) throw Error(ErrorCode::invalid_argument, "cyclotomic conductor must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::vector<long> num(static_cast<size_t>(m) + 1, 0);
  num[0] = -1;
  num[static_cast<size_t>(m)] = 1;
  for (long d : divisors(m)) {
    if (d == m) continue;
    // Recursion under the same lock; inline the lookup to avoid re-locking.
    auto jt = cache.find(d);
    std::vector<long> phi_d;
    if (jt != cache.end()) {
      phi_d = jt->second;
    } else {
      // Build Phi_d from scratch (small, d < m).
      std::vector<long> nd(static_cast<size_t>(d) + 1, 0);
      nd[0] = -1;
      nd[static_cast<size_t>(d)] = 1;
      for (long e : divisors(d)) {
        if (e == d) continue;
        nd = poly_exact_div(nd, cache.at(e));
      }
      cache.emplace(d, nd);
      phi_d = nd;
    }
    num = poly_exact_div(num, phi_d);
  }
  return cache.emplace(m, num).first->second;
}

Scalar Scalar::root_of_unity(long order, long exponent) {
  if (order < 1) throw Error(ErrorCode::invalid_argument, "root of unity order must be positive");
  std::vector<Rational> sums(static_cast<size_t>(order), Rational(0));
  sums[static_cast<size_t>(mod_l(exponent, order))] = 1;
  return from_power_sums(order, std::move(sums));
}

Scalar Scalar::from_power_sums(long order, std::vector<Rational> sums) {
  if (static_cast<long>(sums.size()) != order)
    throw Error(ErrorCode::invalid_argument, "power sum vector length must equal the order");
  return from_basis(order, std::move(sums));
}

Scalar Scalar::from_basis(long m, std::vector<Rational> coeffs) {
  if (coeffs.empty()) coeffs.emplace_back(0);
  reduce_mod_cyclotomic(coeffs, m);
  Scalar s(m, std::move(coeffs));
  s.demote();
  return s;
}

bool Scalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

const Rational& Scalar::rational() const {
  if (conductor_ != 1) throw Error(ErrorCode::invalid_argument, "scalar is not rational");
  return coeffs_[0];
}

void Scalar::demote() {
  if (conductor_ == 1) return;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return;
  Rational c0 = coeffs_[0];
  conductor_ = 1;
  coeffs_.assign(1, c0);
}

Scalar Scalar::lifted(long m) const {
  if (m % conductor_ != 0) throw Error(ErrorCode::invalid_argument, "lift target is not a multiple of the conductor");
  if (m == conductor_) return *this;
  const size_t step = static_cast<size_t>(m / conductor_);
  std::vector<Rational> poly((coeffs_.size() - 1) * step + 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) poly[i * step] = coeffs_[i];
  reduce_mod_cyclotomic(poly, m);
  return Scalar(m, std::move(poly));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (conductor_ == o.conductor_) {
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  } else {
    const long m = lcm_l(conductor_, o.conductor_);
    Scalar a = lifted(m);
    const Scalar b = o.lifted(m);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    *this = std::move(a);
  }
  demote();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (o.conductor_ == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (conductor_ == 1) {
    const Rational r = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= r;
    return *this;
  }
  const long m = lcm_l(conductor_, o.conductor_);
  const Scalar a = lifted(m);
  const Scalar b = o.lifted(m);
  std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  reduce_mod_cyclotomic(prod, m);
  conductor_ = m;
  coeffs_ = std::move(prod);
  demote();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::invalid_argument, "inverse of zero scalar");
  if (conductor_ == 1) return Scalar(Rational(1) / coeffs_[0]);
  const size_t n = coeffs_.size();
  // Column j holds the coordinates of this * zeta^j.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
  for (size_t j = 0; j < n; ++j) {
    std::vector<Rational> poly(n + j, Rational(0));
    for (size_t i = 0; i < n; ++i) poly[i + j] = coeffs_[i];
    reduce_mod_cyclotomic(poly, conductor_);
    for (size_t i = 0; i < n; ++i) a[i][j] = poly[i];
  }
  std::vector<Rational> e(n, Rational(0));
  e[0] = 1;
  Scalar r(conductor_, solve_dense(std::move(a), std::move(e)));
  r.demote();
  return r;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const long m = lcm_l(a.conductor_, b.conductor_);
  return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  if (s.is_rational()) return os << s.rational().get_str();
  os << "[m=" << s.conductor() << ":";
  for (size_t i = 0; i < s.coeffs().size(); ++i) os << (i ? "," : "") << s.coeffs()[i].get_str();
  return os << "]";
}

}  // namespace kirillov
