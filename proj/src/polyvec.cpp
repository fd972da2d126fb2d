// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#include "polyvec.hpp"

#include <ostream>

#include "errors.hpp"

namespace kirillov {
namespace {

using Poly = std::vector<Scalar>;

Poly mul(const Poly& x, const Poly& y) {
  Poly out(x.size() + y.size() - 1, Scalar(0));
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero()) out[i + j] += x[i] * y[j];
  }
  return out;
}

}  // namespace

PolyVec PolyVec::constant(int n, const Scalar& c) {
  PolyVec p(n);
  p[0] = c;
  return p;
}

PolyVec PolyVec::monomial(int n, int i, const Scalar& c) {
  if (i < 0 || i > n) throw Error(ErrorCode::invalid_argument, "monomial degree out of range");
  PolyVec p(n);
  p[static_cast<size_t>(i)] = c;
  return p;
}

bool PolyVec::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

Scalar PolyVec::evaluate(const Scalar& u) const {
  Scalar acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * u + coeffs_[i];
  return acc;
}

PolyVec PolyVec::compose_affine(const Scalar& a, const Scalar& b) const {
  Poly acc{Scalar(0)};
  const Poly lin{a, b};
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc = mul(acc, lin);
    acc[0] += coeffs_[i];
  }
  acc.resize(coeffs_.size(), Scalar(0));
  return PolyVec(std::move(acc));
}

PolyVec& PolyVec::operator+=(const PolyVec& o) {
  if (coeffs_.empty()) {
    coeffs_ = o.coeffs_;
    return *this;
  }
  if (o.coeffs_.empty()) return *this;
  if (o.coeffs_.size() != coeffs_.size()) throw Error(ErrorCode::invalid_argument, "PolyVec length mismatch");
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

PolyVec& PolyVec::operator-=(const PolyVec& o) { return *this += Scalar(-1) * o; }

PolyVec operator*(const Scalar& s, const PolyVec& p) {
  PolyVec out = p;
  for (auto& c : out.coeffs_) c = s * c;
  return out;
}

bool operator==(const PolyVec& a, const PolyVec& b) {
  if (a.coeffs_.size() == b.coeffs_.size()) return a.coeffs_ == b.coeffs_;
  return a.is_zero() && b.is_zero();
}

std::ostream& operator<<(std::ostream& os, const PolyVec& p) {
  os << "(";
  for (size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
  return os << ")";
}

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
  return Matrix2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

PolyVec act_tau(const Matrix2& g, const PolyVec& poly, const WeightParams& w) {
  const Scalar det = g.det();
  if (det.is_zero()) throw Error(ErrorCode::singular_matrix, "tau(g) needs an invertible matrix");
  const int n = w.n;
  if (poly.degree_bound() != n) throw Error(ErrorCode::invalid_argument, "PolyVec degree does not match the weight");
  // Powers of (a + c u) and (b + d u).
  std::vector<Poly> left(static_cast<size_t>(n) + 1), right(static_cast<size_t>(n) + 1);
  left[0] = right[0] = Poly{Scalar(1)};
  for (int k = 1; k <= n; ++k) {
    left[static_cast<size_t>(k)] = mul(left[static_cast<size_t>(k - 1)], Poly{g.a, g.c});
    right[static_cast<size_t>(k)] = mul(right[static_cast<size_t>(k - 1)], Poly{g.b, g.d});
  }
  Poly out(static_cast<size_t>(n) + 1, Scalar(0));
  for (int i = 0; i <= n; ++i) {
    const Scalar& ci = poly[static_cast<size_t>(i)];
    if (ci.is_zero()) continue;
    const Poly term = mul(left[static_cast<size_t>(n - i)], right[static_cast<size_t>(i)]);
    for (size_t j = 0; j < term.size() && j < out.size(); ++j) out[j] += ci * term[j];
  }
  const Scalar twist = det.pow(w.m);
  for (auto& c : out) c = twist * c;
  return PolyVec(std::move(out));
}

}  // namespace kirillov
