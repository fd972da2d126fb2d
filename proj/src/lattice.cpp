// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#include "lattice.hpp"

#include "errors.hpp"

namespace kirillov {
namespace {

Valuation gauss_norm(const PolyVec& poly, const EmbeddingOracle& oracle) {
  Valuation g;
  for (const auto& c : poly.coeffs())
    if (!c.is_zero()) g = min(g, oracle.valuation(c));
  return g;
}

// Every value v(R(r)) is attained, so it can only tighten `best`. A residue
// class whose Gauss norm already reaches `best` cannot improve it.
Valuation descend(const PolyVec& poly, Valuation best, const EmbeddingOracle& oracle) {
  const Valuation g = gauss_norm(poly, oracle);
  if (g.is_infinite() || g >= best) return best;
  const long p = oracle.p();
  for (long r = 0; r < p; ++r) {
    const Scalar value = poly.evaluate(Scalar(r));
    const Valuation v = value.is_zero() ? Valuation::infinity() : oracle.valuation(value);
    if (v == g) return g;
    best = min(best, v);
  }
  // No residue attains the Gauss norm; each child R(r + p s) has a strictly
  // larger Gauss norm, so the recursion terminates.
  for (long r = 0; r < p && best > g; ++r) best = descend(poly.compose_affine(Scalar(r), Scalar(p)), best, oracle);
  return best;
}

PolyVec recentred(const PolyVec& poly, int l, const WElem& beta, long p) {
  const Rational scale = ppow(p, -l);
  return poly.compose_affine(Scalar(scale * beta.to_rational()), Scalar(scale));
}

bool all_integral(const std::vector<Rational>& v, long p) {
  for (const auto& x : v)
    if (x != 0 && vp(x, p) < 0) return false;
  return true;
}

std::vector<std::vector<Rational>> inverse(std::vector<std::vector<Rational>> a) {
  const size_t r = a.size();
  std::vector<std::vector<Rational>> inv(r, std::vector<Rational>(r, Rational(0)));
  for (size_t i = 0; i < r; ++i) inv[i][i] = 1;
  for (size_t c = 0; c < r; ++c) {
    size_t piv = c;
    while (piv < r && a[piv][c] == 0) ++piv;
    if (piv == r) throw Error(ErrorCode::singular_matrix, "lattice basis is not invertible");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    const Rational d = a[c][c];
    for (size_t j = 0; j < r; ++j) {
      a[c][j] /= d;
      inv[c][j] /= d;
    }
    for (size_t i = 0; i < r; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (size_t j = 0; j < r; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace

Valuation supnorm_on_integers(const PolyVec& poly, const EmbeddingOracle& oracle) {
  return descend(poly, Valuation::infinity(), oracle);
}

Valuation supnorm_on_disk(const PolyVec& poly, const Disk& disk, const EmbeddingOracle& oracle) {
  return supnorm_on_integers(recentred(poly, disk.l, disk.beta, oracle.p()), oracle);
}

DiskLattice::DiskLattice(FieldParams field, WeightParams weight, int level, WElem center, Rational scale,
                         MembershipRoute route)
    : field_(field), weight_(weight), level_(level), center_(center), scale_(std::move(scale)), route_(route) {
  if (weight.n < 0) throw Error(ErrorCode::invalid_argument, "weight n must be nonnegative");
  if (center.p() != field.p) throw Error(ErrorCode::invalid_argument, "disk centre lives in a different W");
}

MembershipRoute DiskLattice::route() const {
  if (route_ != MembershipRoute::automatic) return route_;
  return weight_.below_q(field_.q) ? MembershipRoute::basis : MembershipRoute::norm;
}

std::vector<Scalar> DiskLattice::coordinates(const PolyVec& poly) const {
  const PolyVec r = recentred(poly, level_, center_, field_.p);
  const Scalar lift(ppow(field_.p, static_cast<long>(level_) * weight_.n));
  std::vector<Scalar> out;
  out.reserve(r.size());
  for (const auto& c : r.coeffs()) out.push_back(lift * c);
  return out;
}

std::vector<PolyVec> DiskLattice::basis() const {
  if (scale_.get_den() != 1) throw Error(ErrorCode::unsupported, "basis of a lattice with fractional scale");
  const long n = weight_.n;
  const Rational front = ppow(field_.p, scale_.get_num().get_si() - static_cast<long>(level_) * n);
  const Scalar slope(ppow(field_.p, level_));
  const Scalar shift(-center_.to_rational());
  std::vector<PolyVec> out;
  for (int i = 0; i <= n; ++i)
    out.push_back(Scalar(front) * PolyVec::monomial(weight_.n, i).compose_affine(shift, slope));
  return out;
}

Valuation DiskLattice::basis_margin(const PolyVec& poly, const EmbeddingOracle& oracle) const {
  Valuation worst;
  for (const auto& c : coordinates(poly))
    if (!c.is_zero()) worst = min(worst, oracle.valuation(c));
  return worst.is_infinite() ? worst : Valuation(worst.value() - scale_);
}

Valuation DiskLattice::norm_margin(const PolyVec& poly, const EmbeddingOracle& oracle) const {
  const Valuation sup = supnorm_on_disk(poly, Disk{level_, center_}, oracle);
  if (sup.is_infinite()) return sup;
  return Valuation(sup.value() + Rational(static_cast<long>(level_) * weight_.n) - scale_);
}

bool DiskLattice::contains_basis_route(const PolyVec& poly, const EmbeddingOracle& oracle) const {
  return basis_margin(poly, oracle) >= Valuation(0);
}

bool DiskLattice::contains_norm_route(const PolyVec& poly, const EmbeddingOracle& oracle) const {
  return norm_margin(poly, oracle) >= Valuation(0);
}

Valuation DiskLattice::margin(const PolyVec& poly, const EmbeddingOracle& oracle) const {
  return route() == MembershipRoute::basis ? basis_margin(poly, oracle) : norm_margin(poly, oracle);
}

bool DiskLattice::contains(const PolyVec& poly, const EmbeddingOracle& oracle) const {
  return margin(poly, oracle) >= Valuation(0);
}

DiskLattice DiskLattice::rescaled(const Rational& extra) const {
  return DiskLattice(field_, weight_, level_, center_, scale_ + extra, route_);
}

DiskLattice lattice_N(int l, const WElem& beta, const WeightParams& w, const FieldParams& field) {
  if (!w.below_q(field.q))
    throw Error(ErrorCode::weight_too_large, "N_l(beta) has no basis description when n >= q");
  return DiskLattice(field, w, l, beta, Rational(0), MembershipRoute::basis);
}

DiskLattice lattice_N_norm(int l, const WElem& beta, const WeightParams& w, const FieldParams& field) {
  return DiskLattice(field, w, l, beta, Rational(0), MembershipRoute::norm);
}

DiskLattice lattice_M(int l, const WElem& beta, const WeightParams& w, const FieldParams& field) {
  const long scale = -1 - static_cast<long>(w.n) - static_cast<long>(l) * w.m;
  return DiskLattice(field, w, l, beta, Rational(scale), MembershipRoute::automatic);
}

DiskLattice generator_span(int k, const WElem& beta, const WeightParams& w, const FieldParams& field) {
  return DiskLattice(field, w, k, beta, Rational(-static_cast<long>(k) * w.m), MembershipRoute::basis);
}

std::vector<Rational> rational_coeffs(const PolyVec& poly) {
  std::vector<Rational> out;
  for (const auto& c : poly.coeffs()) {
    if (!c.is_rational()) throw Error(ErrorCode::unsupported, "rational lattice used with a cyclotomic vector");
    out.push_back(c.rational());
  }
  return out;
}

PolyVec to_polyvec(const LocalLattice::Vec& v) {
  std::vector<Scalar> coeffs(v.begin(), v.end());
  return PolyVec(std::move(coeffs));
}

LocalLattice LocalLattice::from_generators(long p, size_t rank, const std::vector<Vec>& generators) {
  std::vector<Vec> rows;
  for (const auto& g : generators) {
    if (g.size() != rank) throw Error(ErrorCode::invalid_argument, "generator has the wrong length");
    rows.push_back(g);
  }
  std::vector<Vec> basis;
  for (size_t c = 0; c < rank; ++c) {
    size_t best = rows.size();
    long best_v = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const long v = vp(rows[i][c], p);
      if (best == rows.size() || v < best_v) {
        best = i;
        best_v = v;
      }
    }
    if (best == rows.size()) throw Error(ErrorCode::invalid_argument, "generators do not span a full-rank lattice");
    Vec pivot = rows[best];
    rows.erase(rows.begin() + static_cast<long>(best));
    const Rational unit = pivot[c] / ppow(p, best_v);
    for (auto& x : pivot) x /= unit;
    for (auto& row : rows) {
      if (row[c] == 0) continue;
      const Rational f = row[c] / pivot[c];
      for (size_t j = c; j < rank; ++j) row[j] -= f * pivot[j];
    }
    basis.push_back(std::move(pivot));
  }
  return LocalLattice(p, std::move(basis));
}

LocalLattice LocalLattice::from_disk(const DiskLattice& lattice) {
  if (lattice.route() != MembershipRoute::basis)
    throw Error(ErrorCode::weight_too_large, "lattice has no basis description when n >= q");
  std::vector<Vec> gens;
  for (const auto& b : lattice.basis()) gens.push_back(rational_coeffs(b));
  return from_generators(lattice.field().p, static_cast<size_t>(lattice.weight().n) + 1, gens);
}

LocalLattice LocalLattice::sum(const std::vector<LocalLattice>& parts) {
  if (parts.empty()) throw Error(ErrorCode::invalid_argument, "sum of no lattices");
  std::vector<Vec> gens;
  for (const auto& part : parts) gens.insert(gens.end(), part.basis_.begin(), part.basis_.end());
  return from_generators(parts.front().p_, parts.front().rank(), gens);
}

LocalLattice LocalLattice::intersection(const std::vector<LocalLattice>& parts) {
  std::vector<LocalLattice> duals;
  for (const auto& part : parts) duals.push_back(part.dual());
  return sum(duals).dual();
}

std::vector<Scalar> LocalLattice::coordinates(const std::vector<Scalar>& v) const {
  if (v.size() != rank()) throw Error(ErrorCode::invalid_argument, "vector has the wrong length");
  std::vector<Scalar> rest = v;
  std::vector<Scalar> x(rank(), Scalar(0));
  for (size_t c = 0; c < rank(); ++c) {
    x[c] = rest[c] / Scalar(basis_[c][c]);
    if (x[c].is_zero()) continue;
    for (size_t j = c; j < rank(); ++j) rest[j] -= x[c] * Scalar(basis_[c][j]);
  }
  return x;
}

bool LocalLattice::contains(const Vec& v) const {
  std::vector<Scalar> s(v.begin(), v.end());
  std::vector<Rational> coords;
  for (const auto& c : coordinates(s)) coords.push_back(c.rational());
  return all_integral(coords, p_);
}

bool LocalLattice::contains(const PolyVec& poly, const EmbeddingOracle& oracle) const {
  for (const auto& c : coordinates(poly.coeffs()))
    if (!c.is_zero() && oracle.valuation(c) < Valuation(0)) return false;
  return true;
}

bool LocalLattice::contains(const LocalLattice& other) const {
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

LocalLattice LocalLattice::dual() const {
  const auto inv = inverse(basis_);
  std::vector<Vec> gens(rank(), Vec(rank()));
  for (size_t i = 0; i < rank(); ++i)
    for (size_t k = 0; k < rank(); ++k) gens[k][i] = inv[i][k];
  return from_generators(p_, rank(), gens);
}

LocalLattice LocalLattice::scaled(const Rational& s) const {
  std::vector<Vec> gens = basis_;
  for (auto& g : gens)
    for (auto& x : g) x *= s;
  return from_generators(p_, rank(), gens);
}

DiskLattice intersect_over_fiber(int l, const WElem& gamma, const WeightParams& w, const FieldParams& field) {
  if (!w.below_q(field.q))
    throw Error(ErrorCode::weight_too_large, "fiber intersection has no basis description when n >= q");
  return DiskLattice(field, w, l + 1, gamma, Rational(w.n), MembershipRoute::basis);
}

LocalLattice literal_fiber_intersection(int l, const WElem& gamma, const WeightParams& w, const FieldParams& field) {
  std::vector<LocalLattice> parts;
  for (const auto& beta : fiber(gamma, field.q)) parts.push_back(LocalLattice::from_disk(lattice_N(l, beta, w, field)));
  return LocalLattice::intersection(parts);
}

LocalLattice refine_under_C1(int l, const WElem& beta, const WeightParams& w, const FieldParams& field) {
  if (!w.below_q(field.q))
    throw Error(ErrorCode::weight_too_large, "coset refinement needs the basis description (n < q)");
  std::vector<LocalLattice> parts;
  for (const auto& shift : w1_elements(field.p))
    parts.push_back(LocalLattice::from_disk(lattice_M(l, beta + shift, w, field)));
  return LocalLattice::intersection(parts);
}

}  // namespace kirillov
