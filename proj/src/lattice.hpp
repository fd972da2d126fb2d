// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

// Disks D_l(beta), sup-norms on them, and the lattices N_l(beta), M_l(beta)
// inside E[u]^{<=n}.

#pragma once

#include <vector>

#include "character.hpp"
#include "polyvec.hpp"
#include "valuation.hpp"
#include "welem.hpp"

namespace kirillov {

/// D_l(beta) = {u : |u - pi^-l beta| <= |pi^-l|}.
struct Disk {
  int l = 0;
  WElem beta;
};

/// min over u in D_l(beta) of v(P(u)), by descent on residue disks.
Valuation supnorm_on_disk(const PolyVec& poly, const Disk& disk, const EmbeddingOracle& oracle);

/// min over t in Z_p of v(R(t)).
Valuation supnorm_on_integers(const PolyVec& poly, const EmbeddingOracle& oracle);

enum class MembershipRoute { automatic, basis, norm };

/// pi^scale * N_l(beta). Elements are written in the recentred variable t,
/// u = pi^-l (beta + t), where N_l(beta) is cut out by v(Q(t)) >= 0 on Z_p for
/// Q(t) = pi^{ln} P(pi^-l (beta + t)). For n < q this is the O_E-span of
/// (pi^-l)^{n-i} (u - pi^-l beta)^i, i.e. integrality of the t-coefficients.
class DiskLattice {
 public:
  DiskLattice(FieldParams field, WeightParams weight, int level, WElem center, Rational scale,
              MembershipRoute route = MembershipRoute::automatic);

  const FieldParams& field() const { return field_; }
  const WeightParams& weight() const { return weight_; }
  int level() const { return level_; }
  const WElem& center() const { return center_; }
  const Rational& scale() const { return scale_; }
  MembershipRoute route() const;

  /// Coordinates of P in the basis (pi^-l)^{n-i} (u - pi^-l beta)^i.
  std::vector<Scalar> coordinates(const PolyVec& poly) const;
  /// pi^scale (pi^-l)^{n-i} (u - pi^-l beta)^i, requires integral scale.
  std::vector<PolyVec> basis() const;

  /// min_i v(coordinate_i) - scale.
  Valuation basis_margin(const PolyVec& poly, const EmbeddingOracle& oracle) const;
  /// supnorm on the disk + n l - scale.
  Valuation norm_margin(const PolyVec& poly, const EmbeddingOracle& oracle) const;

  bool contains_basis_route(const PolyVec& poly, const EmbeddingOracle& oracle) const;
  bool contains_norm_route(const PolyVec& poly, const EmbeddingOracle& oracle) const;
  /// Uses route(): basis when n < q or when the lattice is declared as a span.
  bool contains(const PolyVec& poly, const EmbeddingOracle& oracle) const;
  Valuation margin(const PolyVec& poly, const EmbeddingOracle& oracle) const;

  DiskLattice rescaled(const Rational& extra) const;

 private:
  FieldParams field_;
  WeightParams weight_;
  int level_;
  WElem center_;
  Rational scale_;
  MembershipRoute route_;
};

/// N_l(beta); throws WeightTooLarge when n >= q (no basis is available).
DiskLattice lattice_N(int l, const WElem& beta, const WeightParams& w, const FieldParams& field);
/// N_l(beta) with the norm route, valid for every n.
DiskLattice lattice_N_norm(int l, const WElem& beta, const WeightParams& w, const FieldParams& field);
/// M_l(beta) = q^-1 pi^{-n-lm} N_l(beta). Norm route when n >= q.
DiskLattice lattice_M(int l, const WElem& beta, const WeightParams& w, const FieldParams& field);
/// pi^{-km} Span{(pi^-k)^{n-i} (u - pi^-k beta)^i}: the coefficient span used
/// to parametrize generators. Equal to pi^{-km} N_k(beta) when n < q and a
/// sublattice of it otherwise.
DiskLattice generator_span(int k, const WElem& beta, const WeightParams& w, const FieldParams& field);

/// Full-rank Z_(p)-lattice in Q^r, kept as an upper-triangular basis whose
/// pivots are powers of p.
class LocalLattice {
 public:
  using Vec = std::vector<Rational>;

  static LocalLattice from_generators(long p, size_t rank, const std::vector<Vec>& generators);
  static LocalLattice from_disk(const DiskLattice& lattice);
  static LocalLattice sum(const std::vector<LocalLattice>& parts);
  static LocalLattice intersection(const std::vector<LocalLattice>& parts);

  long p() const { return p_; }
  size_t rank() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  std::vector<Scalar> coordinates(const std::vector<Scalar>& v) const;
  bool contains(const Vec& v) const;
  bool contains(const PolyVec& poly, const EmbeddingOracle& oracle) const;
  bool contains(const LocalLattice& other) const;
  LocalLattice dual() const;
  LocalLattice scaled(const Rational& s) const;

  friend bool operator==(const LocalLattice& a, const LocalLattice& b) { return a.contains(b) && b.contains(a); }

 private:
  LocalLattice(long p, std::vector<Vec> basis) : p_(p), basis_(std::move(basis)) {}
  long p_;
  std::vector<Vec> basis_;
};

std::vector<Rational> rational_coeffs(const PolyVec& poly);
PolyVec to_polyvec(const LocalLattice::Vec& v);

/// pi^n N_{l+1}(gamma), the intersection of N_l(beta) over pi*beta = gamma.
DiskLattice intersect_over_fiber(int l, const WElem& gamma, const WeightParams& w, const FieldParams& field);
/// Literal intersection of the q lattices N_l(beta), as a LocalLattice.
LocalLattice literal_fiber_intersection(int l, const WElem& gamma, const WeightParams& w, const FieldParams& field);

/// Intersection of M_l(beta') over beta' in beta + W_1: where a family
/// constant on the W_1-coset of beta must take its value.
LocalLattice refine_under_C1(int l, const WElem& beta, const WeightParams& w, const FieldParams& field);

}  // namespace kirillov
