// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#include "coeffs.hpp"

#include <sstream>

#include "errors.hpp"

namespace kirillov {

std::optional<int> GeneratorCoeffs::k0() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.begin()->first.first;
}

std::optional<int> GeneratorCoeffs::k_max() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.rbegin()->first.first;
}

void GeneratorCoeffs::set(int k, const WElem& beta, PolyVec prime, PolyVec second) {
  if (beta.p() != p_) throw Error(ErrorCode::invalid_coeffs, "frequency lives in W for a different p");
  if (prime.size() == 0) prime = PolyVec(n_);
  if (second.size() == 0) second = PolyVec(n_);
  if (prime.degree_bound() != n_ || second.degree_bound() != n_)
    throw Error(ErrorCode::invalid_coeffs, "coefficient at (" + std::to_string(k) + ", " + beta.str() +
                                               ") does not have n+1 = " + std::to_string(n_ + 1) + " entries");
  const Cell cell{k, beta};
  if (prime.is_zero() && second.is_zero()) {
    entries_.erase(cell);
    return;
  }
  entries_[cell] = CoeffPair{std::move(prime), std::move(second)};
}

void GeneratorCoeffs::add(int k, const WElem& beta, const PolyVec& prime, const PolyVec& second) {
  auto it = entries_.find(Cell{k, beta});
  if (it == entries_.end()) {
    set(k, beta, prime, second);
    return;
  }
  set(k, beta, it->second.prime + prime, it->second.second + second);
}

WFunction<PolyVec> GeneratorCoeffs::row_prime(int k) const {
  WFunction<PolyVec> out;
  for (auto it = entries_.lower_bound(Cell{k, WElem::zero(p_)}); it != entries_.end() && it->first.first == k; ++it)
    out.set(it->first.second, it->second.prime);
  return out;
}

WFunction<PolyVec> GeneratorCoeffs::row_second(int k) const {
  WFunction<PolyVec> out;
  for (auto it = entries_.lower_bound(Cell{k, WElem::zero(p_)}); it != entries_.end() && it->first.first == k; ++it)
    out.set(it->first.second, it->second.second);
  return out;
}

GeneratorCoeffs GeneratorCoeffs::scaled(const Scalar& s) const {
  GeneratorCoeffs out(p_, n_);
  for (const auto& [cell, pair] : entries_) out.set(cell.first, cell.second, s * pair.prime, s * pair.second);
  return out;
}

GeneratorCoeffs& GeneratorCoeffs::operator+=(const GeneratorCoeffs& o) {
  if (o.p_ != p_ || o.n_ != n_) throw Error(ErrorCode::invalid_coeffs, "adding coefficients of different shapes");
  for (const auto& [cell, pair] : o.entries_) add(cell.first, cell.second, pair.prime, pair.second);
  return *this;
}

bool operator==(const GeneratorCoeffs& a, const GeneratorCoeffs& b) {
  if (a.p_ != b.p_ || a.n_ != b.n_ || a.entries_.size() != b.entries_.size()) return false;
  auto it = b.entries_.begin();
  for (const auto& [cell, pair] : a.entries_) {
    if (cell != it->first || pair.prime != it->second.prime || pair.second != it->second.second) return false;
    ++it;
  }
  return true;
}

DiskLattice coefficient_lattice(int k, const WElem& beta, const RepParams& params) {
  const WeightParams& w = params.weight();
  return DiskLattice(params.field(), w, k, beta, Rational(-static_cast<long>(k) * w.m));
}

void GeneratorCoeffs::validate(const RepParams& params, const EmbeddingOracle& oracle) const {
  if (params.field().p != p_ || params.weight().n != n_)
    throw Error(ErrorCode::regime_mismatch, "coefficients were built for different p or n");
  for (const auto& [cell, pair] : entries_) {
    const DiskLattice lattice = coefficient_lattice(cell.first, cell.second, params);
    for (int which = 0; which < 2; ++which) {
      const PolyVec& c = which == 0 ? pair.prime : pair.second;
      if (lattice.contains(c, oracle)) continue;
      std::ostringstream os;
      os << (which == 0 ? "c'" : "c''") << "_" << cell.first << "(" << cell.second.str() << ") = " << c
         << " is not in pi^(-km) N_k(beta) (margin " << lattice.margin(c, oracle).str() << ")";
      throw Error(ErrorCode::invalid_coeffs, os.str());
    }
  }
}

}  // namespace kirillov
