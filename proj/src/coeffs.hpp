// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

// Elements of Lambda, given by their generator coefficients:
// phi = sum_{k, beta} c'_k(beta) psi_beta(-pi^-k x) F'_k(x) + c''_k(beta) psi_beta(-pi^-k x) F''_k(x).

#pragma once

#include <map>
#include <optional>
#include <utility>

#include "lattice.hpp"
#include "params.hpp"
#include "wfunction.hpp"

namespace kirillov {

struct CoeffPair {
  PolyVec prime;
  PolyVec second;
};

using Cell = std::pair<int, WElem>;

class GeneratorCoeffs {
 public:
  GeneratorCoeffs(long p, int n) : p_(p), n_(n) {}

  long p() const { return p_; }
  int n() const { return n_; }
  const std::map<Cell, CoeffPair>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::optional<int> k0() const;
  std::optional<int> k_max() const;

  /// Replaces the pair at (k, beta); an all-zero pair removes the entry.
  void set(int k, const WElem& beta, PolyVec prime, PolyVec second);
  void add(int k, const WElem& beta, const PolyVec& prime, const PolyVec& second);

  WFunction<PolyVec> row_prime(int k) const;
  WFunction<PolyVec> row_second(int k) const;

  GeneratorCoeffs scaled(const Scalar& s) const;
  GeneratorCoeffs& operator+=(const GeneratorCoeffs& o);
  friend bool operator==(const GeneratorCoeffs& a, const GeneratorCoeffs& b);

  /// Every c'_k(beta), c''_k(beta) must lie in pi^{-km} N_k(beta). Throws
  /// InvalidCoeffs naming the first offending entry.
  void validate(const RepParams& params, const EmbeddingOracle& oracle) const;

 private:
  long p_;
  int n_;
  std::map<Cell, CoeffPair> entries_;
};

/// pi^{-km} N_k(beta), the region allowed for generator coefficients.
DiskLattice coefficient_lattice(int k, const WElem& beta, const RepParams& params);

}  // namespace kirillov
