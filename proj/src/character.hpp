// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "scalar.hpp"

namespace kirillov {

/// Base field data. Only F = Q_p (uniformizer p, q = p) is implemented; all
/// fiber and annulus code reads `q` from here.
struct FieldParams {
  long p = 5;
  long q = 5;

  static FieldParams desk(long p);
  friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

enum class CharacterKind { unramified, tame, wild };

const char* to_string(CharacterKind kind);

/// A character of F^x: a finite-order character of U_F = Z_p^x of conductor
/// nu together with its value lambda at the uniformizer.
class CharacterSpec {
 public:
  CharacterSpec() = default;

  static CharacterSpec unramified(FieldParams field, Scalar lambda);
  /// Cyclic unit groups: eps(g) = zeta_phi^exponent, g the smallest generator
  /// of (Z/p^nu)^x and phi its order. Throws unless the conductor is exactly nu.
  static CharacterSpec from_exponent(FieldParams field, int nu, long exponent, Scalar lambda);
  /// One exponent per generator (two generators for p = 2, nu >= 3).
  static CharacterSpec from_generator_exponents(FieldParams field, int nu, std::vector<long> exponents, Scalar lambda);

  const FieldParams& field() const { return field_; }
  int conductor() const { return nu_; }
  CharacterKind kind() const;
  const Scalar& lambda() const { return lambda_; }
  const std::vector<long>& generators() const { return generators_; }
  const std::vector<long>& generator_orders() const { return orders_; }
  const std::vector<long>& exponents() const { return exponents_; }

  /// p^nu.
  long modulus() const { return modulus_; }
  /// Values of the character are order()-th roots of unity.
  long order() const { return order_; }
  /// eps(u) = zeta_order^value_exponent(u) for u prime to p.
  long value_exponent(long u) const;
  Scalar value(long u) const;
  /// Residues in [1, p^nu) prime to p.
  std::vector<long> units() const;

  CharacterSpec inverse() const;
  bool is_trivial_on_units() const { return nu_ == 0; }
  std::string label() const;

 private:
  void build_table();

  FieldParams field_{};
  int nu_ = 0;
  long modulus_ = 1;
  long order_ = 1;
  std::vector<long> generators_;
  std::vector<long> orders_;
  std::vector<long> exponents_;
  std::vector<long> table_;  // indexed by residue mod p^nu; -1 on non-units
  Scalar lambda_{1};
};

/// Generators and their orders of (Z/p^nu)^x.
std::pair<std::vector<long>, std::vector<long>> unit_group_generators(long p, int nu);

/// All characters of conductor exactly nu with lambda = 1.
std::vector<CharacterSpec> characters_of_conductor(FieldParams field, int nu);

/// tau(eps^{-1}) = sum_{u in U/U^nu} psi(u / p^nu) eps(u). Throws
/// TrivialCharacter when eps is unramified.
Scalar gauss_sum(const CharacterSpec& eps, const FieldParams& params);

}  // namespace kirillov
