// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#include "character.hpp"

#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace kirillov {

FieldParams FieldParams::desk(long p) {
  if (!is_prime(p)) throw Error(ErrorCode::invalid_argument, "p must be prime");
  return FieldParams{p, p};
}

const char* to_string(CharacterKind kind) {
  switch (kind) {
    case CharacterKind::unramified: return "unramified";
    case CharacterKind::tame: return "tame";
    case CharacterKind::wild: return "wild";
  }
  return "?";
}

std::pair<std::vector<long>, std::vector<long>> unit_group_generators(long p, int nu) {
  if (nu <= 0) return {{}, {}};
  const long mod = ipow(p, static_cast<unsigned long>(nu)).get_si();
  if (p == 2) {
    if (nu == 1) return {{}, {}};
    if (nu == 2) return {{3}, {2}};
    return {{mod - 1, 5}, {2, mod / 4}};
  }
  const long phi = euler_phi(mod);
  for (long g = 2; g < mod; ++g) {
    if (g % p == 0) continue;
    if (mult_order(g, mod) == phi) return {{g}, {phi}};
  }
  throw Error(ErrorCode::invalid_argument, "no primitive root found");
}

CharacterSpec CharacterSpec::unramified(FieldParams field, Scalar lambda) {
  CharacterSpec c;
  c.field_ = field;
  c.nu_ = 0;
  c.lambda_ = std::move(lambda);
  c.build_table();
  return c;
}

CharacterSpec CharacterSpec::from_exponent(FieldParams field, int nu, long exponent, Scalar lambda) {
  const auto gens = unit_group_generators(field.p, nu);
  if (gens.first.size() != 1)
    throw Error(ErrorCode::invalid_argument, "unit group is not cyclic; give one exponent per generator");
  return from_generator_exponents(field, nu, {exponent}, std::move(lambda));
}

CharacterSpec CharacterSpec::from_generator_exponents(FieldParams field, int nu, std::vector<long> exponents,
                                                      Scalar lambda) {
  if (nu < 0) throw Error(ErrorCode::invalid_argument, "conductor must be non-negative");
  if (nu == 0) return unramified(field, std::move(lambda));
  CharacterSpec c;
  c.field_ = field;
  c.nu_ = nu;
  c.lambda_ = std::move(lambda);
  auto [gens, orders] = unit_group_generators(field.p, nu);
  if (exponents.size() != gens.size())
    throw Error(ErrorCode::invalid_argument, "expected " + std::to_string(gens.size()) + " generator exponents");
  c.generators_ = gens;
  c.orders_ = orders;
  for (size_t i = 0; i < exponents.size(); ++i) exponents[i] = mod_l(exponents[i], orders[i]);
  c.exponents_ = exponents;
  c.build_table();
  // Minimal conductor: nontrivial on U^(nu-1).
  const long lower = ipow(field.p, static_cast<unsigned long>(nu - 1)).get_si();
  bool nontrivial = false;
  for (long u = 1; u < c.modulus_; u += lower) {
    if (u % field.p == 0) continue;
    if (c.value_exponent(u) != 0) nontrivial = true;
  }
  if (!nontrivial)
    throw Error(ErrorCode::invalid_argument, "character conductor is smaller than " + std::to_string(nu));
  return c;
}

void CharacterSpec::build_table() {
  modulus_ = nu_ == 0 ? 1 : ipow(field_.p, static_cast<unsigned long>(nu_)).get_si();
  order_ = 1;
  for (long o : orders_) order_ = lcm_l(order_, o);
  table_.assign(static_cast<size_t>(modulus_), -1);
  if (nu_ == 0) {
    table_[0] = 0;
    return;
  }
  // Walk the product of cyclic factors.
  std::vector<std::pair<long, long>> elems{{1, 0}};  // (residue, exponent mod order_)
  for (size_t i = 0; i < generators_.size(); ++i) {
    std::vector<std::pair<long, long>> next;
    const long step = exponents_[i] * (order_ / orders_[i]);
    for (const auto& [r, k] : elems) {
      long x = r, kk = k;
      for (long j = 0; j < orders_[i]; ++j) {
        next.emplace_back(x, kk);
        x = (x * generators_[i]) % modulus_;
        kk = mod_l(kk + step, order_);
      }
    }
    elems = std::move(next);
  }
  for (const auto& [r, k] : elems) table_[static_cast<size_t>(r)] = k;
}

CharacterKind CharacterSpec::kind() const {
  if (nu_ == 0) return CharacterKind::unramified;
  return nu_ == 1 ? CharacterKind::tame : CharacterKind::wild;
}

long CharacterSpec::value_exponent(long u) const {
  if (nu_ == 0) return 0;
  const long r = mod_l(u, modulus_);
  const long k = table_[static_cast<size_t>(r)];
  if (k < 0) throw Error(ErrorCode::invalid_argument, "character evaluated at a non-unit");
  return k;
}

Scalar CharacterSpec::value(long u) const {
  const long k = value_exponent(u);
  if (k == 0) return Scalar(1);
  return Scalar::root_of_unity(order_, k);
}

std::vector<long> CharacterSpec::units() const {
  if (nu_ == 0) return {1};
  std::vector<long> out;
  for (long u = 1; u < modulus_; ++u)
    if (u % field_.p != 0) out.push_back(u);
  return out;
}

CharacterSpec CharacterSpec::inverse() const {
  CharacterSpec c = *this;
  for (size_t i = 0; i < c.exponents_.size(); ++i) c.exponents_[i] = mod_l(-c.exponents_[i], c.orders_[i]);
  for (auto& k : c.table_)
    if (k >= 0) k = mod_l(-k, order_);
  if (!lambda_.is_zero()) c.lambda_ = lambda_.inverse();
  return c;
}

std::string CharacterSpec::label() const {
  std::ostringstream os;
  os << to_string(kind()) << "(nu=" << nu_;
  if (!exponents_.empty()) {
    os << ", exponents=";
    for (size_t i = 0; i < exponents_.size(); ++i) os << (i ? "," : "") << exponents_[i];
  }
  os << ")";
  return os.str();
}

std::vector<CharacterSpec> characters_of_conductor(FieldParams field, int nu) {
  std::vector<CharacterSpec> out;
  if (nu == 0) {
    out.push_back(CharacterSpec::unramified(field, Scalar(1)));
    return out;
  }
  const auto [gens, orders] = unit_group_generators(field.p, nu);
  std::vector<long> exps(gens.size(), 0);
  for (;;) {
    try {
      out.push_back(CharacterSpec::from_generator_exponents(field, nu, exps, Scalar(1)));
    } catch (const Error&) {
      // conductor smaller than nu
    }
    size_t i = 0;
    while (i < exps.size() && ++exps[i] == orders[i]) exps[i++] = 0;
    if (i == exps.size()) break;
  }
  return out;
}

Scalar gauss_sum(const CharacterSpec& eps, const FieldParams& params) {
  if (eps.conductor() == 0)
    throw Error(ErrorCode::trivial_character, "Gauss sum needs a ramified character (conductor >= 1)");
  if (eps.field() != params) throw Error(ErrorCode::invalid_argument, "character and field parameters disagree");
  const long pnu = eps.modulus();
  const long big = lcm_l(pnu, eps.order());
  std::vector<Rational> sums(static_cast<size_t>(big), Rational(0));
  for (long u : eps.units()) {
    const long idx = mod_l(u * (big / pnu) + eps.value_exponent(u) * (big / eps.order()), big);
    sums[static_cast<size_t>(idx)] += 1;
  }
  return Scalar::from_power_sums(big, std::move(sums));
}

}  // namespace kirillov
