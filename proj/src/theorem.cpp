// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#include "theorem.hpp"

#include "errors.hpp"
#include "operators.hpp"

namespace kirillov {

BSCheck check_bs_conditions(const RepParams& params, const EmbeddingOracle& oracle) {
  const Rational vl = oracle.valuation(params.lambda()).value();
  const Rational vm = oracle.valuation(params.mu()).value();
  const long m = params.weight().m, n = params.weight().n;
  const long vq = vp(Integer(params.field().q), params.field().p);
  BSCheck out;
  out.unitary = vl + vm + Rational(2 * m + vq + n) == 0;
  out.bounded = vl + Rational(m) >= Rational(-vq - n) && vm + Rational(m) >= Rational(-vq - n);
  return out;
}

TheoremCheck check_theorem12(const AmplitudeTable& table, const RepParams& params, const EmbeddingOracle& oracle) {
  const FieldParams& field = params.field();
  if (!vanishes_outside_integers(table, field))
    throw Error(ErrorCode::not_vanishing, "phi does not vanish off O_F: some row C_l with l < 0 is not in C_1");
  if (table.l_max < 0) throw Error(ErrorCode::horizon_exceeded, "the table stops before level 0");
  TheoremCheck out;
  out.k0 = table.k0;
  const long m = params.weight().m;
  for (int l = table.k0; l <= 0; ++l) {
    if (params.ramified()) {
      const Rational bound(-1 - m * l);
      for (const auto* rows : {&table.prime, &table.second}) {
        const bool is_prime = rows == &table.prime;
        for (const auto& [beta, c] : AmplitudeTable::at(*rows, l)) {
          ++out.checked;
          const Valuation v = oracle.valuation(c[0]);
          const Valuation margin = v.is_infinite() ? v : Valuation(Rational(v.value() - bound));
          out.tightest = min(out.tightest, margin);
          if (margin < Valuation(0)) out.violations.push_back({l, beta, is_prime ? "C'" : "C''", margin});
        }
      }
      continue;
    }
    const Row row = l < 0 ? project_C1(table.row(l), field) : table.row(l);
    for (const auto& [beta, c] : row) {
      ++out.checked;
      const DiskLattice lattice = lattice_M(l, beta, params.weight(), field);
      const Valuation margin = lattice.margin(c, oracle);
      out.tightest = min(out.tightest, margin);
      if (margin < Valuation(0)) out.violations.push_back({l, beta, "C", margin});
    }
  }
  return out;
}

TheoremCheck check_theorem12(const GeneratorCoeffs& coeffs, const RepParams& params, const EmbeddingOracle& oracle) {
  return check_theorem12(expand(coeffs, params, 0), params, oracle);
}

LocalLattice certificate_lattice(const RepParams& params) {
  std::vector<LocalLattice> parts;
  for (const auto& beta : w1_elements(params.field().p))
    parts.push_back(LocalLattice::from_disk(lattice_M(0, beta, params.weight(), params.field())));
  return LocalLattice::sum(parts);
}

PolyVec certificate_prop13(const RepParams& params) {
  const LocalLattice sum = certificate_lattice(params);
  const Rational step(1, params.field().p);
  LocalLattice::Vec c = sum.basis().front();
  do {
    for (auto& x : c) x *= step;
  } while (sum.contains(c));
  return to_polyvec(c);
}

}  // namespace kirillov
