// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#include "solver.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <tuple>

#include "errors.hpp"
#include "expansion.hpp"
#include "linsolve.hpp"
#include "random.hpp"

namespace kirillov {

SupportTemplate SupportTemplate::box(long p, int k_lo, int k_hi, int depth) {
  SupportTemplate t;
  for (int k = k_lo; k <= k_hi; ++k)
    for (const auto& beta : elements_of_depth_at_most(p, depth)) t.cells.emplace_back(k, beta);
  return t;
}

std::string SupportTemplate::describe() const {
  std::ostringstream os;
  for (size_t i = 0; i < cells.size(); ++i) os << (i ? ";" : "") << cells[i].first << ":" << cells[i].second.str();
  return os.str();
}

VanishingSpace solve_vanishing(const SupportTemplate& support, const RepParams& params, const EmbeddingOracle& oracle) {
  const long p = params.field().p;
  const int n = params.weight().n;
  const std::set<Cell> cells(support.cells.begin(), support.cells.end());

  struct Unknown {
    Cell cell;
    bool second;
    PolyVec generator;
  };
  std::vector<Unknown> unknowns;
  for (const auto& cell : cells) {
    const auto span = generator_span(cell.first, cell.second, params.weight(), params.field()).basis();
    for (int which = 0; which < 2; ++which)
      for (const auto& b : span) unknowns.push_back(Unknown{cell, which == 1, b});
  }

  // Column j holds the rows C_l (l < 0) produced by unknown j alone.
  using Key = std::tuple<int, WElem, int>;  // (level, beta, coordinate)
  std::vector<std::map<Key, Scalar>> columns(unknowns.size());
  std::map<std::pair<int, WElem>, std::set<WElem>> cosets;  // (level, pi*beta) -> betas seen
  for (size_t j = 0; j < unknowns.size(); ++j) {
    const Unknown& u = unknowns[j];
    if (u.cell.first >= 0) continue;
    GeneratorCoeffs single(p, n);
    const PolyVec zero(n);
    single.set(u.cell.first, u.cell.second, u.second ? zero : u.generator, u.second ? u.generator : zero);
    const AmplitudeTable t = expand_closed_form(single, params, -1);
    for (int l = t.k0; l < 0; ++l)
      for (const auto& [beta, value] : t.row(l)) {
        cosets[{l, beta.mul_by_pi()}].insert(beta);
        for (int i = 0; i <= n; ++i)
          if (!value[static_cast<size_t>(i)].is_zero()) columns[j][Key{l, beta, i}] = value[static_cast<size_t>(i)];
      }
  }

  // One equation C_l(alpha) - C_l(alpha_0) = 0 per coset member alpha != alpha_0
  // and coordinate, alpha_0 the smallest member of the fiber.
  std::map<Key, size_t> equation_of;
  std::map<std::pair<int, WElem>, std::vector<Key>> anchored;  // alpha_0 keys -> dependent equations
  for (const auto& [coset, seen] : cosets) {
    const auto members = fiber(coset.second, params.field().q);
    const WElem& anchor = members.front();
    for (int i = 0; i <= n; ++i)
      for (size_t a = 1; a < members.size(); ++a) {
        const Key key{coset.first, members[a], i};
        const size_t idx = equation_of.size();
        equation_of.emplace(key, idx);
        anchored[{coset.first, anchor}].push_back(key);
      }
  }
  SparseMatrix a;
  a.cols = unknowns.size();
  a.rows.assign(equation_of.size(), {});
  for (size_t j = 0; j < columns.size(); ++j) {
    for (const auto& [key, value] : columns[j]) {
      const auto& [l, beta, i] = key;
      if (auto it = equation_of.find(key); it != equation_of.end()) a.rows[it->second][j] += value;
      if (auto it = anchored.find({l, beta}); it != anchored.end())
        for (const auto& dep : it->second)
          if (std::get<2>(dep) == i) a.rows[equation_of.at(dep)][j] -= value;
    }
  }
  for (auto& row : a.rows)
    for (auto it = row.begin(); it != row.end();) it = it->second.is_zero() ? row.erase(it) : std::next(it);

  VanishingSpace out;
  out.unknowns = unknowns.size();
  out.constraints = a.rows.size();
  for (const auto& v : kernel_basis(a)) {
    Valuation lowest;
    for (const auto& x : v)
      if (!x.is_zero()) lowest = min(lowest, oracle.valuation(x));
    if (lowest.is_infinite()) continue;
    const Rational& low = lowest.value();
    Integer shift;
    mpz_fdiv_q(shift.get_mpz_t(), low.get_num_mpz_t(), low.get_den_mpz_t());  // floor(lowest)
    const Scalar scale(ppow(p, -shift.get_si()));
    GeneratorCoeffs phi(p, n);
    const PolyVec zero(n);
    for (size_t j = 0; j < v.size(); ++j) {
      if (v[j].is_zero()) continue;
      const Unknown& u = unknowns[j];
      const PolyVec term = (scale * v[j]) * u.generator;
      phi.add(u.cell.first, u.cell.second, u.second ? zero : term, u.second ? term : zero);
    }
    out.basis.push_back(std::move(phi));
  }
  return out;
}

GeneratorCoeffs random_valid_coeffs(const RepParams& params, std::mt19937_64& rng, int k_lo, int k_hi, int depth,
                                    int entries) {
  const long p = params.field().p;
  const int n = params.weight().n;
  auto pick = [&rng](long lo, long hi) { return draw(rng, lo, hi); };
  const auto betas = elements_of_depth_at_most(p, depth);
  GeneratorCoeffs out(p, n);
  for (int e = 0; e < entries; ++e) {
    const int k = static_cast<int>(pick(k_lo, k_hi));
    const WElem& beta = betas[static_cast<size_t>(pick(0, static_cast<long>(betas.size()) - 1))];
    const auto span = generator_span(k, beta, params.weight(), params.field()).basis();
    PolyVec c1(n), c2(n);
    for (const auto& b : span) {
      c1 += Scalar(pick(-4, 4)) * b;
      c2 += Scalar(pick(-4, 4)) * b;
    }
    out.add(k, beta, c1, c2);
  }
  return out;
}

GeneratorCoeffs random_combination(const std::vector<GeneratorCoeffs>& basis, std::mt19937_64& rng) {
  if (basis.empty()) throw Error(ErrorCode::invalid_argument, "no basis to combine");
  auto pick = [&rng](long lo, long hi) { return draw(rng, lo, hi); };
  for (;;) {
    GeneratorCoeffs out(basis.front().p(), basis.front().n());
    for (const auto& b : basis) {
      if (pick(0, 1) == 0) continue;
      long c = pick(-3, 2);
      if (c >= 0) ++c;
      out += b.scaled(Scalar(c));
    }
    if (!out.empty()) return out;
  }
}

}  // namespace kirillov
