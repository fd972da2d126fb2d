// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#include "linsolve.hpp"

#include "errors.hpp"

namespace kirillov {

void SparseMatrix::add_row(std::map<size_t, Scalar> row) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->first >= cols) throw Error(ErrorCode::invalid_argument, "column index out of range");
    it = it->second.is_zero() ? row.erase(it) : std::next(it);
  }
  rows.push_back(std::move(row));
}

namespace {

using Row = std::map<size_t, Scalar>;

// row -= f * pivot, dropping cancellations.
void axpy(Row& row, const Scalar& f, const Row& pivot) {
  for (const auto& [j, v] : pivot) {
    auto it = row.find(j);
    if (it == row.end()) {
      row.emplace(j, -(f * v));
    } else {
      it->second -= f * v;
      if (it->second.is_zero()) row.erase(it);
    }
  }
}

struct Echelon {
  std::vector<Row> rows;           // reduced rows, pivot rows first
  std::vector<size_t> pivot_cols;  // pivot column of rows[k]
};

// Column `cols` carries the right-hand side when present.
Echelon reduce(std::vector<Row> rows, size_t cols) {
  Echelon e;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
    size_t piv = rows.size();
    for (size_t r = rank; r < rows.size(); ++r) {
      auto it = rows[r].find(col);
      if (it != rows[r].end()) {
        piv = r;
        if (it->second.is_rational()) break;  // prefer cheap pivots
      }
    }
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    Row& prow = rows[rank];
    const Scalar inv = prow.at(col).inverse();
    for (auto& [j, v] : prow) v *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end()) continue;
      const Scalar f = it->second;
      axpy(rows[r], f, prow);
    }
    e.pivot_cols.push_back(col);
    ++rank;
  }
  e.rows = std::move(rows);
  return e;
}

LinearSolution finish(const Echelon& e, size_t cols, bool has_rhs) {
  LinearSolution sol;
  const size_t rank = e.pivot_cols.size();
  if (has_rhs) {
    for (size_t r = rank; r < e.rows.size(); ++r)
      if (e.rows[r].count(cols)) throw Error(ErrorCode::inconsistent, "linear system is inconsistent");
  }
  sol.particular.assign(cols, Scalar(0));
  std::vector<bool> is_pivot(cols, false);
  for (size_t k = 0; k < rank; ++k) {
    is_pivot[e.pivot_cols[k]] = true;
    if (has_rhs) {
      auto it = e.rows[k].find(cols);
      if (it != e.rows[k].end()) sol.particular[e.pivot_cols[k]] = it->second;
    }
  }
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols, Scalar(0));
    v[f] = 1;
    for (size_t k = 0; k < rank; ++k) {
      auto it = e.rows[k].find(f);
      if (it != e.rows[k].end()) v[e.pivot_cols[k]] = -it->second;
    }
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

}  // namespace

LinearSolution solve_linear(const SparseMatrix& a, const std::vector<Scalar>& b) {
  if (b.size() != a.rows.size()) throw Error(ErrorCode::invalid_argument, "right-hand side length mismatch");
  std::vector<Row> rows = a.rows;
  for (size_t r = 0; r < rows.size(); ++r)
    if (!b[r].is_zero()) rows[r][a.cols] = b[r];
  return finish(reduce(std::move(rows), a.cols), a.cols, true);
}

LinearSolution solve_linear(const Matrix& a, const std::vector<Scalar>& b) {
  SparseMatrix s;
  s.cols = a.empty() ? 0 : a.front().size();
  for (const auto& row : a) {
    if (row.size() != s.cols) throw Error(ErrorCode::invalid_argument, "ragged matrix");
    Row r;
    for (size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) r.emplace(j, row[j]);
    s.rows.push_back(std::move(r));
  }
  return solve_linear(s, b);
}

std::vector<std::vector<Scalar>> kernel_basis(const SparseMatrix& a) {
  return finish(reduce(a.rows, a.cols), a.cols, false).kernel;
}

}  // namespace kirillov
