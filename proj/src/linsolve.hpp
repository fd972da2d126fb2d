// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <vector>

#include "scalar.hpp"

namespace kirillov {

using Matrix = std::vector<std::vector<Scalar>>;

/// Row-sparse matrix: each row maps column index to a nonzero entry.
struct SparseMatrix {
  size_t cols = 0;
  std::vector<std::map<size_t, Scalar>> rows;

  void add_row(std::map<size_t, Scalar> row);
};

struct LinearSolution {
  std::vector<Scalar> particular;
  std::vector<std::vector<Scalar>> kernel;
};

/// Exact Gauss-Jordan elimination over the cyclotomic field. Throws
/// Inconsistent when A x = b has no solution.
LinearSolution solve_linear(const Matrix& a, const std::vector<Scalar>& b);
LinearSolution solve_linear(const SparseMatrix& a, const std::vector<Scalar>& b);

/// Basis of {x : A x = 0}, one vector per free column, in column order.
std::vector<std::vector<Scalar>> kernel_basis(const SparseMatrix& a);

}  // namespace kirillov
