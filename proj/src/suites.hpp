// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

// Randomized exact checks of the structural identities, grouped by topic.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kirillov {

struct SuiteConfig {
  long p = 5;
  std::vector<int> ns{0, 1, 2, 3};
  int trials = 100;
  std::uint64_t seed = 1;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  size_t checks = 0;
  std::string first_failure;  // empty when passed
};

/// fourier, lattice, unramified-recursion, operators, tame-recursion,
/// degenerate-recursion, gauss.
const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown suite or a composite p.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace kirillov
