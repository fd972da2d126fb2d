// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

// Grid search for violations of the amplitude bounds: solve for phi vanishing
// off O_F on a support template, expand, check, and report.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "serialize.hpp"

namespace kirillov {

struct ValuationPattern {
  std::string label;
  Rational v_lambda;
  Rational v_mu;
  bool boundary = true;
};

/// Boundary patterns first (v(lambda) + m in {0, -v(q) - n}), then interior
/// integer points when requested. Degenerate: the single point lambda = mu.
std::vector<ValuationPattern> valuation_patterns(Regime regime, const WeightParams& w, long p, bool interior);

/// p^floor(v) * unit, times a square root of +-p when v is a half-integer.
Scalar scalar_with_valuation(long p, const Rational& v, long unit = 1);

/// Representations realizing a pattern: one per character for the ramified
/// regimes (at most max_characters when positive). The unit part of mu is
/// bumped (1, 2, 3, ...) when the unit choice would be reducible.
std::vector<RepParams> realize_pattern(long p, const WeightParams& w, Regime regime, const ValuationPattern& pattern,
                                       int max_characters = 0);

struct SearchGrid {
  std::vector<long> primes{5};
  std::vector<int> ns{0, 1};
  std::vector<int> ms{0};
  std::vector<Regime> regimes{Regime::unramified};
  std::vector<int> k0s{-1, -2};
  int depth = 1;
  int trials = 50;
  std::uint64_t seed = 1;
  bool interior = false;
  bool wild = false;
  int max_characters = 0;

  Json to_json() const;
  /// Missing keys keep their defaults; unknown keys are a parse error.
  static SearchGrid from_json(const Json& j);
};

struct SearchOptions {
  unsigned workers = 1;
  std::string cache_dir;  // empty: no cache
};

enum class Verdict { all_pass, violation, inconclusive };
const char* to_string(Verdict v);

struct SearchReport {
  Json json;
  Verdict verdict = Verdict::inconclusive;
  size_t trials_run = 0;
  size_t cache_hits = 0;
};

/// Asserted cases (n < q, not wild) decide the verdict; exploratory cases are
/// reported with their own findings only.
SearchReport run_search(const SearchGrid& grid, const SearchOptions& options);

/// Hex SHA-256 of a string.
/// Recomputes one trial from its case parameters and recorded seed; the result
/// matches the trial entry of the report apart from "index" and "cached".
Json replay_trial(const RepParams& params, int k0, int depth, std::uint64_t seed);

std::string sha256_hex(const std::string& text);

/// Runs fn(i) for i in [0, count) on up to `workers` threads.
void parallel_for(size_t count, unsigned workers, const std::function<void(size_t)>& fn);

}  // namespace kirillov
