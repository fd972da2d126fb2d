// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

// Seeded randomness with results that do not depend on the standard library
// implementation (std::uniform_int_distribution does).

#pragma once

#include <cstdint>
#include <random>

namespace kirillov {

/// Uniform-enough integer in [lo, hi]; the modulo bias is irrelevant here.
inline long draw(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of trial `trial` in case `index` under a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index, std::uint64_t trial) {
  return splitmix64(splitmix64(master ^ splitmix64(index)) + trial);
}

}  // namespace kirillov
