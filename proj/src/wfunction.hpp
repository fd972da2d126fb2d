// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>

#include "scalar.hpp"
#include "welem.hpp"

namespace kirillov {

/// Finitely supported function W -> V. Zero values are never stored.
/// V is Scalar or PolyVec: it needs is_zero(), +=, -=, ==, and Scalar * V.
template <class V>
class WFunction {
 public:
  using Map = std::map<WElem, V>;
  using const_iterator = typename Map::const_iterator;

  WFunction() = default;

  static WFunction delta(const WElem& beta, V value) {
    WFunction f;
    f.set(beta, std::move(value));
    return f;
  }

  const Map& values() const { return values_; }
  const_iterator begin() const { return values_.begin(); }
  const_iterator end() const { return values_.end(); }
  bool empty() const { return values_.empty(); }
  size_t size() const { return values_.size(); }

  const V* find(const WElem& beta) const {
    auto it = values_.find(beta);
    return it == values_.end() ? nullptr : &it->second;
  }

  void set(const WElem& beta, V value) {
    if (value.is_zero())
      values_.erase(beta);
    else
      values_.insert_or_assign(beta, std::move(value));
  }

  void add(const WElem& beta, const V& value) {
    if (value.is_zero()) return;
    auto it = values_.find(beta);
    if (it == values_.end()) {
      values_.emplace(beta, value);
      return;
    }
    it->second += value;
    if (it->second.is_zero()) values_.erase(it);
  }

  WFunction& operator+=(const WFunction& o) {
    for (const auto& [b, v] : o.values_) add(b, v);
    return *this;
  }
  WFunction& operator-=(const WFunction& o) {
    for (const auto& [b, v] : o.values_) add(b, Scalar(-1) * v);
    return *this;
  }
  friend WFunction operator+(WFunction a, const WFunction& b) { return a += b; }
  friend WFunction operator-(WFunction a, const WFunction& b) { return a -= b; }
  friend WFunction operator*(const Scalar& s, const WFunction& f) {
    WFunction out;
    if (s.is_zero()) return out;
    for (const auto& [b, v] : f.values_) out.set(b, s * v);
    return out;
  }
  friend bool operator==(const WFunction& a, const WFunction& b) { return a.values_ == b.values_; }

 private:
  Map values_;
};

}  // namespace kirillov
