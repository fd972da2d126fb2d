// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace kirillov {

enum class ErrorCode {
  invalid_argument,
  parse,
  invalid_coeffs,
  regime_mismatch,
  trivial_character,
  ambiguous_valuation,
  inconsistent,
  weight_too_large,
  not_vanishing,
  horizon_exceeded,
  singular_matrix,
  unsupported,
  io,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kirillov
