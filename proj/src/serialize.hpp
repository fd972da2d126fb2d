// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

// Canonical JSON forms. Rationals are strings ("3/5"); cyclotomic scalars
// are {"m": conductor, "coeffs": [...]} in the power basis of Q(zeta_m).

#pragma once

#include <json.hpp>

#include "expansion.hpp"
#include "theorem.hpp"

namespace kirillov {

using Json = nlohmann::ordered_json;

inline constexpr const char* kCoeffsSchema = "kirillov-lab/coeffs-v1";
inline constexpr const char* kReportSchema = "kirillov-lab/report-v1";

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);
Json to_json(const Valuation& v);
Json to_json(const PolyVec& p);
PolyVec polyvec_from_json(const Json& j, int n);
Json to_json(const Row& row);

Json to_json(const RepParams& params);
RepParams params_from_json(const Json& j);

/// {"schema": ..., "params": ..., "entries": [{"k", "beta", "c1", "c2"}]}.
Json to_json(const GeneratorCoeffs& coeffs, const RepParams& params);
/// Parses and validates; errors name the offending entry.
GeneratorCoeffs coeffs_from_json(const Json& j, const RepParams& params, const EmbeddingOracle& oracle);

Json to_json(const AmplitudeTable& table);
Json to_json(const TheoremCheck& check);
Json to_json(const BoundViolation& v);

}  // namespace kirillov
