// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#include "serialize.hpp"

#include "errors.hpp"

namespace kirillov {
namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorCode::parse, "expected a rational as a string, got " + j.dump());
}

template <class F>
auto field_of(const Json& j, const char* key, F&& read) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::parse, std::string("missing field '") + key + "'");
  try {
    return read(j.at(key));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse, std::string("field '") + key + "': " + e.what());
  }
}

Json rows_json(const std::map<int, Row>& rows) {
  Json out = Json::object();
  for (const auto& [l, row] : rows) out[std::to_string(l)] = to_json(row);
  return out;
}

}  // namespace

Json to_json(const Scalar& s) {
  if (s.is_rational()) return to_string(s.rational());
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"m", s.conductor()}, {"coeffs", coeffs}};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_object()) {
    const long m = field_of(j, "m", [](const Json& v) { return v.get<long>(); });
    if (m < 1) throw Error(ErrorCode::parse, "cyclotomic conductor must be positive");
    std::vector<Rational> coeffs;
    for (const auto& c : field_of(j, "coeffs", [](const Json& v) { return v; })) coeffs.push_back(rational_from_json(c));
    return Scalar::from_basis(m, std::move(coeffs));
  }
  return Scalar(rational_from_json(j));
}

Json to_json(const Valuation& v) { return v.str(); }

Json to_json(const PolyVec& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

PolyVec polyvec_from_json(const Json& j, int n) {
  if (!j.is_array()) throw Error(ErrorCode::parse, "expected an array of n+1 scalars");
  if (j.size() != static_cast<size_t>(n) + 1)
    throw Error(ErrorCode::invalid_coeffs, "expected " + std::to_string(n + 1) + " coefficients, got " + std::to_string(j.size()));
  std::vector<Scalar> c;
  for (const auto& x : j) c.push_back(scalar_from_json(x));
  return PolyVec(std::move(c));
}

Json to_json(const Row& row) {
  Json out = Json::array();
  for (const auto& [beta, v] : row) out.push_back(Json{{"beta", beta.str()}, {"value", to_json(v)}});
  return out;
}

Json to_json(const RepParams& params) {
  Json j{{"p", params.field().p},
         {"n", params.weight().n},
         {"m", params.weight().m},
         {"regime", to_string(params.regime())},
         {"lambda", to_json(params.lambda())},
         {"mu", to_json(params.mu())}};
  if (params.ramified()) j["eps"] = Json{{"nu", params.chi1().conductor()}, {"exponents", params.chi1().exponents()}};
  return j;
}

RepParams params_from_json(const Json& j) {
  const long p = field_of(j, "p", [](const Json& v) { return v.get<long>(); });
  if (!is_prime(p)) throw Error(ErrorCode::invalid_argument, "p must be prime");
  const FieldParams field = FieldParams::desk(p);
  const WeightParams w{field_of(j, "m", [](const Json& v) { return v.get<int>(); }),
                       field_of(j, "n", [](const Json& v) { return v.get<int>(); })};
  const Regime regime = parse_regime(field_of(j, "regime", [](const Json& v) { return v.get<std::string>(); }));
  const Scalar lambda = scalar_from_json(field_of(j, "lambda", [](const Json& v) { return v; }));
  switch (regime) {
    case Regime::unramified:
      return RepParams::unramified(field, w, lambda, scalar_from_json(field_of(j, "mu", [](const Json& v) { return v; })));
    case Regime::degenerate:
      return RepParams::degenerate(field, w, lambda);
    case Regime::tame:
    case Regime::wild: {
      const Json eps = field_of(j, "eps", [](const Json& v) { return v; });
      const int nu = field_of(eps, "nu", [](const Json& v) { return v.get<int>(); });
      const auto exps = field_of(eps, "exponents", [](const Json& v) { return v.get<std::vector<long>>(); });
      const CharacterSpec chi1 = CharacterSpec::from_generator_exponents(field, nu, exps, lambda);
      return RepParams::make(field, w, regime, chi1,
                             CharacterSpec::unramified(field, scalar_from_json(field_of(j, "mu", [](const Json& v) { return v; }))));
    }
  }
  throw Error(ErrorCode::parse, "unreachable regime");
}

Json to_json(const GeneratorCoeffs& coeffs, const RepParams& params) {
  Json entries = Json::array();
  for (const auto& [cell, pair] : coeffs.entries())
    entries.push_back(Json{{"k", cell.first}, {"beta", cell.second.str()}, {"c1", to_json(pair.prime)}, {"c2", to_json(pair.second)}});
  return Json{{"schema", kCoeffsSchema}, {"params", to_json(params)}, {"entries", entries}};
}

GeneratorCoeffs coeffs_from_json(const Json& j, const RepParams& params, const EmbeddingOracle& oracle) {
  if (j.is_object() && j.contains("schema") && j.at("schema") != kCoeffsSchema)
    throw Error(ErrorCode::parse, "unknown coefficient schema " + j.at("schema").dump());
  const long p = params.field().p;
  const int n = params.weight().n;
  GeneratorCoeffs out(p, n);
  const Json entries = field_of(j, "entries", [](const Json& v) { return v; });
  if (!entries.is_array()) throw Error(ErrorCode::parse, "'entries' must be an array");
  for (size_t i = 0; i < entries.size(); ++i) {
    const Json& e = entries[i];
    const std::string where = "entry " + std::to_string(i);
    try {
      const int k = field_of(e, "k", [](const Json& v) { return v.get<int>(); });
      const WElem beta = WElem::parse(p, field_of(e, "beta", [](const Json& v) { return v.get<std::string>(); }));
      const PolyVec c1 = e.contains("c1") ? polyvec_from_json(e.at("c1"), n) : PolyVec(n);
      const PolyVec c2 = e.contains("c2") ? polyvec_from_json(e.at("c2"), n) : PolyVec(n);
      out.add(k, beta, c1, c2);
    } catch (const Error& err) {
      throw Error(err.code(), where + ": " + err.what());
    }
  }
  out.validate(params, oracle);
  return out;
}

Json to_json(const AmplitudeTable& table) {
  Json j{{"regime", to_string(table.regime)}, {"p", table.p}, {"n", table.n}, {"k0", table.k0}, {"l_max", table.l_max},
         {"C", rows_json(table.total)}, {"C1", rows_json(table.prime)}, {"C2", rows_json(table.second)}};
  if (!table.tilde.empty()) j["C_tilde"] = rows_json(table.tilde);
  return j;
}

Json to_json(const BoundViolation& v) {
  return Json{{"l", v.level}, {"beta", v.beta.str()}, {"part", v.part}, {"margin", to_json(v.margin)}};
}

Json to_json(const TheoremCheck& check) {
  Json violations = Json::array();
  for (const auto& v : check.violations) violations.push_back(to_json(v));
  return Json{{"k0", check.k0}, {"checked", check.checked}, {"tightest", to_json(check.tightest)}, {"violations", violations}};
}

}  // namespace kirillov
