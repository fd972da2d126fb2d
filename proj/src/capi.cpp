// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#define KIRILLOV_BUILDING 1
#include "kirillov/kirillov.h"

#include <cstdlib>
#include <cstring>
#include <memory>

#include "errors.hpp"
#include "expansion.hpp"
#include "search.hpp"
#include "serialize.hpp"
#include "suites.hpp"
#include "theorem.hpp"

struct kl_context {
  std::string last_error;
};

struct kl_coeffs {
  kirillov::RepParams params;
  kirillov::GeneratorCoeffs coeffs;
};

namespace {

using kirillov::Error;
using kirillov::ErrorCode;
using kirillov::Json;

kl_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return KL_ERR_INVALID_ARGUMENT;
    case ErrorCode::parse: return KL_ERR_PARSE;
    case ErrorCode::invalid_coeffs: return KL_ERR_INVALID_COEFFS;
    case ErrorCode::regime_mismatch: return KL_ERR_REGIME_MISMATCH;
    case ErrorCode::trivial_character: return KL_ERR_TRIVIAL_CHARACTER;
    case ErrorCode::ambiguous_valuation: return KL_ERR_AMBIGUOUS_VALUATION;
    case ErrorCode::inconsistent: return KL_ERR_INCONSISTENT;
    case ErrorCode::weight_too_large: return KL_ERR_WEIGHT_TOO_LARGE;
    case ErrorCode::not_vanishing: return KL_ERR_NOT_VANISHING;
    case ErrorCode::horizon_exceeded: return KL_ERR_HORIZON_EXCEEDED;
    case ErrorCode::singular_matrix: return KL_ERR_SINGULAR_MATRIX;
    case ErrorCode::unsupported: return KL_ERR_UNSUPPORTED;
    case ErrorCode::io: return KL_ERR_IO;
  }
  return KL_ERR_INTERNAL;
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Json parse_json(const char* text, const char* what) {
  if (text == nullptr) throw Error(ErrorCode::invalid_argument, std::string(what) + " is null");
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse, std::string(what) + ": " + e.what());
  }
}

template <class F>
kl_status guarded(kl_context* ctx, F&& body) {
  if (ctx == nullptr) return KL_ERR_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    body();
    return KL_OK;
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    ctx->last_error = e.what();
    return KL_ERR_PARSE;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return KL_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::invalid_argument, std::string(what) + " is null");
}

Json identity_json(const std::optional<kirillov::IdentityViolation>& v) {
  if (!v) return Json{{"holds", true}};
  return Json{{"holds", false}, {"level", v->level}, {"gamma", v->gamma.str()}};
}

}  // namespace

extern "C" {

const char* kl_version(void) { return "1.0.0"; }

const char* kl_status_name(kl_status status) {
  switch (status) {
    case KL_OK: return "ok";
    case KL_ERR_INTERNAL: return "internal";
    default:
      if (status > KL_OK && status < KL_ERR_INTERNAL)
        return kirillov::to_string(static_cast<ErrorCode>(static_cast<int>(status) - 1));
  }
  return "unknown";
}

kl_context* kl_context_new(void) { return new (std::nothrow) kl_context(); }

void kl_context_free(kl_context* ctx) { delete ctx; }

const char* kl_last_error(const kl_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

void kl_string_free(char* s) { std::free(s); }

size_t kl_suite_count(void) { return kirillov::suite_names().size(); }

const char* kl_suite_name(size_t index) {
  const auto& names = kirillov::suite_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

kl_status kl_verify_suite(kl_context* ctx, const char* name, const char* config_json, char** result_json,
                          int* passed) {
  return guarded(ctx, [&] {
    require(name, "suite name");
    require(result_json, "result pointer");
    kirillov::SuiteConfig config;
    if (config_json != nullptr) {
      const Json j = parse_json(config_json, "suite config");
      for (const auto& [key, value] : j.items()) {
        if (key == "p") config.p = value.get<long>();
        else if (key == "n") config.ns = value.get<std::vector<int>>();
        else if (key == "trials") config.trials = value.get<int>();
        else if (key == "seed") config.seed = value.get<std::uint64_t>();
        else throw Error(ErrorCode::parse, "unknown suite config key '" + key + "'");
      }
    }
    const kirillov::SuiteResult r = kirillov::run_suite(name, config);
    Json out{{"suite", r.name}, {"passed", r.passed}, {"checks", r.checks}};
    if (!r.passed) out["first_failure"] = r.first_failure;
    *result_json = copy_out(out.dump());
    if (passed) *passed = r.passed ? 1 : 0;
  });
}

kl_status kl_coeffs_from_json(kl_context* ctx, const char* json, kl_coeffs** out) {
  return guarded(ctx, [&] {
    require(out, "output pointer");
    const Json j = parse_json(json, "coefficient document");
    if (!j.is_object() || !j.contains("params")) throw Error(ErrorCode::parse, "missing field 'params'");
    kirillov::RepParams params = kirillov::params_from_json(j.at("params"));
    const kirillov::EmbeddingOracle oracle(params.field().p);
    kirillov::GeneratorCoeffs coeffs = kirillov::coeffs_from_json(j, params, oracle);
    *out = new kl_coeffs{std::move(params), std::move(coeffs)};
  });
}

void kl_coeffs_free(kl_coeffs* coeffs) { delete coeffs; }

kl_status kl_coeffs_params_json(kl_context* ctx, const kl_coeffs* coeffs, char** params_json) {
  return guarded(ctx, [&] {
    require(coeffs, "coefficients");
    require(params_json, "output pointer");
    *params_json = copy_out(kirillov::to_json(coeffs->params).dump());
  });
}

kl_status kl_expand(kl_context* ctx, const kl_coeffs* coeffs, int l_max, char** table_json) {
  return guarded(ctx, [&] {
    require(coeffs, "coefficients");
    require(table_json, "output pointer");
    const auto& params = coeffs->params;
    const kirillov::AmplitudeTable table = kirillov::expand(coeffs->coeffs, params, l_max);
    Json audit{{"closed_form_agrees", kirillov::same_rows(table, kirillov::expand_closed_form(coeffs->coeffs, params, l_max))},
               {"two_step", identity_json(kirillov::verify_two_step(table, params))},
               {"vanishes_off_integers", kirillov::vanishes_outside_integers(table, params.field())}};
    if (params.regime() == kirillov::Regime::degenerate)
      audit["second_two_step"] = identity_json(kirillov::verify_degenerate_second(table, params));
    Json out{{"params", kirillov::to_json(params)}, {"table", kirillov::to_json(table)}, {"audit", audit}};
    *table_json = copy_out(out.dump());
  });
}

kl_status kl_check(kl_context* ctx, const kl_coeffs* coeffs, const char* fault_json, char** result_json,
                   int* all_pass) {
  return guarded(ctx, [&] {
    require(coeffs, "coefficients");
    require(result_json, "output pointer");
    const auto& params = coeffs->params;
    const kirillov::EmbeddingOracle oracle(params.field().p);
    kirillov::AmplitudeTable table = kirillov::expand(coeffs->coeffs, params, 0);
    Json out{{"params", kirillov::to_json(params)}};
    if (fault_json != nullptr) {
      const Json f = parse_json(fault_json, "fault");
      const int l = f.at("l").get<int>();
      const auto beta = kirillov::WElem::parse(params.field().p, f.at("beta").get<std::string>());
      const long power = f.at("power").get<long>();
      if (l < table.k0 || l > 0) throw Error(ErrorCode::invalid_argument, "fault level outside k0..0");
      const kirillov::Scalar factor(kirillov::ppow(params.field().p, power));
      const std::vector<std::map<int, kirillov::Row>*> parts =
          params.ramified() ? std::vector<std::map<int, kirillov::Row>*>{&table.prime, &table.second}
                            : std::vector<std::map<int, kirillov::Row>*>{&table.total};
      bool hit = false;
      for (auto* rows : parts) {
        const kirillov::PolyVec* v = kirillov::AmplitudeTable::at(*rows, l).find(beta);
        if (v == nullptr) continue;
        (*rows)[l].set(beta, factor * *v);
        hit = true;
      }
      if (!hit) throw Error(ErrorCode::invalid_argument, "fault target C_" + std::to_string(l) + "(" + beta.str() + ") is zero");
      out["fault"] = f;
    }
    const kirillov::BSCheck bs = kirillov::check_bs_conditions(params, oracle);
    const kirillov::TheoremCheck check = kirillov::check_theorem12(table, params, oracle);
    out["bs"] = Json{{"unitary", bs.unitary}, {"bounded", bs.bounded}};
    out["asserted"] = bs.holds() && params.weight().below_q(params.field().q) && params.regime() != kirillov::Regime::wild;
    out["check"] = kirillov::to_json(check);
    out["rows"] = kirillov::to_json(table);
    *result_json = copy_out(out.dump());
    if (all_pass) *all_pass = check.all_pass() ? 1 : 0;
  });
}

kl_status kl_search(kl_context* ctx, const char* grid_json, unsigned workers, const char* cache_dir,
                    char** report_json, kl_verdict* verdict) {
  return guarded(ctx, [&] {
    require(report_json, "output pointer");
    const kirillov::SearchGrid grid = kirillov::SearchGrid::from_json(parse_json(grid_json, "search grid"));
    kirillov::SearchOptions options;
    options.workers = workers == 0 ? 1 : workers;
    if (cache_dir != nullptr) options.cache_dir = cache_dir;
    const kirillov::SearchReport report = kirillov::run_search(grid, options);
    Json out = report.json;
    out["trials_run"] = report.trials_run;
    out["cache_hits"] = report.cache_hits;
    *report_json = copy_out(out.dump());
    if (verdict) *verdict = static_cast<kl_verdict>(static_cast<int>(report.verdict));
  });
}

kl_status kl_gauss(kl_context* ctx, long p, int nu, long exponent, char** result_json) {
  return guarded(ctx, [&] {
    require(result_json, "output pointer");
    if (!kirillov::is_prime(p)) throw Error(ErrorCode::invalid_argument, "p must be prime");
    if (nu < 1) throw Error(ErrorCode::invalid_argument, "conductor must be at least 1");
    const kirillov::FieldParams field = kirillov::FieldParams::desk(p);
    const kirillov::EmbeddingOracle oracle(p);
    std::vector<kirillov::CharacterSpec> chars;
    if (exponent < 0)
      chars = kirillov::characters_of_conductor(field, nu);
    else
      chars.push_back(kirillov::CharacterSpec::from_exponent(field, nu, exponent, kirillov::Scalar(1)));
    Json list = Json::array();
    for (const auto& eps : chars) {
      const kirillov::Scalar tau = kirillov::gauss_sum(eps, field);
      const kirillov::Scalar other = kirillov::gauss_sum(eps.inverse(), field);
      list.push_back(Json{{"character", eps.label()},
                          {"tau_eps_inverse", kirillov::to_json(tau)},
                          {"tau_squared", kirillov::to_json(tau * tau)},
                          {"valuation", kirillov::to_json(oracle.valuation(tau))},
                          {"product_identity", tau * other == eps.value(eps.modulus() - 1) * kirillov::Scalar(kirillov::ppow(p, nu))}});
    }
    Json out{{"p", p}, {"nu", nu}, {"embedding", oracle.describe(kirillov::ipow(p, static_cast<unsigned long>(nu)).get_si() * (p - 1))}, {"gauss_sums", list}};
    *result_json = copy_out(out.dump());
  });
}

}  // extern "C"
