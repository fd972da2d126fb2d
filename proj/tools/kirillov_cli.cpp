// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#include <kirillov/kirillov.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Failure {
  std::string message;
};

class Context {
 public:
  Context() : ctx_(kl_context_new()) {
    if (!ctx_) throw Failure{"out of memory"};
  }
  ~Context() { kl_context_free(ctx_); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;
  kl_context* get() const { return ctx_; }

  // Throws Failure on a non-OK status.
  void ok(kl_status status) const {
    if (status != KL_OK) throw Failure{std::string(kl_status_name(status)) + ": " + kl_last_error(ctx_)};
  }

 private:
  kl_context* ctx_;
};

// Takes ownership of a string returned by the library.
Json take_json(char* text) {
  std::unique_ptr<char, decltype(&kl_string_free)> guard(text, kl_string_free);
  return Json::parse(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot read " + path};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

Json report(const std::string& command, Json config, Json result) {
  return Json{{"schema", "kirillov-lab/report-v1"},
              {"command", command},
              {"version", kl_version()},
              {"timestamp", utc_timestamp()},
              {"config", std::move(config)},
              {"result", std::move(result)}};
}

void emit(const Json& doc, const std::string& out) {
  const std::string text = doc.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Failure{"cannot write " + out};
  f << text;
}

struct CommonOptions {
  std::string out;
};

// Optional cross-checks of a coefficient file's parameters against flags.
struct ParamFlags {
  std::optional<long> p;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<std::string> regime;

  void add_to(CLI::App* app) {
    app->add_option("--p", p, "Expected residue characteristic");
    app->add_option("--n", n, "Expected symmetric power");
    app->add_option("--m", m, "Expected determinant twist");
    app->add_option("--regime", regime, "Expected regime");
  }

  void check(const Json& params) const {
    auto mismatch = [](const char* key, const std::string& flag, const Json& file) {
      return Failure{std::string("--") + key + " " + flag + " does not match the coefficient file (" + file.dump() + ")"};
    };
    if (p && params.at("p").get<long>() != *p) throw mismatch("p", std::to_string(*p), params.at("p"));
    if (n && params.at("n").get<int>() != *n) throw mismatch("n", std::to_string(*n), params.at("n"));
    if (m && params.at("m").get<int>() != *m) throw mismatch("m", std::to_string(*m), params.at("m"));
    if (regime && params.at("regime").get<std::string>() != *regime) throw mismatch("regime", *regime, params.at("regime"));
  }

  Json echo() const {
    Json j = Json::object();
    if (p) j["p"] = *p;
    if (n) j["n"] = *n;
    if (m) j["m"] = *m;
    if (regime) j["regime"] = *regime;
    return j;
  }
};

class Coeffs {
 public:
  Coeffs(const Context& ctx, const std::string& path) {
    const std::string text = read_file(path);
    ctx.ok(kl_coeffs_from_json(ctx.get(), text.c_str(), &handle_));
  }
  ~Coeffs() { kl_coeffs_free(handle_); }
  Coeffs(const Coeffs&) = delete;
  Coeffs& operator=(const Coeffs&) = delete;
  const kl_coeffs* get() const { return handle_; }

 private:
  kl_coeffs* handle_ = nullptr;
};

// ---- verify-lemmas

struct VerifyOptions {
  long p = 5;
  std::vector<int> ns{0, 1, 2, 3};
  std::vector<std::string> suites;
  int trials = 100;
  std::uint64_t seed = 1;
  std::string out;
};

int run_verify(const VerifyOptions& o) {
  Context ctx;
  std::vector<std::string> suites = o.suites;
  if (suites.empty())
    for (size_t i = 0; i < kl_suite_count(); ++i) suites.emplace_back(kl_suite_name(i));
  const Json config{{"p", o.p}, {"n", o.ns}, {"trials", o.trials}, {"seed", o.seed}};
  const std::string config_text = config.dump();
  Json results = Json::array();
  bool all = true;
  for (const auto& name : suites) {
    char* out = nullptr;
    int passed = 0;
    ctx.ok(kl_verify_suite(ctx.get(), name.c_str(), config_text.c_str(), &out, &passed));
    Json r = take_json(out);
    if (results.empty()) std::cout << std::left << std::setw(24) << "suite" << std::right << std::setw(8) << "checks" << "  result\n";
    all = all && passed;
    std::cout << std::left << std::setw(24) << name << std::right << std::setw(8) << r["checks"].get<size_t>() << "  "
              << (passed ? "pass" : "FAIL");
    if (!passed) std::cout << "  (" << r["first_failure"].get<std::string>() << ")";
    std::cout << "\n";
    results.push_back(std::move(r));
  }
  if (!o.out.empty()) {
    Json echo = config;
    echo["suites"] = suites;
    emit(report("verify-lemmas", echo, Json{{"suites", results}, {"all_pass", all}}), o.out);
  }
  return all ? kExitOk : kExitViolation;
}

// ---- expand / check

struct ExpandOptions {
  std::string coeffs;
  int l_max = 3;
  ParamFlags params;
  std::string out;
};

int run_expand(const ExpandOptions& o) {
  Context ctx;
  const Coeffs coeffs(ctx, o.coeffs);
  char* params_text = nullptr;
  ctx.ok(kl_coeffs_params_json(ctx.get(), coeffs.get(), &params_text));
  o.params.check(take_json(params_text));
  char* out = nullptr;
  ctx.ok(kl_expand(ctx.get(), coeffs.get(), o.l_max, &out));
  Json result = take_json(out);
  Json echo{{"coeffs", o.coeffs}, {"l_max", o.l_max}, {"expect", o.params.echo()}};
  const Json& audit = result["audit"];
  const bool holds = audit["two_step"]["holds"].get<bool>() && audit["closed_form_agrees"].get<bool>() &&
                     (!audit.contains("second_two_step") || audit["second_two_step"]["holds"].get<bool>());
  emit(report("expand", echo, std::move(result)), o.out);
  if (!holds) std::cerr << "recursion identities FAILED on this table\n";
  return holds ? kExitOk : kExitViolation;
}

struct CheckOptions {
  std::string coeffs;
  std::string fault;
  ParamFlags params;
  std::string out;
};

// "L:BETA:K" -> {"l": L, "beta": "BETA", "power": K}
Json parse_fault(const std::string& spec) {
  const auto a = spec.find(':');
  const auto b = spec.rfind(':');
  if (a == std::string::npos || a == b) throw Failure{"--inject-fault expects L:BETA:K, got '" + spec + "'"};
  try {
    return Json{{"l", std::stoi(spec.substr(0, a))}, {"beta", spec.substr(a + 1, b - a - 1)}, {"power", std::stol(spec.substr(b + 1))}};
  } catch (const std::exception&) {
    throw Failure{"--inject-fault expects integers around the frequency, got '" + spec + "'"};
  }
}

int run_check(const CheckOptions& o) {
  Context ctx;
  const Coeffs coeffs(ctx, o.coeffs);
  char* params_text = nullptr;
  ctx.ok(kl_coeffs_params_json(ctx.get(), coeffs.get(), &params_text));
  o.params.check(take_json(params_text));
  std::string fault_text;
  if (!o.fault.empty()) fault_text = parse_fault(o.fault).dump();
  char* out = nullptr;
  int all_pass = 0;
  ctx.ok(kl_check(ctx.get(), coeffs.get(), fault_text.empty() ? nullptr : fault_text.c_str(), &out, &all_pass));
  Json result = take_json(out);
  const bool asserted = result["asserted"].get<bool>();
  result["verdict"] = all_pass ? "all-pass" : (asserted ? "violation" : "exploratory: violations found");
  Json echo{{"coeffs", o.coeffs}, {"inject_fault", o.fault}, {"expect", o.params.echo()}};
  const size_t violations = result["check"]["violations"].size();
  emit(report("check", echo, std::move(result)), o.out);
  std::cerr << "check: " << violations << " violation(s)" << (asserted ? "" : " (regime not asserted)") << "\n";
  return (!all_pass && asserted) ? kExitViolation : kExitOk;
}

// ---- search

struct SearchOptions {
  std::vector<long> primes{5};
  std::vector<int> ns{0, 1};
  std::vector<int> ms{0};
  std::vector<std::string> regimes{"unramified"};
  std::vector<int> k0s{-1, -2};
  int depth = 1;
  int trials = 50;
  std::uint64_t seed = 1;
  bool interior = false;
  bool wild = false;
  int max_characters = 0;
  unsigned workers = 1;
  std::string cache;
  std::string out;
};

int run_search(const SearchOptions& o) {
  Context ctx;
  std::string cache = o.cache;
  if (const char* env = std::getenv("KIRILLOV_CACHE"); env != nullptr && *env != '\0') cache = env;
  const Json grid{{"primes", o.primes}, {"n", o.ns},        {"m", o.ms},
                  {"regimes", o.regimes}, {"k0", o.k0s},     {"depth", o.depth},
                  {"trials", o.trials},   {"seed", o.seed},  {"interior", o.interior},
                  {"wild", o.wild},       {"max_characters", o.max_characters}};
  char* out = nullptr;
  kl_verdict verdict = KL_INCONCLUSIVE;
  ctx.ok(kl_search(ctx.get(), grid.dump().c_str(), o.workers, cache.empty() ? nullptr : cache.c_str(), &out, &verdict));
  Json result = take_json(out);
  result.erase("schema");
  result.erase("command");
  Json echo = grid;
  echo["workers"] = o.workers;
  echo["cache"] = cache;
  std::cerr << "search: verdict " << result["verdict"].get<std::string>() << ", " << result["trials_run"].get<size_t>()
            << " trial(s), " << result["cache_hits"].get<size_t>() << " from cache\n";
  emit(report("search", echo, std::move(result)), o.out);
  return verdict == KL_VIOLATION ? kExitViolation : kExitOk;
}

// ---- gauss

struct GaussOptions {
  long p = 5;
  int nu = 1;
  long exponent = -1;
  std::string out;
};

int run_gauss(const GaussOptions& o) {
  Context ctx;
  char* out = nullptr;
  ctx.ok(kl_gauss(ctx.get(), o.p, o.nu, o.exponent, &out));
  Json result = take_json(out);
  emit(report("gauss", Json{{"p", o.p}, {"nu", o.nu}, {"exponent", o.exponent}}, std::move(result)), o.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of integral structures in Kirillov models of GL2 representations"};
  app.set_config("--config", "", "INI file with one section per command; flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify-lemmas", "Run the randomized identity suites");
  v->add_option("--p", verify.p, "Residue characteristic")->capture_default_str();
  v->add_option("--n", verify.ns, "Symmetric powers")->delimiter(',')->capture_default_str();
  v->add_option("--suite", verify.suites, "Suites to run (default: all)")->delimiter(',');
  v->add_option("--trials", verify.trials, "Random samples per suite and parameter set")->capture_default_str();
  v->add_option("--seed", verify.seed, "Master seed")->capture_default_str();
  v->add_option("--out", verify.out, "Write a JSON report here");
  v->callback([&] { throw CLI::RuntimeError(run_verify(verify)); });

  ExpandOptions expand;
  auto* e = app.add_subcommand("expand", "Expand generator coefficients into amplitude rows");
  e->add_option("--coeffs", expand.coeffs, "Coefficient file (kirillov-lab/coeffs-v1)")->required();
  e->add_option("--l-max", expand.l_max, "Last level to compute")->capture_default_str();
  expand.params.add_to(e);
  e->add_option("--out", expand.out, "Report path (default: stdout)");
  e->callback([&] { throw CLI::RuntimeError(run_expand(expand)); });

  CheckOptions check;
  auto* c = app.add_subcommand("check", "Check the amplitude bounds on levels k0..0");
  c->add_option("--coeffs", check.coeffs, "Coefficient file (kirillov-lab/coeffs-v1)")->required();
  c->add_option("--inject-fault", check.fault, "Multiply C_L(BETA) by p^K before checking: L:BETA:K");
  check.params.add_to(c);
  c->add_option("--out", check.out, "Report path (default: stdout)");
  c->callback([&] { throw CLI::RuntimeError(run_check(check)); });

  SearchOptions search;
  auto* s = app.add_subcommand("search", "Search solver-generated functions for amplitude bound violations");
  s->add_option("--p", search.primes, "Primes")->delimiter(',')->capture_default_str();
  s->add_option("--n", search.ns, "Symmetric powers")->delimiter(',')->capture_default_str();
  s->add_option("--m", search.ms, "Determinant twists")->delimiter(',')->capture_default_str();
  s->add_option("--regime", search.regimes, "unramified, tame, degenerate, wild")->delimiter(',')->capture_default_str();
  s->add_option("--k0", search.k0s, "Lowest support levels")->delimiter(',')->capture_default_str();
  s->add_option("--depth", search.depth, "Frequency depth of the support template")->capture_default_str();
  s->add_option("--trials", search.trials, "Random functions per case")->capture_default_str();
  s->add_option("--seed", search.seed, "Master seed")->capture_default_str();
  s->add_flag("--interior", search.interior, "Add interior valuation patterns");
  s->add_flag("--wild", search.wild, "Add characters of conductor 2 (never asserted)");
  s->add_option("--max-characters", search.max_characters, "Characters per pattern, 0 for all")->capture_default_str();
  s->add_option("--workers", search.workers, "Worker threads")->capture_default_str();
  s->add_option("--cache", search.cache, "Trial cache directory (KIRILLOV_CACHE overrides)");
  s->add_option("--out", search.out, "Report path (default: stdout)");
  s->callback([&] { throw CLI::RuntimeError(run_search(search)); });

  GaussOptions gauss;
  auto* g = app.add_subcommand("gauss", "Print Gauss sums tau(eps^-1), their squares and valuations");
  g->add_option("--p", gauss.p, "Residue characteristic")->capture_default_str();
  g->add_option("--nu", gauss.nu, "Conductor exponent")->capture_default_str();
  g->add_option("--exponent", gauss.exponent, "eps(g) = zeta^exponent; negative for every character")->capture_default_str();
  g->add_option("--out", gauss.out, "Report path (default: stdout)");
  g->callback([&] { throw CLI::RuntimeError(run_gauss(gauss)); });

  for (auto* sub : {v, e, c, s, g}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::RuntimeError& r) {
    return r.get_exit_code();
  } catch (const CLI::CallForHelp& h) {
    return app.exit(h);
  } catch (const CLI::CallForAllHelp& h) {
    return app.exit(h);
  } catch (const CLI::CallForVersion& h) {
    return app.exit(h);
  } catch (const CLI::ConfigError& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitUsage;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& j) {
    std::cerr << "error: malformed library output: " << j.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
