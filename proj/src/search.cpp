// SPDX-FileCopyrightText: Copyright (c) 2026 The kirillov-lab authors
// SPDX-License-Identifier: Apache-2.0

#include "search.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "errors.hpp"
#include "random.hpp"
#include "solver.hpp"

namespace kirillov {
namespace {

namespace fs = std::filesystem;

struct Case {
  explicit Case(RepParams rep) : params(std::move(rep)) {}
  size_t index = 0;
  RepParams params;
  ValuationPattern pattern;
  int k0 = 0;
  bool asserted = true;
  SupportTemplate support;
  Json params_json;
  std::optional<VanishingSpace> space;
  std::string solve_error;
};

std::string hex64(std::uint64_t x) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << x;
  return os.str();
}

Scalar sqrt_p_like(long p) {
  if (p == 2) return Scalar(1) + Scalar::root_of_unity(4, 1);
  const FieldParams field = FieldParams::desk(p);
  return gauss_sum(CharacterSpec::from_exponent(field, 1, (p - 1) / 2, Scalar(1)), field);
}

std::vector<Regime> regimes_of(const SearchGrid& grid) {
  std::vector<Regime> out = grid.regimes;
  if (grid.wild && std::find(out.begin(), out.end(), Regime::wild) == out.end()) out.push_back(Regime::wild);
  if (!grid.wild) out.erase(std::remove(out.begin(), out.end(), Regime::wild), out.end());
  return out;
}

std::optional<Json> read_cache(const fs::path& file) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    j["cached"] = true;
    return j;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // a damaged entry is recomputed
  }
}

void write_cache(const fs::path& file, const Json& j) {
  const fs::path tmp = file.string() + ".tmp" + hex64(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorCode::io, "cannot write cache file " + tmp.string());
    out << j.dump();
  }
  fs::rename(tmp, file);
}

Json run_trial(const Case& c, size_t trial, std::uint64_t seed) {
  Json j{{"index", trial}, {"seed", hex64(seed)}};
  try {
    if (!c.space) throw Error(ErrorCode::inconsistent, "solver failed: " + c.solve_error);
    if (c.space->basis.empty()) {
      j["status"] = "only-zero-vanishes";
      return j;
    }
    std::mt19937_64 rng(seed);
    GeneratorCoeffs phi = random_combination(c.space->basis, rng);
    for (int attempt = 0; attempt < 20 && phi.k0() != c.k0; ++attempt) phi = random_combination(c.space->basis, rng);
    const EmbeddingOracle oracle(c.params.field().p);
    const TheoremCheck check = check_theorem12(phi, c.params, oracle);
    j["k0"] = check.k0;
    j["entries"] = phi.entries().size();
    j["checked"] = check.checked;
    j["tightest"] = to_json(check.tightest);
    Json violations = Json::array();
    for (const auto& v : check.violations) violations.push_back(to_json(v));
    j["violations"] = violations;
  } catch (const Error& e) {
    j["error"] = std::string(to_string(e.code())) + ": " + e.what();
  }
  return j;
}

}  // namespace

std::vector<ValuationPattern> valuation_patterns(Regime regime, const WeightParams& w, long p, bool interior) {
  (void)p;
  const long m = w.m, n = w.n;
  std::vector<ValuationPattern> out;
  if (regime == Regime::degenerate) {
    Rational v(-(1 + n + 2 * m), 2);
    v.canonicalize();
    out.push_back({"lambda=mu", v, v, true});
    return out;
  }
  const long top = -m, bottom = -1 - n - m;  // v(lambda~) = 0 and v(lambda~) = -1-n
  out.push_back({"v(lambda~)=0", Rational(top), Rational(bottom), true});
  out.push_back({"v(lambda~)=-1-n", Rational(bottom), Rational(top), true});
  if (interior)
    for (long t = 1; t <= n; ++t)
      out.push_back({"v(lambda~)=" + std::to_string(-t), Rational(-m - t), Rational(-1 - n - m + t), false});
  return out;
}

Scalar scalar_with_valuation(long p, const Rational& v, long unit) {
  Rational twice = v * 2;
  twice.canonicalize();
  if (twice.get_den() != 1) throw Error(ErrorCode::unsupported, "only integral and half-integral valuations are realized");
  const long t = twice.get_num().get_si();
  const long whole = t >= 0 ? t / 2 : -((-t + 1) / 2);  // floor(v)
  Scalar s = Scalar(ppow(p, whole) * Rational(unit));
  if (t - 2 * whole == 1) s = s * sqrt_p_like(p);
  return s;
}

std::vector<RepParams> realize_pattern(long p, const WeightParams& w, Regime regime, const ValuationPattern& pattern,
                                       int max_characters) {
  const FieldParams field = FieldParams::desk(p);
  const Scalar lambda = scalar_with_valuation(p, pattern.v_lambda);
  std::vector<RepParams> out;
  switch (regime) {
    case Regime::degenerate:
      out.push_back(RepParams::degenerate(field, w, lambda));
      break;
    case Regime::unramified:
      for (long unit = 1; unit < 4 * p; ++unit) {
        if (unit % p == 0) continue;
        try {
          out.push_back(RepParams::unramified(field, w, lambda, scalar_with_valuation(p, pattern.v_mu, unit)));
          break;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::regime_mismatch) throw;
        }
      }
      break;
    case Regime::tame:
    case Regime::wild: {
      const int nu = regime == Regime::tame ? 1 : 2;
      int count = 0;
      for (const auto& eps : characters_of_conductor(field, nu)) {
        if (max_characters > 0 && count >= max_characters) break;
        ++count;
        const CharacterSpec chi1 = CharacterSpec::from_generator_exponents(field, nu, eps.exponents(), lambda);
        out.push_back(RepParams::ramified(field, w, chi1, scalar_with_valuation(p, pattern.v_mu)));
      }
      break;
    }
  }
  return out;
}

Json SearchGrid::to_json() const {
  Json regs = Json::array();
  for (Regime r : regimes) regs.push_back(kirillov::to_string(r));
  return Json{{"primes", primes}, {"n", ns},         {"m", ms},           {"regimes", regs},
              {"k0", k0s},        {"depth", depth},  {"trials", trials},  {"seed", seed},
              {"interior", interior}, {"wild", wild}, {"max_characters", max_characters}};
}

SearchGrid SearchGrid::from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::parse, "search grid must be an object");
  SearchGrid g;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "primes") g.primes = value.get<std::vector<long>>();
      else if (key == "n") g.ns = value.get<std::vector<int>>();
      else if (key == "m") g.ms = value.get<std::vector<int>>();
      else if (key == "k0") g.k0s = value.get<std::vector<int>>();
      else if (key == "depth") g.depth = value.get<int>();
      else if (key == "trials") g.trials = value.get<int>();
      else if (key == "seed") g.seed = value.get<std::uint64_t>();
      else if (key == "interior") g.interior = value.get<bool>();
      else if (key == "wild") g.wild = value.get<bool>();
      else if (key == "max_characters") g.max_characters = value.get<int>();
      else if (key == "regimes") {
        g.regimes.clear();
        for (const auto& r : value) g.regimes.push_back(parse_regime(r.get<std::string>()));
      } else {
        throw Error(ErrorCode::parse, "unknown search grid key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse, std::string("search grid: ") + e.what());
  }
  return g;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::all_pass: return "all-pass";
    case Verdict::violation: return "violation";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

Json replay_trial(const RepParams& params, int k0, int depth, std::uint64_t seed) {
  Case c(params);
  c.k0 = k0;
  c.support = SupportTemplate::box(params.field().p, k0, 0, depth);
  try {
    c.space = solve_vanishing(c.support, params, EmbeddingOracle(params.field().p));
  } catch (const Error& e) {
    c.solve_error = e.what();
  }
  Json j = run_trial(c, 0, seed);
  j.erase("index");
  return j;
}

std::string sha256_hex(const std::string& text) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::io, "SHA-256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return os.str();
}

void parallel_for(size_t count, unsigned workers, const std::function<void(size_t)>& fn) {
  const unsigned threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

SearchReport run_search(const SearchGrid& grid, const SearchOptions& options) {
  if (grid.trials < 0 || grid.depth < 0) throw Error(ErrorCode::invalid_argument, "trials and depth must be nonnegative");
  std::vector<Case> cases;
  for (long p : grid.primes) {
    if (!is_prime(p)) throw Error(ErrorCode::invalid_argument, "p must be prime");
    for (Regime regime : regimes_of(grid))
      for (int n : grid.ns)
        for (int m : grid.ms) {
          if (n < 0) throw Error(ErrorCode::invalid_argument, "weight n must be nonnegative");
          const WeightParams w{m, n};
          if ((regime == Regime::tame || regime == Regime::wild) && n != 0) continue;
          if (regime == Regime::tame && p == 2) continue;  // no characters of conductor 1
          for (const auto& pattern : valuation_patterns(regime, w, p, grid.interior))
            for (const auto& params : realize_pattern(p, w, regime, pattern, grid.max_characters))
              for (int k0 : grid.k0s) {
                if (k0 > 0) throw Error(ErrorCode::invalid_argument, "k0 must be <= 0");
                Case c(params);
                c.index = cases.size();
                c.pattern = pattern;
                c.k0 = k0;
                c.asserted = w.below_q(params.field().q) && regime != Regime::wild;
                c.support = SupportTemplate::box(p, k0, 0, grid.depth);
                c.params_json = to_json(params);
                cases.push_back(std::move(c));
              }
        }
  }

  struct Job {
    size_t case_index;
    size_t trial;
    std::uint64_t seed;
    std::string cache_file;
  };
  std::vector<Job> jobs;
  std::vector<bool> needs_solve(cases.size(), false);
  const bool use_cache = !options.cache_dir.empty();
  if (use_cache) fs::create_directories(options.cache_dir);
  std::vector<std::optional<Json>> results;
  for (const auto& c : cases)
    for (int t = 0; t < grid.trials; ++t) {
      Job job{c.index, static_cast<size_t>(t), derive_seed(grid.seed, c.index, static_cast<std::uint64_t>(t)), ""};
      std::optional<Json> cached;
      if (use_cache) {
        const std::string key = "trial-v1|" + c.params_json.dump() + "|" + c.support.describe() + "|" + hex64(job.seed);
        job.cache_file = (fs::path(options.cache_dir) / (sha256_hex(key) + ".json")).string();
        cached = read_cache(job.cache_file);
      }
      if (!cached) needs_solve[c.index] = true;
      results.push_back(std::move(cached));
      jobs.push_back(std::move(job));
    }

  std::vector<size_t> to_solve;
  for (size_t i = 0; i < cases.size(); ++i)
    if (needs_solve[i]) to_solve.push_back(i);
  parallel_for(to_solve.size(), options.workers, [&](size_t i) {
    Case& c = cases[to_solve[i]];
    try {
      c.space = solve_vanishing(c.support, c.params, EmbeddingOracle(c.params.field().p));
    } catch (const Error& e) {
      c.solve_error = e.what();
    }
  });

  SearchReport report;
  std::mutex cache_mutex;
  parallel_for(jobs.size(), options.workers, [&](size_t i) {
    if (results[i]) return;
    const Job& job = jobs[i];
    Json j = run_trial(cases[job.case_index], job.trial, job.seed);
    j["cached"] = false;
    if (use_cache) {
      Json stored = j;
      stored.erase("cached");
      std::lock_guard lock(cache_mutex);
      write_cache(job.cache_file, stored);
    }
    results[i] = std::move(j);
  });

  Json case_list = Json::array();
  bool any_asserted_pass = false, any_asserted_violation = false;
  size_t job_index = 0;
  for (const auto& c : cases) {
    const EmbeddingOracle oracle(c.params.field().p);
    const BSCheck bs = check_bs_conditions(c.params, oracle);
    Json trials = Json::array();
    size_t violations = 0, errors = 0, passed = 0;
    for (int t = 0; t < grid.trials; ++t, ++job_index) {
      const Json& r = *results[job_index];
      ++report.trials_run;
      if (r.value("cached", false)) ++report.cache_hits;
      if (r.contains("error")) {
        ++errors;
      } else if (r.contains("violations")) {
        if (r["violations"].empty())
          ++passed;
        else
          ++violations;
      }
      trials.push_back(r);
    }
    Json jc{{"index", c.index},
            {"params", c.params_json},
            {"pattern", c.pattern.label},
            {"boundary", c.pattern.boundary},
            {"k0", c.k0},
            {"template", Json{{"levels", Json::array({c.k0, 0})}, {"depth", grid.depth}, {"cells", c.support.cells.size()}}},
            {"asserted", c.asserted},
            {"bs", Json{{"unitary", bs.unitary}, {"bounded", bs.bounded}}}};
    if (c.space)
      jc["solver"] = Json{{"unknowns", c.space->unknowns}, {"constraints", c.space->constraints}, {"basis", c.space->basis.size()}};
    else if (!c.solve_error.empty())
      jc["solver"] = Json{{"error", c.solve_error}};
    else
      jc["solver"] = "cached";
    if (c.params.weight().below_q(c.params.field().q)) {
      const PolyVec witness = certificate_prop13(c.params);
      jc["certificate"] = Json{{"witness", to_json(witness)},
                               {"outside_sum", !certificate_lattice(c.params).contains(rational_coeffs(witness))}};
    }
    jc["summary"] = Json{{"trials", grid.trials}, {"passed", passed}, {"violations", violations}, {"errors", errors}};
    if (c.asserted) {
      jc["verdict"] = violations > 0 ? "violation" : (passed > 0 ? "all-pass" : "inconclusive");
      any_asserted_violation = any_asserted_violation || violations > 0;
      any_asserted_pass = any_asserted_pass || passed > 0;
    } else {
      jc["verdict"] = violations > 0 ? "exploratory: violations found" : "exploratory: none found";
    }
    jc["trials"] = std::move(trials);
    case_list.push_back(std::move(jc));
  }
  report.verdict = any_asserted_violation ? Verdict::violation : (any_asserted_pass ? Verdict::all_pass : Verdict::inconclusive);

  Json embedding = Json::object();
  for (long p : grid.primes) embedding[std::to_string(p)] = EmbeddingOracle(p).describe(p * (p - 1));
  report.json = Json{{"schema", kReportSchema},
                     {"command", "search"},
                     {"grid", grid.to_json()},
                     {"embedding", embedding},
                     {"lattice_scaling", "M_l(beta) = q^-1 pi^(-n-l*m) N_l(beta)"},
                     {"verdict", to_string(report.verdict)},
                     {"cases", std::move(case_list)}};
  return report;
}

}  // namespace kirillov
