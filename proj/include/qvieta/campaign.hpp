#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qvieta/symm.hpp"
#include "qvieta/vieta.hpp"

namespace qvieta {

struct CampaignConfig {
  int n = 3;
  int dim = 2;
  int trials = 25;
  std::uint64_t seed = 1;
  long entry_bound = 10;
  std::vector<std::string> checks = all_checks();
  int membership_degree_bound = 5;

  static const std::vector<std::string>& all_checks() {
    static const std::vector<std::string> names{
        "theorem2", "theorem3", "oracle",       "theorem1", "theorem4",
        "symmetry", "nonsymmetry", "ribbon",    "membership"};
    return names;
  }

  void validate() const {
    if (n < 1 || dim < 1) throw std::invalid_argument("config: n and dim must be positive");
    if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    if (entry_bound < 1) throw std::invalid_argument("config: bound must be >= 1");
    if (checks.empty()) throw std::invalid_argument("config: checks must be nonempty");
    const auto& known = all_checks();
    for (const auto& c : checks)
      if (std::find(known.begin(), known.end(), c) == known.end())
        throw std::invalid_argument("config: unknown check \"" + c + "\"");
  }
};

struct CheckOutcome {
  std::string status;  // "pass" | "fail" | "skip"
  std::string detail;  // nonempty for fail/skip
};

struct TrialRecord {
  int index = 0;
  std::uint64_t sub_seed = 0;
  int attempts = -1;  // -1: draw never succeeded
  std::map<std::string, CheckOutcome> checks;
  double elapsed_ms = 0;  // excluded from the serialized report body
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<TrialRecord> trials;
  int pass_count = 0, fail_count = 0, skip_count = 0;
  std::string first_failure;
  double total_ms = 0;

  bool all_passed() const { return fail_count == 0; }

  // Deterministic JSON-lines body: a config line, one line per trial in
  // index order, and a summary line. Timings are deliberately left out so
  // identical configs produce byte-identical bodies.
  std::string to_jsonl() const {
    std::ostringstream os;
    nlohmann::json cfg{{"config",
                        {{"n", config.n},
                         {"dim", config.dim},
                         {"trials", config.trials},
                         {"seed", config.seed},
                         {"bound", config.entry_bound},
                         {"checks", config.checks},
                         {"degree_bound", config.membership_degree_bound}}}};
    os << cfg.dump() << '\n';
    for (const auto& t : trials) {
      nlohmann::json checks = nlohmann::json::object();
      nlohmann::json details = nlohmann::json::object();
      for (const auto& [name, outcome] : t.checks) {
        checks[name] = outcome.status;
        if (!outcome.detail.empty()) details[name] = outcome.detail;
      }
      nlohmann::json line{{"trial", t.index},
                          {"seed", t.sub_seed},
                          {"n", config.n},
                          {"dim", config.dim},
                          {"attempts", t.attempts},
                          {"checks", std::move(checks)}};
      if (!details.empty()) line["details"] = std::move(details);
      os << line.dump() << '\n';
    }
    nlohmann::json summary{{"summary",
                            {{"pass", pass_count},
                             {"fail", fail_count},
                             {"skip", skip_count},
                             {"first_failure", first_failure}}}};
    os << summary.dump() << '\n';
    return os.str();
  }

  std::string summary_text() const {
    std::ostringstream os;
    os << "verify: n=" << config.n << " dim=" << config.dim << " trials=" << config.trials
       << " seed=" << config.seed << " bound=" << config.entry_bound << '\n';
    for (const auto& t : trials)
      for (const auto& [name, outcome] : t.checks)
        if (outcome.status == "fail")
          os << "  trial " << t.index << " " << name << ": FAIL (" << outcome.detail << ")\n";
    os << "checks passed: " << pass_count << ", failed: " << fail_count
       << ", skipped: " << skip_count << "  [" << static_cast<long>(total_ms) << " ms]\n";
    os << (all_passed() ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << '\n';
    return os.str();
  }
};

namespace detail {

inline CheckOutcome pass_fail(bool ok, const std::string& why_failed) {
  return ok ? CheckOutcome{"pass", ""} : CheckOutcome{"fail", why_failed};
}

// Shared per-trial artifacts, computed once and reused by every check.
struct TrialData {
  std::optional<GenericTuple> tuple;
  std::string draw_failure;
  std::vector<Matrix> ys;
  std::vector<Matrix> as2;  // theorem-2 coefficients
};

inline TrialData draw_trial(const CampaignConfig& cfg, std::uint64_t sub_seed) {
  TrialData data;
  try {
    data.tuple = random_tuple(cfg.n, cfg.dim, sub_seed, cfg.entry_bound);
    data.ys = conjugated_roots(data.tuple->elements);
    data.as2 = coeffs_theorem2(data.ys).as;
  } catch (const std::exception& e) {
    data.tuple.reset();
    data.draw_failure = e.what();
  }
  return data;
}

inline CheckOutcome run_check(const std::string& name, const CampaignConfig& cfg,
                              TrialData& data, SplitMix64& aux_rng) {
  if (name == "ribbon") {  // tuple-independent
    const int d = std::min(cfg.n, 4);
    return pass_fail(ribbon_base_check(d, cfg.n), "ribbon base check failed at degree " +
                                                      std::to_string(d));
  }
  if (!data.tuple)
    return {"fail", "genericity retry exhausted: " + data.draw_failure};
  const std::vector<Matrix>& xs = data.tuple->elements;

  if (name == "oracle") {
    auto oracle = coeffs_linear_oracle(xs);
    const auto residuals = residual_left(xs, oracle.as);
    for (const auto& r : residuals)
      if (!r.is_zero()) return {"fail", "oracle residual nonzero"};
    return {"pass", ""};
  }
  if (name == "theorem2") {
    auto oracle = coeffs_linear_oracle(xs);
    if (data.as2 != oracle.as) return {"fail", "theorem2 coefficients differ from oracle"};
    const auto residuals = residual_left(xs, data.as2);
    for (const auto& r : residuals)
      if (!r.is_zero()) return {"fail", "theorem2 residual nonzero"};
    return {"pass", ""};
  }
  if (name == "theorem3") {
    auto t3 = coeffs_theorem3(xs);
    return pass_fail(t3.as == data.as2, "theorem3 coefficients differ from theorem2");
  }
  if (name == "theorem1")
    return pass_fail(theorem1_check(xs), "trace/det corollary failed");
  if (name == "theorem4")
    return pass_fail(theorem4_check(xs), "y_n does not solve the right equation");
  if (name == "symmetry") {
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(static_cast<std::size_t>(cfg.n));
    std::iota(perm.begin(), perm.end(), 0);
    if (cfg.n <= 4) {
      do perms.push_back(perm);
      while (std::next_permutation(perm.begin(), perm.end()));
    } else {
      for (int t = 0; t < 24; ++t) {  // Fisher-Yates sample for large n
        std::vector<int> p = perm;
        for (int i = cfg.n - 1; i > 0; --i)
          std::swap(p[static_cast<std::size_t>(i)],
                    p[static_cast<std::size_t>(aux_rng.next_in(0, i))]);
        perms.push_back(std::move(p));
      }
    }
    bool any_executed = false;
    for (const auto& sigma : perms) {
      auto verdict = symmetry_check(xs, sigma);
      if (!verdict) continue;  // permuted order not generic: nothing to compare
      any_executed = true;
      if (!*verdict) return {"fail", "coefficients changed under reordering"};
    }
    return any_executed ? CheckOutcome{"pass", ""}
                        : CheckOutcome{"skip", "no permutation was generic"};
  }
  if (name == "nonsymmetry") {
    if (cfg.dim == 1) return {"skip", "requires noncommuting entries (dim >= 2)"};
    // y2*y1 must agree under the swap on every pair; y1*y2 must move for at
    // least one. Individual pairs can legitimately coincide (for 2x2
    // matrices exactly when the traces are equal), so several are tried.
    bool witnessed = false;
    int tested = 0;
    std::string failure;
    auto try_pair = [&](const Matrix& a, const Matrix& b) {
      if (commute(a, b) || !(b - a).try_inverse()) return true;
      auto ys_f = try_conjugated_roots(std::vector<Matrix>{a, b});
      auto ys_r = try_conjugated_roots(std::vector<Matrix>{b, a});
      if (!ys_f || !ys_r) return true;
      ++tested;
      if ((*ys_f)[1] * (*ys_f)[0] != (*ys_r)[1] * (*ys_r)[0]) {
        failure = "y2*y1 changed under swap";
        return false;
      }
      if ((*ys_f)[0] * (*ys_f)[1] != (*ys_r)[0] * (*ys_r)[1]) witnessed = true;
      return true;
    };
    if (cfg.n >= 2 && !try_pair(xs[0], xs[1])) return {"fail", failure};
    for (int t = 0; t < 20 && !witnessed; ++t) {
      const Matrix a = random_matrix(aux_rng, cfg.dim, cfg.entry_bound);
      const Matrix b = random_matrix(aux_rng, cfg.dim, cfg.entry_bound);
      if (!try_pair(a, b)) return {"fail", failure};
    }
    if (witnessed) return {"pass", ""};
    if (tested == 0) return {"skip", "no noncommuting generic pair found"};
    return {"fail", "no y1*y2 asymmetry witness among " + std::to_string(tested) + " pairs"};
  }
  if (name == "membership") {
    // bridge: Lambda_k evaluated at the y's is (-1)^k a_k
    for (int k = 1; k <= cfg.n; ++k) {
      const Matrix lhs = evaluate(elementary_lambda(k, cfg.n), data.ys);
      const Matrix rhs = k % 2 ? -data.as2[static_cast<std::size_t>(k - 1)]
                               : data.as2[static_cast<std::size_t>(k - 1)];
      if (lhs != rhs) return {"fail", "Lambda_k evaluation differs from theorem2 a_k"};
    }
    auto s2 = symm_membership(complete_s(2, cfg.n), cfg.membership_degree_bound);
    if (s2.refused) return {"skip", s2.refusal};
    if (!s2.member) return {"fail", "S_2 not recognized as member"};
    FreePolynomial expansion(cfg.n);
    for (const auto& [comp, c] : s2.certificate)
      expansion = expansion + c * detail::lambda_product(comp, cfg.n);
    if (expansion != complete_s(2, cfg.n)) return {"fail", "S_2 certificate does not expand back"};
    if (cfg.n >= 2) {
      auto word = symm_membership(FreePolynomial::monomial(cfg.n, {1, 2}),
                                  cfg.membership_degree_bound);
      if (word.refused) return {"skip", word.refusal};
      if (word.member) return {"fail", "single word y1.y2 misclassified as member"};
    }
    return {"pass", ""};
  }
  throw std::logic_error("unknown check: " + name);
}

}  // namespace detail

// Runs every enabled check on `trials` independently drawn certified
// tuples. Trials are processed in index order; per-trial sub-seeds come
// from the fixed splitmix64 derivation, so any failing trial can be
// reproduced alone from its seed.
inline CampaignReport run_campaign(const CampaignConfig& cfg) {
  cfg.validate();
  CampaignReport report;
  report.config = cfg;
  const auto campaign_start = std::chrono::steady_clock::now();
  for (int i = 0; i < cfg.trials; ++i) {
    const auto start = std::chrono::steady_clock::now();
    TrialRecord rec;
    rec.index = i;
    rec.sub_seed = SplitMix64::derive(cfg.seed, static_cast<std::uint64_t>(i));
    detail::TrialData data = detail::draw_trial(cfg, rec.sub_seed);
    if (data.tuple) rec.attempts = data.tuple->attempts;
    SplitMix64 aux_rng(SplitMix64::derive(rec.sub_seed, 0x61757800ull));  // "aux"
    for (const auto& name : cfg.checks) {
      CheckOutcome outcome;
      try {
        outcome = detail::run_check(name, cfg, data, aux_rng);
      } catch (const std::exception& e) {
        outcome = {"fail", std::string("exception: ") + e.what()};
      }
      if (outcome.status == "pass") ++report.pass_count;
      else if (outcome.status == "fail") {
        ++report.fail_count;
        if (report.first_failure.empty())
          report.first_failure = "trial " + std::to_string(i) + " " + name + ": " + outcome.detail;
      } else {
        ++report.skip_count;
      }
      rec.checks.emplace(name, std::move(outcome));
    }
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start).count();
    report.trials.push_back(std::move(rec));
  }
  report.total_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - campaign_start).count();
  return report;
}

}  // namespace qvieta
