#pragma once

#include <atomic>
#include <chrono>
#include <string>
#include <thread>
#include <vector>

#include "tsigma/context.hpp"
#include "tsigma/report.hpp"
#include "tsigma/theorem.hpp"

namespace tsigma {

struct CorpusDescriptor {
  std::string kind = "builtin";
  int max_order = 0;
  std::vector<int> skip_orders;
  int count = 0;
};

struct AuditOptions {
  int jobs = 1;
  int lattice_cap = kDefaultLatticeCap;
};

struct Violation {
  std::string group;
  std::string detail;  // which statements disagree
};

/// Empirical audit of the three-way equivalence over one corpus and one
/// partition. Violations list disagreements among sigma-soluble groups only;
/// other groups are logged with their verdicts but exempt.
struct AuditReport {
  std::string sigma_spec;
  CorpusDescriptor corpus;
  int jobs = 1;
  std::vector<TheoremVerdict> verdicts;
  std::vector<Violation> violations;
  double total_ms = 0.0;
};

namespace detail {

inline void collect_violations(AuditReport& rep) {
  for (const TheoremVerdict& v : rep.verdicts) {
    if (!v.sigma_soluble || v.equivalence_ok) continue;
    Violation viol;
    viol.group = v.group_name;
    viol.detail = "t_sigma=" + std::string(v.s1_t_sigma ? "true" : "false") +
                  " r_sigma_all=" + std::string(v.s2_r_all ? "true" : "false") +
                  " structure=" + std::string(v.s3_structure ? "true" : "false");
    rep.violations.push_back(std::move(viol));
  }
}

}  // namespace detail

/// Audit several partitions over one corpus, sharing each group's lattice
/// across partitions. Group-level parallelism only; verdict order follows the
/// corpus regardless of the job count.
inline std::vector<AuditReport> audit_theorem_multi(
    const std::vector<FiniteGroup>& corpus, const std::vector<SigmaPartition>& sigmas,
    const CorpusDescriptor& descriptor, AuditOptions opts = {}) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::vector<TheoremVerdict>> verdicts(
      sigmas.size(), std::vector<TheoremVerdict>(corpus.size()));

  auto analyze_one = [&](std::size_t gi) {
    auto g0 = std::chrono::steady_clock::now();
    GroupContext ctx(corpus[gi], opts.lattice_cap);
    for (std::size_t si = 0; si < sigmas.size(); ++si) {
      auto s0 = std::chrono::steady_clock::now();
      verdicts[si][gi] = analyze_group(ctx, sigmas[si]);
      auto s1 = std::chrono::steady_clock::now();
      verdicts[si][gi].timing_ms =
          std::chrono::duration<double, std::milli>(s1 - s0).count();
    }
    (void)g0;
  };

  int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || corpus.size() < 2) {
    for (std::size_t gi = 0; gi < corpus.size(); ++gi) analyze_one(gi);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        while (true) {
          std::size_t gi = next.fetch_add(1);
          if (gi >= corpus.size()) return;
          analyze_one(gi);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  double total =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  std::vector<AuditReport> out;
  for (std::size_t si = 0; si < sigmas.size(); ++si) {
    AuditReport rep;
    rep.sigma_spec = sigmas[si].spec();
    rep.corpus = descriptor;
    rep.corpus.count = int(corpus.size());
    rep.jobs = jobs;
    rep.verdicts = std::move(verdicts[si]);
    rep.total_ms = total;
    detail::collect_violations(rep);
    out.push_back(std::move(rep));
  }
  return out;
}

inline AuditReport audit_theorem(const std::vector<FiniteGroup>& corpus,
                                 const SigmaPartition& sigma,
                                 CorpusDescriptor descriptor = {},
                                 AuditOptions opts = {}) {
  return audit_theorem_multi(corpus, {sigma}, descriptor, opts)[0];
}

inline Json audit_report_to_json(const AuditReport& rep, bool with_timing = true) {
  Json j;
  j["schema"] = 1;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["sigma"] = rep.sigma_spec;
  Json corpus;
  corpus["kind"] = rep.corpus.kind;
  corpus["max_order"] = rep.corpus.max_order;
  corpus["skip_orders"] = rep.corpus.skip_orders;
  corpus["count"] = rep.corpus.count;
  j["corpus"] = std::move(corpus);
  j["jobs"] = rep.jobs;
  Json groups = Json::array();
  for (const TheoremVerdict& v : rep.verdicts)
    groups.push_back(verdict_to_json(v, with_timing));
  j["groups"] = std::move(groups);
  Json viols = Json::array();
  for (const Violation& v : rep.violations) {
    Json jv;
    jv["group"] = v.group;
    jv["detail"] = v.detail;
    viols.push_back(std::move(jv));
  }
  j["violations"] = std::move(viols);
  j["violation_count"] = rep.violations.size();
  if (with_timing) j["timing_ms_total"] = rep.total_ms;
  return j;
}

}  // namespace tsigma
