// Acceptance suite: runs every top-level criterion end to end and prints one
// pass/fail line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "tsigma/audit.hpp"
#include "tsigma/corpus.hpp"
#include "tsigma/families.hpp"
#include "tsigma/lemmas.hpp"
#include "tsigma/products.hpp"
#include "tsigma/theorem.hpp"

using namespace tsigma;

namespace {

const std::vector<std::string> kSigmaSpecs{"minimal", "2,3|5|*", "2|3,5|*"};

struct Criterion {
  std::string id;
  std::string summary;
  std::function<bool(std::string&)> run;
};

bool c1_paper_example(std::string& note) {
  auto t0 = std::chrono::steady_clock::now();

  FiniteGroup g = build_family("prod(sym:3,cyclic:5)");
  GroupContext ctx(g);
  SigmaPartition sigma = parse_sigma("2,3|5|*");

  bool ok = true;
  if (!ctx.classical_t_group()) {
    note += "expected a classical T-group; ";
    ok = false;
  }
  SigmaAnalysis analysis(ctx, sigma);
  auto ts = analysis.t_sigma();
  if (ts.holds) {
    note += "expected T_sigma to fail; ";
    ok = false;
  }
  IndexSet s3_factor = embedded_left_factor(g, 3);
  if (!ts.counterexample || ts.counterexample->order != 2 ||
      !ts.counterexample->members.subset_of(s3_factor)) {
    note += "counterexample is not the C2 factor; ";
    ok = false;
  }
  if (!ts.counterexample_witness) {
    note += "missing witness; ";
    ok = false;
  } else {
    const SigmaWitness& w = *ts.counterexample_witness;
    bool chain_ok = w.chain.size() == 3 && w.chain[0].order == 2 &&
                    w.chain[1].order == 6 && w.chain[1].members == s3_factor &&
                    w.chain[2].order == 30;
    if (!chain_ok) {
      note += "witness chain is not C2 <= S3 <= G; ";
      ok = false;
    }
  }

  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  if (ms >= 1000.0) {
    note += "runtime " + std::to_string(ms) + " ms >= 1000 ms; ";
    ok = false;
  }
  return ok;
}

bool c2_theorem_audit(std::string& note) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<FiniteGroup> corpus = corpus_builtin(60);
  std::vector<SigmaPartition> sigmas;
  for (const std::string& s : kSigmaSpecs) sigmas.push_back(parse_sigma(s));
  CorpusDescriptor d;
  d.max_order = 60;
  AuditOptions opts;
  opts.jobs = 4;
  auto reports = audit_theorem_multi(corpus, sigmas, d, opts);

  bool ok = true;
  long soluble = 0;
  for (const AuditReport& rep : reports) {
    for (const TheoremVerdict& v : rep.verdicts)
      if (v.sigma_soluble) ++soluble;
    if (!rep.violations.empty()) {
      note += rep.sigma_spec + ": " + std::to_string(rep.violations.size()) +
              " violation(s) (first: " + rep.violations[0].group + "); ";
      ok = false;
    }
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  if (ms >= 300000.0) {
    note += "runtime " + std::to_string(ms) + " ms >= 5 min; ";
    ok = false;
  }
  note += std::to_string(corpus.size()) + " groups x " +
          std::to_string(sigmas.size()) + " partitions, " +
          std::to_string(soluble) + " sigma-soluble verdicts";
  return ok;
}

bool c3_minimal_partition_regressions(std::string& note) {
  std::vector<FiniteGroup> corpus = corpus_builtin(60);
  SigmaPartition minimal = parse_sigma("minimal");
  long mismatches = 0;
  std::string first;
  for (const FiniteGroup& g : corpus) {
    GroupContext ctx(g);
    bool classical_t = ctx.classical_t_group();  // normal-closure series route
    bool t_sigma = is_t_sigma(ctx, minimal).first;
    if (t_sigma != classical_t) {
      ++mismatches;
      if (first.empty()) first = g.name + " (t_sigma vs classical)";
    }
    if (is_soluble(g)) {
      if (robinson_check(ctx) != classical_t) {
        ++mismatches;
        if (first.empty()) first = g.name + " (robinson)";
      }
      if (gaschutz_check(g, ctx.lattice()) != classical_t) {
        ++mismatches;
        if (first.empty()) first = g.name + " (gaschutz)";
      }
    }
  }
  note += std::to_string(corpus.size()) + " groups";
  if (mismatches) note += "; " + std::to_string(mismatches) + " mismatches, first: " + first;
  return mismatches == 0;
}

bool c4_lemma_suites(std::string& note) {
  std::vector<FiniteGroup> corpus = corpus_builtin(48);
  long checks = 0, failures = 0;
  std::string first;
  for (const std::string& s : kSigmaSpecs) {
    LemmaSuiteReport rep = run_lemma_suites(corpus, parse_sigma(s));
    checks += rep.total_checks();
    failures += rep.total_failures();
    if (first.empty())
      for (const LemmaCheck& l : rep.lemmas)
        if (!l.ok() && !l.failures.empty()) first = l.id + ": " + l.failures[0];
  }
  note += std::to_string(checks) + " checks";
  if (failures) note += "; " + std::to_string(failures) + " failures, first: " + first;
  return failures == 0;
}

bool c5_oracle_equivalences(std::string& note) {
  long disagreements = 0;
  std::string first;
  auto mark = [&](const std::string& what) {
    ++disagreements;
    if (first.empty()) first = what;
  };

  // (a) lattice reachability vs naive chain enumeration, order <= 24
  {
    std::vector<FiniteGroup> corpus = corpus_builtin(24);
    for (const std::string& s : kSigmaSpecs) {
      SigmaPartition sigma = parse_sigma(s);
      for (const FiniteGroup& g : corpus) {
        GroupContext ctx(g);
        SigmaAnalysis analysis(ctx, sigma);
        for (int i = 0; i < ctx.sub_count(); ++i) {
          bool naive = oracles::chains_reach(g, ctx.lattice().subgroups,
                                             ctx.sub(i).members, sigma, 4);
          if (naive != analysis.is_sigma_subnormal(i))
            mark("(a) " + g.name + " sigma " + s);
        }
      }
    }
  }

  // (b) normal-Hall criterion vs decomposition search, order <= 48
  {
    std::vector<FiniteGroup> corpus = corpus_builtin(48);
    for (const std::string& s : kSigmaSpecs) {
      SigmaPartition sigma = parse_sigma(s);
      for (const FiniteGroup& g : corpus) {
        Lattice lat = all_subgroups(g);
        if (is_sigma_nilpotent(g, sigma) !=
            oracles::sigma_nilpotent_by_decomposition(g, lat, sigma))
          mark("(b) " + g.name + " sigma " + s);
      }
    }
  }

  // (c) lattice enumeration vs small-seed closure oracle, order <= 24
  {
    std::vector<FiniteGroup> corpus = corpus_builtin(24);
    for (const FiniteGroup& g : corpus) {
      Lattice lat = all_subgroups(g);
      auto oracle = oracles::subgroups_by_small_seeds(g);
      std::set<std::vector<int>> a, b;
      for (const Subgroup& h : lat.subgroups) a.insert(h.members.members());
      for (const IndexSet& sset : oracle) b.insert(sset.members());
      if (a != b) mark("(c) " + g.name);
    }
  }

  // (d) nilpotent residual: lower central series vs intersection of normals,
  //     order <= 100 (the corpus tops out at 60)
  {
    std::vector<FiniteGroup> corpus = corpus_builtin(60);
    for (const FiniteGroup& g : corpus) {
      GroupContext ctx(g);
      if (nilpotent_residual(g).members !=
          oracles::nilpotent_residual_by_intersection(g, ctx))
        mark("(d) " + g.name);
    }
  }

  if (disagreements)
    note += std::to_string(disagreements) + " disagreements, first: " + first;
  return disagreements == 0;
}

bool c6_proof_claim_invariants(std::string& note) {
  std::vector<FiniteGroup> corpus = corpus_builtin(60);
  long failures = 0, covered = 0;
  std::string first;
  auto mark = [&](const std::string& what) {
    ++failures;
    if (first.empty()) first = what;
  };
  for (const std::string& s : kSigmaSpecs) {
    SigmaPartition sigma = parse_sigma(s);
    for (const FiniteGroup& g : corpus) {
      GroupContext ctx(g);
      if (!is_sigma_soluble_factors(ctx.chief_factor_orders(), sigma)) continue;
      bool r_all = true;
      for (int b : sigma_of(g, sigma))
        if (!satisfies_r_sigma(ctx, b, sigma).holds) r_all = false;
      if (!r_all) continue;
      ++covered;

      SigmaAnalysis analysis(ctx, sigma);
      const Subgroup& d = analysis.residual();
      if (!is_abelian_members(g, d.members)) mark(g.name + " residual not abelian");
      if (d.order % 2 == 0) mark(g.name + " residual has even order");
      if (std::gcd(d.order, g.order() / d.order) != 1)
        mark(g.name + " residual not a Hall subgroup");
      if (!is_soluble(g)) mark(g.name + " not soluble");
      for (int b : sigma_of(g, sigma)) {
        int hall_order =
            part_for_primes(g.order(), sigma.block_primes_of(b, g.order()));
        for (int i = 0; i < ctx.sub_count(); ++i) {
          if (ctx.sub(i).order != hall_order) continue;
          if (!is_dedekind_members(g, ctx.lattice(), ctx.sub(i).members,
                                   ctx.lattice().generators[i]))
            mark(g.name + " Hall " + sigma.block_label(b) + "-subgroup not Dedekind");
        }
      }
    }
  }
  note += std::to_string(covered) + " (group, sigma) pairs in scope";
  if (failures) note += "; " + std::to_string(failures) + " failures, first: " + first;
  return failures == 0;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"C1", "paper example: S3 x C5 under 2,3|5|* (T-group, not T_sigma, C2 witness, < 1 s)",
       c1_paper_example},
      {"C2", "equivalence audit over corpus(60) x 3 partitions, zero violations, < 5 min",
       c2_theorem_audit},
      {"C3", "minimal-partition regressions: T_sigma = classical T; robinson/gaschutz match on soluble groups",
       c3_minimal_partition_regressions},
      {"C4", "lemma property suites on corpus(48) for all three partitions",
       c4_lemma_suites},
      {"C5", "oracle equivalences: chains, decomposition, small-seed lattice, residual",
       c5_oracle_equivalences},
      {"C6", "proof-claim invariants: abelian odd Hall residual, Dedekind Hall block-subgroups",
       c6_proof_claim_invariants},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    std::printf("[%s] %s (%.0f ms): %s%s%s\n", ok ? "PASS" : "FAIL", c.id.c_str(),
                ms, c.summary.c_str(), note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
