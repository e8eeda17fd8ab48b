#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsigma/audit.hpp"
#include "tsigma/corpus.hpp"
#include "tsigma/families.hpp"
#include "tsigma/group_io.hpp"
#include "tsigma/lemmas.hpp"
#include "tsigma/report.hpp"
#include "tsigma/sigma_subnormal.hpp"
#include "tsigma/version.hpp"

namespace tsigma {

namespace cli_detail {

inline FiniteGroup load_group(const std::string& spec, int cap) {
  if (std::filesystem::exists(spec)) return ingest_group_file(spec, cap);
  return build_family(spec, cap);
}

inline void write_json(const Json& j, const std::string& path, std::ostream& out) {
  if (path == "-") {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error("cannot write to \"" + path + "\"");
  f << j.dump(2) << "\n";
}

/// --subgroup accepts a comma list of element indices ("0,5") or JSON image
/// lists ("[1,0,2]" or "[[1,0,2],[0,2,1]]").
inline IndexSet parse_subgroup_seed(const FiniteGroup& g, const std::string& text) {
  IndexSet seed(g.order());
  if (text.find('[') != std::string::npos) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("--subgroup: ") + e.what());
    }
    std::vector<nlohmann::json> rows;
    if (doc.is_array() && !doc.empty() && doc[0].is_array())
      rows.assign(doc.begin(), doc.end());
    else
      rows.push_back(doc);
    for (const auto& row : rows) {
      Perm p;
      for (const auto& v : row) p.images.push_back(std::uint16_t(v.get<int>()));
      if (p.degree() != g.degree || !p.is_valid())
        throw ValidationError("--subgroup: image list is not a permutation of " +
                              std::to_string(g.degree) + " points");
      int idx = g.element_index(p);
      if (idx < 0)
        throw ValidationError("--subgroup: permutation " + cycle_string(p) +
                              " is not an element of " + g.name);
      seed.set(idx);
    }
    return seed;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (tok.empty()) throw ParseError("--subgroup: empty element index");
    int idx = std::stoi(tok);
    if (idx < 0 || idx >= g.order())
      throw ValidationError("--subgroup: element index " + tok + " out of range for " +
                            g.name + " (order " + std::to_string(g.order()) + ")");
    seed.set(idx);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return seed;
}

inline void print_witness(std::ostream& out, const SigmaWitness& w) {
  for (std::size_t i = 0; i < w.chain.size(); ++i) {
    const Subgroup& s = w.chain[i];
    out << "  [" << i << "] order " << s.order << ", members {";
    bool first = true;
    s.members.for_each([&](int x) {
      if (!first) out << ", ";
      out << x;
      first = false;
    });
    out << "}";
    if (i + 1 < w.chain.size()) {
      const WitnessStep& st = w.steps[i];
      out << "\n      step: "
          << (st.normal ? "normal in the next term"
                        : "sigma-primary factor " + std::to_string(st.factor) +
                              " in block " + st.block);
    }
    out << "\n";
  }
}

inline void print_verdict(std::ostream& out, const TheoremVerdict& v) {
  out << "group " << v.group_name << " (order " << v.group_order << ", degree "
      << v.group_degree << "), sigma = " << v.sigma_spec << "\n";
  out << "  sigma-soluble:        " << (v.sigma_soluble ? "yes" : "no") << "\n";
  out << "  classical T-group:    " << (v.classical_t ? "yes" : "no") << "\n";
  out << "  (1) T_sigma:          " << (v.s1_t_sigma ? "yes" : "no") << "\n";
  out << "  (2) R on all blocks:  " << (v.s2_r_all ? "yes" : "no") << "\n";
  out << "  (3) structure:        " << (v.s3_structure ? "yes" : "no") << "\n";
  out << "  residual order:       " << v.residual_order << "\n";
  if (!v.s1_t_sigma && v.s1_detail.counterexample) {
    out << "  sigma-subnormal non-normal subgroup of order "
        << v.s1_detail.counterexample->order << ", witness chain:\n";
    if (v.s1_detail.counterexample_witness)
      print_witness(out, *v.s1_detail.counterexample_witness);
  }
  for (const auto& [label, r] : v.s2_blocks) {
    out << "  R " << label << ": " << (r.holds ? "holds" : "fails");
    if (!r.holds && r.failure) {
      out << " (pi = {";
      for (std::size_t i = 0; i < r.failure->pi.size(); ++i)
        out << (i ? "," : "") << r.failure->pi[i];
      out << "}, Hall subgroup of order " << r.failure->hall.order
          << ", offender of order " << r.failure->offender.order
          << " not normal in its normalizer of order "
          << r.failure->hall_normalizer.order << ")";
    }
    out << "\n";
  }
  out << "  structure detail: (i) " << (v.s3_detail.i ? "yes" : "no") << "  (ii) "
      << (v.s3_detail.ii ? "yes" : "no") << "  (iii) "
      << (v.s3_detail.iii ? "yes" : "no") << "\n";
}

}  // namespace cli_detail

inline int cli_main(std::vector<std::string> args, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  CLI::App app{"finite group engine for sigma-subnormality analysis"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  int group_cap = kDefaultGroupCap;
  int lattice_cap = kDefaultLatticeCap;
  app.add_option("--group-cap", group_cap, "order cap for group construction");
  app.add_option("--lattice-cap", lattice_cap, "order cap for lattice enumeration");

  auto* analyze = app.add_subcommand("analyze", "full verdict for one group");
  std::string an_group, an_sigma, an_json;
  analyze->add_option("--group", an_group, "group file or family spec")->required();
  analyze->add_option("--sigma", an_sigma, "sigma partition spec")->required();
  analyze->add_option("--json", an_json, "write the verdict as JSON ('-' = stdout)");

  auto* audit = app.add_subcommand("audit", "audit the equivalence over a corpus");
  int au_max = 30, au_jobs = 1;
  std::vector<std::string> au_sigmas;
  std::vector<int> au_skip;
  std::string au_json;
  audit->add_option("--max-order", au_max, "corpus order bound")->required();
  audit->add_option("--sigma", au_sigmas, "sigma spec (repeatable)")->required();
  audit->add_option("--jobs", au_jobs, "worker threads");
  audit->add_option("--skip-order", au_skip, "exclude groups of this order (repeatable)");
  audit->add_option("--json", au_json, "write the report(s) as JSON ('-' = stdout)");

  auto* witness = app.add_subcommand("witness", "sigma-subnormality of one subgroup");
  std::string wi_group, wi_sigma, wi_sub, wi_json;
  witness->add_option("--group", wi_group, "group file or family spec")->required();
  witness->add_option("--sigma", wi_sigma, "sigma partition spec")->required();
  witness->add_option("--subgroup", wi_sub,
                      "element indices (comma list) or generator image lists")
      ->required();
  witness->add_option("--json", wi_json, "write the verdict as JSON ('-' = stdout)");

  auto* lemmas = app.add_subcommand("lemmas", "run the supporting property suites");
  int le_max = 30;
  std::string le_sigma, le_json;
  lemmas->add_option("--max-order", le_max, "corpus order bound")->required();
  lemmas->add_option("--sigma", le_sigma, "sigma partition spec")->required();
  lemmas->add_option("--json", le_json, "write the report as JSON ('-' = stdout)");

  std::vector<const char*> argv;
  argv.push_back(kToolName);
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*analyze) {
      FiniteGroup g = cli_detail::load_group(an_group, group_cap);
      SigmaPartition sigma = parse_sigma(an_sigma);
      GroupContext ctx(g, lattice_cap);
      TheoremVerdict v = analyze_group(ctx, sigma);
      cli_detail::print_verdict(out, v);
      if (!an_json.empty()) cli_detail::write_json(verdict_to_json(v), an_json, out);
      return v.equivalence_ok ? 0 : 1;
    }

    if (*audit) {
      std::vector<SigmaPartition> sigmas;
      for (const std::string& s : au_sigmas) sigmas.push_back(parse_sigma(s));
      std::vector<FiniteGroup> corpus = corpus_builtin(au_max, group_cap);
      if (!au_skip.empty()) {
        std::vector<FiniteGroup> kept;
        for (FiniteGroup& g : corpus) {
          bool skip = false;
          for (int o : au_skip)
            if (g.order() == o) skip = true;
          if (!skip) kept.push_back(std::move(g));
        }
        corpus = std::move(kept);
      }
      CorpusDescriptor descr;
      descr.kind = "builtin";
      descr.max_order = au_max;
      descr.skip_orders = au_skip;
      AuditOptions opts;
      opts.jobs = au_jobs;
      opts.lattice_cap = lattice_cap;
      std::vector<AuditReport> reports =
          audit_theorem_multi(corpus, sigmas, descr, opts);

      bool any_violation = false;
      Json all = Json::array();
      for (const AuditReport& rep : reports) {
        any_violation = any_violation || !rep.violations.empty();
        int soluble = 0;
        for (const TheoremVerdict& v : rep.verdicts)
          if (v.sigma_soluble) ++soluble;
        out << "sigma = " << rep.sigma_spec << ": " << rep.verdicts.size()
            << " groups, " << soluble << " sigma-soluble, " << rep.violations.size()
            << " violation(s)\n";
        for (const Violation& v : rep.violations)
          out << "  VIOLATION " << v.group << ": " << v.detail << "\n";
        all.push_back(audit_report_to_json(rep));
      }
      if (!au_json.empty())
        cli_detail::write_json(all.size() == 1 ? all[0] : all, au_json, out);
      return any_violation ? 1 : 0;
    }

    if (*witness) {
      FiniteGroup g = cli_detail::load_group(wi_group, group_cap);
      SigmaPartition sigma = parse_sigma(wi_sigma);
      IndexSet seed = cli_detail::parse_subgroup_seed(g, wi_sub);
      Subgroup h = generated_subgroup(g, seed);
      GroupContext ctx(g, lattice_cap);
      auto [ok, w] = is_sigma_subnormal(ctx, h, sigma);
      out << "group " << g.name << " (order " << g.order() << "), sigma = "
          << sigma.spec() << "\n";
      out << "subgroup of order " << h.order << ": "
          << (ok ? "sigma-subnormal" : "NOT sigma-subnormal") << "\n";
      if (w) cli_detail::print_witness(out, *w);
      if (!wi_json.empty()) {
        Json j;
        j["schema"] = 1;
        j["group"] = g.name;
        j["sigma"] = sigma.spec();
        j["subgroup"] = subgroup_to_json(h);
        j["sigma_subnormal"] = ok;
        if (w) j["witness"] = witness_to_json(*w);
        cli_detail::write_json(j, wi_json, out);
      }
      return 0;
    }

    if (*lemmas) {
      SigmaPartition sigma = parse_sigma(le_sigma);
      std::vector<FiniteGroup> corpus = corpus_builtin(le_max, group_cap);
      LemmaSuiteReport rep = run_lemma_suites(corpus, sigma, lattice_cap);
      for (const LemmaCheck& l : rep.lemmas) {
        out << (l.ok() ? "[pass] " : "[FAIL] ") << l.id << ": " << l.checks
            << " checks";
        if (!l.ok()) out << ", " << l.failure_count << " failures";
        out << "\n";
        for (const std::string& f : l.failures) out << "    " << f << "\n";
      }
      if (!le_json.empty())
        cli_detail::write_json(lemma_report_to_json(rep), le_json, out);
      return rep.all_passed() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

inline int cli_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return cli_main(std::move(args));
}

}  // namespace tsigma
