#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "redusat/bench.hpp"
#include "redusat/closure.hpp"
#include "redusat/cnf.hpp"
#include "redusat/errors.hpp"
#include "redusat/harness.hpp"
#include "redusat/json_io.hpp"
#include "redusat/oracle.hpp"
#include "redusat/resolution.hpp"
#include "redusat/solver.hpp"

namespace {

using namespace redusat;

constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitClean = 0;
constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;

Formula load_formula(const std::string& path) {
  if (path == "-") return parse_dimacs(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open " + path);
  return parse_dimacs(in);
}

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return Range{v, v};
    }
    return Range{std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ParameterError("expected an integer or lo..hi range, got '" + text + "'");
  }
}

ScanOrder parse_order(const std::string& s) {
  return s == "reverse" ? ScanOrder::reverse : ScanOrder::forward;
}

OracleChoice parse_oracle(const std::string& s) {
  if (s == "enum") return OracleChoice::enumeration;
  if (s == "dpll") return OracleChoice::dpll;
  if (s == "both") return OracleChoice::both;
  return OracleChoice::auto_pick;
}

void print_verdict_lines(bool sat, const std::vector<Lit>& lits) {
  std::cout << (sat ? "s SATISFIABLE" : "s UNSATISFIABLE") << "\n";
  if (sat) {
    std::cout << "v";
    for (Lit l : lits) std::cout << " " << l.to_dimacs();
    std::cout << " 0\n";
  }
}

int cmd_solve(const std::string& path, const std::string& order, bool json_out, bool trace) {
  const Formula f = load_formula(path);
  const SolveOutcome out = solve(f, parse_order(order));
  if (json_out) {
    std::cout << dump_json(solve_json(out, trace));
  } else {
    if (trace) {
      for (std::size_t i = 0; i < out.trace.size(); ++i) {
        const ReductionStep& st = out.trace[i];
        std::cout << "c step " << i << ": chose " << st.chosen.to_dimacs() << ", removed "
                  << st.removed.size() << " clauses, size " << st.remaining_size << "\n";
      }
    }
    if (out.conflict) {
      std::cout << "c conflict: " << out.conflict->literal.to_dimacs()
                << " joined an assignment already containing its negation (step "
                << out.conflict->step_index << ")\n";
    }
    print_verdict_lines(out.satisfiable(), out.assignment);
  }
  return out.satisfiable() ? kExitSat : kExitUnsat;
}

int cmd_closure(const std::string& path, int literal, bool json_out) {
  const Formula f = load_formula(path);
  const ClosureResult r = closure(f, Lit::from_dimacs(literal));
  if (json_out) {
    std::cout << dump_json(closure_json(r, f));
    return kExitClean;
  }
  std::cout << "seed: " << r.seed.to_dimacs() << "\n";
  for (std::size_t i = 0; i + 1 < r.stages.size(); ++i) {
    std::cout << "stage " << i << ":";
    for (Lit l : r.stages[i]) std::cout << " " << l.to_dimacs();
    std::cout << "\n";
  }
  std::cout << "closure:";
  for (Lit l : r.closure) std::cout << " " << l.to_dimacs();
  std::cout << "\n";
  const auto covered = r.covered(f);
  std::cout << "covered (" << covered.size() << "):\n";
  for (const Clause& c : covered) std::cout << c.to_dimacs() << "\n";
  const bool red = f.occurrence(negate(r.seed)).subset_of(r.covered_ids);
  std::cout << "redundant: " << (red ? "yes" : "no") << "\n";
  return kExitClean;
}

int cmd_oracle(const std::string& path, const std::string& oracle, bool json_out,
               const OracleConfig& ocfg) {
  const Formula f = load_formula(path);
  OracleVerdict v;
  try {
    switch (parse_oracle(oracle)) {
      case OracleChoice::enumeration:
        v = brute_force(f, ocfg);
        break;
      case OracleChoice::dpll:
        v = dpll(f, ocfg);
        break;
      case OracleChoice::both: {
        v = brute_force(f, ocfg);
        const OracleVerdict w = dpll(f, ocfg);
        if (v.sat != w.sat) throw std::logic_error("oracle methods disagree");
        break;
      }
      case OracleChoice::auto_pick:
        v = f.variable_count() <= ocfg.brute_force_var_cap ? brute_force(f, ocfg) : dpll(f, ocfg);
        break;
    }
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (json_out) {
    std::cout << dump_json(oracle_json(v));
  } else {
    print_verdict_lines(v.sat, v.witness ? v.witness->lits() : std::vector<Lit>{});
  }
  return v.sat ? kExitSat : kExitUnsat;
}

void print_campaign_summary(const CampaignReport& rep) {
  std::cout << "c campaign " << rep.mode << " instances=" << rep.instances << "\n";
  std::cout << "c agreement " << rep.totals.agreement << "\n";
  std::cout << "c false_yes " << rep.totals.false_yes << "\n";
  std::cout << "c false_no " << rep.totals.false_no << "\n";
  std::cout << "c unsound_witness " << rep.totals.unsound_witness << "\n";
  std::cout << "c assignment_conflict " << rep.totals.assignment_conflict << "\n";
  std::cout << "c lemma2_violation " << rep.totals.lemma2_violation << "\n";
  std::cout << "c inconclusive " << rep.totals.inconclusive << "\n";
  std::cout << "c findings " << rep.findings.size() << "\n";
}

int finish_campaign(const CampaignReport& rep, bool json_out, const std::string& out_dir) {
  if (!out_dir.empty()) {
    write_campaign_bundles(out_dir, rep);
    std::ofstream report(std::filesystem::path(out_dir) / "report.json", std::ios::binary);
    report << dump_json(campaign_json(rep));
  }
  if (json_out) {
    std::cout << dump_json(campaign_json(rep));
  } else {
    print_campaign_summary(rep);
    if (!rep.findings.empty() && out_dir.empty()) {
      std::cout << "c rerun with --json or --out DIR for the full findings\n";
    }
  }
  return rep.findings.empty() ? kExitClean : kExitFindings;
}

int cmd_probe_file(const std::string& path, bool json_out, const ProbeConfig& pcfg) {
  const Formula f = load_formula(path);
  const std::vector<ProbeReport> reps = probe_all_vars(f, pcfg);
  bool violated = false;
  if (json_out) {
    json arr = json::array();
    for (const ProbeReport& r : reps) arr.push_back(probe_json(r));
    std::cout << dump_json(arr);
  }
  for (const ProbeReport& r : reps) {
    if (!r.claims_violated.empty()) violated = true;
    if (json_out) continue;
    std::cout << "c pivot " << r.pivot << ": reduced=" << (r.input_reduced ? "yes" : "no")
              << " n0=" << r.n0 << " n1=" << r.n1
              << " g_reduced=" << (r.g_reduced ? "yes" : "no") << " claims=";
    if (r.claims_violated.empty()) {
      std::cout << "-";
    } else {
      for (char c : r.claims_violated) std::cout << c;
    }
    std::cout << "\n";
  }
  return violated ? kExitFindings : kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closure-based clause reduction, trusted oracles, and a differential harness"};
  app.require_subcommand(1);

  std::string path;
  std::string order = "forward";
  std::string oracle = "auto";
  std::string out_dir;
  std::string vars_range = "1..8", clauses_range = "0..16", width_range = "1..3";
  bool json_out = false, trace = false, no_shrink = false;
  bool allow_taut = false, allow_empty = false;
  int literal = 0;
  int enum_vars = 3, enum_clauses = 4, enum_width = 3;
  unsigned jobs = 1;
  std::uint64_t seed = 0, instances = 100;

  auto* solve_cmd = app.add_subcommand("solve", "run the reduction procedure on a DIMACS file");
  solve_cmd->add_option("file", path, "input path or - for stdin")->required();
  solve_cmd->add_flag("--json", json_out, "emit a JSON report");
  solve_cmd->add_flag("--trace", trace, "include the reduction trace");
  solve_cmd->add_option("--order", order, "literal scan order")
      ->check(CLI::IsMember({"forward", "reverse"}));

  auto* closure_cmd = app.add_subcommand("closure", "closure of one literal");
  closure_cmd->add_option("file", path)->required();
  closure_cmd->add_option("--literal", literal, "literal in DIMACS convention")->required();
  closure_cmd->add_flag("--json", json_out);

  auto* oracle_cmd = app.add_subcommand("oracle", "trusted satisfiability answer");
  oracle_cmd->add_option("file", path)->required();
  oracle_cmd->add_option("--oracle", oracle)->check(CLI::IsMember({"auto", "enum", "dpll", "both"}));
  oracle_cmd->add_flag("--json", json_out);

  auto* probe_cmd = app.add_subcommand("probe", "resolution preservation probes");
  probe_cmd->add_option("file", path, "probe one formula instead of an enumeration sweep");
  probe_cmd->add_option("--vars", enum_vars, "enumeration: number of variables");
  probe_cmd->add_option("--clauses", enum_clauses, "enumeration: maximum clause count");
  probe_cmd->add_option("--width", enum_width, "enumeration: maximum clause width");
  probe_cmd->add_option("--jobs", jobs);
  probe_cmd->add_flag("--json", json_out);
  probe_cmd->add_flag("--no-shrink", no_shrink);
  probe_cmd->add_option("--out", out_dir, "directory for counterexample bundles");

  auto* fuzz_cmd = app.add_subcommand("fuzz", "random differential campaign");
  fuzz_cmd->add_option("--seed", seed);
  fuzz_cmd->add_option("--instances", instances);
  fuzz_cmd->add_option("--vars", vars_range, "range lo..hi");
  fuzz_cmd->add_option("--clauses", clauses_range, "range lo..hi");
  fuzz_cmd->add_option("--width", width_range, "range lo..hi");
  fuzz_cmd->add_flag("--allow-tautologies", allow_taut);
  fuzz_cmd->add_flag("--allow-empty-clause", allow_empty);
  fuzz_cmd->add_option("--order", order)->check(CLI::IsMember({"forward", "reverse"}));
  fuzz_cmd->add_option("--oracle", oracle)->check(CLI::IsMember({"auto", "enum", "dpll", "both"}));
  fuzz_cmd->add_option("--jobs", jobs);
  fuzz_cmd->add_flag("--json", json_out);
  fuzz_cmd->add_flag("--no-shrink", no_shrink);
  fuzz_cmd->add_option("--out", out_dir);

  auto* enum_cmd = app.add_subcommand("enumerate", "exhaustive differential campaign");
  enum_cmd->add_option("--vars", enum_vars)->required();
  enum_cmd->add_option("--clauses", enum_clauses)->required();
  enum_cmd->add_option("--width", enum_width)->required();
  enum_cmd->add_option("--order", order)->check(CLI::IsMember({"forward", "reverse"}));
  enum_cmd->add_option("--oracle", oracle)->check(CLI::IsMember({"auto", "enum", "dpll", "both"}));
  enum_cmd->add_option("--jobs", jobs);
  enum_cmd->add_flag("--json", json_out);
  enum_cmd->add_flag("--no-shrink", no_shrink);
  enum_cmd->add_option("--out", out_dir);

  auto* shrink_cmd = app.add_subcommand("shrink", "minimise a disagreement-exhibiting formula");
  shrink_cmd->add_option("file", path)->required();
  shrink_cmd->add_option("--order", order)->check(CLI::IsMember({"forward", "reverse"}));
  shrink_cmd->add_option("--oracle", oracle)->check(CLI::IsMember({"auto", "enum", "dpll", "both"}));
  shrink_cmd->add_flag("--json", json_out);

  auto* bench_cmd = app.add_subcommand("bench", "wall-clock scaling of the reduction solver");
  bench_cmd->add_option("--seed", seed);
  int reps = 5;
  bench_cmd->add_option("--reps", reps);
  bench_cmd->add_flag("--json", json_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    HarnessConfig hcfg;
    hcfg.oracle = parse_oracle(oracle);
    hcfg.order = parse_order(order);
    hcfg.shrink_findings = !no_shrink;

    if (app.got_subcommand(solve_cmd)) return cmd_solve(path, order, json_out, trace);
    if (app.got_subcommand(closure_cmd)) return cmd_closure(path, literal, json_out);
    if (app.got_subcommand(oracle_cmd)) return cmd_oracle(path, oracle, json_out, hcfg.oracle_cfg);

    if (app.got_subcommand(probe_cmd)) {
      ProbeConfig pcfg;
      if (!path.empty()) return cmd_probe_file(path, json_out, pcfg);
      const ProbeCampaignReport rep =
          run_probe_campaign(enum_vars, enum_clauses, enum_width, pcfg, !no_shrink, jobs);
      if (!out_dir.empty()) {
        write_probe_bundles(out_dir, rep);
        std::ofstream report(std::filesystem::path(out_dir) / "report.json", std::ios::binary);
        report << dump_json(probe_campaign_json(rep));
      }
      if (json_out) {
        std::cout << dump_json(probe_campaign_json(rep));
      } else {
        std::cout << "c campaign probe instances=" << rep.instances << " probes=" << rep.probes
                  << " skipped=" << rep.skipped << "\n";
        std::cout << "c violations A=" << rep.violations_a << " B=" << rep.violations_b
                  << " C=" << rep.violations_c << " D=" << rep.violations_d << "\n";
        std::cout << "c reduced_satisfiable " << rep.reduced_satisfiable << "\n";
        std::cout << "c findings " << rep.findings.size() << "\n";
      }
      return rep.findings.empty() ? kExitClean : kExitFindings;
    }

    if (app.got_subcommand(fuzz_cmd)) {
      GenParams p;
      p.seed = seed;
      p.n_vars = parse_range(vars_range);
      p.n_clauses = parse_range(clauses_range);
      p.clause_width = parse_range(width_range);
      p.allow_tautologies = allow_taut;
      p.allow_empty_clause = allow_empty;
      return finish_campaign(run_fuzz_campaign(p, instances, hcfg, jobs), json_out, out_dir);
    }

    if (app.got_subcommand(enum_cmd)) {
      return finish_campaign(run_enumeration_campaign(enum_vars, enum_clauses, enum_width, hcfg, jobs),
                             json_out, out_dir);
    }

    if (app.got_subcommand(shrink_cmd)) {
      const Formula f = load_formula(path);
      const CheckResult r = differential_check(f, 0, hcfg);
      if (const auto* inc = std::get_if<Inconclusive>(&r)) {
        std::cerr << "error: oracle inconclusive: " << inc->reason << "\n";
        return kExitUsage;
      }
      const Finding& fd = std::get<Finding>(r);
      if (fd.kind == FindingKind::agreement) {
        std::cout << "c solver and oracle agree; nothing to shrink\n";
        return kExitClean;
      }
      if (json_out) {
        std::cout << dump_json(finding_json(fd));
      } else {
        std::cout << "c kind " << kind_name(fd.kind) << "\n";
        std::cout << emit_dimacs(fd.shrunk ? *fd.shrunk : fd.formula);
      }
      return kExitFindings;
    }

    if (app.got_subcommand(bench_cmd)) {
      BenchConfig bcfg;
      bcfg.seed = seed == 0 ? bcfg.seed : seed;
      bcfg.reps = reps;
      const BenchReport rep = run_bench(bcfg);
      if (json_out) {
        std::cout << dump_json(bench_json(rep));
      } else {
        for (const BenchPoint& pt : rep.points) {
          std::cout << "size " << pt.target_size << ": median " << pt.median_ms << " ms (n="
                    << pt.reps << ", realised size " << pt.median_size << ")\n";
        }
        std::cout << "fitted slope: " << rep.fitted_slope << " (reference exponent "
                  << rep.reference_exponent << ")\n";
      }
      return kExitClean;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFindings;
  }
  return kExitUsage;
}
