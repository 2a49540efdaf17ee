#include "redusat/json_io.hpp"

#include <filesystem>
#include <fstream>

namespace redusat {

namespace {

json lits_json(const std::vector<Lit>& lits) {
  json a = json::array();
  for (Lit l : lits) a.push_back(l.to_dimacs());
  return a;
}

json clauses_json(const std::vector<Clause>& clauses) {
  json a = json::array();
  for (const Clause& c : clauses) a.push_back(c.to_dimacs());
  return a;
}

json range_json(const Range& r) { return json{{"lo", r.lo}, {"hi", r.hi}}; }

json gen_params_json(const GenParams& p) {
  return json{{"seed", p.seed},
              {"vars", range_json(p.n_vars)},
              {"clauses", range_json(p.n_clauses)},
              {"width", range_json(p.clause_width)},
              {"allow_tautologies", p.allow_tautologies},
              {"allow_empty_clause", p.allow_empty_clause}};
}

json enum_bounds_json(const std::array<int, 3>& b) {
  return json{{"n_vars", b[0]}, {"max_clauses", b[1]}, {"max_width", b[2]}};
}

}  // namespace

json closure_json(const ClosureResult& r, const Formula& f) {
  json stages = json::array();
  // The final stage merely repeats the fixpoint; drop it for output.
  for (std::size_t i = 0; i + 1 < r.stages.size(); ++i) {
    stages.push_back(lits_json(r.stages[i]));
  }
  json j;
  j["seed"] = r.seed.to_dimacs();
  j["stages"] = std::move(stages);
  j["closure"] = lits_json(r.closure);
  j["covered"] = clauses_json(r.covered(f));
  j["covered_count"] = r.covered_ids.count();
  j["redundant"] = f.occurrence(negate(r.seed)).subset_of(r.covered_ids);
  return j;
}

json solve_json(const SolveOutcome& s, bool include_trace) {
  json j;
  j["verdict"] = s.verdict == Verdict::yes ? "yes" : "no";
  j["assignment"] = lits_json(s.assignment);
  if (s.conflict) {
    j["conflict"] = json{{"literal", s.conflict->literal.to_dimacs()},
                         {"step", s.conflict->step_index}};
  } else {
    j["conflict"] = nullptr;
  }
  j["steps"] = s.trace.size();
  if (include_trace) {
    json steps = json::array();
    for (const ReductionStep& st : s.trace) {
      steps.push_back(json{{"chosen", st.chosen.to_dimacs()},
                           {"closure", lits_json(st.closure_literals)},
                           {"removed", clauses_json(st.removed)},
                           {"remaining_size", st.remaining_size}});
    }
    j["trace"] = std::move(steps);
  }
  j["residue"] = emit_dimacs(s.final_formula);
  return j;
}

json oracle_json(const OracleVerdict& v) {
  json j;
  j["sat"] = v.sat;
  j["method"] = v.method == OracleMethod::enumeration ? "enumeration" : "dpll";
  j["witness"] = v.witness ? lits_json(v.witness->lits()) : json(nullptr);
  j["decisions"] = v.decisions;
  return j;
}

json probe_json(const ProbeReport& r) {
  json claims = json::array();
  for (char c : r.claims_violated) claims.push_back(std::string(1, c));
  json j;
  j["pivot"] = r.pivot;
  j["input_reduced"] = r.input_reduced;
  j["n0"] = r.n0;
  j["n1"] = r.n1;
  j["g"] = emit_dimacs(r.g);
  j["g_reduced"] = r.g_reduced;
  j["g_oracle"] = r.g_oracle ? oracle_json(*r.g_oracle) : json(nullptr);
  j["claims_violated"] = std::move(claims);
  j["claim_d_checked"] = r.claim_d_checked;
  j["resolvent_collisions"] = r.resolvent_collisions;
  j["skip_reason"] = r.skip_reason ? json(*r.skip_reason) : json(nullptr);
  return j;
}

json finding_json(const Finding& fd) {
  json j;
  j["index"] = fd.index;
  j["kind"] = kind_name(fd.kind);
  j["formula"] = emit_dimacs(fd.formula);
  j["solver"] = solve_json(fd.solver, true);
  j["oracle"] = oracle_json(fd.oracle);
  j["shrunk"] = fd.shrunk ? json(emit_dimacs(*fd.shrunk)) : json(nullptr);
  j["revalidated"] = fd.revalidated;
  return j;
}

json campaign_json(const CampaignReport& rep) {
  json j;
  j["campaign"] = rep.mode;
  j["params"] = rep.mode == "fuzz" ? gen_params_json(rep.gen) : enum_bounds_json(rep.enum_bounds);
  j["instances"] = rep.instances;
  j["totals"] = json{{"agreement", rep.totals.agreement},
                     {"false_yes", rep.totals.false_yes},
                     {"false_no", rep.totals.false_no},
                     {"unsound_witness", rep.totals.unsound_witness},
                     {"assignment_conflict", rep.totals.assignment_conflict},
                     {"lemma2_violation", rep.totals.lemma2_violation},
                     {"inconclusive", rep.totals.inconclusive}};
  json findings = json::array();
  for (const Finding& fd : rep.findings) findings.push_back(finding_json(fd));
  j["findings"] = std::move(findings);
  json inconclusive = json::array();
  for (const Inconclusive& inc : rep.inconclusive) {
    inconclusive.push_back(json{{"index", inc.index}, {"reason", inc.reason}});
  }
  j["inconclusive"] = std::move(inconclusive);
  return j;
}

namespace {

json probe_finding_json(const ProbeFinding& fd) {
  json claims = json::array();
  for (char c : fd.claims) claims.push_back(std::string(1, c));
  json j;
  j["index"] = fd.index;
  j["pivot"] = fd.pivot;
  j["kind"] = kind_name(fd.kind);
  j["claims"] = std::move(claims);
  j["formula"] = emit_dimacs(fd.formula);
  j["g"] = fd.kind == FindingKind::probe_violation ? json(emit_dimacs(fd.g)) : json(nullptr);
  j["shrunk"] = fd.shrunk ? json(emit_dimacs(*fd.shrunk)) : json(nullptr);
  j["revalidated"] = fd.revalidated;
  return j;
}

}  // namespace

json probe_campaign_json(const ProbeCampaignReport& rep) {
  json j;
  j["campaign"] = "probe";
  j["params"] = enum_bounds_json(rep.enum_bounds);
  j["instances"] = rep.instances;
  j["probes"] = rep.probes;
  j["skipped"] = rep.skipped;
  j["violations"] = json{{"A", rep.violations_a},
                         {"B", rep.violations_b},
                         {"C", rep.violations_c},
                         {"D", rep.violations_d}};
  j["reduced_satisfiable"] = rep.reduced_satisfiable;
  j["resolvent_collisions"] = rep.resolvent_collisions;
  json findings = json::array();
  for (const ProbeFinding& fd : rep.findings) findings.push_back(probe_finding_json(fd));
  j["findings"] = std::move(findings);
  return j;
}

json bench_json(const BenchReport& rep) {
  json points = json::array();
  for (const BenchPoint& pt : rep.points) {
    points.push_back(json{{"target_size", pt.target_size},
                          {"median_size", pt.median_size},
                          {"median_ms", pt.median_ms},
                          {"reps", pt.reps}});
  }
  json j;
  j["points"] = std::move(points);
  j["fitted_slope"] = rep.fitted_slope;
  j["reference_exponent"] = rep.reference_exponent;
  return j;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

namespace {

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  out << body;
}

}  // namespace

std::size_t write_campaign_bundles(const std::string& dir, const CampaignReport& rep) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);
  for (const Finding& fd : rep.findings) {
    const std::string stem = "finding_" + std::to_string(fd.index);
    const Formula& cnf = fd.shrunk ? *fd.shrunk : fd.formula;
    write_file(base / (stem + ".cnf"), emit_dimacs(cnf));
    json j;
    j["campaign"] = rep.mode;
    j["params"] =
        rep.mode == "fuzz" ? gen_params_json(rep.gen) : enum_bounds_json(rep.enum_bounds);
    j["finding"] = finding_json(fd);
    write_file(base / (stem + ".json"), dump_json(j));
  }
  return rep.findings.size();
}

std::size_t write_probe_bundles(const std::string& dir, const ProbeCampaignReport& rep) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);
  for (const ProbeFinding& fd : rep.findings) {
    const std::string stem = "probe_" + std::to_string(fd.index) + "_" +
                             std::to_string(fd.pivot) + "_" + kind_name(fd.kind);
    const Formula& cnf = fd.shrunk ? *fd.shrunk : fd.formula;
    write_file(base / (stem + ".cnf"), emit_dimacs(cnf));
    json j;
    j["campaign"] = "probe";
    j["params"] = enum_bounds_json(rep.enum_bounds);
    j["finding"] = probe_finding_json(fd);
    write_file(base / (stem + ".json"), dump_json(j));
  }
  return rep.findings.size();
}

}  // namespace redusat
