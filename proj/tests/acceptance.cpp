// Acceptance gate: each criterion prints exactly one PASS/FAIL line; the
// process exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "redusat/bench.hpp"
#include "redusat/closure.hpp"
#include "redusat/cnf.hpp"
#include "redusat/harness.hpp"
#include "redusat/json_io.hpp"
#include "redusat/oracle.hpp"
#include "redusat/resolution.hpp"
#include "redusat/solver.hpp"

using namespace redusat;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

unsigned worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return std::min(8u, std::max(1u, hw));
}

Formula worked_example() {
  return parse_dimacs(
      "p cnf 4 5\n1 -2 -3 0\n2 3 -4 0\n-3 4 0\n-1 -4 0\n4 0\n");
}

std::vector<Lit> lits(std::initializer_list<int> ds) {
  std::vector<Lit> out;
  for (int d : ds) out.push_back(Lit::from_dimacs(d));
  std::sort(out.begin(), out.end());
  return out;
}

#define EXPECT(cond)                                          \
  do {                                                        \
    if (!(cond)) {                                            \
      note = "expectation failed at line " +                  \
             std::to_string(__LINE__) + ": " #cond;           \
      return false;                                           \
    }                                                         \
  } while (0)

// --- criterion 1: golden values of the worked example, in under a millisecond

bool golden_pass(std::string& note) {
  const Formula f = worked_example();

  const ClosureResult r1 = closure(f, Lit::from_dimacs(1));
  EXPECT(r1.stages.size() == 4);
  EXPECT(r1.stages[0] == lits({1}));
  EXPECT(r1.stages[1] == lits({1, 2}));
  EXPECT(r1.stages[2] == lits({1, 2, -3}));
  EXPECT(r1.closure == lits({1, 2, -3}));
  EXPECT(r1.covered_ids.count() == 3);
  EXPECT(!is_redundant(f, Lit::from_dimacs(1)));

  const ClosureResult r2 = closure(f, Lit::from_dimacs(2));
  EXPECT(r2.closure == lits({-1, 2, -3, 4}));
  EXPECT(r2.covered_ids.count() == 5);

  EXPECT(closure(f, Lit::from_dimacs(4)).closure == lits({4}));

  const bool expected_redundant[] = {false, false, true, false, true, true, false, false};
  const int dimacs[] = {1, -1, 2, -2, 3, -3, 4, -4};
  for (int i = 0; i < 8; ++i)
    EXPECT(is_redundant(f, Lit::from_dimacs(dimacs[i])) == expected_redundant[i]);

  const auto fwd = find_redundant(f, ScanOrder::forward);
  EXPECT(fwd && fwd->first == Lit::from_dimacs(2));
  const auto rev = find_redundant(f, ScanOrder::reverse);
  EXPECT(rev && rev->first == Lit::from_dimacs(-3));

  const SolveOutcome out = solve(f);
  EXPECT(out.verdict == Verdict::yes);
  EXPECT(out.assignment == lits({-1, 2, -3, 4}));
  EXPECT(out.trace.size() == 1);
  EXPECT(check_assignment(f, Assignment(out.assignment)));

  return true;
}

bool criterion1(std::string& note) {
  if (!golden_pass(note)) return false;  // warm pass, uncounted
  const auto t0 = Clock::now();
  if (!golden_pass(note)) return false;
  const double ms = ms_since(t0);
  if (ms >= 1.0) {
    note = "took " + std::to_string(ms) + " ms, budget is 1 ms";
    return false;
  }
  std::ostringstream os;
  os << ms * 1000.0 << " us";
  note = os.str();
  return true;
}

// --- criterion 2: closure and reduction invariants over 10,000 random formulas

bool criterion2(std::string& note) {
  const auto t0 = Clock::now();
  GenParams p;
  p.seed = 20260814;
  p.n_vars = {1, 20};
  p.n_clauses = {0, 60};
  p.clause_width = {1, 5};
  p.allow_tautologies = true;

  const std::uint64_t n = 10000;
  for (std::uint64_t i = 0; i < n; ++i) {
    const Formula f = random_formula(p, i);
    for (Lit z : f.literals()) {
      const ClosureResult r = closure(f, z);
      EXPECT(r.stages.size() >= 2);
      EXPECT(r.stages[0] == std::vector<Lit>{z});
      for (std::size_t k = 1; k + 1 < r.stages.size(); ++k)
        EXPECT(r.stages[k].size() > r.stages[k - 1].size());
      EXPECT(r.stages[r.stages.size() - 1] == r.stages[r.stages.size() - 2]);
      EXPECT(r.closure == r.stages.back());
      EXPECT(std::find(r.closure.begin(), r.closure.end(), negate(z)) == r.closure.end());
      for (Lit u : r.closure)
        if (u != z) EXPECT(f.occurs(u));
      EXPECT(r.covered_ids == clauses_containing(f, r.closure));
      EXPECT(extension(f, r.closure, z).empty());
      EXPECT(is_redundant(f, z) == f.occurrence(negate(z)).subset_of(r.covered_ids));
    }

    const SolveOutcome out = solve(f);
    std::size_t prev = formula_size(f);
    for (const ReductionStep& st : out.trace) {
      EXPECT(st.remaining_size < prev);
      prev = st.remaining_size;
      for (const Clause& c : st.removed) {
        EXPECT(std::any_of(st.closure_literals.begin(), st.closure_literals.end(),
                           [&c](Lit l) { return c.contains(l); }));
      }
    }
    EXPECT((out.verdict == Verdict::yes) == !out.final_formula.has_clauses());
    EXPECT(!find_redundant(out.final_formula).has_value());
    EXPECT(!out.conflict.has_value());
    if (out.verdict == Verdict::yes) EXPECT(check_assignment(f, Assignment(out.assignment)));
  }

  const double ms = ms_since(t0);
  if (ms >= 60000.0) {
    note = "took " + std::to_string(ms / 1000.0) + " s, budget is 60 s";
    return false;
  }
  std::ostringstream os;
  os << n << " formulas in " << ms / 1000.0 << " s";
  note = os.str();
  return true;
}

// --- criterion 3: exhaustive differential sweep over 3 variables

FindingKind observed_kind(const Formula& f) {
  const SolveOutcome s = solve(f);
  const OracleVerdict o = brute_force(f);
  bool ok = false;
  if (!s.conflict) {
    try {
      ok = check_assignment(f, Assignment(s.assignment));
    } catch (const InvalidAssignmentError&) {
    }
  }
  return classify(s, o, ok);
}

bool finding_is_sound(const Finding& fd, std::string& note) {
  EXPECT(fd.kind != FindingKind::agreement);
  EXPECT(observed_kind(fd.formula) == fd.kind);
  EXPECT(fd.shrunk.has_value());
  EXPECT(fd.revalidated);
  const Formula& s = *fd.shrunk;
  EXPECT(observed_kind(s) == fd.kind);
  for (std::size_t i = 0; i < s.num_clauses(); ++i) {
    EXPECT(observed_kind(s.without_clause(i)) != fd.kind);
    for (std::size_t j = 0; j < s.clauses()[i].width(); ++j)
      EXPECT(observed_kind(s.with_literal_removed(i, j)) != fd.kind);
  }
  return true;
}

bool criterion3(std::string& note) {
  const auto t0 = Clock::now();
  const HarnessConfig cfg;
  const CampaignReport rep = run_enumeration_campaign(3, 4, 3, cfg, worker_count());

  EXPECT(rep.instances == SmallEnumeration(3, 4, 3).total_count());
  const auto& t = rep.totals;
  EXPECT(t.agreement + t.false_yes + t.false_no + t.unsound_witness + t.assignment_conflict +
             t.lemma2_violation + t.inconclusive ==
         rep.instances);
  EXPECT(t.inconclusive == 0);
  EXPECT(rep.findings.size() ==
         t.false_yes + t.false_no + t.unsound_witness + t.assignment_conflict +
             t.lemma2_violation);

  for (const Finding& fd : rep.findings)
    if (!finding_is_sound(fd, note)) return false;

  // rerunning reproduces the report byte for byte
  const CampaignReport again = run_enumeration_campaign(3, 4, 3, cfg, worker_count());
  EXPECT(dump_json(campaign_json(rep)) == dump_json(campaign_json(again)));

  std::ostringstream os;
  os << rep.instances << " instances, " << rep.findings.size()
     << " verified counterexamples, " << ms_since(t0) / 1000.0 << " s";
  note = os.str();
  return true;
}

// --- criterion 4: the two oracles agree everywhere they both answer

bool criterion4(std::string& note) {
  const auto t0 = Clock::now();
  std::uint64_t checked = 0;

  SmallEnumeration stream(3, 4, 3);
  while (auto f = stream.next()) {
    const OracleVerdict a = brute_force(*f);
    const OracleVerdict b = dpll(*f);
    EXPECT(a.sat == b.sat);
    if (a.sat) {
      EXPECT(check_assignment(*f, *a.witness));
      EXPECT(check_assignment(*f, *b.witness));
    }
    ++checked;
  }

  GenParams p;
  p.seed = 424242;
  p.n_vars = {1, 12};
  p.n_clauses = {0, 30};
  p.clause_width = {1, 4};
  p.allow_tautologies = true;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const Formula f = random_formula(p, i);
    const OracleVerdict a = brute_force(f);
    const OracleVerdict b = dpll(f);
    EXPECT(a.sat == b.sat);
    if (a.sat) {
      EXPECT(check_assignment(f, *a.witness));
      EXPECT(check_assignment(f, *b.witness));
    }
    ++checked;
  }

  std::ostringstream os;
  os << checked << " instances in " << ms_since(t0) / 1000.0 << " s";
  note = os.str();
  return true;
}

// --- criterion 5: resolution probes over the same exhaustive space

bool criterion5(std::string& note) {
  const auto t0 = Clock::now();
  const ProbeConfig pcfg;
  const ProbeCampaignReport rep = run_probe_campaign(3, 4, 3, pcfg, true, worker_count());

  EXPECT(rep.instances == SmallEnumeration(3, 4, 3).total_count());

  std::uint64_t direct_reduced_sat = 0;
  for (const ProbeFinding& fd : rep.findings) {
    EXPECT(fd.shrunk.has_value());
    EXPECT(fd.revalidated);
    if (fd.kind == FindingKind::lemma2_violation) {
      // the emitted formula really is reduced, nonempty and satisfiable
      EXPECT(fd.formula.has_clauses());
      EXPECT(!find_redundant(fd.formula).has_value());
      EXPECT(brute_force(fd.formula).sat);
      if (fd.pivot == 0) ++direct_reduced_sat;
    } else {
      EXPECT(fd.kind == FindingKind::probe_violation);
      EXPECT(!fd.claims.empty());
      const ProbeReport check = probe_reduced_preservation(fd.formula, fd.pivot, pcfg);
      EXPECT(check.claims_violated == fd.claims);
    }
  }

  // every reduced nonempty satisfiable instance found by the differential
  // sweep is also emitted here, and vice versa
  const CampaignReport diff = run_enumeration_campaign(3, 4, 3, HarnessConfig{}, worker_count());
  EXPECT(direct_reduced_sat == diff.totals.lemma2_violation);

  // totals reproduce run to run
  const ProbeCampaignReport again = run_probe_campaign(3, 4, 3, pcfg, true, worker_count());
  EXPECT(dump_json(probe_campaign_json(rep)) == dump_json(probe_campaign_json(again)));

  std::ostringstream os;
  os << rep.probes << " probes, claims A/B/C/D violated " << rep.violations_a << "/"
     << rep.violations_b << "/" << rep.violations_c << "/" << rep.violations_d << ", "
     << rep.reduced_satisfiable << " reduced-satisfiable formulas, "
     << ms_since(t0) / 1000.0 << " s";
  note = os.str();
  return true;
}

// --- criterion 6: the scaling benchmark finishes and reports a slope

bool criterion6(std::string& note) {
  const auto t0 = Clock::now();
  const BenchReport rep = run_bench(BenchConfig{});
  const double ms = ms_since(t0);

  EXPECT(rep.points.size() == 5);
  for (const BenchPoint& pt : rep.points) {
    EXPECT(pt.reps == 5);
    EXPECT(pt.median_ms >= 0.0);
    EXPECT(pt.median_size > 0);
  }
  EXPECT(std::isfinite(rep.fitted_slope));
  EXPECT(rep.reference_exponent == 4.0);
  if (ms >= 600000.0) {
    note = "took " + std::to_string(ms / 1000.0) + " s, budget is 600 s";
    return false;
  }

  std::ostringstream os;
  os << "slope " << rep.fitted_slope << " vs reference " << rep.reference_exponent << ", "
     << ms / 1000.0 << " s";
  note = os.str();
  return true;
}

// --- criterion 7: reports are byte-identical for 1 worker and 8 workers

bool criterion7(std::string& note) {
  const auto t0 = Clock::now();
  const HarnessConfig cfg;
  const std::string d1 = dump_json(campaign_json(run_enumeration_campaign(3, 4, 3, cfg, 1)));
  const std::string d8 = dump_json(campaign_json(run_enumeration_campaign(3, 4, 3, cfg, 8)));
  EXPECT(d1 == d8);

  const ProbeConfig pcfg;
  const std::string p1 = dump_json(probe_campaign_json(run_probe_campaign(3, 4, 3, pcfg, true, 1)));
  const std::string p8 = dump_json(probe_campaign_json(run_probe_campaign(3, 4, 3, pcfg, true, 8)));
  EXPECT(p1 == p8);

  std::ostringstream os;
  os << (d1.size() + p1.size()) << " report bytes compared, " << ms_since(t0) / 1000.0 << " s";
  note = os.str();
  return true;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* label;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Entry> criteria = {
      {1, "worked-example golden values (closure, redundancy, reduction)", criterion1},
      {2, "closure and reduction invariants on 10000 random formulas", criterion2},
      {3, "exhaustive differential sweep with verified, minimal findings", criterion3},
      {4, "enumeration and dpll oracles agree with checked witnesses", criterion4},
      {5, "resolution probes with verified violations and cross-checked totals", criterion5},
      {6, "scaling benchmark completes with a fitted slope", criterion6},
      {7, "reports byte-identical across worker counts", criterion7},
  };

  int failed = 0;
  for (const Entry& e : criteria) {
    std::string note;
    bool ok = false;
    try {
      ok = e.run(note);
    } catch (const std::exception& ex) {
      note = std::string("exception: ") + ex.what();
    }
    if (ok) {
      std::printf("PASS criterion %d: %s (%s)\n", e.id, e.label, note.c_str());
    } else {
      std::printf("FAIL criterion %d: %s (%s)\n", e.id, e.label, note.c_str());
      ++failed;
    }
    std::fflush(stdout);
  }
  std::printf("RESULT %zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
