#include "redusat/harness.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include "redusat/closure.hpp"
#include "redusat/errors.hpp"

namespace redusat {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Lemire-style rejection: discard the biased low region.
  const std::uint64_t threshold = -bound % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

void GenParams::validate() const {
  if (n_vars.lo < 1 || n_vars.lo > n_vars.hi) {
    throw ParameterError("vars range must satisfy 1 <= lo <= hi");
  }
  if (n_clauses.lo < 0 || n_clauses.lo > n_clauses.hi) {
    throw ParameterError("clauses range must satisfy 0 <= lo <= hi");
  }
  if (clause_width.lo < 0 || clause_width.lo > clause_width.hi) {
    throw ParameterError("width range must satisfy 0 <= lo <= hi");
  }
  if (!allow_empty_clause && clause_width.hi < 1) {
    throw ParameterError("width 0 requires allowing the empty clause");
  }
  const int pool = (allow_tautologies ? 2 : 1) * n_vars.hi;
  if (clause_width.lo > pool) {
    throw ParameterError("minimum width exceeds the largest literal pool");
  }
}

namespace {

std::uint64_t stream_state(std::uint64_t seed, std::uint64_t index) {
  return seed ^ (index * 0xa24baed4963ee407ull + 0x9fb21c651e98df25ull);
}

}  // namespace

Formula random_formula(const GenParams& p, std::uint64_t index) {
  p.validate();
  SplitMix64 rng(stream_state(p.seed, index));
  const int nv = rng.range(p.n_vars.lo, p.n_vars.hi);
  const int nc = rng.range(p.n_clauses.lo, p.n_clauses.hi);
  const int pool = (p.allow_tautologies ? 2 : 1) * nv;

  int w_hi = std::min(p.clause_width.hi, pool);
  int w_lo = std::min(p.clause_width.lo, w_hi);
  if (!p.allow_empty_clause) {
    w_lo = std::max(w_lo, 1);
    w_hi = std::max(w_hi, 1);
  }

  std::vector<Clause> clauses;
  clauses.reserve(nc);
  for (int c = 0; c < nc; ++c) {
    const int w = rng.range(w_lo, w_hi);
    std::vector<Lit> lits;
    lits.reserve(w);
    while (static_cast<int>(lits.size()) < w) {
      Lit l;
      if (p.allow_tautologies) {
        // Distinct literals only; the complement is allowed.
        const std::uint64_t code = 2 + rng.below(static_cast<std::uint64_t>(2 * nv));
        l = Lit(static_cast<int>(code >> 1), static_cast<int>(code & 1));
        if (std::find(lits.begin(), lits.end(), l) != lits.end()) continue;
      } else {
        const int var = 1 + static_cast<int>(rng.below(nv));
        l = Lit(var, static_cast<int>(rng.below(2)));
        const auto same_var = [var](Lit u) { return u.var() == var; };
        if (std::find_if(lits.begin(), lits.end(), same_var) != lits.end()) continue;
      }
      lits.push_back(l);
    }
    clauses.push_back(Clause(std::move(lits)));
  }
  return Formula(std::move(clauses));
}

namespace {

constexpr std::uint64_t kEnumerationCap = 50'000'000;

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (r > (std::uint64_t{2} * kEnumerationCap) / n) return std::uint64_t{2} * kEnumerationCap;
    r = r * (n - k + i) / i;
  }
  return r;
}

}  // namespace

SmallEnumeration::SmallEnumeration(int n_vars, int max_clauses, int max_width) {
  if (n_vars < 1 || n_vars > 4) {
    throw CapacityError("exhaustive enumeration supports 1..4 variables");
  }
  if (max_clauses < 0 || max_width < 0) {
    throw CapacityError("enumeration bounds must be non-negative");
  }
  max_clauses_ = static_cast<std::size_t>(max_clauses);

  // Clause universe: distinct-literal clauses of width 1..max_width over
  // codes 2..2n+1, ordered by (width, literal codes).
  const int pool = 2 * n_vars;
  const int top_width = std::min(max_width, pool);
  for (int w = 1; w <= top_width; ++w) {
    std::vector<int> pick(w);
    for (int i = 0; i < w; ++i) pick[i] = i;
    for (;;) {
      std::vector<Lit> lits;
      lits.reserve(w);
      for (int i : pick) {
        const int code = 2 + i;
        lits.push_back(Lit(code >> 1, code & 1));
      }
      universe_.push_back(Clause(std::move(lits)));
      int j = w - 1;
      while (j >= 0 && pick[j] == pool - w + j) --j;
      if (j < 0) break;
      ++pick[j];
      for (int i = j + 1; i < w; ++i) pick[i] = pick[i - 1] + 1;
    }
  }

  const std::uint64_t m = universe_.size();
  total_ = 0;
  for (std::uint64_t k = 0; k <= std::min<std::uint64_t>(max_clauses_, m); ++k) {
    total_ += binomial_capped(m, k);
    if (total_ > kEnumerationCap) {
      throw CapacityError("enumeration bounds describe too many formulas");
    }
  }
}

std::optional<Formula> SmallEnumeration::next() {
  if (done_) return std::nullopt;
  if (!emitted_empty_) {
    emitted_empty_ = true;
    if (total_ == 1) done_ = true;
    return Formula();
  }

  const std::size_t m = universe_.size();
  bool advanced = false;
  if (picked_.size() < max_clauses_ &&
      (picked_.empty() ? m > 0 : picked_.back() + 1 < m)) {
    picked_.push_back(picked_.empty() ? 0 : picked_.back() + 1);
    advanced = true;
  }
  while (!advanced && !picked_.empty()) {
    if (picked_.back() + 1 < m) {
      ++picked_.back();
      advanced = true;
    } else {
      picked_.pop_back();
    }
  }
  if (!advanced) {
    done_ = true;
    return std::nullopt;
  }

  std::vector<Clause> clauses;
  clauses.reserve(picked_.size());
  for (std::size_t i : picked_) clauses.push_back(universe_[i]);
  return Formula(std::move(clauses));
}

const char* kind_name(FindingKind k) {
  switch (k) {
    case FindingKind::agreement: return "agreement";
    case FindingKind::false_yes: return "false_yes";
    case FindingKind::false_no: return "false_no";
    case FindingKind::unsound_witness: return "unsound_witness";
    case FindingKind::assignment_conflict: return "assignment_conflict";
    case FindingKind::lemma2_violation: return "lemma2_violation";
    case FindingKind::probe_violation: return "probe_violation";
  }
  return "unknown";
}

FindingKind classify(const SolveOutcome& s, const OracleVerdict& o, bool witness_ok) {
  if (s.conflict) return FindingKind::assignment_conflict;
  if (s.verdict == Verdict::yes) {
    if (!witness_ok) return FindingKind::unsound_witness;
    if (!o.sat) {
      throw std::logic_error("oracle reports UNSAT against a verified witness");
    }
    return FindingKind::agreement;
  }
  if (o.sat) {
    // "no" with an empty trace means the input was already reduced: a direct
    // counterexample to the unsatisfiability claim for reduced formulas.
    return s.trace.empty() ? FindingKind::lemma2_violation : FindingKind::false_no;
  }
  return FindingKind::agreement;
}

namespace {

bool solver_witness_ok(const Formula& f, const SolveOutcome& s) {
  if (s.conflict) return false;
  try {
    return check_assignment(f, Assignment(s.assignment));
  } catch (const InvalidAssignmentError&) {
    return false;
  }
}

OracleVerdict run_oracle(const Formula& f, const HarnessConfig& cfg) {
  switch (cfg.oracle) {
    case OracleChoice::enumeration:
      return brute_force(f, cfg.oracle_cfg);
    case OracleChoice::dpll:
      return dpll(f, cfg.oracle_cfg);
    case OracleChoice::both: {
      OracleVerdict a = brute_force(f, cfg.oracle_cfg);
      OracleVerdict b = dpll(f, cfg.oracle_cfg);
      if (a.sat != b.sat) throw std::logic_error("oracle methods disagree");
      return a;
    }
    case OracleChoice::auto_pick:
      break;
  }
  if (f.variable_count() <= cfg.oracle_cfg.brute_force_var_cap) {
    return brute_force(f, cfg.oracle_cfg);
  }
  return dpll(f, cfg.oracle_cfg);
}

std::optional<FindingKind> observed_kind(const Formula& f, const HarnessConfig& cfg) {
  SolveOutcome s = solve(f, cfg.order);
  OracleVerdict o;
  try {
    o = run_oracle(f, cfg);
  } catch (const CapacityError&) {
    return std::nullopt;
  } catch (const BudgetExceededError&) {
    return std::nullopt;
  }
  return classify(s, o, solver_witness_ok(f, s));
}

}  // namespace

CheckResult differential_check(const Formula& f, std::uint64_t index, const HarnessConfig& cfg) {
  SolveOutcome s = solve(f, cfg.order);
  OracleVerdict o;
  try {
    o = run_oracle(f, cfg);
  } catch (const CapacityError& e) {
    return Inconclusive{index, e.what()};
  } catch (const BudgetExceededError& e) {
    return Inconclusive{index, e.what()};
  }

  Finding fd;
  fd.index = index;
  fd.formula = f;
  fd.oracle = o;
  fd.kind = classify(s, o, solver_witness_ok(f, s));
  fd.solver = std::move(s);

  if (fd.kind != FindingKind::agreement && cfg.shrink_findings) {
    const FindingKind kind = fd.kind;
    auto same_kind = [&cfg, kind](const Formula& g) {
      return observed_kind(g, cfg) == kind;
    };
    fd.shrunk = shrink(f, same_kind);
    fd.revalidated = same_kind(*fd.shrunk);
  }
  return fd;
}

Formula shrink(const Formula& f, const std::function<bool(const Formula&)>& pred) {
  if (!pred(f)) throw ContractError("shrink: predicate rejects the starting formula");
  Formula cur = f;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < cur.num_clauses() && !changed; ++i) {
      Formula cand = cur.without_clause(i);
      if (pred(cand)) {
        cur = std::move(cand);
        changed = true;
      }
    }
    if (changed) continue;
    for (std::size_t i = 0; i < cur.num_clauses() && !changed; ++i) {
      const std::size_t width = cur.clauses()[i].width();
      for (std::size_t j = 0; j < width && !changed; ++j) {
        Formula cand = cur.with_literal_removed(i, j);
        if (pred(cand)) {
          cur = std::move(cand);
          changed = true;
        }
      }
    }
  }
  return cur;
}

namespace {

// Slot kept per instance during a campaign; agreement results drop their
// payload so exhaustive sweeps stay small.
struct CompactResult {
  FindingKind kind = FindingKind::agreement;
  bool inconclusive = false;
  std::string reason;
  std::optional<Finding> finding;
};

CompactResult compact(CheckResult&& r) {
  CompactResult c;
  if (auto* inc = std::get_if<Inconclusive>(&r)) {
    c.inconclusive = true;
    c.reason = std::move(inc->reason);
    return c;
  }
  Finding& fd = std::get<Finding>(r);
  c.kind = fd.kind;
  if (fd.kind != FindingKind::agreement) c.finding = std::move(fd);
  return c;
}

void bump(CampaignTotals& t, FindingKind k) {
  switch (k) {
    case FindingKind::agreement: ++t.agreement; break;
    case FindingKind::false_yes: ++t.false_yes; break;
    case FindingKind::false_no: ++t.false_no; break;
    case FindingKind::unsound_witness: ++t.unsound_witness; break;
    case FindingKind::assignment_conflict: ++t.assignment_conflict; break;
    case FindingKind::lemma2_violation: ++t.lemma2_violation; break;
    case FindingKind::probe_violation: break;
  }
}

CampaignReport aggregate(std::vector<CompactResult>&& slots) {
  CampaignReport rep;
  rep.instances = slots.size();
  for (std::uint64_t i = 0; i < slots.size(); ++i) {
    CompactResult& s = slots[i];
    if (s.inconclusive) {
      ++rep.totals.inconclusive;
      rep.inconclusive.push_back(Inconclusive{i, std::move(s.reason)});
      continue;
    }
    bump(rep.totals, s.kind);
    if (s.finding) rep.findings.push_back(std::move(*s.finding));
  }
  return rep;
}

void run_workers(unsigned jobs, const std::function<void()>& body) {
  if (jobs <= 1) {
    body();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(body);
  for (std::thread& th : pool) th.join();
}

}  // namespace

CampaignReport run_fuzz_campaign(const GenParams& p, std::uint64_t instances,
                                 const HarnessConfig& cfg, unsigned jobs) {
  p.validate();
  std::vector<CompactResult> slots(instances);
  std::atomic<std::uint64_t> cursor{0};
  run_workers(std::max(1u, jobs), [&] {
    for (;;) {
      const std::uint64_t i = cursor.fetch_add(1);
      if (i >= instances) return;
      slots[i] = compact(differential_check(random_formula(p, i), i, cfg));
    }
  });
  CampaignReport rep = aggregate(std::move(slots));
  rep.mode = "fuzz";
  rep.gen = p;
  return rep;
}

CampaignReport run_enumeration_campaign(int n_vars, int max_clauses, int max_width,
                                        const HarnessConfig& cfg, unsigned jobs) {
  SmallEnumeration stream(n_vars, max_clauses, max_width);
  std::vector<CompactResult> slots(stream.total_count());
  std::mutex feed;
  std::uint64_t position = 0;
  run_workers(std::max(1u, jobs), [&] {
    for (;;) {
      std::uint64_t i;
      std::optional<Formula> f;
      {
        std::lock_guard<std::mutex> lock(feed);
        f = stream.next();
        i = position++;
      }
      if (!f) return;
      slots[i] = compact(differential_check(*f, i, cfg));
    }
  });
  CampaignReport rep = aggregate(std::move(slots));
  rep.mode = "enumerate";
  rep.enum_bounds = {n_vars, max_clauses, max_width};
  return rep;
}

std::vector<ProbeReport> probe_all_vars(const Formula& f, const ProbeConfig& cfg) {
  std::vector<ProbeReport> reps;
  int last_var = 0;
  for (Lit l : f.literals()) {
    if (l.var() == last_var) continue;
    last_var = l.var();
    reps.push_back(probe_reduced_preservation(f, last_var, cfg));
  }
  return reps;
}

namespace {

bool reduced_and_satisfiable(const Formula& f, const ProbeConfig& cfg) {
  if (!f.has_clauses() || find_redundant(f).has_value()) return false;
  try {
    return brute_force(f, cfg.oracle).sat;
  } catch (const CapacityError&) {
    return false;
  }
}

struct ProbeSlot {
  std::uint64_t probes = 0, skipped = 0;
  std::uint64_t a = 0, b = 0, c = 0, d = 0;
  std::uint64_t reduced_sat = 0;
  std::uint64_t collisions = 0;
  std::vector<ProbeFinding> findings;
};

void shrink_probe_finding(ProbeFinding& fd, const ProbeConfig& cfg) {
  std::function<bool(const Formula&)> pred;
  if (fd.kind == FindingKind::lemma2_violation) {
    pred = [&cfg](const Formula& g) { return reduced_and_satisfiable(g, cfg); };
  } else {
    // Preserve the first violated claim under *some* occurring variable.
    const char claim = fd.claims.front();
    pred = [&cfg, claim](const Formula& g) {
      int last_var = 0;
      for (Lit l : g.literals()) {
        if (l.var() == last_var) continue;
        last_var = l.var();
        ProbeReport rep = probe_reduced_preservation(g, last_var, cfg);
        if (std::find(rep.claims_violated.begin(), rep.claims_violated.end(), claim) !=
            rep.claims_violated.end()) {
          return true;
        }
      }
      return false;
    };
  }
  fd.shrunk = shrink(fd.formula, pred);
  fd.revalidated = pred(*fd.shrunk);
}

ProbeSlot probe_instance(const Formula& f, std::uint64_t index, const ProbeConfig& cfg,
                         bool shrink_findings) {
  ProbeSlot slot;
  for (const ProbeReport& rep : probe_all_vars(f, cfg)) {
    ++slot.probes;
    if (rep.skip_reason) ++slot.skipped;
    slot.collisions += rep.resolvent_collisions;
    for (char c : rep.claims_violated) {
      if (c == 'A') ++slot.a;
      if (c == 'B') ++slot.b;
      if (c == 'C') ++slot.c;
      if (c == 'D') ++slot.d;
    }
    if (!rep.claims_violated.empty()) {
      ProbeFinding fd;
      fd.index = index;
      fd.pivot = rep.pivot;
      fd.kind = FindingKind::probe_violation;
      fd.claims = rep.claims_violated;
      fd.formula = f;
      fd.g = rep.g;
      slot.findings.push_back(std::move(fd));
    }
    if (rep.input_reduced && rep.g_reduced && rep.g.has_clauses() && rep.g_oracle &&
        rep.g_oracle->sat) {
      ProbeFinding fd;
      fd.index = index;
      fd.pivot = rep.pivot;
      fd.kind = FindingKind::lemma2_violation;
      fd.formula = rep.g;
      ++slot.reduced_sat;
      slot.findings.push_back(std::move(fd));
    }
  }
  if (reduced_and_satisfiable(f, cfg)) {
    ProbeFinding fd;
    fd.index = index;
    fd.pivot = 0;
    fd.kind = FindingKind::lemma2_violation;
    fd.formula = f;
    ++slot.reduced_sat;
    slot.findings.push_back(std::move(fd));
  }
  if (shrink_findings) {
    for (ProbeFinding& fd : slot.findings) shrink_probe_finding(fd, cfg);
  }
  return slot;
}

}  // namespace

ProbeCampaignReport run_probe_campaign(int n_vars, int max_clauses, int max_width,
                                       const ProbeConfig& cfg, bool shrink_findings,
                                       unsigned jobs) {
  SmallEnumeration stream(n_vars, max_clauses, max_width);
  std::vector<ProbeSlot> slots(stream.total_count());
  std::mutex feed;
  std::uint64_t position = 0;
  run_workers(std::max(1u, jobs), [&] {
    for (;;) {
      std::uint64_t i;
      std::optional<Formula> f;
      {
        std::lock_guard<std::mutex> lock(feed);
        f = stream.next();
        i = position++;
      }
      if (!f) return;
      slots[i] = probe_instance(*f, i, cfg, shrink_findings);
    }
  });

  ProbeCampaignReport rep;
  rep.enum_bounds = {n_vars, max_clauses, max_width};
  rep.instances = slots.size();
  for (ProbeSlot& s : slots) {
    rep.probes += s.probes;
    rep.skipped += s.skipped;
    rep.violations_a += s.a;
    rep.violations_b += s.b;
    rep.violations_c += s.c;
    rep.violations_d += s.d;
    rep.reduced_satisfiable += s.reduced_sat;
    rep.resolvent_collisions += s.collisions;
    for (ProbeFinding& fd : s.findings) rep.findings.push_back(std::move(fd));
  }
  return rep;
}

}  // namespace redusat
