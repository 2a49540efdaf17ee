#include "redusat/resolution.hpp"

#include <algorithm>
#include <set>

#include "redusat/closure.hpp"
#include "redusat/errors.hpp"
#include "redusat/solver.hpp"

namespace redusat {

namespace {

Clause minus(const Clause& c, Lit l) {
  std::vector<Lit> keep;
  keep.reserve(c.width() - 1);
  for (Lit u : c.lits()) {
    if (u != l) keep.push_back(u);
  }
  return Clause(std::move(keep));
}

Clause merged(const Clause& a, const Clause& b) {
  std::vector<Lit> lits(a.lits());
  lits.insert(lits.end(), b.lits().begin(), b.lits().end());
  return Clause(std::move(lits));
}

}  // namespace

ResolutionParts resolution_parts(const Formula& f, int var) {
  const Lit p(var, 1);
  const Lit n(var, 0);
  ResolutionParts parts;
  for (const Clause& c : f.clauses()) {
    const bool has_p = c.contains(p);
    const bool has_n = c.contains(n);
    if (has_p == has_n) {
      parts.survivors.push_back(c);  // untouched, including tautological on var
    } else if (has_p) {
      parts.pos.push_back(minus(c, p));
    } else {
      parts.neg.push_back(minus(c, n));
    }
  }
  return parts;
}

Formula resolve_on(const Formula& f, int var, bool drop_tautological_resolvents) {
  ResolutionParts parts = resolution_parts(f, var);
  std::vector<Clause> out = parts.survivors;
  for (const Clause& cn : parts.neg) {
    for (const Clause& cp : parts.pos) {
      Clause r = merged(cn, cp);
      if (drop_tautological_resolvents && r.tautological()) continue;
      out.push_back(std::move(r));
    }
  }
  return Formula(std::move(out));
}

namespace {

// Every true assignment of f must stay true on g. Sweeps all partial
// assignments over the occurring variables of f (3^k of them).
bool claim_d_holds(const Formula& f, const Formula& g) {
  std::vector<int> vars;
  for (Lit l : f.literals()) {
    if (vars.empty() || vars.back() != l.var()) vars.push_back(l.var());
  }
  const std::size_t k = vars.size();
  std::vector<int> digit(k, 0);  // 0 = unset, 1 = positive, 2 = negative
  for (;;) {
    std::vector<Lit> lits;
    for (std::size_t i = 0; i < k; ++i) {
      if (digit[i] == 1) lits.push_back(Lit(vars[i], 1));
      if (digit[i] == 2) lits.push_back(Lit(vars[i], 0));
    }
    Assignment t(std::move(lits));
    if (check_assignment(f, t) && !check_assignment(g, t)) return false;
    std::size_t i = 0;
    while (i < k && digit[i] == 2) digit[i++] = 0;
    if (i == k) return true;
    ++digit[i];
  }
}

OracleVerdict g_verdict(const Formula& g, const ProbeConfig& cfg) {
  try {
    return brute_force(g, cfg.oracle);
  } catch (const CapacityError&) {
    return dpll(g, cfg.oracle);  // may throw BudgetExceededError; caller skips
  }
}

}  // namespace

ProbeReport probe_reduced_preservation(const Formula& f, int var, const ProbeConfig& cfg) {
  if (!f.occurs(Lit(var, 1)) && !f.occurs(Lit(var, 0))) {
    throw ContractError("probe: variable " + std::to_string(var) + " does not occur");
  }

  ProbeReport rep;
  rep.pivot = var;
  rep.input_reduced = !find_redundant(f).has_value();

  ResolutionParts parts = resolution_parts(f, var);
  rep.n0 = parts.neg.size();
  rep.n1 = parts.pos.size();
  rep.g = resolve_on(f, var, cfg.drop_tautological_resolvents);

  std::set<Clause> survivor_set(parts.survivors.begin(), parts.survivors.end());
  for (const Clause& cn : parts.neg) {
    for (const Clause& cp : parts.pos) {
      if (survivor_set.count(merged(cn, cp))) ++rep.resolvent_collisions;
    }
  }

  rep.g_reduced = !find_redundant(rep.g).has_value();

  if (rep.g.variable_count() <= cfg.oracle_var_cap) {
    try {
      rep.g_oracle = g_verdict(rep.g, cfg);
    } catch (const BudgetExceededError& e) {
      rep.skip_reason = e.what();
    }
  } else {
    rep.skip_reason = "oracle variable cap exceeded";
  }

  if (rep.input_reduced) {
    if (rep.n0 + rep.n1 == 0) rep.claims_violated.push_back('A');
    if (!rep.g_reduced) rep.claims_violated.push_back('B');
    if (f.has_clauses() && !rep.g.has_clauses()) rep.claims_violated.push_back('C');
    if (f.variable_count() <= cfg.assignment_enum_var_cap) {
      rep.claim_d_checked = true;
      if (!claim_d_holds(f, rep.g)) rep.claims_violated.push_back('D');
    } else if (!rep.skip_reason) {
      rep.skip_reason = "assignment enumeration cap exceeded";
    }
  }
  return rep;
}

}  // namespace redusat
