#include "redusat/solver.hpp"

#include <algorithm>
#include <unordered_set>

namespace redusat {

Formula reduce_by(const Formula& f, Lit z) {
  return f.without_clauses(closure(f, z).covered_ids);
}

SolveOutcome solve(const Formula& f, ScanOrder order) {
  SolveOutcome out;
  Formula cur = f;
  std::unordered_set<std::uint32_t> t_codes;

  while (auto hit = find_redundant(cur, order)) {
    auto& [z, cr] = *hit;
    Formula next = cur.without_clauses(cr.covered_ids);

    ReductionStep step;
    step.chosen = z;
    step.closure_literals = cr.closure;
    step.removed = cur.materialize(cr.covered_ids);
    step.remaining_size = next.size();

    for (Lit u : cr.closure) {
      if (!out.conflict && t_codes.count(u.negated().code()))
        out.conflict = ConflictRecord{u, out.trace.size()};
      t_codes.insert(u.code());
    }

    out.trace.push_back(std::move(step));
    cur = std::move(next);
  }

  out.assignment.reserve(t_codes.size());
  for (std::uint32_t c : t_codes) {
    Lit l;
    l = Lit(static_cast<int>(c >> 1), static_cast<int>(c & 1));
    out.assignment.push_back(l);
  }
  std::sort(out.assignment.begin(), out.assignment.end());

  out.verdict = cur.has_clauses() ? Verdict::no : Verdict::yes;
  out.final_formula = std::move(cur);
  return out;
}

std::size_t variable_count(const Formula& f) { return f.variable_count(); }

}  // namespace redusat
