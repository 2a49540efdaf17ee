#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "redusat/closure.hpp"
#include "redusat/cnf.hpp"

namespace redusat {

struct ReductionStep {
  Lit chosen;
  std::vector<Lit> closure_literals;  // the closure of chosen, at removal time
  std::vector<Clause> removed;        // the covered clauses
  std::size_t remaining_size;         // formula size after removal
};

/// The accumulated assignment acquired both polarities of a variable. The
/// run is not aborted; the conflict is recorded so the harness can surface
/// it as a finding.
struct ConflictRecord {
  Lit literal;             // the later-arriving polarity
  std::size_t step_index;  // reduction step that introduced it
};

enum class Verdict { yes, no };

struct SolveOutcome {
  Verdict verdict = Verdict::no;
  std::vector<Lit> assignment;  // accumulated closure literals, sorted
  std::optional<ConflictRecord> conflict;
  std::vector<ReductionStep> trace;
  Formula final_formula;  // the reduced residue

  bool satisfiable() const { return verdict == Verdict::yes; }
};

/// f minus all clauses covered by the closure of z.
Formula reduce_by(const Formula& f, Lit z);

/// Repeatedly remove the covered clauses of a redundant literal, collecting
/// the closure literals into the candidate assignment; answer yes iff no
/// clauses remain once the formula is reduced.
SolveOutcome solve(const Formula& f, ScanOrder order = ScanOrder::forward);

std::size_t variable_count(const Formula& f);

}  // namespace redusat
