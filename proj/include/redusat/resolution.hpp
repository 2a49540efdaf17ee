#pragma once

#include <optional>
#include <string>
#include <vector>

#include "redusat/cnf.hpp"
#include "redusat/oracle.hpp"

namespace redusat {

/// Pieces of a resolution step on one variable. survivors are the clauses
/// untouched by the step (no occurrence of the variable, or both polarities
/// at once); pos/neg hold the clauses containing exactly the positive /
/// negative literal, with that literal already deleted.
struct ResolutionParts {
  std::vector<Clause> survivors;
  std::vector<Clause> pos;  // C^1_i, n1 = pos.size()
  std::vector<Clause> neg;  // C^0_i, n0 = neg.size()
};

ResolutionParts resolution_parts(const Formula& f, int var);

/// Remove the clauses containing exactly one polarity of var and add every
/// cross-polarity merge with var deleted. Tautological clauses on var stay;
/// resolvents tautological on another variable are kept unless
/// drop_tautological_resolvents is set (exploratory comparison only).
Formula resolve_on(const Formula& f, int var, bool drop_tautological_resolvents = false);

struct ProbeConfig {
  std::size_t oracle_var_cap = 20;          // skip the oracle above this
  std::size_t assignment_enum_var_cap = 10; // skip the claim-D sweep above this
  OracleConfig oracle;
  bool drop_tautological_resolvents = false;
};

/// Per-instance evaluation of the claims a resolution step is supposed to
/// preserve on a reduced formula:
///   A: a reduced formula has n0 + n1 > 0 for every occurring variable
///   B: resolving a reduced formula yields a reduced formula
///   C: resolving a reduced nonempty formula yields a nonempty formula
///   D: every true assignment of the input is a true assignment of the result
/// All four are vacuous when the input is not reduced.
struct ProbeReport {
  int pivot = 0;
  bool input_reduced = false;
  std::size_t n0 = 0, n1 = 0;
  Formula g;
  bool g_reduced = false;
  std::optional<OracleVerdict> g_oracle;  // absent when skipped
  std::vector<char> claims_violated;      // subset of {'A','B','C','D'}
  bool claim_d_checked = false;
  std::size_t resolvent_collisions = 0;   // resolvents merging with surviving clauses
  std::optional<std::string> skip_reason;
};

/// Throws ContractError when var does not occur in f (either polarity).
ProbeReport probe_reduced_preservation(const Formula& f, int var, const ProbeConfig& cfg = {});

}  // namespace redusat
