#pragma once

#include <cstdint>
#include <optional>

#include "redusat/cnf.hpp"

namespace redusat {

enum class OracleMethod { enumeration, dpll };

struct OracleVerdict {
  bool sat = false;
  std::optional<Assignment> witness;  // present iff sat, re-verified before return
  OracleMethod method = OracleMethod::enumeration;
  std::uint64_t decisions = 0;  // assignments tried / search nodes
};

struct OracleConfig {
  std::size_t brute_force_var_cap = 24;
  std::uint64_t dpll_node_budget = std::uint64_t{1} << 22;
};

/// Exhaustive enumeration of all total assignments over the occurring
/// variables, in ascending mask order (all-false first, variable j maps to
/// bit j). Throws CapacityError above the variable cap.
OracleVerdict brute_force(const Formula& f, const OracleConfig& cfg = {});

/// Recursive splitting with unit propagation and pure-literal elimination;
/// branches on the lowest-index unassigned variable, true first. Throws
/// BudgetExceededError when the node budget runs out.
OracleVerdict dpll(const Formula& f, const OracleConfig& cfg = {});

}  // namespace redusat
