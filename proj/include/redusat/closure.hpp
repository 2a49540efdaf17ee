#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "redusat/cnf.hpp"

namespace redusat {

enum class ScanOrder { forward, reverse };

/// Result of iterating the literal-set extension step from a seed literal z
/// to its fixpoint. stages[0] == {z}; the chain grows strictly until the
/// last two entries, which are equal (the fixpoint witness). covered_ids is
/// the set of clauses containing a literal from the closure.
struct ClosureResult {
  Lit seed;
  std::vector<std::vector<Lit>> stages;
  std::vector<Lit> closure;  // == stages.back(), sorted by code
  ClauseIdSet covered_ids;

  std::vector<Clause> covered(const Formula& f) const { return f.materialize(covered_ids); }
};

/// Clauses of f containing at least one literal from s.
ClauseIdSet clauses_containing(const Formula& f, std::span<const Lit> s);

/// One extension step: literals u != ~z whose own clauses are not all
/// covered by the clauses of s, but whose negation's clauses all are.
/// Only literals occurring in f can qualify. Result sorted by code.
std::vector<Lit> extension(const Formula& f, std::span<const Lit> s, Lit z);

ClosureResult closure(const Formula& f, Lit z);

/// z is redundant when every clause containing ~z is covered by its closure.
bool is_redundant(const Formula& f, Lit z);

/// First redundant literal in scan order (forward: ascending variable,
/// positive polarity first), or nullopt if f is reduced.
std::optional<std::pair<Lit, ClosureResult>> find_redundant(const Formula& f,
                                                            ScanOrder order = ScanOrder::forward);

}  // namespace redusat
