#include <algorithm>

#include "doctest.h"
#include "redusat/harness.hpp"
#include "redusat/solver.hpp"

using namespace redusat;

namespace {

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

}  // namespace

TEST_CASE("the worked example reduces to empty in one step") {
  const SolveOutcome out = solve(worked_example());
  CHECK(out.verdict == Verdict::yes);
  CHECK(out.satisfiable());
  CHECK(out.assignment == lits({-1, 2, -3, 4}));
  CHECK(!out.conflict.has_value());
  REQUIRE(out.trace.size() == 1);
  CHECK(out.trace[0].chosen == Lit::from_dimacs(2));
  CHECK(out.trace[0].closure_literals == lits({-1, 2, -3, 4}));
  CHECK(out.trace[0].removed.size() == 5);
  CHECK(out.trace[0].remaining_size == 0);
  CHECK(!out.final_formula.has_clauses());
  CHECK(check_assignment(worked_example(), Assignment(out.assignment)));
}

TEST_CASE("reverse scan order picks the other redundant literal, same answer") {
  const SolveOutcome out = solve(worked_example(), ScanOrder::reverse);
  CHECK(out.verdict == Verdict::yes);
  REQUIRE(out.trace.size() == 1);
  CHECK(out.trace[0].chosen == Lit::from_dimacs(-3));
  CHECK(out.assignment == lits({-1, 2, -3, 4}));
}

TEST_CASE("verdicts on degenerate formulas") {
  SUBCASE("empty formula: yes with empty assignment") {
    const SolveOutcome out = solve(Formula());
    CHECK(out.verdict == Verdict::yes);
    CHECK(out.assignment.empty());
    CHECK(out.trace.empty());
  }
  SUBCASE("single empty clause: no, nothing reducible") {
    const SolveOutcome out = solve(Formula({Clause::of({})}));
    CHECK(out.verdict == Verdict::no);
    CHECK(out.trace.empty());
    CHECK(out.final_formula.contains_empty_clause());
  }
  SUBCASE("complementary units: no") {
    const SolveOutcome out = solve(Formula({Clause::of({1}), Clause::of({-1})}));
    CHECK(out.verdict == Verdict::no);
    CHECK(out.trace.empty());
    CHECK(out.final_formula.num_clauses() == 2);
  }
  SUBCASE("pure literal formula: yes via its closure") {
    const SolveOutcome out = solve(Formula({Clause::of({1, 2}), Clause::of({1, -2})}));
    CHECK(out.verdict == Verdict::yes);
    CHECK(out.assignment == lits({1}));
  }
}

TEST_CASE("reduce_by removes exactly the covered clauses") {
  const Formula f = worked_example();
  CHECK(!reduce_by(f, Lit::from_dimacs(2)).has_clauses());
  const Formula g = reduce_by(f, Lit::from_dimacs(4));
  // closure {4} covers "-3 4 0" and "4 0"
  CHECK(g.num_clauses() == 3);
  CHECK(!g.occurs(Lit::from_dimacs(4)));
}

TEST_CASE("reduction traces shrink the formula and justify each removal") {
  GenParams p;
  p.seed = 515;
  p.n_vars = {2, 10};
  p.n_clauses = {1, 20};
  p.clause_width = {1, 4};
  for (std::uint64_t i = 0; i < 150; ++i) {
    const Formula f = random_formula(p, i);
    const SolveOutcome out = solve(f);

    std::size_t prev = formula_size(f);
    for (const ReductionStep& st : out.trace) {
      CHECK(st.remaining_size < prev);
      prev = st.remaining_size;
      CHECK(!st.removed.empty());
      // every removed clause contains a literal of the closure that removed it
      for (const Clause& c : st.removed) {
        const bool hit = std::any_of(st.closure_literals.begin(), st.closure_literals.end(),
                                     [&c](Lit l) { return c.contains(l); });
        CHECK(hit);
      }
    }
    CHECK(formula_size(out.final_formula) == (out.trace.empty() ? formula_size(f) : prev));
    CHECK((out.verdict == Verdict::yes) == !out.final_formula.has_clauses());

    // the residue is reduced: no redundant literal remains
    CHECK(!find_redundant(out.final_formula).has_value());

    // accumulated closures never clash on these instances
    CHECK(!out.conflict.has_value());

    // a yes answer always carries a checkable assignment
    if (out.verdict == Verdict::yes) {
      CHECK(check_assignment(f, Assignment(out.assignment)));
    }
  }
}
