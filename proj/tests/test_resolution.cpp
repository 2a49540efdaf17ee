#include <algorithm>

#include "doctest.h"
#include "redusat/errors.hpp"
#include "redusat/harness.hpp"
#include "redusat/resolution.hpp"

using namespace redusat;

namespace {

Formula worked_example() {
  return parse_dimacs(
      "p cnf 4 5\n1 -2 -3 0\n2 3 -4 0\n-3 4 0\n-1 -4 0\n4 0\n");
}

bool has_clause(const Formula& f, std::initializer_list<int> ds) {
  const Clause c = Clause::of(ds);
  return std::find(f.clauses().begin(), f.clauses().end(), c) != f.clauses().end();
}

}  // namespace

TEST_CASE("resolution on the worked example eliminates the pivot") {
  const Formula f = worked_example();
  const ResolutionParts parts = resolution_parts(f, 4);
  CHECK(parts.pos.size() == 2);  // from "-3 4 0" and "4 0"
  CHECK(parts.neg.size() == 2);  // from "2 3 -4 0" and "-1 -4 0"
  CHECK(parts.survivors == std::vector<Clause>{Clause::of({1, -2, -3})});

  const Formula g = resolve_on(f, 4);
  CHECK(g.num_clauses() == 5);
  CHECK(has_clause(g, {1, -2, -3}));
  CHECK(has_clause(g, {2, 3, -3}));  // tautological resolvent kept by default
  CHECK(has_clause(g, {2, 3}));
  CHECK(has_clause(g, {-1, -3}));
  CHECK(has_clause(g, {-1}));
  CHECK(!g.occurs(Lit(4, 1)));
  CHECK(!g.occurs(Lit(4, 0)));

  CHECK(resolve_on(f, 4, /*drop_tautological_resolvents=*/true).num_clauses() == 4);
}

TEST_CASE("clauses tautological on the pivot survive untouched") {
  const Formula f({Clause::of({1, -1, 2}), Clause::of({1, 3}), Clause::of({-1, 4})});
  const Formula g = resolve_on(f, 1);
  CHECK(g.num_clauses() == 2);
  CHECK(has_clause(g, {1, -1, 2}));
  CHECK(has_clause(g, {3, 4}));
}

TEST_CASE("resolvents merging with surviving clauses are counted") {
  const Formula f({Clause::of({1, 2}), Clause::of({-1, 2}), Clause::of({2})});
  const ProbeReport rep = probe_reduced_preservation(f, 1);
  CHECK(rep.resolvent_collisions == 1);
  CHECK(rep.g.num_clauses() == 1);  // the resolvent {2} merges with the survivor
  CHECK(has_clause(rep.g, {2}));
}

TEST_CASE("probing a variable that does not occur is a contract violation") {
  CHECK_THROWS_AS(probe_reduced_preservation(worked_example(), 9), ContractError);
}

TEST_CASE("probe on a non-reduced input leaves the claims vacuous") {
  const ProbeReport rep = probe_reduced_preservation(worked_example(), 4);
  CHECK(!rep.input_reduced);
  CHECK(rep.claims_violated.empty());
  CHECK(rep.n0 == 2);
  CHECK(rep.n1 == 2);
  CHECK(rep.g.num_clauses() == 5);
}

TEST_CASE("resolving a reduced formula can produce a non-reduced one") {
  // the smallest shape: complementary units plus the tautology over one variable
  const Formula f = parse_dimacs("p cnf 1 3\n-1 0\n-1 1 0\n1 0\n");
  const ProbeReport rep = probe_reduced_preservation(f, 1);
  CHECK(rep.input_reduced);
  CHECK(rep.n0 == 1);
  CHECK(rep.n1 == 1);
  CHECK(rep.g.num_clauses() == 2);
  CHECK(rep.g.contains_empty_clause());
  CHECK(!rep.g_reduced);
  CHECK(rep.claims_violated == std::vector<char>{'B'});
  CHECK(rep.claim_d_checked);
  REQUIRE(rep.g_oracle.has_value());
  CHECK(!rep.g_oracle->sat);
}

TEST_CASE("a reduced satisfiable formula keeps its assignments through resolution") {
  // reduced and satisfiable; resolving on variable 1 loses reducedness only
  const Formula f = parse_dimacs("p cnf 2 4\n1 0\n2 0\n-1 1 -2 0\n-1 2 -2 0\n");
  REQUIRE(!find_redundant(f).has_value());
  const ProbeReport rep = probe_reduced_preservation(f, 1);
  CHECK(rep.input_reduced);
  CHECK(rep.claims_violated == std::vector<char>{'B'});
  CHECK(rep.claim_d_checked);  // claim D itself held
}

TEST_CASE("probe claims hold on reduced unsatisfiable cores") {
  const Formula f({Clause::of({1}), Clause::of({-1})});
  const ProbeReport rep = probe_reduced_preservation(f, 1);
  CHECK(rep.input_reduced);
  CHECK(rep.n0 == 1);
  CHECK(rep.n1 == 1);
  // G is the empty clause alone: reduced (nothing to cover) and nonempty
  CHECK(rep.g.num_clauses() == 1);
  CHECK(rep.g.contains_empty_clause());
  CHECK(rep.g_reduced);
  CHECK(rep.claims_violated.empty());
}

TEST_CASE("non-pivot clauses are preserved verbatim") {
  GenParams p;
  p.seed = 707;
  p.n_vars = {2, 8};
  p.n_clauses = {1, 14};
  p.clause_width = {1, 3};
  p.allow_tautologies = true;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const Formula f = random_formula(p, i);
    if (f.literals().empty()) continue;
    const int pivot = f.literals().front().var();
    const Formula g = resolve_on(f, pivot);
    const Lit pos(pivot, 1), neg(pivot, 0);
    for (const Clause& c : f.clauses()) {
      const bool hp = c.contains(pos), hn = c.contains(neg);
      if (hp == hn) {
        // survivor (untouched or tautological on the pivot)
        CHECK(std::find(g.clauses().begin(), g.clauses().end(), c) != g.clauses().end());
      }
    }
    // resolvents never reintroduce the pivot outside surviving tautologies
    for (const Clause& c : g.clauses()) {
      if (c.contains(pos) || c.contains(neg)) {
        CHECK((c.contains(pos) && c.contains(neg)));
      }
    }
  }
}
