#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "redusat/cnf.hpp"
#include "redusat/oracle.hpp"
#include "redusat/resolution.hpp"
#include "redusat/solver.hpp"

namespace redusat {

struct Range {
  int lo = 0;
  int hi = 0;
  bool contains(int v) const { return lo <= v && v <= hi; }
};

/// Deterministic 64-bit generator (splitmix64). Identical sequences on every
/// platform, unlike the standard distributions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound), bound > 0. Rejection keeps it unbiased.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [lo, hi] inclusive.
  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t state_;
};

struct GenParams {
  std::uint64_t seed = 0;
  Range n_vars{1, 8};
  Range n_clauses{0, 16};
  Range clause_width{1, 3};
  bool allow_tautologies = false;
  bool allow_empty_clause = false;

  void validate() const;  // throws ParameterError on impossible constraints
};

/// Instance `index` of the stream described by p; depends only on (p, index).
Formula random_formula(const GenParams& p, std::uint64_t index);

/// Streams every formula over variables 1..n_vars with at most max_clauses
/// clauses of width <= max_width (distinct literals, tautologies included),
/// starting from the empty formula, in subset-lexicographic order over the
/// clause universe sorted by (width, literal codes).
class SmallEnumeration {
 public:
  /// Throws CapacityError when n_vars > 4 or the stream would be too large.
  SmallEnumeration(int n_vars, int max_clauses, int max_width);

  std::optional<Formula> next();
  std::uint64_t total_count() const { return total_; }
  const std::vector<Clause>& universe() const { return universe_; }

 private:
  std::vector<Clause> universe_;
  std::size_t max_clauses_;
  std::vector<std::size_t> picked_;  // ascending universe indices
  bool emitted_empty_ = false;
  bool done_ = false;
  std::uint64_t total_ = 0;
};

enum class FindingKind {
  agreement,
  false_yes,         // solver yes, oracle UNSAT (witness would have to be valid)
  false_no,          // solver no after at least one reduction, oracle SAT
  unsound_witness,   // solver yes but its assignment fails the formula
  assignment_conflict,
  lemma2_violation,  // already-reduced nonempty formula the oracle satisfies
  probe_violation,
};

const char* kind_name(FindingKind k);

struct Finding {
  std::uint64_t index = 0;
  Formula formula;
  SolveOutcome solver;
  OracleVerdict oracle;
  FindingKind kind = FindingKind::agreement;
  std::optional<Formula> shrunk;
  bool revalidated = false;  // shrunk form re-checked to exhibit the same kind
};

struct Inconclusive {
  std::uint64_t index = 0;
  std::string reason;
};

using CheckResult = std::variant<Finding, Inconclusive>;

enum class OracleChoice { auto_pick, enumeration, dpll, both };

struct HarnessConfig {
  OracleChoice oracle = OracleChoice::auto_pick;
  OracleConfig oracle_cfg;
  ScanOrder order = ScanOrder::forward;
  bool shrink_findings = true;
};

/// Classification given a finished solver run and a trusted oracle verdict.
/// witness_ok reports whether the solver's assignment satisfies the formula.
FindingKind classify(const SolveOutcome& s, const OracleVerdict& o, bool witness_ok);

/// Run solver and oracle on one instance and classify. Oracle capacity or
/// budget exhaustion yields Inconclusive, never a finding.
CheckResult differential_check(const Formula& f, std::uint64_t index, const HarnessConfig& cfg);

/// Greedy minimisation keeping pred true: whole-clause removals first, then
/// single-literal removals, restarting after every acceptance. The result is
/// 1-minimal. Throws ContractError if pred(f) is false.
Formula shrink(const Formula& f, const std::function<bool(const Formula&)>& pred);

struct CampaignTotals {
  std::uint64_t agreement = 0;
  std::uint64_t false_yes = 0;
  std::uint64_t false_no = 0;
  std::uint64_t unsound_witness = 0;
  std::uint64_t assignment_conflict = 0;
  std::uint64_t lemma2_violation = 0;
  std::uint64_t inconclusive = 0;

  bool operator==(const CampaignTotals&) const = default;
};

struct CampaignReport {
  std::string mode;  // "fuzz" or "enumerate"
  GenParams gen;     // fuzz only
  std::array<int, 3> enum_bounds{0, 0, 0};
  std::uint64_t instances = 0;
  CampaignTotals totals;
  std::vector<Finding> findings;  // non-agreement only, ascending index
  std::vector<Inconclusive> inconclusive;
};

/// Aggregation is by instance index, so reports are byte-identical for any
/// worker count.
CampaignReport run_fuzz_campaign(const GenParams& p, std::uint64_t instances,
                                 const HarnessConfig& cfg, unsigned jobs = 1);
CampaignReport run_enumeration_campaign(int n_vars, int max_clauses, int max_width,
                                        const HarnessConfig& cfg, unsigned jobs = 1);

struct ProbeFinding {
  std::uint64_t index = 0;
  int pivot = 0;  // 0 for direct satisfiable-though-reduced findings
  FindingKind kind = FindingKind::probe_violation;
  std::vector<char> claims;  // violated claims, for probe_violation
  Formula formula;           // the formula exhibiting the kind
  Formula g;                 // resolution result (probe_violation only)
  std::optional<Formula> shrunk;
  bool revalidated = false;
};

struct ProbeCampaignReport {
  std::array<int, 3> enum_bounds{0, 0, 0};
  std::uint64_t instances = 0;
  std::uint64_t probes = 0;
  std::uint64_t skipped = 0;  // probes with a skip_reason
  std::uint64_t violations_a = 0;
  std::uint64_t violations_b = 0;
  std::uint64_t violations_c = 0;
  std::uint64_t violations_d = 0;
  std::uint64_t reduced_satisfiable = 0;  // reduced nonempty instances the oracle satisfies
  std::uint64_t resolvent_collisions = 0;
  std::vector<ProbeFinding> findings;
};

/// Probe every occurring variable of every enumerated instance; also flag
/// each reduced nonempty instance (or resolution result) the oracle proves
/// satisfiable. Deterministic for any worker count.
ProbeCampaignReport run_probe_campaign(int n_vars, int max_clauses, int max_width,
                                       const ProbeConfig& cfg, bool shrink_findings = true,
                                       unsigned jobs = 1);

/// Probe report for a single parsed formula (all occurring variables).
std::vector<ProbeReport> probe_all_vars(const Formula& f, const ProbeConfig& cfg);

}  // namespace redusat
