#include "redusat/closure.hpp"

#include <algorithm>

namespace redusat {

ClauseIdSet clauses_containing(const Formula& f, std::span<const Lit> s) {
  ClauseIdSet out(f.num_clauses());
  for (Lit l : s) out |= f.occurrence(l);
  return out;
}

namespace {

// Extension against a precomputed coverage set. in_s marks the occurring
// literals already in S (indexed by position in f.literals()).
std::vector<Lit> extension_covered(const Formula& f, const ClauseIdSet& covered,
                                   const std::vector<char>& in_s, Lit z) {
  std::vector<Lit> out;
  const auto& lits = f.literals();
  const Lit zbar = z.negated();
  for (std::size_t i = 0; i < lits.size(); ++i) {
    Lit u = lits[i];
    if (u == zbar || in_s[i]) continue;
    if (f.occurrence(u).subset_of(covered)) continue;          // [{u}] not covered
    if (!f.occurrence(u.negated()).subset_of(covered)) continue;  // [{~u}] covered
    out.push_back(u);
  }
  return out;
}

std::vector<char> membership(const Formula& f, std::span<const Lit> s) {
  const auto& lits = f.literals();
  std::vector<char> in_s(lits.size(), 0);
  for (Lit l : s) {
    auto it = std::lower_bound(lits.begin(), lits.end(), l);
    if (it != lits.end() && *it == l) in_s[static_cast<std::size_t>(it - lits.begin())] = 1;
  }
  return in_s;
}

}  // namespace

std::vector<Lit> extension(const Formula& f, std::span<const Lit> s, Lit z) {
  // Members of s never qualify (their clauses are covered by construction),
  // so the membership mask is a pure skip-ahead.
  return extension_covered(f, clauses_containing(f, s), membership(f, s), z);
}

ClosureResult closure(const Formula& f, Lit z) {
  ClosureResult r;
  r.seed = z;
  r.covered_ids = ClauseIdSet(f.num_clauses());
  r.covered_ids |= f.occurrence(z);

  std::vector<Lit> s{z};
  r.stages.push_back(s);
  std::vector<char> in_s = membership(f, s);

  for (;;) {
    std::vector<Lit> ext = extension_covered(f, r.covered_ids, in_s, z);
    for (Lit u : ext) {
      s.push_back(u);
      r.covered_ids |= f.occurrence(u);
    }
    std::sort(s.begin(), s.end());
    r.stages.push_back(s);
    if (ext.empty()) break;
    for (Lit u : ext) {
      const auto& lits = f.literals();
      auto it = std::lower_bound(lits.begin(), lits.end(), u);
      in_s[static_cast<std::size_t>(it - lits.begin())] = 1;
    }
  }

  r.closure = s;
  return r;
}

bool is_redundant(const Formula& f, Lit z) {
  return f.occurrence(z.negated()).subset_of(closure(f, z).covered_ids);
}

std::optional<std::pair<Lit, ClosureResult>> find_redundant(const Formula& f, ScanOrder order) {
  // Occurring literals are stored sorted by (var, polarity); the scan wants
  // positive polarity first within a variable, so flip adjacent same-var
  // pairs. Reverse order is the exact mirror of the forward sequence.
  std::vector<Lit> scan = f.literals();
  for (std::size_t i = 1; i < scan.size(); ++i)
    if (scan[i - 1].var() == scan[i].var()) std::swap(scan[i - 1], scan[i]);
  if (order == ScanOrder::reverse) std::reverse(scan.begin(), scan.end());

  for (Lit z : scan) {
    ClosureResult r = closure(f, z);
    if (f.occurrence(z.negated()).subset_of(r.covered_ids))
      return std::make_pair(z, std::move(r));
  }
  return std::nullopt;
}

}  // namespace redusat
