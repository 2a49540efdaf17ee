#include "redusat/cnf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>
#include <utility>

namespace redusat {

Clause::Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

Clause Clause::of(std::initializer_list<int> dimacs_lits) {
  std::vector<Lit> ls;
  ls.reserve(dimacs_lits.size());
  for (int d : dimacs_lits) ls.push_back(Lit::from_dimacs(d));
  return Clause(std::move(ls));
}

bool Clause::contains(Lit l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

bool Clause::tautological() const {
  // sorted by code, so x-bar (var,0) and x (var,1) sit next to each other
  for (std::size_t i = 1; i < lits_.size(); ++i)
    if (lits_[i - 1].var() == lits_[i].var()) return true;
  return false;
}

std::string Clause::to_dimacs() const {
  std::string out;
  for (Lit l : lits_) {
    out += std::to_string(l.to_dimacs());
    out += ' ';
  }
  out += '0';
  return out;
}

Formula::Formula(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
  std::sort(clauses_.begin(), clauses_.end());
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());

  const std::size_t m = clauses_.size();
  zero_ = ClauseIdSet(m);
  size_ = m;

  std::vector<std::pair<Lit, std::size_t>> pairs;
  for (std::size_t i = 0; i < m; ++i) {
    size_ += clauses_[i].width();
    for (Lit l : clauses_[i].lits()) pairs.emplace_back(l, i);
  }
  std::sort(pairs.begin(), pairs.end());

  for (std::size_t i = 0; i < pairs.size();) {
    Lit l = pairs[i].first;
    lits_.push_back(l);
    occ_.emplace_back(m);
    for (; i < pairs.size() && pairs[i].first == l; ++i) occ_.back().set(pairs[i].second);
  }
}

bool Formula::contains_empty_clause() const {
  // the empty clause sorts first
  return !clauses_.empty() && clauses_.front().empty();
}

bool Formula::occurs(Lit l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

const ClauseIdSet& Formula::occurrence(Lit l) const {
  auto it = std::lower_bound(lits_.begin(), lits_.end(), l);
  if (it == lits_.end() || *it != l) return zero_;
  return occ_[static_cast<std::size_t>(it - lits_.begin())];
}

std::size_t Formula::variable_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < lits_.size(); ++i)
    if (i == 0 || lits_[i - 1].var() != lits_[i].var()) ++n;
  return n;
}

int Formula::max_var() const { return lits_.empty() ? 0 : lits_.back().var(); }

std::vector<Clause> Formula::materialize(const ClauseIdSet& ids) const {
  std::vector<Clause> out;
  for (std::size_t id : ids.ids()) out.push_back(clauses_[id]);
  return out;
}

Formula Formula::without_clauses(const ClauseIdSet& ids) const {
  std::vector<Clause> kept;
  kept.reserve(clauses_.size());
  for (std::size_t i = 0; i < clauses_.size(); ++i)
    if (!ids.test(i)) kept.push_back(clauses_[i]);
  return Formula(std::move(kept));
}

Formula Formula::without_clause(std::size_t idx) const {
  std::vector<Clause> kept;
  kept.reserve(clauses_.size() - 1);
  for (std::size_t i = 0; i < clauses_.size(); ++i)
    if (i != idx) kept.push_back(clauses_[i]);
  return Formula(std::move(kept));
}

Formula Formula::with_literal_removed(std::size_t clause_idx, std::size_t lit_idx) const {
  std::vector<Clause> cs = clauses_;
  std::vector<Lit> ls = cs[clause_idx].lits();
  ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(lit_idx));
  cs[clause_idx] = Clause(std::move(ls));
  return Formula(std::move(cs));
}

Assignment::Assignment(std::vector<Lit> lits) : lits_(std::move(lits)) {
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
  for (std::size_t i = 1; i < lits_.size(); ++i)
    if (lits_[i - 1].var() == lits_[i].var())
      throw InvalidAssignmentError("assignment contains both polarities of variable " +
                                   std::to_string(lits_[i].var()));
}

bool Assignment::contains(Lit l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

Lit negate(Lit l) { return l.negated(); }

namespace {

bool intersect_sorted(const std::vector<Lit>& a, const std::vector<Lit>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return false;
}

}  // namespace

bool check_assignment(const Formula& f, const Assignment& t) {
  for (const Clause& c : f.clauses())
    if (!intersect_sorted(c.lits(), t.lits())) return false;
  return true;
}

std::size_t formula_size(const Formula& f) { return f.size(); }

Formula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

Formula parse_dimacs(std::istream& in) {
  std::string line;
  int line_no = 0;
  long declared_vars = -1;
  std::vector<Clause> clauses;
  std::vector<Lit> pending;

  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = line.find_first_not_of(" \t\r\n\v\f");
    if (pos == std::string::npos) continue;
    if (line[pos] == 'c') continue;

    if (declared_vars < 0) {
      std::istringstream ls(line);
      std::string p, cnf;
      long nv = -1, nc = -1;
      if (!(ls >> p >> cnf >> nv >> nc) || p != "p" || cnf != "cnf" || nv < 0 || nc < 0)
        throw ParseError(line_no, "malformed 'p cnf <vars> <clauses>' header");
      std::string extra;
      if (ls >> extra) throw ParseError(line_no, "trailing token '" + extra + "' after header");
      declared_vars = nv;
      continue;
    }

    const char* cur = line.data() + pos;
    const char* end = line.data() + line.size();
    while (cur < end) {
      while (cur < end && std::isspace(static_cast<unsigned char>(*cur))) ++cur;
      if (cur >= end) break;
      long v = 0;
      auto [next, ec] = std::from_chars(cur, end, v);
      if (ec != std::errc{} ||
          (next < end && !std::isspace(static_cast<unsigned char>(*next)))) {
        std::string tok(cur, std::find_if(cur, end, [](char ch) {
                          return std::isspace(static_cast<unsigned char>(ch));
                        }));
        throw ParseError(line_no, "expected integer, got '" + tok + "'");
      }
      cur = next;
      if (v == 0) {
        clauses.emplace_back(std::move(pending));
        pending.clear();
      } else {
        long var = v < 0 ? -v : v;
        if (var > declared_vars)
          throw ParseError(line_no, "variable " + std::to_string(var) +
                                        " exceeds declared bound " +
                                        std::to_string(declared_vars));
        pending.push_back(Lit::from_dimacs(static_cast<int>(v)));
      }
    }
  }

  if (declared_vars < 0) throw ParseError(line_no, "missing 'p cnf' header");
  if (!pending.empty()) throw ParseError(line_no, "clause missing terminating 0");
  return Formula(std::move(clauses));
}

std::string emit_dimacs(const Formula& f) {
  std::string out = "p cnf " + std::to_string(f.max_var()) + " " +
                    std::to_string(f.num_clauses()) + "\n";
  for (const Clause& c : f.clauses()) {
    out += c.to_dimacs();
    out += '\n';
  }
  return out;
}

}  // namespace redusat
