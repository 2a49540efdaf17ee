#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "redusat/clause_id_set.hpp"
#include "redusat/errors.hpp"

namespace redusat {

/// A signed variable: variable index (>= 1) plus polarity (1 = positive,
/// 0 = negated). Encoded as var*2 + polarity so that sorting by code gives
/// the canonical (var, polarity) order used everywhere.
class Lit {
 public:
  Lit() = default;
  Lit(int var, int polarity) : code_(static_cast<std::uint32_t>(var) * 2 + polarity) {}

  /// DIMACS convention: positive i is x_i, negative i is the negation.
  static Lit from_dimacs(int d) { return d > 0 ? Lit(d, 1) : Lit(-d, 0); }
  int to_dimacs() const { return positive() ? var() : -var(); }

  int var() const { return static_cast<int>(code_ >> 1); }
  int polarity() const { return static_cast<int>(code_ & 1); }
  bool positive() const { return code_ & 1; }
  Lit negated() const {
    Lit l;
    l.code_ = code_ ^ 1;
    return l;
  }
  std::uint32_t code() const { return code_; }

  auto operator<=>(const Lit&) const = default;

 private:
  std::uint32_t code_ = 0;
};

/// A set of distinct literals, interpreted disjunctively. May be empty and
/// may contain a variable in both polarities (a tautological clause).
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Lit> lits);
  static Clause of(std::initializer_list<int> dimacs_lits);

  const std::vector<Lit>& lits() const { return lits_; }
  std::size_t width() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  bool contains(Lit l) const;
  bool tautological() const;

  /// "1 -2 0" style body line; the empty clause renders as "0".
  std::string to_dimacs() const;

  auto operator<=>(const Clause&) const = default;

 private:
  std::vector<Lit> lits_;  // sorted by code, unique
};

/// A set of clauses with a literal -> clause-id occurrence index. Immutable
/// after construction; duplicate clauses (as literal sets) collapse.
class Formula {
 public:
  Formula() = default;
  explicit Formula(std::vector<Clause> clauses);

  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t num_clauses() const { return clauses_.size(); }
  bool has_clauses() const { return !clauses_.empty(); }
  bool contains_empty_clause() const;

  /// Literals occurring in at least one clause, in canonical code order.
  const std::vector<Lit>& literals() const { return lits_; }
  bool occurs(Lit l) const;

  /// Clause ids of the clauses containing l; the all-zero set if l is absent.
  const ClauseIdSet& occurrence(Lit l) const;
  const ClauseIdSet& zero_set() const { return zero_; }

  /// Size measure: total literal occurrences plus clause count.
  std::size_t size() const { return size_; }
  std::size_t variable_count() const;
  int max_var() const;

  std::vector<Clause> materialize(const ClauseIdSet& ids) const;
  Formula without_clauses(const ClauseIdSet& ids) const;
  Formula without_clause(std::size_t idx) const;
  Formula with_literal_removed(std::size_t clause_idx, std::size_t lit_idx) const;

  bool operator==(const Formula& other) const { return clauses_ == other.clauses_; }

 private:
  std::vector<Clause> clauses_;     // sorted lexicographically, unique
  std::vector<Lit> lits_;           // sorted occurring literals
  std::vector<ClauseIdSet> occ_;    // parallel to lits_
  ClauseIdSet zero_;
  std::size_t size_ = 0;
};

/// A set of literals without complementary pairs. Construction validates.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<Lit> lits);

  const std::vector<Lit>& lits() const { return lits_; }
  bool contains(Lit l) const;
  std::size_t size() const { return lits_.size(); }

  bool operator==(const Assignment&) const = default;

 private:
  std::vector<Lit> lits_;  // sorted by code, unique
};

Lit negate(Lit l);

Formula parse_dimacs(std::istream& in);
Formula parse_dimacs(std::string_view text);
std::string emit_dimacs(const Formula& f);

std::size_t formula_size(const Formula& f);

/// True iff every clause of f contains a literal from t.
bool check_assignment(const Formula& f, const Assignment& t);

}  // namespace redusat
