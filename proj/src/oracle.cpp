#include "redusat/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace redusat {

namespace {

std::vector<int> occurring_vars(const Formula& f) {
  std::vector<int> vars;
  for (Lit l : f.literals())
    if (vars.empty() || vars.back() != l.var()) vars.push_back(l.var());
  return vars;
}

Assignment verified_witness(const Formula& f, std::vector<Lit> lits) {
  Assignment w(std::move(lits));
  if (!check_assignment(f, w))
    throw std::logic_error("oracle produced a witness that fails verification");
  return w;
}

}  // namespace

OracleVerdict brute_force(const Formula& f, const OracleConfig& cfg) {
  const std::vector<int> vars = occurring_vars(f);
  if (vars.size() > cfg.brute_force_var_cap)
    throw CapacityError("brute force oracle: " + std::to_string(vars.size()) +
                        " variables exceed cap " + std::to_string(cfg.brute_force_var_cap));

  // clauses as (variable position, polarity) pairs for cheap mask evaluation
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> body;
  body.reserve(f.num_clauses());
  for (const Clause& c : f.clauses()) {
    auto& enc = body.emplace_back();
    for (Lit l : c.lits()) {
      auto it = std::lower_bound(vars.begin(), vars.end(), l.var());
      enc.emplace_back(static_cast<std::size_t>(it - vars.begin()),
                       static_cast<std::uint64_t>(l.polarity()));
    }
  }

  OracleVerdict v;
  v.method = OracleMethod::enumeration;
  const std::uint64_t total = std::uint64_t{1} << vars.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    ++v.decisions;
    bool ok = true;
    for (const auto& enc : body) {
      bool sat = false;
      for (auto [pos, pol] : enc)
        if (((mask >> pos) & 1) == pol) {
          sat = true;
          break;
        }
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<Lit> lits;
      lits.reserve(vars.size());
      for (std::size_t j = 0; j < vars.size(); ++j)
        lits.emplace_back(vars[j], static_cast<int>((mask >> j) & 1));
      v.sat = true;
      v.witness = verified_witness(f, std::move(lits));
      return v;
    }
  }
  v.sat = false;
  return v;
}

namespace {

std::vector<Clause> assign_literal(const std::vector<Clause>& cls, Lit l) {
  std::vector<Clause> out;
  out.reserve(cls.size());
  const Lit nl = l.negated();
  for (const Clause& c : cls) {
    if (c.contains(l)) continue;
    if (c.contains(nl)) {
      std::vector<Lit> kept;
      kept.reserve(c.width() - 1);
      for (Lit x : c.lits())
        if (x != nl) kept.push_back(x);
      out.emplace_back(std::move(kept));
    } else {
      out.push_back(c);
    }
  }
  return out;
}

struct DpllCtx {
  std::uint64_t nodes = 0;
  std::uint64_t budget;
};

bool dpll_rec(std::vector<Clause> cls, std::vector<Lit>& assign, DpllCtx& ctx) {
  if (++ctx.nodes > ctx.budget)
    throw BudgetExceededError("dpll node budget of " + std::to_string(ctx.budget) +
                              " exhausted");

  for (;;) {
    if (cls.empty()) return true;
    bool changed = false;

    for (const Clause& c : cls)
      if (c.empty()) return false;

    for (const Clause& c : cls)
      if (c.width() == 1) {
        Lit unit = c.lits()[0];
        assign.push_back(unit);
        cls = assign_literal(cls, unit);
        changed = true;
        break;
      }
    if (changed) continue;

    // pure literal: lowest-code literal whose negation is absent
    {
      std::vector<Lit> present;
      for (const Clause& c : cls)
        for (Lit l : c.lits()) present.push_back(l);
      std::sort(present.begin(), present.end());
      present.erase(std::unique(present.begin(), present.end()), present.end());
      for (Lit l : present) {
        if (!std::binary_search(present.begin(), present.end(), l.negated())) {
          assign.push_back(l);
          cls = assign_literal(cls, l);
          changed = true;
          break;
        }
      }
    }
    if (changed) continue;
    break;
  }

  // branch on the lowest-index variable still occurring, true first
  int v = cls.front().lits().front().var();
  for (const Clause& c : cls)
    v = std::min(v, c.lits().front().var());

  const std::size_t mark = assign.size();
  for (int pol : {1, 0}) {
    Lit d(v, pol);
    assign.push_back(d);
    if (dpll_rec(assign_literal(cls, d), assign, ctx)) return true;
    assign.resize(mark);
  }
  return false;
}

}  // namespace

OracleVerdict dpll(const Formula& f, const OracleConfig& cfg) {
  DpllCtx ctx{0, cfg.dpll_node_budget};
  std::vector<Lit> assign;
  std::vector<Clause> cls = f.clauses();

  OracleVerdict v;
  v.method = OracleMethod::dpll;
  v.sat = dpll_rec(std::move(cls), assign, ctx);
  v.decisions = ctx.nodes;
  if (v.sat) v.witness = verified_witness(f, std::move(assign));
  return v;
}

}  // namespace redusat
