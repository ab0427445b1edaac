#include "xsat/counter.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>

namespace xsat {

namespace {

using Phis = std::vector<BranchRequest>;

bool is_singleton(const Formula& f, Lit l) { return f.singleton(l.var()); }

std::vector<Lit> non_singletons(const Formula& f, const Clause& c) {
  std::vector<Lit> out;
  for (Lit l : c)
    if (!is_singleton(f, l)) out.push_back(l);
  return out;
}

std::optional<Lit> sole_singleton(const Formula& f, const Clause& c) {
  std::optional<Lit> found;
  for (Lit l : c) {
    if (!is_singleton(f, l)) continue;
    if (found) return std::nullopt;
    found = l;
  }
  return found;
}

// A (2+, 3+)-literal: both signs occur, at least twice and three times.
std::optional<Var> mixed_variable(const Formula& f) {
  for (Var v : f.variables()) {
    auto [p, n] = f.classify(Lit::pos(v));
    if (std::min(p, n) >= 2 && std::max(p, n) >= 3) return v;
  }
  return std::nullopt;
}

// First pair of clauses sharing at least two literals; returns the two shared
// literals of largest degree (smallest variable id on ties).
std::optional<std::pair<Lit, Lit>> common_pair(const Formula& f) {
  for (std::size_t i = 0; i < f.num_clauses(); ++i) {
    for (std::size_t j = i + 1; j < f.num_clauses(); ++j) {
      const Clause& a = f.clause(i);
      const Clause& b = f.clause(j);
      std::vector<Lit> shared;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
      shared.erase(std::unique(shared.begin(), shared.end()), shared.end());
      if (shared.size() < 2) continue;
      std::stable_sort(shared.begin(), shared.end(), [&](Lit x, Lit y) {
        return f.degree(x.var()) > f.degree(y.var());
      });
      return std::pair{shared[0], shared[1]};
    }
  }
  return std::nullopt;
}

Var max_degree_variable(const Formula& f) {
  Var best = 0;
  int best_d = -1;
  for (Var v : f.variables())
    if (f.degree(v) > best_d) {
      best = v;
      best_d = f.degree(v);
    }
  return best;
}

Phis both_signs(Lit x) { return {SingleLiteral{x}, SingleLiteral{~x}}; }

Phis common_pair_branches(std::pair<Lit, Lit> xy) {
  return {TwoClause{xy.first, xy.second}, LiteralPair{~xy.first, ~xy.second}};
}

// The degree-3 chain after the trivial cases, mc_small and component splitting.
BranchPlan choose_deg3(const Formula& f) {
  if (auto xy = common_pair(f)) return {"deg3.common-pair", common_pair_branches(*xy)};

  const auto& cs = f.clauses();
  auto other_clauses_of = [&](Var v, std::size_t self) {
    std::vector<std::size_t> out;
    for (std::size_t k : f.clauses_with(v))
      if (k != self) out.push_back(k);
    return out;
  };

  // 3-clause with a non-singleton x; prefer a 4-clause through x without singletons.
  std::optional<std::size_t> first_three;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].size() != 3) continue;
    if (!first_three) first_three = i;
    for (Lit x : non_singletons(f, cs[i])) {
      for (const auto& o : f.occurrences(x)) {
        const Clause& four = cs[o.clause];
        if (four.size() != 4 || non_singletons(f, four).size() != 4) continue;
        std::vector<Lit> rest;
        for (Lit l : four)
          if (l != x) rest.push_back(l);
        return {"deg3.three-clause-four", {TwoClause{x, rest[0]}, TwoClause{rest[1], rest[2]}}};
      }
    }
  }
  if (first_three) {
    auto ns = non_singletons(f, cs[*first_three]);
    if (!ns.empty()) {
      // The literal whose other clauses are longest removes the most variables when true.
      Lit best = ns[0];
      std::size_t best_len = 0;
      for (Lit x : ns) {
        std::size_t len = 0;
        for (std::size_t k : other_clauses_of(x.var(), *first_three)) len += cs[k].size();
        if (len > best_len) {
          best = x;
          best_len = len;
        }
      }
      return {"deg3.three-clause", both_signs(best)};
    }
  }

  for (const auto& c : cs)
    if (c.size() == 4 && non_singletons(f, c).size() == 4)
      return {"deg3.four-clause", {TwoClause{c[0], c[1]}, TwoClause{c[2], c[3]}}};

  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Clause& c = cs[i];
    if (c.size() != 4) continue;
    auto p = sole_singleton(f, c);
    if (!p) continue;
    auto ns = non_singletons(f, c);
    for (std::size_t zi = 0; zi < ns.size(); ++zi) {
      bool in_other_four = false;
      for (std::size_t k : other_clauses_of(ns[zi].var(), i)) in_other_four |= cs[k].size() == 4;
      if (!in_other_four) continue;
      std::vector<Lit> xy;
      for (std::size_t t = 0; t < ns.size(); ++t)
        if (t != zi) xy.push_back(ns[t]);
      return {"deg3.four-clause-shared", {TwoClause{xy[0], xy[1]}, TwoClause{ns[zi], *p}}};
    }
  }

  for (const auto& c : cs)
    if (c.size() == 5 && non_singletons(f, c).size() == 5)
      return {"deg3.five-clause",
              {TwoClause{c[0], c[1]}, TwoClause{c[2], c[3]}, SingleLiteral{c[4]}}};

  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Clause& c = cs[i];
    if (c.size() != 4) continue;
    auto p = sole_singleton(f, c);
    if (!p) continue;
    auto ns = non_singletons(f, c);
    bool all_long = true;
    for (Lit t : ns)
      for (std::size_t k : other_clauses_of(t.var(), i)) all_long &= cs[k].size() >= 6;
    if (all_long)
      return {"deg3.four-clause-long",
              {SingleLiteral{ns[0]}, SingleLiteral{ns[1]}, TwoClause{ns[2], *p}}};
  }

  for (const auto& c : cs) {
    if (c.size() < 6) continue;
    auto ns = non_singletons(f, c);
    if (!ns.empty()) return {"deg3.long-clause", both_signs(ns[0])};
  }

  for (const auto& c : cs) {
    if (c.size() != 5) continue;
    auto q = sole_singleton(f, c);
    if (!q) continue;
    auto ns = non_singletons(f, c);
    return {"deg3.five-clause-singleton",
            {TwoClause{ns[0], ns[1]}, SingleLiteral{ns[2]}, TwoClause{ns[3], *q}}};
  }

  return {"deg3.fallback", both_signs(Lit::pos(max_degree_variable(f)))};
}

std::optional<BranchPlan> choose_general(const Formula& f) {
  if (auto v = mixed_variable(f)) return BranchPlan{"mixed-literal", both_signs(Lit::pos(*v))};
  if (auto xy = common_pair(f)) return BranchPlan{"common-pair", common_pair_branches(*xy)};
  if (f.max_degree() >= 4) return BranchPlan{"high-degree", both_signs(Lit::pos(max_degree_variable(f)))};
  return std::nullopt;
}

Rational small_count(const WeightedState& s) {
  const Formula& f = s.formula;
  if (f.num_clauses() > 4) throw UsageError("mc_small: more than four clauses");
  if (s.refuted()) return 0;

  std::map<Var, bool> value;
  BigInt total = 0;
  // Depth-first over clauses; each level picks the true occurrence.
  auto walk = [&](auto&& self, std::size_t ci) -> void {
    if (ci == f.num_clauses()) {
      BigInt term = 1;
      for (const auto& [v, b] : value) term *= s.weight(b ? Lit::pos(v) : Lit::neg(v));
      total += term;
      return;
    }
    const Clause& c = f.clause(ci);
    for (std::size_t pick = 0; pick < c.size(); ++pick) {
      std::vector<Var> fresh;
      bool ok = true;
      for (std::size_t k = 0; k < c.size() && ok; ++k) {
        const Lit l = k == pick ? c[k] : ~c[k];
        auto [it, inserted] = value.emplace(l.var(), l.positive());
        if (inserted)
          fresh.push_back(l.var());
        else
          ok = it->second == l.positive();
      }
      if (ok) self(self, ci + 1);
      for (Var v : fresh) value.erase(v);
    }
  };
  walk(walk, 0);
  return s.multiplier * Rational(total);
}

} // namespace

ModelCount mc_small(const WeightedState& s) { return {to_integer(small_count(s))}; }

BranchPlan plan_branch(const Formula& f) {
  if (auto p = choose_general(f)) return *p;
  return choose_deg3(f);
}

void Counter::enter(int depth) { max_depth_ = std::max(max_depth_, depth); }

ModelCount Counter::count(const Formula& f) { return {count_state(WeightedState(f))}; }

BigInt Counter::count_state(const WeightedState& s) { return to_integer(solve(reduce(s), 0)); }

BigInt Counter::count_deg3(const WeightedState& s) {
  enter(0);
  return to_integer(solve_deg3(s, next_id_++, 0));
}

RunProfile Counter::profile() const {
  auto evs = sink_.events();
  RunProfile p = profile_run(evs, next_id_ > 0);
  p.max_depth = max_depth_;
  return p;
}

Rational Counter::solve(const WeightedState& s, int depth) {
  enter(depth);
  const std::uint64_t id = next_id_++;
  const Formula& f = s.formula;
  if (s.refuted() || f.has_empty_clause()) return 0;
  if (f.empty()) return s.multiplier;

  if (auto parts = f.components(); parts.size() >= 2) return split(s, std::move(parts), id, depth);

  if (auto plan = choose_general(f)) return branch(s, plan->label, plan->phis, id, depth);
  return solve_deg3(s, id, depth);
}

Rational Counter::solve_deg3(const WeightedState& s, std::uint64_t id, int depth) {
  const Formula& f = s.formula;
  if (s.refuted() || f.has_empty_clause()) return 0;
  if (f.empty()) return s.multiplier;
  if (f.num_clauses() <= 4) return small_count(s);
  if (auto parts = f.components(); parts.size() >= 2) return split(s, std::move(parts), id, depth);
  BranchPlan plan = choose_deg3(f);
  return branch(s, plan.label, plan.phis, id, depth);
}

Rational Counter::split(const WeightedState& s, std::vector<Formula> parts, std::uint64_t id, int depth) {
  BranchEvent e{id, std::string(kComponentsLabel), static_cast<int>(s.formula.num_vars()), {}, depth};
  for (const auto& p : parts) e.child_n.push_back(static_cast<int>(p.num_vars()));
  sink_.record(std::move(e));
  Rational product = s.multiplier;
  for (auto& p : parts) {
    WeightedState child;
    child.weights = s.weights_for(p);
    child.formula = std::move(p);
    product *= solve(child, depth + 1);
    if (product == 0) break;
  }
  return product;
}

Rational Counter::branch(const WeightedState& s, std::string_view label, std::span<const BranchRequest> phis,
                       std::uint64_t id, int depth) {
  std::vector<WeightedState> children;
  children.reserve(phis.size());
  BranchEvent e{id, std::string(label), static_cast<int>(s.formula.num_vars()), {}, depth};
  for (const auto& phi : phis) {
    children.push_back(omega(s, phi));
    e.child_n.push_back(static_cast<int>(children.back().formula.num_vars()));
  }
  sink_.record(std::move(e));
  Rational sum = 0;
  for (const auto& c : children) sum += solve(c, depth + 1);
  return sum;
}

ModelCount count(const Formula& f) {
  Counter c;
  return c.count(f);
}

} // namespace xsat
