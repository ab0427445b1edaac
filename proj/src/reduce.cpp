#include "xsat/reduce.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace xsat {

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::UnitClause: return "unit-clause";
    case Rule::TwoClause: return "two-clause";
    case Rule::DuplicateLiteral: return "duplicate-literal";
    case Rule::ComplementaryPair: return "complementary-pair";
    case Rule::EquivalentLiterals: return "equivalent-literals";
    case Rule::Subsumption: return "subsumption";
    case Rule::SharedPrefix: return "shared-prefix";
    case Rule::OppositeOverlap: return "opposite-overlap";
    case Rule::SingletonGroup: return "singleton-group";
    case Rule::ResolveOneK: return "resolve-1k";
    case Rule::ResolveTwoTwo: return "resolve-22";
    case Rule::CommonSubclause: return "common-subclause";
  }
  return "?";
}

namespace {

bool distinct_vars(const Clause& c) {
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i].var() == c[i - 1].var()) return false;
  return true;
}

// Multiset operations on sorted clauses.
Clause minus(const Clause& a, const Clause& b) {
  Clause out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Clause common(const Clause& a, const Clause& b) {
  Clause out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Clause join(const Clause& a, const Clause& b) {
  Clause out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

Clause literal_set(Clause c) {
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

std::vector<Lit> negations(const Clause& c) {
  std::vector<Lit> out;
  out.reserve(c.size());
  for (Lit l : c) out.push_back(~l);
  return out;
}

void erase_weights(WeightedState& s, Var v) {
  s.weights.erase(Lit::pos(v));
  s.weights.erase(Lit::neg(v));
}

// A variable that left the formula without being assigned is free: both of
// its values extend every model.
void credit_vanished(WeightedState& s, std::initializer_list<Var> vars) {
  for (Var v : vars) {
    if (s.formula.contains(v)) continue;
    s.multiplier *= Rational(s.weight(Lit::pos(v)) + s.weight(Lit::neg(v)));
    erase_weights(s, v);
  }
}

// Eliminates `from` in favour of `to`, where from == to holds in every model.
// The surviving literal carries the weight of the eliminated one.
WeightedState identify(const WeightedState& s, Formula f, Lit from, Lit to) {
  WeightedState out = s;
  out.formula = std::move(f).substitute(from, to);
  out.set_weight(to, s.weight(to) * s.weight(from));
  out.set_weight(~to, s.weight(~to) * s.weight(~from));
  erase_weights(out, from.var());
  credit_vanished(out, {to.var()});
  return out;
}

// Eliminated literal for a pair of interchangeable variables: the one of
// larger degree, ties going to the larger variable id.
bool eliminate_first(const Formula& f, Lit a, Lit b) {
  int da = f.degree(a.var()), db = f.degree(b.var());
  if (da != db) return da > db;
  return a.var() > b.var();
}

std::vector<Clause> without(const Formula& f, std::initializer_list<std::size_t> drop) {
  std::vector<Clause> out;
  out.reserve(f.num_clauses());
  for (std::size_t i = 0; i < f.num_clauses(); ++i)
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) out.push_back(f.clause(i));
  return out;
}

std::optional<WeightedState> unit_clause(const WeightedState& s) {
  for (const auto& c : s.formula.clauses())
    if (c.size() == 1) return assign_true(s, c[0]);
  return std::nullopt;
}

std::optional<WeightedState> two_clause(const WeightedState& s) {
  const Formula& f = s.formula;
  for (std::size_t i = 0; i < f.num_clauses(); ++i) {
    const Clause& c = f.clause(i);
    if (c.size() != 2 || c[0].var() == c[1].var()) continue;
    auto [elim, keep] = eliminate_first(f, c[0], c[1]) ? std::pair{c[0], c[1]} : std::pair{c[1], c[0]};
    return identify(s, Formula(without(f, {i})), elim, ~keep);
  }
  return std::nullopt;
}

std::optional<WeightedState> duplicate_literal(const WeightedState& s) {
  for (const auto& c : s.formula.clauses())
    for (std::size_t j = 1; j < c.size(); ++j)
      if (c[j] == c[j - 1]) return assign_true(s, ~c[j]);
  return std::nullopt;
}

std::optional<WeightedState> complementary_pair(const WeightedState& s) {
  for (const auto& c : s.formula.clauses()) {
    for (std::size_t j = 1; j < c.size(); ++j) {
      if (!complementary(c[j], c[j - 1])) continue;
      const Var x = c[j].var();
      Clause rest = minus(c, Clause{Lit::neg(x), Lit::pos(x)});
      WeightedState out = assign_true(s, negations(rest));
      if (out.refuted()) return out;
      const Clause tautology{Lit::neg(x), Lit::pos(x)};
      std::vector<Clause> kept;
      bool removed = false;
      for (const auto& d : out.formula.clauses()) {
        if (d == tautology)
          removed = true;
        else
          kept.push_back(d);
      }
      if (removed) {
        out.formula = Formula(std::move(kept));
        credit_vanished(out, {x});
      }
      return out;
    }
  }
  return std::nullopt;
}

std::optional<WeightedState> equivalent_literals(const WeightedState& s) {
  const Formula& f = s.formula;
  for (std::size_t i = 0; i < f.num_clauses(); ++i) {
    const Clause& a = f.clause(i);
    if (a.size() < 2 || !distinct_vars(a)) continue;
    for (std::size_t j = i + 1; j < f.num_clauses(); ++j) {
      const Clause& b = f.clause(j);
      if (b.size() != a.size() || !distinct_vars(b)) continue;
      Clause da = minus(a, b), db = minus(b, a);
      if (da.size() != 1 || da[0].var() == db[0].var()) continue;
      Lit x = da[0], y = db[0];
      if (eliminate_first(f, x, y)) return identify(s, f, x, y);
      return identify(s, f, y, x);
    }
  }
  return std::nullopt;
}

std::optional<WeightedState> subsumption(const WeightedState& s) {
  const Formula& f = s.formula;
  std::vector<Clause> sets;
  sets.reserve(f.num_clauses());
  for (const auto& c : f.clauses()) sets.push_back(literal_set(c));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) continue;
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j || sets[i].size() >= sets[j].size()) continue;
      if (!std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end())) continue;
      return assign_true(s, negations(minus(sets[j], sets[i])));
    }
  }
  return std::nullopt;
}

std::optional<WeightedState> shared_prefix(const WeightedState& s) {
  const Formula& f = s.formula;
  for (std::size_t i = 0; i < f.num_clauses(); ++i) {
    const Clause& a = f.clause(i);
    if (a.size() < 3 || !distinct_vars(a)) continue;
    for (std::size_t j = 0; j < f.num_clauses(); ++j) {
      if (i == j) continue;
      const Clause& b = f.clause(j);
      if (!distinct_vars(b)) continue;
      Clause shared = common(a, b);
      if (shared.size() < 2 || shared.size() + 1 != a.size() || b.size() <= shared.size()) continue;
      Lit x = minus(a, shared)[0];
      std::vector<Clause> cs = without(f, {j});
      cs.push_back(join(Clause{~x}, minus(b, shared)));
      WeightedState out = s;
      out.formula = Formula(std::move(cs));
      return out;
    }
  }
  return std::nullopt;
}

// For clauses A and B over distinct variables, let N be the variables with
// opposite signs and P the literals shared verbatim. Since A has at most one
// true literal, every N-literal of A but one is false, so the matching
// literals of B are true:
//   |N| >= 3: B has two true literals, refuted.
//   |N| == 2: B's true literal lies in N, so all other literals of A and B are false.
//   |N| == 1, P nonempty: either side of the opposed pair falsifies P.
std::optional<WeightedState> opposite_overlap(const WeightedState& s) {
  const Formula& f = s.formula;
  for (std::size_t i = 0; i < f.num_clauses(); ++i) {
    const Clause& a = f.clause(i);
    if (!distinct_vars(a)) continue;
    for (std::size_t j = i + 1; j < f.num_clauses(); ++j) {
      const Clause& b = f.clause(j);
      if (!distinct_vars(b)) continue;
      std::vector<Lit> opposed, shared;
      for (Lit l : a) {
        if (std::binary_search(b.begin(), b.end(), ~l))
          opposed.push_back(l);
        else if (std::binary_search(b.begin(), b.end(), l))
          shared.push_back(l);
      }
      if (opposed.empty()) continue;
      if (opposed.size() >= 3) return WeightedState::contradiction();
      std::vector<Lit> falsified;
      if (opposed.size() == 2) {
        auto in_pair = [&](Lit l) {
          return l.var() == opposed[0].var() || l.var() == opposed[1].var();
        };
        std::set<Lit> others;
        for (Lit l : a)
          if (!in_pair(l)) others.insert(~l);
        for (Lit l : b)
          if (!in_pair(l)) others.insert(~l);
        falsified.assign(others.begin(), others.end());
      } else {
        for (Lit l : shared) falsified.push_back(~l);
      }
      if (falsified.empty()) continue;
      return assign_true(s, falsified);
    }
  }
  return std::nullopt;
}

// Literals whose variable occurs only as that literal, at most once per
// clause, grouped by the exact set of clauses they appear in.
std::map<std::vector<std::size_t>, std::vector<Lit>> private_groups(const Formula& f) {
  std::map<std::vector<std::size_t>, std::vector<Lit>> groups;
  for (Var v : f.variables()) {
    auto counts = f.classify(Lit::pos(v));
    if (counts.positive > 0 && counts.negative > 0) continue;
    Lit l = counts.positive > 0 ? Lit::pos(v) : Lit::neg(v);
    auto cs = f.clauses_with(v);
    if (static_cast<int>(cs.size()) != f.degree(v)) continue;
    groups[cs].push_back(l);
  }
  return groups;
}

// Collapses the literals `group`, which appear together in exactly the
// clauses `where`, into the representative with the smallest variable id.
// The representative is true iff exactly one member was.
WeightedState collapse(const WeightedState& s, const std::vector<std::size_t>& where,
                       std::vector<Lit> group) {
  std::sort(group.begin(), group.end());
  const Lit rep = group.front();
  BigInt all_false = 1;
  for (Lit l : group) all_false *= s.weight(~l);
  BigInt one_true = 0;
  for (Lit l : group) {
    BigInt term = s.weight(l);
    for (Lit o : group)
      if (o != l) term *= s.weight(~o);
    one_true += term;
  }
  std::vector<Clause> cs = s.formula.clauses();
  for (std::size_t idx : where) {
    Clause& c = cs[idx];
    std::erase_if(c, [&](Lit l) { return l != rep && std::binary_search(group.begin(), group.end(), l); });
  }
  WeightedState out = s;
  out.formula = Formula(std::move(cs));
  for (Lit l : group) erase_weights(out, l.var());
  out.set_weight(rep, std::move(one_true));
  out.set_weight(~rep, std::move(all_false));
  return out;
}

std::optional<WeightedState> singleton_group(const WeightedState& s) {
  for (const auto& [where, group] : private_groups(s.formula))
    if (where.size() == 1 && group.size() >= 2) return collapse(s, where, group);
  return std::nullopt;
}

std::optional<WeightedState> common_subclause(const WeightedState& s) {
  for (const auto& [where, group] : private_groups(s.formula))
    if (where.size() >= 2 && group.size() >= 2) return collapse(s, where, group);
  return std::nullopt;
}

// Occurrences of v are spread over distinct clauses with v at most once each.
bool spread(const Formula& f, Var v) {
  return static_cast<int>(f.clauses_with(v).size()) == f.degree(v);
}

Clause drop_one(const Clause& c, Lit l) { return minus(c, Clause{l}); }

// Eliminating x by resolution makes x true exactly when the sub-clause `rest`
// (distinct variables, at most one true literal in every model) is all false.
// Its weight is moved onto rest: every literal of rest takes a factor w(~x),
// every negation a factor w(x), which overcounts by w(x)^(|rest|-1) in every
// model; the multiplier divides that out.
void fold_eliminated(WeightedState& out, const WeightedState& s, Lit x, const Clause& rest) {
  if (s.unit_weight(x.var())) return;
  const BigInt wx = s.weight(x), wnx = s.weight(~x);
  for (Lit c : rest) {
    out.set_weight(c, s.weight(c) * wnx);
    out.set_weight(~c, s.weight(~c) * wx);
  }
  BigInt overcount = boost::multiprecision::pow(wx, static_cast<unsigned>(rest.size() - 1));
  out.multiplier /= Rational(overcount);
  erase_weights(out, x.var());
}

std::optional<WeightedState> resolve_one_k(const WeightedState& s) {
  const Formula& f = s.formula;
  for (Var v : f.variables()) {
    if (!spread(f, v)) continue;
    for (Lit x : {Lit::pos(v), Lit::neg(v)}) {
      if (f.count(x) != 1 || f.count(~x) < 1) continue;
      const std::size_t ai = f.occurrences(x)[0].clause;
      const Clause rest = drop_one(f.clause(ai), x);
      if (!s.unit_weight(v) && (rest.empty() || !distinct_vars(rest))) continue;
      std::vector<Clause> cs;
      std::vector<bool> drop(f.num_clauses(), false);
      drop[ai] = true;
      for (const auto& o : f.occurrences(~x)) {
        drop[o.clause] = true;
        cs.push_back(join(rest, drop_one(f.clause(o.clause), ~x)));
      }
      for (std::size_t i = 0; i < f.num_clauses(); ++i)
        if (!drop[i]) cs.push_back(f.clause(i));
      WeightedState out = s;
      out.formula = Formula(std::move(cs));
      fold_eliminated(out, s, x, rest);
      return out;
    }
  }
  return std::nullopt;
}

std::optional<WeightedState> resolve_two_two(const WeightedState& s) {
  const Formula& f = s.formula;
  for (Var v : f.variables()) {
    const Lit x = Lit::pos(v);
    if (f.classify(x) != LiteralCounts{2, 2} || !spread(f, v)) continue;
    std::vector<Clause> pos, neg;
    std::vector<bool> drop(f.num_clauses(), false);
    for (const auto& o : f.occurrences(x)) {
      drop[o.clause] = true;
      pos.push_back(drop_one(f.clause(o.clause), x));
    }
    for (const auto& o : f.occurrences(~x)) {
      drop[o.clause] = true;
      neg.push_back(drop_one(f.clause(o.clause), ~x));
    }
    if (!s.unit_weight(v) && (pos[0].empty() || !distinct_vars(pos[0]))) continue;
    std::vector<Clause> cs;
    for (const auto& p : pos)
      for (const auto& n : neg) cs.push_back(join(p, n));
    for (std::size_t i = 0; i < f.num_clauses(); ++i)
      if (!drop[i]) cs.push_back(f.clause(i));
    WeightedState out = s;
    out.formula = Formula(std::move(cs));
    fold_eliminated(out, s, x, pos[0]);
    return out;
  }
  return std::nullopt;
}

} // namespace

WeightedState assign_true(const WeightedState& s, Lit l) { return assign_true(s, std::span<const Lit>(&l, 1)); }

WeightedState assign_true(const WeightedState& s, std::span<const Lit> lits) {
  if (s.refuted()) return s;
  const Formula& f = s.formula;
  for (Lit l : lits)
    if (!f.contains(l.var())) throw UsageError("assign_true: variable " + std::to_string(l.var()) + " is not in the formula");

  std::map<Var, bool> value;
  std::vector<Lit> pending;
  BigInt factor = 1;
  auto make_true = [&](Lit l) {
    auto [it, fresh] = value.emplace(l.var(), l.positive());
    if (!fresh) return it->second == l.positive();
    factor *= s.weight(l);
    pending.push_back(l);
    return true;
  };
  auto truth = [&](Lit l) -> int {  // 1 true, 0 false, -1 open
    auto it = value.find(l.var());
    if (it == value.end()) return -1;
    return it->second == l.positive() ? 1 : 0;
  };

  std::vector<bool> satisfied(f.num_clauses(), false);
  // Returns false on refutation.
  auto visit = [&](std::size_t ci) {
    if (satisfied[ci]) return true;
    int trues = 0, open = 0;
    for (Lit l : f.clause(ci)) {
      int t = truth(l);
      trues += t == 1;
      open += t == -1;
    }
    if (trues >= 2) return false;
    if (trues == 0) return open > 0;
    satisfied[ci] = true;
    std::vector<Lit> open_lits;
    for (Lit l : f.clause(ci))
      if (truth(l) == -1) open_lits.push_back(l);
    for (Lit l : open_lits)
      if (!make_true(~l)) return false;
    return true;
  };

  for (Lit l : lits)
    if (!make_true(l)) return WeightedState::contradiction();
  while (!pending.empty()) {
    Lit l = pending.back();
    pending.pop_back();
    for (Lit side : {l, ~l})
      for (const auto& o : f.occurrences(side))
        if (!visit(o.clause)) return WeightedState::contradiction();
  }

  std::vector<Clause> cs;
  for (std::size_t i = 0; i < f.num_clauses(); ++i) {
    if (satisfied[i]) continue;
    Clause c;
    for (Lit l : f.clause(i))
      if (truth(l) == -1) c.push_back(l);
    cs.push_back(std::move(c));
  }
  WeightedState out;
  out.formula = Formula(std::move(cs));
  out.weights = s.weights;
  for (const auto& [v, val] : value) erase_weights(out, v);
  out.multiplier = s.multiplier * Rational(factor);
  return out;
}

std::optional<WeightedState> apply_rule(const WeightedState& s, Rule rule) {
  if (s.refuted()) return std::nullopt;
  switch (rule) {
    case Rule::UnitClause: return unit_clause(s);
    case Rule::TwoClause: return two_clause(s);
    case Rule::DuplicateLiteral: return duplicate_literal(s);
    case Rule::ComplementaryPair: return complementary_pair(s);
    case Rule::EquivalentLiterals: return equivalent_literals(s);
    case Rule::Subsumption: return subsumption(s);
    case Rule::SharedPrefix: return shared_prefix(s);
    case Rule::OppositeOverlap: return opposite_overlap(s);
    case Rule::SingletonGroup: return singleton_group(s);
    case Rule::ResolveOneK: return resolve_one_k(s);
    case Rule::ResolveTwoTwo: return resolve_two_two(s);
    case Rule::CommonSubclause: return common_subclause(s);
  }
  return std::nullopt;
}

WeightedState reduce(WeightedState s, ReduceLog* log, std::span<const Rule> order) {
  for (;;) {
    if (s.refuted() || s.formula.has_empty_clause()) return WeightedState::contradiction();
    bool fired = false;
    for (Rule r : order) {
      if (auto next = apply_rule(s, r)) {
        s = std::move(*next);
        if (log) log->push_back({r, s});
        fired = true;
        break;
      }
    }
    if (!fired) return s;
  }
}

std::string to_string(const BranchRequest& phi) {
  std::ostringstream os;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SingleLiteral>)
          os << '{' << p.lit << '}';
        else if constexpr (std::is_same_v<T, LiteralPair>)
          os << '{' << p.first << ", " << p.second << '}';
        else
          os << '{' << p.first << " | " << p.second << '}';
      },
      phi);
  return os.str();
}

WeightedState omega(const WeightedState& s, const BranchRequest& phi) {
  if (s.refuted()) return s;
  return std::visit(
      [&](const auto& p) -> WeightedState {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SingleLiteral>) {
          return reduce(assign_true(s, p.lit));
        } else if constexpr (std::is_same_v<T, LiteralPair>) {
          const std::array<Lit, 2> both{p.first, p.second};
          return reduce(assign_true(s, both));
        } else {
          if (!s.formula.contains(p.first.var()) || !s.formula.contains(p.second.var()))
            throw UsageError("omega: two-clause branch on a variable outside the formula");
          return reduce(identify(s, s.formula, p.first, ~p.second));
        }
      },
      phi);
}

std::vector<std::string> fixpoint_violations(const WeightedState& s) {
  std::vector<std::string> out;
  if (s.refuted()) return out;
  const Formula& f = s.formula;
  for (const auto& c : f.clauses()) {
    if (c.size() <= 2) out.push_back("short clause " + to_string(c));
    int singles = 0;
    for (Lit l : c) singles += f.singleton(l.var());
    if (singles > 1) out.push_back("several singletons in " + to_string(c));
  }
  for (Var v : f.variables()) {
    auto [p, n] = f.classify(Lit::pos(v));
    if (p > 0 && n > 0 && !(std::min(p, n) >= 2 && std::max(p, n) >= 3))
      out.push_back("mixed variable x" + std::to_string(v) + " is (" + std::to_string(p) + "," +
                    std::to_string(n) + ")");
  }
  auto vars_of = [](const Clause& c) {
    std::set<Var> vs;
    for (Lit l : c) vs.insert(l.var());
    return vs;
  };
  for (std::size_t i = 0; i < f.num_clauses(); ++i) {
    auto vi = vars_of(f.clause(i));
    for (std::size_t j = i + 1; j < f.num_clauses(); ++j) {
      auto vj = vars_of(f.clause(j));
      int only_i = 0, only_j = 0;
      for (Var v : vi) only_i += !vj.contains(v);
      for (Var v : vj) only_j += !vi.contains(v);
      if (only_i < 2 || only_j < 2)
        out.push_back("clauses " + to_string(f.clause(i)) + " and " + to_string(f.clause(j)) +
                      " lack two private variables each");
      Clause shared = literal_set(common(f.clause(i), f.clause(j)));
      if (shared.size() >= 2) {
        bool elsewhere = std::any_of(shared.begin(), shared.end(), [&](Lit l) {
          for (std::size_t k : f.clauses_with(l.var()))
            if (k != i && k != j) return true;
          return false;
        });
        if (!elsewhere)
          out.push_back("shared literals of " + to_string(f.clause(i)) + " and " + to_string(f.clause(j)) +
                        " appear nowhere else");
      }
    }
  }
  return out;
}

} // namespace xsat
