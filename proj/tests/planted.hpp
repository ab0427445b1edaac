#pragma once

// Random weighted states with a planted instance of one reduce rule, plus
// random branch requests. Shared by the unit and acceptance suites.

#include <optional>

#include "support.hpp"
#include "xsat/oracle.hpp"
#include "xsat/reduce.hpp"

namespace xsat::testing {

inline Lit random_lit(std::mt19937_64& rng, Var v) { return draw(rng, 2) ? Lit::pos(v) : Lit::neg(v); }

// `k` literals over distinct variables from [lo, hi].
inline Clause random_sub(std::mt19937_64& rng, int k, Var lo, Var hi) {
  std::vector<Var> vs;
  for (Var v = lo; v <= hi; ++v) vs.push_back(v);
  Clause c;
  for (int i = 0; i < k && i < static_cast<int>(vs.size()); ++i) {
    std::size_t j = i + draw(rng, vs.size() - i);
    std::swap(vs[i], vs[j]);
    c.push_back(random_lit(rng, vs[i]));
  }
  return c;
}

inline Clause cat(Clause a, const Clause& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Background over x1..x`n`; planted material may use fresh variables above n.
// Total variable count stays at most 14.
inline WeightedState planted_state(std::mt19937_64& rng, Rule rule) {
  const int n = 6 + static_cast<int>(draw(rng, 4));
  std::vector<Clause> cs = random_clauses(rng, n, 1 + static_cast<int>(draw(rng, 4)), 3, 5);
  const Var f1 = n + 1, f2 = n + 2, f3 = n + 3;
  auto any = [&] { return static_cast<Var>(1 + draw(rng, n)); };
  switch (rule) {
    case Rule::UnitClause:
      cs.push_back({random_lit(rng, any())});
      break;
    case Rule::TwoClause:
      cs.push_back(random_sub(rng, 2, 1, n));
      break;
    case Rule::DuplicateLiteral: {
      Clause c = random_sub(rng, 3, 1, n);
      c.push_back(c[0]);
      cs.push_back(c);
      break;
    }
    case Rule::ComplementaryPair: {
      Clause c = random_sub(rng, 2 + static_cast<int>(draw(rng, 3)), 1, n);
      c.push_back(~c[0]);
      cs.push_back(c);
      break;
    }
    case Rule::EquivalentLiterals: {
      Clause c = random_sub(rng, 2 + static_cast<int>(draw(rng, 2)), 1, n - 2);
      cs.push_back(cat(c, {random_lit(rng, n - 1)}));
      cs.push_back(cat(c, {random_lit(rng, draw(rng, 2) ? n : f1)}));
      break;
    }
    case Rule::Subsumption: {
      Clause c = random_sub(rng, 4 + static_cast<int>(draw(rng, 2)), 1, n);
      cs.push_back(Clause(c.begin(), c.begin() + 3));
      cs.push_back(c);
      break;
    }
    case Rule::SharedPrefix: {
      Clause c = random_sub(rng, 5, 1, n);
      Clause c1(c.begin(), c.begin() + 2);
      cs.push_back(cat(c1, {c[2]}));
      cs.push_back(cat(c1, Clause(c.begin() + 3, c.begin() + 3 + 1 + draw(rng, 2))));
      break;
    }
    case Rule::OppositeOverlap: {
      Clause a = random_sub(rng, 4, 1, n);
      Clause b = a;
      b.resize(2 + draw(rng, 2));
      b[0] = ~b[0];
      if (draw(rng, 2)) b[1] = ~b[1];
      b.push_back(random_lit(rng, f1));
      cs.push_back(a);
      cs.push_back(b);
      break;
    }
    case Rule::SingletonGroup: {
      Clause c = random_sub(rng, 1 + static_cast<int>(draw(rng, 2)), 1, n);
      c.push_back(random_lit(rng, f1));
      c.push_back(random_lit(rng, f2));
      if (draw(rng, 2)) c.push_back(random_lit(rng, f3));
      cs.push_back(c);
      break;
    }
    case Rule::ResolveOneK: {
      const Lit x = random_lit(rng, f1);
      cs.push_back(cat({x}, random_sub(rng, 2, 1, n)));
      const int k = 1 + static_cast<int>(draw(rng, 3));
      for (int i = 0; i < k; ++i) cs.push_back(cat({~x}, random_sub(rng, 2, 1, n)));
      break;
    }
    case Rule::ResolveTwoTwo: {
      const Lit x = random_lit(rng, f1);
      for (int i = 0; i < 2; ++i) {
        cs.push_back(cat({x}, random_sub(rng, 2, 1, n)));
        cs.push_back(cat({~x}, random_sub(rng, 2, 1, n)));
      }
      break;
    }
    case Rule::CommonSubclause: {
      Clause c = {random_lit(rng, f1), random_lit(rng, f2)};
      if (draw(rng, 2)) c.push_back(random_lit(rng, f3));
      const int k = 2 + static_cast<int>(draw(rng, 2));
      for (int i = 0; i < k; ++i) cs.push_back(cat(c, random_sub(rng, 1 + static_cast<int>(draw(rng, 2)), 1, n)));
      break;
    }
  }
  WeightedState s{Formula(std::move(cs))};
  randomize_weights(rng, s);
  return s;
}

// A state on which `rule` fires, with the rule's result.
struct Firing {
  WeightedState before;
  WeightedState after;
};

inline std::optional<Firing> planted_firing(std::mt19937_64& rng, Rule rule, int attempts = 200) {
  for (int i = 0; i < attempts; ++i) {
    WeightedState s = planted_state(rng, rule);
    if (auto out = apply_rule(s, rule)) return Firing{std::move(s), std::move(*out)};
  }
  return std::nullopt;
}

enum class PhiForm { SingleLiteral, LiteralPair, TwoClause };

inline BranchRequest random_phi(std::mt19937_64& rng, const Formula& f, PhiForm form) {
  auto vars = f.variables();
  Var a = vars[draw(rng, vars.size())];
  Var b = a;
  while (vars.size() > 1 && b == a) b = vars[draw(rng, vars.size())];
  switch (form) {
    case PhiForm::SingleLiteral: return SingleLiteral{random_lit(rng, a)};
    case PhiForm::LiteralPair: return LiteralPair{random_lit(rng, a), random_lit(rng, b)};
    case PhiForm::TwoClause: return TwoClause{random_lit(rng, a), random_lit(rng, b)};
  }
  return SingleLiteral{Lit::pos(a)};
}

// The state restricted to assignments satisfying `phi`, expressed with extra
// clauses so the oracle can count it independently of omega.
inline WeightedState constrained(const WeightedState& s, const BranchRequest& phi) {
  std::vector<Clause> cs = s.formula.clauses();
  if (auto* p = std::get_if<SingleLiteral>(&phi)) cs.push_back({p->lit});
  if (auto* p = std::get_if<LiteralPair>(&phi)) {
    cs.push_back({p->first});
    cs.push_back({p->second});
  }
  if (auto* p = std::get_if<TwoClause>(&phi)) cs.push_back({p->first, p->second});
  WeightedState out = s;
  out.formula = Formula(std::move(cs));
  return out;
}

inline BigInt wc(const WeightedState& s) { return weighted_brute_force(s).value; }

} // namespace xsat::testing
