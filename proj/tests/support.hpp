#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "xsat/dimacs.hpp"
#include "xsat/weighted_state.hpp"

namespace xsat::testing {

// Clauses written in DIMACS integers: F({{1, 2, 3}, {-1, 4, 5}}).
inline Formula F(std::initializer_list<std::initializer_list<int>> clauses) {
  std::vector<Clause> cs;
  for (const auto& c : clauses) {
    Clause cl;
    for (int l : c) cl.push_back(Lit(l));
    cs.push_back(std::move(cl));
  }
  return Formula(std::move(cs));
}

inline Lit L(int l) { return Lit(l); }

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t k) { return rng() % k; }

// Random clause list (duplicates and complementary pairs allowed).
inline std::vector<Clause> random_clauses(std::mt19937_64& rng, int n, int m, int wmin, int wmax,
                                          bool allow_repeats = false) {
  std::vector<Clause> cs;
  for (int i = 0; i < m; ++i) {
    const int w = wmin + static_cast<int>(draw(rng, wmax - wmin + 1));
    Clause c;
    std::vector<Var> vs;
    for (Var v = 1; v <= n; ++v) vs.push_back(v);
    for (int k = 0; k < w && k < n; ++k) {
      std::size_t j = k + draw(rng, vs.size() - k);
      std::swap(vs[k], vs[j]);
      Var v = vs[k];
      if (allow_repeats && draw(rng, 6) == 0 && !c.empty()) v = c[draw(rng, c.size())].var();
      c.push_back(draw(rng, 2) ? Lit::pos(v) : Lit::neg(v));
    }
    cs.push_back(std::move(c));
  }
  return cs;
}

inline void randomize_weights(std::mt19937_64& rng, WeightedState& s, int max_weight = 3) {
  for (Var v : s.formula.variables()) {
    s.set_weight(Lit::pos(v), BigInt(1 + draw(rng, max_weight)));
    s.set_weight(Lit::neg(v), BigInt(1 + draw(rng, max_weight)));
  }
  s.multiplier = 1 + draw(rng, 2);
}

} // namespace xsat::testing
