#include "doctest.h"

#include <algorithm>

#include "support.hpp"
#include "xsat/oracle.hpp"

using namespace xsat;
using namespace xsat::testing;

TEST_CASE("brute force examples") {
  CHECK(brute_force_count(F({{1, 2, 3}})).value == 3);
  CHECK(brute_force_count(F({{1, 2, 3}, {1, 2, 4}, {5, -6}})).value == 6);
  CHECK(brute_force_count(F({{1, 1, 2}})).value == 1);
  // x | ~x always has exactly one true occurrence; any other literal must be false.
  CHECK(brute_force_count(F({{1, -1}})).value == 2);
  CHECK(brute_force_count(F({{1, -1, 2}})).value == 2);
  CHECK(brute_force_count(F({{1, -1, 2}, {2, 3}})).value == 2);
  CHECK(brute_force_count(Formula()).value == 1);
  CHECK(brute_force_count(F({{1, 2}, {}})).value == 0);
}

TEST_CASE("weighted brute force examples") {
  WeightedState s{F({{1, 2}})};
  s.set_weight(L(1), 2);
  CHECK(weighted_brute_force(s).value == 3);
  CHECK(weighted_brute_force(WeightedState::contradiction()).value == 0);
  s.multiplier = 5;
  CHECK(weighted_brute_force(s).value == 15);
}

TEST_CASE("oracle refuses above its cap") {
  std::vector<Clause> cs;
  for (int v = 1; v <= 27; v += 3) cs.push_back({L(v), L(v + 1), L(v + 2)});
  Formula f(cs);
  CHECK_THROWS_AS(brute_force_count(f), OracleRefused);
  CHECK_THROWS_AS(brute_force_count(F({{1, 2, 3}}), 2), OracleRefused);
}

TEST_CASE("unit weights agree with the plain count") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    Formula f(random_clauses(rng, 10, 1 + draw(rng, 6), 1, 5, true));
    CHECK(brute_force_count(f) == weighted_brute_force(WeightedState{f}));
  }
}

TEST_CASE("oracle ignores clause and literal order") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    auto cs = random_clauses(rng, 10, 1 + draw(rng, 6), 1, 5, true);
    Formula f(cs);
    std::shuffle(cs.begin(), cs.end(), rng);
    for (auto& c : cs) std::shuffle(c.begin(), c.end(), rng);
    CHECK(brute_force_count(Formula(cs)) == brute_force_count(f));
  }
}
