#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "xsat/weighted_state.hpp"

namespace xsat {

/// Simplification rules, in the order `reduce` tries them.
enum class Rule {
  UnitClause,        // (x): x is true
  TwoClause,         // (x | y): x := ~y
  DuplicateLiteral,  // (x | x | C): x is false
  ComplementaryPair, // (x | ~x | C): C is false
  EquivalentLiterals,// (x | C), (y | C): x := y
  Subsumption,       // C strictly inside C': the extra literals of C' are false
  SharedPrefix,      // (x | C1), (C1 | C2), |C1| >= 2: second becomes (~x | C2)
  OppositeOverlap,   // clauses sharing variables with opposite signs
  SingletonGroup,    // >= 2 singletons in one clause collapse to one literal
  ResolveOneK,       // (1, k)-literal with unit weights
  ResolveTwoTwo,     // (2, 2)-literal with unit weights
  CommonSubclause,   // sub-clause private to >= 2 clauses collapses to one literal
};

inline constexpr std::array<Rule, 12> kRuleOrder = {
    Rule::UnitClause,        Rule::TwoClause,      Rule::DuplicateLiteral,
    Rule::ComplementaryPair, Rule::EquivalentLiterals, Rule::Subsumption,
    Rule::SharedPrefix,      Rule::OppositeOverlap, Rule::SingletonGroup,
    Rule::ResolveOneK,       Rule::ResolveTwoTwo,  Rule::CommonSubclause,
};

std::string_view rule_name(Rule r);

/// Sets `l` true and propagates: clauses containing l are removed with their
/// other literals forced false, and false literals are deleted. The
/// multiplier absorbs the weight of every literal made true. Refutation
/// yields the zero state.
WeightedState assign_true(const WeightedState& s, Lit l);
WeightedState assign_true(const WeightedState& s, std::span<const Lit> lits);

/// Applies the first instance of `rule`, or nullopt when it does not fire.
/// Each rule is count-preserving on its own, independent of rule order.
std::optional<WeightedState> apply_rule(const WeightedState& s, Rule rule);

struct ReduceStep {
  Rule rule;
  WeightedState after;
};
using ReduceLog = std::vector<ReduceStep>;

/// Applies rules in `order` until none fires, restarting from the top after
/// each application. WC is preserved under any order; the fixpoint
/// properties need every rule to be present.
WeightedState reduce(WeightedState s, ReduceLog* log = nullptr, std::span<const Rule> order = kRuleOrder);

struct SingleLiteral {
  Lit lit;
};
struct LiteralPair {
  Lit first, second;
};
/// Exactly one of the two literals is true.
struct TwoClause {
  Lit first, second;
};
using BranchRequest = std::variant<SingleLiteral, LiteralPair, TwoClause>;

std::string to_string(const BranchRequest& phi);

/// Commits the branch `phi` and reduces.
WeightedState omega(const WeightedState& s, const BranchRequest& phi);

/// Structural properties every reduced state must have; returns a message per
/// violation found (empty when the state is a proper fixpoint).
std::vector<std::string> fixpoint_violations(const WeightedState& s);

} // namespace xsat
