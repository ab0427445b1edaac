#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "xsat/analysis.hpp"
#include "xsat/reduce.hpp"

namespace xsat {

/// Exhaustive weighted count for at most four clauses: one true literal is
/// chosen per clause and inconsistent choices are discarded, so the cost is
/// bounded by the product of clause lengths rather than 2^n.
/// Throws UsageError for more than four clauses.
ModelCount mc_small(const WeightedState& s);

struct BranchPlan {
  std::string_view label;
  std::vector<BranchRequest> phis;
};

/// The branching the counter performs on a reduced, connected, non-empty
/// formula: the general cases first, then the degree-3 chain. The branches
/// always split the models of the formula into disjoint sets.
BranchPlan plan_branch(const Formula& f);

/// Branch-and-reduce exact model counter.
///
/// Every recursion node is reduced, then dispatched through the general case
/// chain (empty clause, empty formula, components, mixed literal, common pair,
/// high degree) and, once the maximum degree is at most three, through the
/// degree-3 chain. Children always re-enter the general chain. Branching and
/// component nodes are reported to the trace sink.
class Counter {
public:
  Counter() = default;
  explicit Counter(std::ostream* trace_out) : sink_(trace_out) {}

  ModelCount count(const Formula& f);
  /// Weighted count of an arbitrary (not necessarily reduced) state.
  BigInt count_state(const WeightedState& s);
  /// Degree-3 chain on a reduced state with maximum degree <= 3.
  BigInt count_deg3(const WeightedState& s);

  std::vector<BranchEvent> events() const { return sink_.events(); }
  RunProfile profile() const;

private:
  Rational solve(const WeightedState& s, int depth);
  Rational solve_deg3(const WeightedState& s, std::uint64_t id, int depth);
  Rational split(const WeightedState& s, std::vector<Formula> parts, std::uint64_t id, int depth);
  Rational branch(const WeightedState& s, std::string_view label, std::span<const BranchRequest> phis,
                std::uint64_t id, int depth);
  void enter(int depth);

  TraceSink sink_;
  std::uint64_t next_id_ = 0;
  int max_depth_ = 0;
};

/// Number of exact models of `f`.
ModelCount count(const Formula& f);

} // namespace xsat
