#pragma once

#include <stdexcept>

#include "xsat/weighted_state.hpp"

namespace xsat {

inline constexpr int kDefaultOracleCap = 25;

class OracleRefused : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Enumerates all 2^n assignments and counts those giving every clause
/// exactly one true literal occurrence.
ModelCount brute_force_count(const Formula& f, int max_vars = kDefaultOracleCap);

/// multiplier * sum over exact models of the product of satisfied-literal weights.
ModelCount weighted_brute_force(const WeightedState& s, int max_vars = kDefaultOracleCap);

} // namespace xsat
