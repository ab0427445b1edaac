#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

#include "xsat/formula.hpp"

namespace xsat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Throws std::logic_error unless `r` is a whole number.
BigInt to_integer(const Rational& r);

/// Exact, nonnegative model count.
struct ModelCount {
  BigInt value;
  std::string str() const { return value.str(); }
  bool operator==(const ModelCount&) const = default;
};

/// A formula together with per-literal multiplicity weights and the factor
/// accumulated by eliminations so far.
///
/// The conserved quantity is
///   WC = multiplier * sum over exact models A of prod_v weight(literal of v true in A).
/// Literals without an entry weigh 1. A zero multiplier marks a refuted branch.
/// Weights are integers; the multiplier may be fractional after a weighted
/// resolution, but WC itself stays a whole number.
struct WeightedState {
  Formula formula;
  std::map<Lit, BigInt> weights;
  Rational multiplier = 1;

  WeightedState() = default;
  explicit WeightedState(Formula f) : formula(std::move(f)) {}

  static WeightedState contradiction() {
    WeightedState s;
    s.multiplier = 0;
    return s;
  }

  bool refuted() const { return multiplier == 0; }

  BigInt weight(Lit l) const {
    auto it = weights.find(l);
    return it == weights.end() ? BigInt(1) : it->second;
  }
  void set_weight(Lit l, BigInt w) {
    if (w == 1)
      weights.erase(l);
    else
      weights[l] = std::move(w);
  }
  bool unit_weight(Var v) const {
    return !weights.contains(Lit::pos(v)) && !weights.contains(Lit::neg(v));
  }

  /// Copy of the weights restricted to variables of `f`.
  std::map<Lit, BigInt> weights_for(const Formula& f) const;

  bool operator==(const WeightedState&) const = default;
};

std::string describe(const WeightedState& s);

} // namespace xsat
