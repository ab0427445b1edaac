#include "xsat/weighted_state.hpp"

#include <sstream>
#include <stdexcept>

namespace xsat {

BigInt to_integer(const Rational& r) {
  if (denominator(r) != 1) throw std::logic_error("expected a whole number, got " + r.str());
  return numerator(r);
}

std::map<Lit, BigInt> WeightedState::weights_for(const Formula& f) const {
  std::map<Lit, BigInt> out;
  for (const auto& [l, w] : weights)
    if (f.contains(l.var())) out.emplace(l, w);
  return out;
}

std::string describe(const WeightedState& s) {
  std::ostringstream os;
  os << s.formula << " | multiplier=" << s.multiplier;
  if (!s.weights.empty()) {
    os << " weights={";
    bool first = true;
    for (const auto& [l, w] : s.weights) {
      if (!first) os << ", ";
      first = false;
      os << l << ':' << w;
    }
    os << '}';
  }
  return os.str();
}

} // namespace xsat
