#include "xsat/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace xsat {

namespace {

// Clause as bit masks over the dense variable order. Clauses with repeated
// literals keep their occurrence list, since x | x counts x twice.
struct MaskClause {
  std::uint32_t pos = 0, neg = 0;
  bool plain = true;
  std::vector<std::pair<int, bool>> occurrences;

  bool exactly_one(std::uint32_t a) const {
    if (plain) return std::popcount(a & pos) + std::popcount(~a & neg) == 1;
    int trues = 0;
    for (auto [bit, positive] : occurrences) trues += (((a >> bit) & 1u) != 0) == positive;
    return trues == 1;
  }
};

struct Compiled {
  std::vector<Var> vars;
  std::vector<MaskClause> clauses;
};

Compiled compile(const Formula& f, int max_vars) {
  Compiled out;
  out.vars = f.variables();
  const int n = static_cast<int>(out.vars.size());
  if (n > max_vars || n > 31)
    throw OracleRefused("oracle refuses " + std::to_string(n) + " variables (cap " +
                        std::to_string(std::min(max_vars, 31)) + ")");
  auto bit_of = [&](Var v) {
    return static_cast<int>(std::lower_bound(out.vars.begin(), out.vars.end(), v) - out.vars.begin());
  };
  for (const auto& c : f.clauses()) {
    MaskClause mc;
    for (Lit l : c) {
      const int b = bit_of(l.var());
      std::uint32_t& mask = l.positive() ? mc.pos : mc.neg;
      if (mask & (1u << b)) mc.plain = false;
      mask |= 1u << b;
      mc.occurrences.emplace_back(b, l.positive());
    }
    if (mc.pos & mc.neg) mc.plain = false;
    out.clauses.push_back(std::move(mc));
  }
  return out;
}

bool is_model(const Compiled& c, std::uint32_t a) {
  for (const auto& cl : c.clauses)
    if (!cl.exactly_one(a)) return false;
  return true;
}

} // namespace

ModelCount brute_force_count(const Formula& f, int max_vars) {
  const Compiled c = compile(f, max_vars);
  const std::uint64_t total = std::uint64_t{1} << c.vars.size();
  std::uint64_t models = 0;
  for (std::uint64_t a = 0; a < total; ++a) models += is_model(c, static_cast<std::uint32_t>(a));
  return {BigInt(models)};
}

ModelCount weighted_brute_force(const WeightedState& s, int max_vars) {
  if (s.refuted()) return {BigInt(0)};
  const Compiled c = compile(s.formula, max_vars);
  const std::uint64_t total = std::uint64_t{1} << c.vars.size();
  BigInt sum = 0;
  for (std::uint64_t a = 0; a < total; ++a) {
    if (!is_model(c, static_cast<std::uint32_t>(a))) continue;
    BigInt term = 1;
    for (std::size_t i = 0; i < c.vars.size(); ++i)
      term *= s.weight((a >> i) & 1u ? Lit::pos(c.vars[i]) : Lit::neg(c.vars[i]));
    sum += term;
  }
  return {to_integer(s.multiplier * Rational(sum))};
}

} // namespace xsat
