#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "xsat/formula.hpp"

namespace xsat {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

struct ParsedCnf {
  Formula formula;
  int declared_vars = 0;
  int declared_clauses = 0;
  std::vector<std::string> warnings;
};

/// Reads DIMACS CNF. Clauses may span lines; a bare `0` is an empty clause.
/// A clause-count mismatch is a warning, the clauses read win.
ParsedCnf parse_dimacs(std::istream& in);
ParsedCnf parse_dimacs_string(const std::string& text);

/// Header declares max(declared_vars, largest variable id).
void write_dimacs(std::ostream& os, const Formula& f, int declared_vars = 0);
std::string to_dimacs(const Formula& f, int declared_vars = 0);

struct GeneratorParams {
  int vars = 10;
  int clauses = 6;
  int width_min = 3;
  int width_max = 3;
  bool monotone = false;
  std::optional<int> max_degree;
  std::uint64_t seed = 1;
};

/// Seeded random instance. Each clause draws its width uniformly from
/// [width_min, width_max] and that many distinct variables, restricted to
/// variables still below the degree cap. Throws std::invalid_argument for
/// infeasible parameters.
Formula generate(const GeneratorParams& p);

} // namespace xsat
