#include "xsat/dimacs.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <random>
#include <sstream>

namespace xsat {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> to_int(std::string_view s) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

} // namespace

ParsedCnf parse_dimacs(std::istream& in) {
  ParsedCnf out;
  bool have_header = false;
  std::vector<Clause> clauses;
  Clause current;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0][0] == 'c') continue;
    if (tokens[0] == "%") break;  // SATLIB trailer
    if (tokens[0][0] == 'p') {
      if (have_header) throw ParseError(lineno, "duplicate header");
      if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "cnf")
        throw ParseError(lineno, "malformed header, expected 'p cnf <vars> <clauses>'");
      auto n = to_int(tokens[2]), m = to_int(tokens[3]);
      if (!n || !m || *n < 0 || *m < 0 || *n > 1'000'000'000) throw ParseError(lineno, "malformed header counts");
      out.declared_vars = static_cast<int>(*n);
      out.declared_clauses = static_cast<int>(*m);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "clause before 'p cnf' header");
    for (auto t : tokens) {
      auto v = to_int(t);
      if (!v) throw ParseError(lineno, "bad literal '" + std::string(t) + "'");
      if (*v == 0) {
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const long long var = *v < 0 ? -*v : *v;
      if (var > out.declared_vars)
        throw ParseError(lineno, "variable " + std::to_string(var) + " exceeds declared " +
                                     std::to_string(out.declared_vars));
      current.push_back(Lit(static_cast<int>(*v)));
    }
  }
  if (!have_header) throw ParseError(lineno, "missing 'p cnf' header");
  if (!current.empty()) {
    out.warnings.push_back("last clause not terminated by 0; accepted");
    clauses.push_back(std::move(current));
  }
  if (static_cast<int>(clauses.size()) != out.declared_clauses)
    out.warnings.push_back("header declares " + std::to_string(out.declared_clauses) + " clauses, read " +
                           std::to_string(clauses.size()));
  out.formula = Formula(std::move(clauses));
  return out;
}

ParsedCnf parse_dimacs_string(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

void write_dimacs(std::ostream& os, const Formula& f, int declared_vars) {
  int n = declared_vars;
  for (Var v : f.variables()) n = std::max(n, v);
  os << "p cnf " << n << ' ' << f.num_clauses() << '\n';
  for (const auto& c : f.clauses()) {
    for (Lit l : c) os << l.dimacs() << ' ';
    os << "0\n";
  }
}

std::string to_dimacs(const Formula& f, int declared_vars) {
  std::ostringstream os;
  write_dimacs(os, f, declared_vars);
  return os.str();
}

Formula generate(const GeneratorParams& p) {
  if (p.vars < 1 || p.clauses < 0) throw std::invalid_argument("generate: need vars >= 1 and clauses >= 0");
  if (p.width_min < 1 || p.width_max < p.width_min)
    throw std::invalid_argument("generate: need 1 <= width-min <= width-max");
  if (p.width_max > p.vars) throw std::invalid_argument("generate: width-max exceeds the number of variables");
  if (p.max_degree) {
    if (*p.max_degree < 1) throw std::invalid_argument("generate: max-degree must be >= 1");
    if (static_cast<long long>(p.clauses) * p.width_min > static_cast<long long>(p.vars) * *p.max_degree)
      throw std::invalid_argument("generate: degree cap cannot accommodate the requested clauses");
  }

  // The engine is portable; the bounded draw is done here because standard
  // distributions differ between library implementations.
  std::mt19937_64 rng(p.seed);
  auto below = [&](std::uint64_t k) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % k;
    std::uint64_t x;
    do x = rng(); while (x >= limit);
    return x % k;
  };

  std::vector<int> degree(p.vars + 1, 0);
  std::vector<Clause> clauses;
  clauses.reserve(p.clauses);
  for (int ci = 0; ci < p.clauses; ++ci) {
    const int width = p.width_min + static_cast<int>(below(p.width_max - p.width_min + 1));
    std::vector<Var> pool;
    for (Var v = 1; v <= p.vars; ++v)
      if (!p.max_degree || degree[v] < *p.max_degree) pool.push_back(v);
    if (static_cast<int>(pool.size()) < width)
      throw std::invalid_argument("generate: degree cap exhausted at clause " + std::to_string(ci + 1));
    Clause c;
    for (int k = 0; k < width; ++k) {
      std::swap(pool[k], pool[k + below(pool.size() - k)]);
      const Var v = pool[k];
      ++degree[v];
      const bool negative = !p.monotone && below(2) == 0;
      c.push_back(negative ? Lit::neg(v) : Lit::pos(v));
    }
    clauses.push_back(std::move(c));
  }
  return Formula(std::move(clauses));
}

} // namespace xsat
