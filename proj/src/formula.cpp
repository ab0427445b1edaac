#include "xsat/formula.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace xsat {

std::ostream& operator<<(std::ostream& os, Lit l) {
  if (!l.positive()) os << '-';
  return os << 'x' << l.var();
}

std::string to_string(const Clause& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << " | ";
    os << c[i];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  if (f.empty()) return os << "<empty>";
  for (std::size_t i = 0; i < f.num_clauses(); ++i) {
    if (i) os << " & ";
    os << to_string(f.clause(i));
  }
  return os;
}

Formula::Formula(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
  for (auto& c : clauses_) std::sort(c.begin(), c.end());
  std::sort(clauses_.begin(), clauses_.end());
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
  index_ = rebuild_index();
  for (const auto& [lit, occ] : index_) degree_[lit.var()] += static_cast<int>(occ.size());
}

std::map<Lit, std::vector<Occurrence>> Formula::rebuild_index() const {
  std::map<Lit, std::vector<Occurrence>> idx;
  for (std::size_t i = 0; i < clauses_.size(); ++i)
    for (std::size_t j = 0; j < clauses_[i].size(); ++j) idx[clauses_[i][j]].push_back({i, j});
  return idx;
}

bool Formula::has_empty_clause() const {
  // Canonical order puts the empty clause first.
  return !clauses_.empty() && clauses_.front().empty();
}

std::vector<Var> Formula::variables() const {
  std::vector<Var> vs;
  vs.reserve(degree_.size());
  for (const auto& [v, d] : degree_) vs.push_back(v);
  return vs;
}

int Formula::degree(Var v) const {
  auto it = degree_.find(v);
  return it == degree_.end() ? 0 : it->second;
}

int Formula::max_degree() const {
  int best = 0;
  for (const auto& [v, d] : degree_) best = std::max(best, d);
  return best;
}

std::span<const Occurrence> Formula::occurrences(Lit l) const {
  auto it = index_.find(l);
  if (it == index_.end()) return {};
  return it->second;
}

LiteralCounts Formula::classify(Lit l) const { return {count(l), count(~l)}; }

std::vector<std::size_t> Formula::clauses_with(Var v) const {
  std::vector<std::size_t> out;
  for (Lit l : {Lit::pos(v), Lit::neg(v)})
    for (const auto& o : occurrences(l)) out.push_back(o.clause);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Formula> Formula::components() const {
  if (clauses_.empty()) return {};
  // Union-find over clauses, joined through shared variables.
  std::vector<std::size_t> parent(clauses_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [v, d] : degree_) {
    auto cs = clauses_with(v);
    for (std::size_t k = 1; k < cs.size(); ++k) parent[find(cs[k])] = find(cs[0]);
  }
  std::map<std::size_t, std::vector<Clause>> groups;
  for (std::size_t i = 0; i < clauses_.size(); ++i) groups[find(i)].push_back(clauses_[i]);
  std::vector<Formula> parts;
  parts.reserve(groups.size());
  for (auto& [root, cs] : groups) parts.emplace_back(std::move(cs));
  return parts;
}

Formula Formula::substitute(Lit from, Lit to) const {
  if (from.var() == to.var())
    throw UsageError("substitute: cannot substitute a variable onto itself");
  std::vector<Clause> out = clauses_;
  for (auto& c : out)
    for (auto& l : c) {
      if (l == from)
        l = to;
      else if (l == ~from)
        l = ~to;
    }
  return Formula(std::move(out));
}

} // namespace xsat
