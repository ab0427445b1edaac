#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xsat {

using Var = int;

/// A variable or its negation, stored in signed DIMACS form.
class Lit {
public:
  constexpr Lit() = default;
  constexpr explicit Lit(int dimacs) : code_(dimacs) {}
  static constexpr Lit pos(Var v) { return Lit(v); }
  static constexpr Lit neg(Var v) { return Lit(-v); }

  constexpr Var var() const { return code_ < 0 ? -code_ : code_; }
  constexpr bool positive() const { return code_ > 0; }
  constexpr int dimacs() const { return code_; }
  constexpr Lit operator~() const { return Lit(-code_); }

  constexpr bool operator==(const Lit&) const = default;
  // Orders by variable first so that sorted clauses group a variable's literals.
  constexpr std::strong_ordering operator<=>(const Lit& o) const {
    if (auto c = var() <=> o.var(); c != 0) return c;
    return positive() <=> o.positive();
  }

private:
  int code_ = 0;
};

inline bool complementary(Lit a, Lit b) { return a == ~b; }

std::ostream& operator<<(std::ostream& os, Lit l);

/// Literal occurrences; duplicates are legal until reduction removes them.
using Clause = std::vector<Lit>;

std::string to_string(const Clause& c);

struct Occurrence {
  std::size_t clause;
  std::size_t position;
  bool operator==(const Occurrence&) const = default;
};

struct LiteralCounts {
  int positive = 0;
  int negative = 0;
  bool operator==(const LiteralCounts&) const = default;
};

class UsageError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Conjunction of exact-one clauses.
///
/// Clauses are kept canonical: literals sorted inside each clause, clauses
/// sorted, and identical clauses merged. The occurrence index is rebuilt on
/// construction, so every instance is internally consistent and immutable.
class Formula {
public:
  Formula() = default;
  explicit Formula(std::vector<Clause> clauses);

  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(std::size_t i) const { return clauses_[i]; }

  std::size_t num_clauses() const { return clauses_.size(); }
  std::size_t num_vars() const { return degree_.size(); }
  bool empty() const { return clauses_.empty(); }
  bool has_empty_clause() const;

  /// Sorted list of variables that occur in at least one clause.
  std::vector<Var> variables() const;
  bool contains(Var v) const { return degree_.contains(v); }

  int degree(Var v) const;
  int max_degree() const;
  bool singleton(Var v) const { return degree(v) == 1; }

  /// Occurrences of exactly this literal.
  std::span<const Occurrence> occurrences(Lit l) const;
  int count(Lit l) const { return static_cast<int>(occurrences(l).size()); }

  /// (i, j) with i occurrences of l and j of its negation.
  LiteralCounts classify(Lit l) const;

  /// Clause indices (ascending, without repeats) of clauses mentioning v.
  std::vector<std::size_t> clauses_with(Var v) const;

  /// Variable-disjoint parts induced by the constraint graph.
  std::vector<Formula> components() const;

  /// Replaces `from` by `to` and ~from by ~to.
  Formula substitute(Lit from, Lit to) const;

  /// Restores index from clauses; used by tests to validate the index.
  std::map<Lit, std::vector<Occurrence>> rebuild_index() const;
  const std::map<Lit, std::vector<Occurrence>>& index() const { return index_; }

  bool operator==(const Formula& o) const { return clauses_ == o.clauses_; }

private:
  std::vector<Clause> clauses_;
  std::map<Lit, std::vector<Occurrence>> index_;
  std::map<Var, int> degree_;
};

std::ostream& operator<<(std::ostream& os, const Formula& f);

} // namespace xsat
