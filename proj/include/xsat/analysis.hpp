#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xsat {

/// Root of h(x) = 1 - sum_i x^(-r_i) above 1, found by bisection.
/// Throws std::invalid_argument for an empty vector, a non-positive entry
/// or a non-positive tolerance.
double branching_number(std::span<const int> reductions, double tol = 1e-9);

/// One row of the branch-vector table backing the runtime bound.
struct BoundRow {
  std::string label;
  std::vector<int> reductions;
  double claimed = 0;
  double computed = 0;
  double deviation() const { return computed > claimed ? computed - claimed : claimed - computed; }
};

inline constexpr double kBoundTolerance = 1e-3;
inline constexpr double kClaimedBound = 1.1995;

std::vector<BoundRow> verify_bounds();

/// Label used for splitting into independent components. Such nodes do not
/// branch on variables and carry no branching number.
inline constexpr std::string_view kComponentsLabel = "components";

struct BranchEvent {
  std::uint64_t node = 0;
  std::string label;
  int parent_n = 0;
  std::vector<int> child_n;
  int depth = 0;  // not part of the text format

  bool operator==(const BranchEvent& o) const {
    return node == o.node && label == o.label && parent_n == o.parent_n && child_n == o.child_n;
  }
};

/// `node=<id> case=<label> parent_n=<int> child_n=<int,int,...>`
std::string format_event(const BranchEvent& e);
/// Throws std::invalid_argument on a malformed line.
BranchEvent parse_event(std::string_view line);
std::vector<BranchEvent> read_trace(std::istream& in);

/// Collects branch events; safe to feed from several threads. When given a
/// stream, every event is also written there as it arrives.
class TraceSink {
public:
  TraceSink() = default;
  explicit TraceSink(std::ostream* out) : out_(out) {}

  void record(BranchEvent e);
  std::vector<BranchEvent> events() const;
  void clear();

private:
  mutable std::mutex mu_;
  std::vector<BranchEvent> events_;
  std::ostream* out_ = nullptr;
};

struct BranchRecord {
  std::string label;
  std::vector<int> reductions;
  double lambda = 1.0;  // 1 for component splits
};

struct RunProfile {
  std::uint64_t nodes = 0;
  int max_depth = 0;
  std::map<std::string, std::uint64_t> tallies;
  std::vector<BranchRecord> branches;
  double max_lambda = 1.0;
  std::string worst_label;
  /// Non-positive reductions; any entry here is an algorithm bug.
  std::vector<std::string> anomalies;
};

/// Aggregates a trace. With `rooted`, the run is known to have had a root
/// node even if it never branched, so nodes >= 1.
RunProfile profile_run(std::span<const BranchEvent> trace, bool rooted = false);

void write_stats(std::ostream& os, const RunProfile& p);

} // namespace xsat
