#include "xsat/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace xsat {

double branching_number(std::span<const int> reductions, double tol) {
  if (reductions.empty()) throw std::invalid_argument("branching vector must be non-empty");
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  int min_r = reductions[0];
  for (int r : reductions) {
    if (r < 1) throw std::invalid_argument("branching vector entries must be >= 1");
    min_r = std::min(min_r, r);
  }
  auto h = [&](double x) {
    double s = 1.0;
    for (int r : reductions) s -= std::pow(x, -r);
    return s;
  };
  const double k = static_cast<double>(reductions.size());
  double lo = 1.0 + 1e-12;
  double hi = std::pow(k, 1.0 / min_r) + 1.0;
  double mid = 0.5 * (lo + hi);
  // h is strictly increasing on (1, inf).
  for (int it = 0; it < 400; ++it) {
    mid = 0.5 * (lo + hi);
    const double v = h(mid);
    if (std::abs(v) <= tol && hi - lo <= tol) break;
    if (v < 0)
      lo = mid;
    else
      hi = mid;
  }
  return mid;
}

std::vector<BoundRow> verify_bounds() {
  std::vector<BoundRow> rows = {
      {"deg3.common-pair", {7, 2}, 1.1908},
      {"deg3.three-clause-four", {4, 4}, 1.1892},
      {"deg3.five-clause", {9, 5, 5}, 1.1995},
      {"deg3.four-clause-long", {9, 9, 3}, 1.1925},
      {"deg3.long-clause", {10, 1}, 1.1975},
      {"mixed-literal", {7, 5}, 1.1238},
      {"high-degree", {13, 1}, 1.1632},
  };
  for (auto& r : rows) r.computed = branching_number(r.reductions);
  return rows;
}

std::string format_event(const BranchEvent& e) {
  std::ostringstream os;
  os << "node=" << e.node << " case=" << e.label << " parent_n=" << e.parent_n << " child_n=";
  for (std::size_t i = 0; i < e.child_n.size(); ++i) os << (i ? "," : "") << e.child_n[i];
  return os.str();
}

namespace {

template <typename T>
T parse_number(std::string_view s, std::string_view what) {
  T v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::invalid_argument("trace: bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

std::string_view field(std::string_view token, std::string_view key) {
  if (token.substr(0, key.size()) != key || token.size() <= key.size() || token[key.size()] != '=')
    throw std::invalid_argument("trace: expected " + std::string(key) + "=..., got '" + std::string(token) + "'");
  return token.substr(key.size() + 1);
}

} // namespace

BranchEvent parse_event(std::string_view line) {
  std::vector<std::string_view> tokens;
  while (!line.empty()) {
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string_view::npos) break;
    line.remove_prefix(start);
    auto end = line.find_first_of(" \t\r");
    tokens.push_back(line.substr(0, end));
    if (end == std::string_view::npos) break;
    line.remove_prefix(end);
  }
  if (tokens.size() != 4) throw std::invalid_argument("trace: expected 4 fields");
  BranchEvent e;
  e.node = parse_number<std::uint64_t>(field(tokens[0], "node"), "node");
  e.label = std::string(field(tokens[1], "case"));
  e.parent_n = parse_number<int>(field(tokens[2], "parent_n"), "parent_n");
  std::string_view kids = field(tokens[3], "child_n");
  while (true) {
    auto comma = kids.find(',');
    e.child_n.push_back(parse_number<int>(kids.substr(0, comma), "child_n"));
    if (comma == std::string_view::npos) break;
    kids.remove_prefix(comma + 1);
  }
  return e;
}

std::vector<BranchEvent> read_trace(std::istream& in) {
  std::vector<BranchEvent> out;
  std::string line;
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(parse_event(line));
  return out;
}

void TraceSink::record(BranchEvent e) {
  std::lock_guard lock(mu_);
  if (out_) *out_ << format_event(e) << '\n';
  events_.push_back(std::move(e));
}

std::vector<BranchEvent> TraceSink::events() const {
  std::lock_guard lock(mu_);
  return events_;
}

void TraceSink::clear() {
  std::lock_guard lock(mu_);
  events_.clear();
}

RunProfile profile_run(std::span<const BranchEvent> trace, bool rooted) {
  RunProfile p;
  if (trace.empty()) {
    p.nodes = rooted ? 1 : 0;
    return p;
  }
  // Sorted so that aggregation does not depend on arrival order.
  std::vector<const BranchEvent*> order;
  for (const auto& e : trace) order.push_back(&e);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->node < b->node; });

  p.nodes = 1;
  for (const BranchEvent* e : order) {
    p.nodes += e->child_n.size();
    p.max_depth = std::max(p.max_depth, e->depth + 1);
    ++p.tallies[e->label];
    BranchRecord rec{e->label, {}, 1.0};
    bool sound = true;
    for (int c : e->child_n) {
      const int r = e->parent_n - c;
      rec.reductions.push_back(r);
      if (r < 1) {
        sound = false;
        p.anomalies.push_back("node " + std::to_string(e->node) + " (" + e->label +
                              ") has non-positive reduction " + std::to_string(r));
      }
    }
    if (sound && e->label != kComponentsLabel && rec.reductions.size() >= 2) {
      rec.lambda = branching_number(rec.reductions);
      if (rec.lambda > p.max_lambda) {
        p.max_lambda = rec.lambda;
        p.worst_label = e->label;
      }
    }
    p.branches.push_back(std::move(rec));
  }
  return p;
}

void write_stats(std::ostream& os, const RunProfile& p) {
  os << "nodes=" << p.nodes << '\n';
  os << "max_depth=" << p.max_depth << '\n';
  for (const auto& [label, n] : p.tallies) os << "case." << label << '=' << n << '\n';
  os << "max_lambda=" << std::fixed << std::setprecision(6) << p.max_lambda << '\n';
  os.unsetf(std::ios::floatfield);
  if (!p.worst_label.empty()) os << "worst_case=" << p.worst_label << '\n';
  os << "anomalies=" << p.anomalies.size() << '\n';
}

} // namespace xsat
