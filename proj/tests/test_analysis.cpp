#include "doctest.h"

#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include "xsat/analysis.hpp"

using namespace xsat;

namespace {

double tau(std::initializer_list<int> r) { return branching_number(std::vector<int>(r)); }

double h(const std::vector<int>& r, double x) {
  double s = 1;
  for (int k : r) s -= std::pow(x, -k);
  return s;
}

} // namespace

TEST_CASE("branching number examples") {
  CHECK(tau({1, 1}) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(std::abs(tau({4, 4}) - 1.1892) <= 1e-3);
  CHECK(std::abs(tau({9, 5, 5}) - 1.1995) <= 1e-3);
  CHECK(std::abs(tau({2, 7}) - 1.1908) <= 1e-3);
  CHECK(std::abs(tau({7, 5}) - 1.1238) <= 1e-3);
  CHECK(tau({1}) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("branching number rejects bad input") {
  CHECK_THROWS_AS(branching_number(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(tau({3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(branching_number(std::vector<int>{2, 2}, 0.0), std::invalid_argument);
}

TEST_CASE("branching number is a root of h") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    std::vector<int> r(2 + rng() % 3);
    for (int& x : r) x = 1 + static_cast<int>(rng() % 15);
    const double lam = branching_number(r, 1e-12);
    CHECK(std::abs(h(r, lam)) <= 1e-9);
    CHECK(lam > 1.0);
    CHECK(lam <= std::pow(static_cast<double>(r.size()), 1.0 / *std::min_element(r.begin(), r.end())) + 1e-9);
  }
}

TEST_CASE("equal entries have a closed form") {
  for (int r = 1; r <= 20; ++r) CHECK(tau({r, r}) == doctest::Approx(std::pow(2.0, 1.0 / r)).epsilon(1e-8));
}

TEST_CASE("branching number decreases in every entry") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    std::vector<int> r(2 + rng() % 3);
    for (int& x : r) x = 1 + static_cast<int>(rng() % 12);
    std::vector<int> bigger = r;
    bigger[rng() % bigger.size()] += 1;
    CHECK(branching_number(bigger) < branching_number(r));
  }
}

TEST_CASE("bound table reproduces the claimed constants") {
  auto rows = verify_bounds();
  CHECK(rows.size() == 7);
  double worst = 0;
  for (const auto& row : rows) {
    CAPTURE(row.label);
    CHECK(row.deviation() <= kBoundTolerance);
    worst = std::max(worst, row.computed);
  }
  CHECK(std::abs(worst - kClaimedBound) <= kBoundTolerance);
}

TEST_CASE("trace lines round-trip") {
  BranchEvent e{7, "deg3.five-clause", 30, {21, 25, 25}, 3};
  const std::string line = format_event(e);
  CHECK(line == "node=7 case=deg3.five-clause parent_n=30 child_n=21,25,25");
  CHECK(parse_event(line) == e);
  CHECK_THROWS_AS(parse_event("node=1 case=x parent_n=3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_event("node=1 case=x parent_n=3 child_n=1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_event("node=a case=x parent_n=3 child_n=1"), std::invalid_argument);
  std::istringstream in(line + "\n\n" + format_event({8, "mixed-literal", 21, {14, 16}}) + "\n");
  CHECK(read_trace(in).size() == 2);
}

TEST_CASE("profile examples") {
  CHECK(profile_run({}).nodes == 0);
  RunProfile single = profile_run({}, true);
  CHECK(single.nodes == 1);
  CHECK(single.max_lambda == 1.0);

  std::vector<BranchEvent> t = {{0, "deg3.common-pair", 20, {13, 18}}, {1, "deg3.common-pair", 13, {6, 11}}};
  RunProfile p = profile_run(t);
  CHECK(p.nodes == 5);
  CHECK(p.tallies.at("deg3.common-pair") == 2);
  CHECK(std::abs(p.max_lambda - 1.1908) <= 1e-3);
  CHECK(p.worst_label == "deg3.common-pair");
  CHECK(p.anomalies.empty());
}

TEST_CASE("profile flags non-positive reductions and skips component splits") {
  std::vector<BranchEvent> t = {{0, std::string(kComponentsLabel), 10, {5, 5}}, {1, "mixed-literal", 5, {5, 2}}};
  RunProfile p = profile_run(t);
  CHECK(p.anomalies.size() == 1);
  CHECK(p.max_lambda == 1.0);
  CHECK(p.nodes == 5);
}

TEST_CASE("profile does not depend on event order") {
  std::vector<BranchEvent> t = {{0, "a", 20, {13, 18}}, {1, "b", 13, {6, 11}}, {2, "a", 18, {10, 12}}};
  RunProfile p = profile_run(t);
  std::swap(t[0], t[2]);
  RunProfile q = profile_run(t);
  CHECK(p.tallies == q.tallies);
  CHECK(p.max_lambda == q.max_lambda);
  CHECK(p.worst_label == q.worst_label);
}

TEST_CASE("sink accepts concurrent events") {
  TraceSink sink;
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w)
    workers.emplace_back([&, w] {
      for (int i = 0; i < 250; ++i)
        sink.record({static_cast<std::uint64_t>(w * 250 + i), "x", 10, {9, 8}});
    });
  for (auto& t : workers) t.join();
  auto events = sink.events();
  CHECK(events.size() == 1000);
  CHECK(profile_run(events).nodes == 2001);
}

TEST_CASE("stats lines") {
  std::vector<BranchEvent> t = {{0, "mixed-literal", 12, {5, 7}}};
  std::ostringstream os;
  write_stats(os, profile_run(t));
  const std::string s = os.str();
  CHECK(s.find("nodes=3\n") != std::string::npos);
  CHECK(s.find("case.mixed-literal=1\n") != std::string::npos);
  CHECK(s.find("max_lambda=1.123") != std::string::npos);
  CHECK(s.find("anomalies=0\n") != std::string::npos);
}
