// xsat: exact-satisfiability model counter.
//
// Exit codes: 0 success, 1 usage or parse error, 2 oracle mismatch or bound
// verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>

#include "xsat/analysis.hpp"
#include "xsat/counter.hpp"
#include "xsat/dimacs.hpp"
#include "xsat/oracle.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

xsat::Formula load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  auto parsed = xsat::parse_dimacs(in);
  for (const auto& w : parsed.warnings) std::cerr << "warning: " << path << ": " << w << '\n';
  return std::move(parsed.formula);
}

int run_count(const std::string& path, const std::string& stats_path, const std::string& trace_path,
              bool oracle_check, int cap) {
  const xsat::Formula f = load(path);
  std::unique_ptr<std::ofstream> trace;
  if (!trace_path.empty()) {
    trace = std::make_unique<std::ofstream>(trace_path);
    if (!*trace) throw std::runtime_error("cannot write " + trace_path);
  }
  xsat::Counter counter(trace.get());
  const auto result = counter.count(f);
  std::cout << result.str() << '\n';

  if (!stats_path.empty()) {
    std::ofstream out(stats_path);
    if (!out) throw std::runtime_error("cannot write " + stats_path);
    xsat::write_stats(out, counter.profile());
  }
  if (oracle_check) {
    const auto expected = xsat::brute_force_count(f, cap);
    if (expected != result) {
      std::cerr << "oracle mismatch: counter " << result.str() << ", brute force " << expected.str() << '\n';
      return kExitMismatch;
    }
    std::cerr << "oracle agrees\n";
  }
  return 0;
}

int run_verify_bounds() {
  bool ok = true;
  double worst = 0;
  std::cout << std::left << std::setw(26) << "case" << std::setw(12) << "vector" << std::setw(10) << "claimed"
            << std::setw(12) << "computed" << "deviation\n";
  for (const auto& row : xsat::verify_bounds()) {
    std::string vec = "(";
    for (std::size_t i = 0; i < row.reductions.size(); ++i)
      vec += (i ? "," : "") + std::to_string(row.reductions[i]);
    vec += ")";
    const bool pass = row.deviation() <= xsat::kBoundTolerance;
    ok &= pass;
    worst = std::max(worst, row.computed);
    std::cout << std::setw(26) << row.label << std::setw(12) << vec << std::fixed << std::setprecision(4)
              << std::setw(10) << row.claimed << std::setprecision(6) << std::setw(12) << row.computed
              << std::scientific << std::setprecision(2) << row.deviation() << (pass ? "" : "  FAIL") << '\n'
              << std::defaultfloat;
  }
  std::cout << "max=" << std::fixed << std::setprecision(6) << worst << '\n';
  return ok ? 0 : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-satisfiability (#XSAT) model counter"};
  app.require_subcommand(1);

  std::string count_file, stats_path, trace_path;
  bool oracle_check = false;
  int cap = xsat::kDefaultOracleCap;
  auto* count_cmd = app.add_subcommand("count", "print the exact number of models");
  count_cmd->add_option("file", count_file, "DIMACS CNF file")->required();
  count_cmd->add_option("--stats", stats_path, "write key=value run statistics");
  count_cmd->add_option("--trace", trace_path, "write one line per branching node");
  count_cmd->add_flag("--oracle-check", oracle_check, "cross-check against brute force");
  count_cmd->add_option("--oracle-cap", cap, "largest variable count the brute force accepts");

  std::string oracle_file;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force model count");
  oracle_cmd->add_option("file", oracle_file, "DIMACS CNF file")->required();
  oracle_cmd->add_option("--cap", cap, "largest variable count accepted");

  xsat::GeneratorParams gen;
  int max_degree = 0;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "emit a seeded random instance as DIMACS");
  gen_cmd->add_option("--vars", gen.vars)->required();
  gen_cmd->add_option("--clauses", gen.clauses)->required();
  gen_cmd->add_option("--width-min", gen.width_min)->required();
  gen_cmd->add_option("--width-max", gen.width_max)->required();
  gen_cmd->add_flag("--monotone", gen.monotone);
  auto* max_degree_opt = gen_cmd->add_option("--max-degree", max_degree);
  gen_cmd->add_option("--seed", gen.seed)->required();
  gen_cmd->add_option("-o,--output", gen_out);

  std::vector<int> tau_vector;
  double tol = 1e-9;
  auto* tau_cmd = app.add_subcommand("tau", "branching number of a branching vector");
  tau_cmd->add_option("r", tau_vector, "reductions r1 r2 ...")->required();
  tau_cmd->add_option("--tol", tol);

  auto* bounds_cmd = app.add_subcommand("verify-bounds", "recompute the branching-number table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*count_cmd) return run_count(count_file, stats_path, trace_path, oracle_check, cap);
    if (*oracle_cmd) {
      std::cout << xsat::brute_force_count(load(oracle_file), cap).str() << '\n';
      return 0;
    }
    if (*gen_cmd) {
      if (*max_degree_opt) gen.max_degree = max_degree;
      const auto f = xsat::generate(gen);
      if (gen_out.empty()) {
        xsat::write_dimacs(std::cout, f, gen.vars);
      } else {
        std::ofstream out(gen_out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + gen_out);
        xsat::write_dimacs(out, f, gen.vars);
      }
      return 0;
    }
    if (*tau_cmd) {
      std::cout << std::fixed << std::setprecision(6) << xsat::branching_number(tau_vector, tol) << '\n';
      return 0;
    }
    if (*bounds_cmd) return run_verify_bounds();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
