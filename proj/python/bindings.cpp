#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "xsat/analysis.hpp"
#include "xsat/counter.hpp"
#include "xsat/dimacs.hpp"
#include "xsat/oracle.hpp"

namespace py = pybind11;
using namespace xsat;

namespace {

using Clauses = std::vector<std::vector<int>>;

Formula to_formula(const Clauses& clauses) {
  std::vector<Clause> cs;
  cs.reserve(clauses.size());
  for (const auto& c : clauses) {
    Clause cl;
    for (int l : c) {
      if (l == 0) throw py::value_error("literal 0 is not allowed inside a clause");
      cl.push_back(Lit(l));
    }
    cs.push_back(std::move(cl));
  }
  return Formula(std::move(cs));
}

Clauses from_formula(const Formula& f) {
  Clauses out;
  for (const auto& c : f.clauses()) {
    std::vector<int> cl;
    for (Lit l : c) cl.push_back(l.dimacs());
    out.push_back(std::move(cl));
  }
  return out;
}

py::int_ to_py(const BigInt& v) {
  const std::string s = v.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::dict profile_dict(const RunProfile& p) {
  py::dict d;
  d["nodes"] = p.nodes;
  d["max_depth"] = p.max_depth;
  d["tallies"] = p.tallies;
  d["max_lambda"] = p.max_lambda;
  d["worst_case"] = p.worst_label;
  d["anomalies"] = p.anomalies;
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact #XSAT model counting by branch and reduce";

  py::register_exception<OracleRefused>(m, "OracleRefused", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

  m.def(
      "count",
      [](const Clauses& clauses) {
        Formula f = to_formula(clauses);
        BigInt n;
        {
          py::gil_scoped_release release;
          n = count(f).value;
        }
        return to_py(n);
      },
      py::arg("clauses"), "Number of assignments with exactly one true literal per clause.");

  m.def(
      "count_with_profile",
      [](const Clauses& clauses) {
        Formula f = to_formula(clauses);
        Counter c;
        BigInt n;
        {
          py::gil_scoped_release release;
          n = c.count(f).value;
        }
        std::vector<std::string> trace;
        for (const auto& e : c.events()) trace.push_back(format_event(e));
        py::dict d = profile_dict(c.profile());
        d["count"] = to_py(n);
        d["trace"] = trace;
        return d;
      },
      py::arg("clauses"), "Count plus recursion-tree statistics and branch trace lines.");

  m.def(
      "brute_force_count",
      [](const Clauses& clauses, int cap) { return to_py(brute_force_count(to_formula(clauses), cap).value); },
      py::arg("clauses"), py::arg("cap") = kDefaultOracleCap, "Count by enumerating all assignments.");

  m.def(
      "parse_dimacs",
      [](const std::string& text) { return from_formula(parse_dimacs_string(text).formula); },
      py::arg("text"), "Clauses of a DIMACS CNF document, in canonical order.");

  m.def(
      "to_dimacs",
      [](const Clauses& clauses, int declared_vars) { return to_dimacs(to_formula(clauses), declared_vars); },
      py::arg("clauses"), py::arg("declared_vars") = 0);

  m.def(
      "generate",
      [](int vars, int clauses, int width_min, int width_max, bool monotone, std::optional<int> max_degree,
         std::uint64_t seed) {
        return from_formula(generate({vars, clauses, width_min, width_max, monotone, max_degree, seed}));
      },
      py::arg("vars"), py::arg("clauses"), py::arg("width_min"), py::arg("width_max"), py::kw_only(),
      py::arg("monotone") = false, py::arg("max_degree") = py::none(), py::arg("seed") = 1,
      "Seeded random formula; identical arguments give identical clauses.");

  m.def(
      "branching_number",
      [](const std::vector<int>& reductions, double tol) { return branching_number(reductions, tol); },
      py::arg("reductions"), py::arg("tol") = 1e-9);

  m.def("verify_bounds", [] {
    py::list rows;
    for (const auto& r : verify_bounds()) {
      py::dict d;
      d["label"] = r.label;
      d["reductions"] = r.reductions;
      d["claimed"] = r.claimed;
      d["computed"] = r.computed;
      d["deviation"] = r.deviation();
      rows.append(d);
    }
    return rows;
  });

  m.attr("BOUND_TOLERANCE") = kBoundTolerance;
  m.attr("CLAIMED_BOUND") = kClaimedBound;
}
