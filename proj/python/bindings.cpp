// Copyright 2026 The iml Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "iml/brute_oracle.hpp"
#include "iml/core_model.hpp"
#include "iml/exact_solver.hpp"
#include "iml/inequality_checks.hpp"
#include "iml/matching_engine.hpp"
#include "iml/residue_search.hpp"
#include "iml/result_store.hpp"

namespace py = pybind11;
using namespace iml;

namespace {

py::object fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.numerator(), r.denominator());
}

py::object quantity(const Quantity& q) {
  if (q.is_exact) return fraction(q.exact);
  return py::float_(q.approx);
}

py::dict search_dict(const SearchReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["strategy"] = r.strategy;
  d["best_m"] = r.best_m;
  d["best_f"] = r.best_f;
  d["f_nn"] = r.f_nn;
  d["gap"] = r.gap();
  d["evaluations"] = r.evaluations;
  d["exhaustive"] = r.exhaustive;
  d["seed"] = r.seed;
  return d;
}

}  // namespace

PYBIND11_MODULE(_iml, m) {
  m.doc() = "Exact f(n, m): shortest interval (m, m+L] holding distinct multiples of 1..n.";
  m.attr("ENGINE_VERSION") = kEngineVersion;

  py::register_exception<IntegrityError>(m, "IntegrityError");
  py::register_exception<StoreError>(m, "StoreError");

  py::class_<SolveResult>(m, "SolveResult")
      .def_property_readonly("n", [](const SolveResult& r) { return r.instance.n; })
      .def_property_readonly("m", [](const SolveResult& r) { return r.instance.m; })
      .def_readonly("f", &SolveResult::f_value)
      .def_property_readonly("witness", [](const SolveResult& r) { return r.witness.assignment; })
      .def_property_readonly("violator",
                             [](const SolveResult& r) { return r.certificate.violator_set; })
      .def_property_readonly("neighborhood_size",
                             [](const SolveResult& r) { return r.certificate.neighborhood_size; })
      .def("__repr__", [](const SolveResult& r) {
        return "SolveResult(n=" + std::to_string(r.instance.n) + ", m=" +
               std::to_string(r.instance.m) + ", f=" + std::to_string(r.f_value) + ")";
      });

  py::class_<CapExceeded>(m, "CapExceeded")
      .def_readonly("cap", &CapExceeded::cap)
      .def_readonly("matching_size", &CapExceeded::matching_size);

  m.def("multiples_in_interval", &multiples_in_interval, py::arg("i"), py::arg("m"), py::arg("L"));
  m.def("lcm_upto", [](std::uint64_t n) {
    return py::module_::import("builtins").attr("int")(lcm_upto(n).str());
  }, py::arg("n"));
  m.def("canonical_m", &canonical_m, py::arg("n"), py::arg("m"));
  m.def(
      "verify_witness",
      [](std::uint64_t n, std::uint64_t mm, std::uint64_t length,
         std::vector<std::uint64_t> assignment) {
        const auto v = verify_witness(n, mm, length, Witness{std::move(assignment)});
        return py::make_tuple(v.ok, to_string(v.fault), v.message);
      },
      py::arg("n"), py::arg("m"), py::arg("L"), py::arg("assignment"),
      "Returns (ok, failing clause, message).");

  py::class_<MatchingState>(m, "MatchingState")
      .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("n"), py::arg("m"))
      .def("extend_one", &MatchingState::extend_one)
      .def_property_readonly("n", &MatchingState::n)
      .def_property_readonly("m", &MatchingState::m)
      .def_property_readonly("current_length", &MatchingState::current_length)
      .def_property_readonly("matching_size", &MatchingState::matching_size)
      .def_property_readonly("perfect", &MatchingState::perfect)
      .def("integer_of", &MatchingState::integer_of, py::arg("divisor"))
      .def("assignment", &MatchingState::assignment)
      .def("hall_certificate", [](const MatchingState& s) {
        const auto c = s.hall_certificate();
        return py::make_tuple(c.violator_set, c.neighborhood_size);
      });

  m.def("solve_f", &solve_f, py::arg("n"), py::arg("m"),
        py::call_guard<py::gil_scoped_release>());
  m.def("solve_f_capped", &solve_f_capped, py::arg("n"), py::arg("m"), py::arg("cap"));

  m.def("brute_force_f", [](std::uint64_t n, std::uint64_t mm) { return oracle::brute_force_f(n, mm); },
        py::arg("n"), py::arg("m"));
  m.def("hall_check",
        [](std::uint64_t n, std::uint64_t mm, std::uint64_t length) {
          return oracle::hall_check(n, mm, length);
        },
        py::arg("n"), py::arg("m"), py::arg("L"));

  m.def("theorem_parameters", [](std::uint64_t n) {
    const auto p = theorem_parameters(n);
    py::dict d;
    d["n"] = p.n;
    d["k"] = p.k;
    d["epsilon"] = fraction(p.epsilon);
    return d;
  }, py::arg("n"));
  m.def("lemma1_sides", [](std::uint64_t k, std::uint64_t n) {
    const auto s = lemma1_sides(k, n);
    return py::make_tuple(s.lhs, s.rhs);
  }, py::arg("k"), py::arg("n"));
  m.def(
      "compose_witness",
      [](std::uint64_t k, std::uint64_t n, std::uint64_t inner_length,
         std::vector<std::uint64_t> inner) {
        return compose_witness(k, n, inner_length, Witness{std::move(inner)}).assignment;
      },
      py::arg("k"), py::arg("n"), py::arg("inner_length"), py::arg("inner"));
  m.def("chain_report", [](std::uint64_t n) {
    py::list rows;
    for (const auto& r : chain_report(n)) {
      py::dict d;
      d["link"] = r.name;
      d["lhs"] = quantity(r.lhs);
      d["rhs"] = quantity(r.rhs);
      d["holds"] = r.holds;
      d["analytic"] = r.analytic;
      rows.append(d);
    }
    return rows;
  }, py::arg("n"));
  m.def("bounds_ratios", [](const std::vector<std::uint64_t>& n_list, unsigned jobs) {
    std::vector<BoundsRow> rows;
    {
      py::gil_scoped_release release;
      rows = bounds_ratios(n_list, exact_f, jobs);
    }
    py::list out;
    for (const auto& r : rows) {
      py::dict d;
      d["n"] = r.n;
      d["f_nn"] = r.f_nn;
      d["lower_env"] = r.lower_env;
      d["upper_env"] = r.upper_env;
      d["ratio_lower"] = r.ratio_lower;
      d["ratio_upper"] = r.ratio_upper;
      out.append(d);
    }
    return out;
  }, py::arg("n_list"), py::arg("jobs") = 1);

  m.def("exhaustive_max", [](std::uint64_t n, unsigned jobs) {
    SearchReport r;
    {
      py::gil_scoped_release release;
      r = exhaustive_max(n, exact_f, jobs);
    }
    return search_dict(r);
  }, py::arg("n"), py::arg("jobs") = 1);
  m.def("sampled_max", [](std::uint64_t n, std::uint64_t budget, std::uint64_t seed, unsigned jobs) {
    SearchReport r;
    {
      py::gil_scoped_release release;
      r = sampled_max(n, budget, seed, exact_f, jobs);
    }
    return search_dict(r);
  }, py::arg("n"), py::arg("budget"), py::arg("seed"), py::arg("jobs") = 1);

  py::class_<ResultStore>(m, "ResultStore")
      .def(py::init<std::filesystem::path, std::string>(), py::arg("path"),
           py::arg("version") = std::string(kEngineVersion))
      .def("get", &ResultStore::get, py::arg("n"), py::arg("m"))
      .def("put", &ResultStore::put, py::arg("n"), py::arg("m"), py::arg("f"))
      .def("__len__", &ResultStore::size)
      .def_static("merge", &ResultStore::merge, py::arg("a"), py::arg("b"), py::arg("out"));
}
