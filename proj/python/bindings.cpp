// Copyright 2026 The matrix-census Authors.
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mcensus/canonical.hpp"
#include "mcensus/census.hpp"
#include "mcensus/centralizer.hpp"
#include "mcensus/cli.hpp"
#include "mcensus/errors.hpp"
#include "mcensus/factor.hpp"

namespace py = pybind11;
using namespace mcensus;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

BigInt from_py(const py::int_& v) {
  return BigInt(py::str(static_cast<const py::object&>(v)).cast<std::string>());
}

py::object fraction(const ExactRational& r) {
  return py::module_::import("fractions")
      .attr("Fraction")(to_py(numerator(r)), to_py(denominator(r)));
}

py::list factor_list(const Factorization& fac) {
  py::list out;
  for (const auto& [poly, mult] : fac.factors) out.append(py::make_tuple(format_poly(poly), mult));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact counts of matrices over GF(q) by characteristic polynomial.";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<InternalError>(m, "InternalError", base.ptr());

  py::class_<FieldSpec>(m, "Field")
      .def(py::init([](std::uint64_t q, std::optional<unsigned> k) {
             return k ? FieldSpec::make(q, *k) : FieldSpec::from_order(q);
           }),
           py::arg("q"), py::arg("k") = py::none(),
           "GF(q) for a prime power q, or GF(q^k) when k is given.")
      .def_property_readonly("order", &FieldSpec::order)
      .def_property_readonly("characteristic", &FieldSpec::characteristic)
      .def_property_readonly("degree", &FieldSpec::extension_degree)
      .def_property_readonly("modulus",
                             [](const FieldSpec& f) {
                               return std::vector<std::uint32_t>(f.modulus().begin(),
                                                                 f.modulus().end());
                             })
      .def("__eq__", [](const FieldSpec& a, const FieldSpec& b) { return a == b; })
      .def("__repr__", &FieldSpec::name);

  m.def("is_irreducible", [](const FieldSpec& f, const std::string& poly) {
    return is_irreducible(parse_poly(poly, f));
  });
  m.def(
      "factor",
      [](const FieldSpec& f, const std::string& poly, std::uint64_t seed) {
        const auto fac = factorize(parse_poly(poly, f), seed);
        return py::make_tuple(fac.leading, factor_list(fac));
      },
      py::arg("field"), py::arg("poly"), py::arg("seed") = 0,
      "(leading, [(factor, multiplicity), ...]) with factors in canonical order.");
  m.def("count_monic_irreducibles", [](const FieldSpec& f, unsigned n) {
    return to_py(count_monic_irreducibles(f, n));
  });

  m.def("charpoly", [](const FieldSpec& f, const std::string& matrix) {
    return format_poly(charpoly(parse_matrix(matrix, f)));
  });
  m.def("minpoly", [](const FieldSpec& f, const std::string& matrix) {
    return format_poly(minpoly(parse_matrix(matrix, f)));
  });
  m.def("rcf", [](const FieldSpec& f, const std::string& matrix) {
    const auto r = rcf(parse_matrix(matrix, f));
    std::vector<std::string> blocks;
    for (const auto& b : r.blocks) blocks.push_back(format_poly(b));
    py::dict out;
    out["blocks"] = blocks;
    out["transition"] = format_matrix(r.transition);
    return out;
  });
  m.def("are_similar", [](const FieldSpec& f, const std::string& a, const std::string& b) {
    return are_similar(parse_matrix(a, f), parse_matrix(b, f)).similar;
  });
  m.def(
      "centralizer",
      [](const FieldSpec& f, const std::string& matrix, std::uint64_t budget) {
        const auto mat = parse_matrix(matrix, f);
        const auto c = centralizer(mat);
        std::vector<std::string> basis;
        for (const auto& x : c.basis) basis.push_back(format_matrix(x));
        py::dict out;
        out["dimension"] = c.dimension;
        out["order"] = to_py(c.order);
        out["basis"] = basis;
        out["units"] = to_py(centralizer_unit_count(mat, budget));
        out["is_polynomial_centralizer"] = is_polynomial_centralizer(mat);
        return out;
      },
      py::arg("field"), py::arg("matrix"), py::arg("budget") = kDefaultEnumerationBudget);

  m.def("f_product", [](const py::int_& u, std::uint64_t v) {
    return fraction(f_product(from_py(u), v));
  });
  m.def("gl_order", [](const py::int_& q, std::uint64_t n) { return to_py(gl_order(from_py(q), n)); });
  m.def("count_irreducible_case", [](const py::int_& q, std::uint64_t n) {
    return to_py(count_irreducible_case(from_py(q), n));
  });
  m.def(
      "count_with_charpoly",
      [](const FieldSpec& f, const std::string& poly, std::uint64_t seed) {
        return to_py(count_with_charpoly(parse_poly(poly, f), seed));
      },
      py::arg("field"), py::arg("poly"), py::arg("seed") = 0);
  m.def(
      "census",
      [](const FieldSpec& f, std::size_t n, unsigned threads, std::uint64_t budget) {
        CensusReport r;
        {
          py::gil_scoped_release release;
          r = census_bruteforce(f, n, {budget, threads});
        }
        py::dict out;
        for (const auto& [g, c] : r.entries) out[py::str(format_poly(g))] = to_py(c);
        return out;
      },
      py::arg("field"), py::arg("n"), py::arg("threads") = 0,
      py::arg("budget") = kDefaultCensusBudget, "Map from charpoly text to matrix count.");
  m.def(
      "verify_partition",
      [](const FieldSpec& f, std::size_t n) { return verify_partition(f, n).holds; },
      py::arg("field"), py::arg("n"));
  m.def("orbit_stabilizer", [](const FieldSpec& f, const std::string& matrix) {
    const auto r = orbit_stabilizer_report(parse_matrix(matrix, f));
    py::dict out;
    out["charpoly"] = format_poly(r.charpoly);
    out["gl_order"] = to_py(r.gl_order);
    out["stabilizer_order"] = to_py(r.stabilizer_order);
    out["orbit_size"] = to_py(r.orbit_size);
    out["formula_count"] = to_py(r.formula_count);
    out["consistent"] = r.consistent;
    return out;
  });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Runs one mcensus command in-process; returns (exit_code, stdout, stderr).");
}
