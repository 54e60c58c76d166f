#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qseries/errors.hpp"
#include "qseries/eta.hpp"
#include "qseries/huffing.hpp"
#include "qseries/matrix.hpp"
#include "qseries/parser.hpp"
#include "qseries/report.hpp"
#include "qseries/valuation.hpp"
#include "qseries/vectors.hpp"
#include "qseries/verifier.hpp"

namespace py = pybind11;
using namespace qseries;

namespace {

py::int_ to_py(const Integer& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

Integer from_py(const py::int_& v) {
  const py::str text(static_cast<py::handle>(v));
  return Integer(text.cast<std::string>());
}

py::list to_py(std::span<const Integer> values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

Series make_series(const std::vector<py::int_>& coeffs, Exponent lead, std::optional<Exponent> valid_to) {
  std::vector<Integer> c;
  c.reserve(coeffs.size());
  for (const auto& v : coeffs) c.push_back(from_py(v));
  return Series::from_coefficients(lead, std::move(c), valid_to.value_or(kUnbounded));
}

EtaQuotientSpec as_spec(const py::object& expr) {
  if (py::isinstance<py::str>(expr)) return parse(expr.cast<std::string>());
  return expr.cast<EtaQuotientSpec>();
}

py::object valuation_py(const Valuation& v) {
  if (v.infinite) return py::none();
  return py::int_(v.value);
}

}  // namespace

PYBIND11_MODULE(_qseries, m) {
  m.doc() = "Exact truncated q-series, eta quotients and congruence checks";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<NonUnitLead>(m, "NonUnitLead", base.ptr());
  py::register_exception<BeyondValidity>(m, "BeyondValidity", base.ptr());
  py::register_exception<OffStride>(m, "OffStride", base.ptr());
  py::register_exception<SyntaxError>(m, "ParseError", base.ptr());
  py::register_exception<OverflowError>(m, "Overflow", base.ptr());
  py::register_exception<ZeroPatternViolation>(m, "ZeroPatternViolation", base.ptr());
  py::register_exception<InsufficientRows>(m, "InsufficientRows", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<NonIntegralOffset>(m, "NonIntegralOffset", base.ptr());

  m.attr("UNBOUNDED") = kUnbounded;

  py::class_<Series>(m, "Series")
      .def(py::init(&make_series), py::arg("coefficients") = std::vector<py::int_>{}, py::arg("lead") = 0,
           py::arg("valid_to") = py::none())
      .def_property_readonly("lead", &Series::lead)
      .def_property_readonly("valid_to", &Series::valid_to)
      .def_property_readonly("is_zero", &Series::is_zero)
      .def_property_readonly("is_exact", &Series::is_exact)
      .def("coefficient", [](const Series& s, Exponent n) { return to_py(s.coefficient(n)); })
      .def("coefficients", [](const Series& s) { return to_py(s.coefficients()); },
           "stored coefficients from lead to the last nonzero one")
      .def("truncated", &Series::truncated)
      .def("invert", [](const Series& s, std::optional<Exponent> v) { return invert(s, v); },
           py::arg("valid_to") = py::none())
      .def("pow", [](const Series& s, Exponent k, std::optional<Exponent> v) { return pow(s, k, v); },
           py::arg("k"), py::arg("valid_to") = py::none())
      .def("shift", &shift)
      .def("dilate", &dilate)
      .def("equal_up_to", &equal_up_to)
      .def("__add__", [](const Series& a, const Series& b) { return a + b; })
      .def("__sub__", [](const Series& a, const Series& b) { return a - b; })
      .def("__mul__", [](const Series& a, const Series& b) { return a * b; })
      .def("__mul__", [](const Series& a, const py::int_& c) { return from_py(c) * a; })
      .def("__rmul__", [](const Series& a, const py::int_& c) { return from_py(c) * a; })
      .def("__truediv__", [](const Series& a, const Series& b) { return divide(a, b); })
      .def("__neg__", [](const Series& a) { return -a; })
      .def("__eq__", [](const Series& a, const Series& b) { return a == b; })
      .def("__repr__", [](const Series& s) { return to_string(s); });

  py::class_<EtaQuotientSpec>(m, "EtaQuotient")
      .def_property_readonly("constant", [](const EtaQuotientSpec& s) { return to_py(s.constant); })
      .def_readonly("qshift", &EtaQuotientSpec::qshift)
      .def_readonly("factors", &EtaQuotientSpec::factors)
      .def("__mul__", [](const EtaQuotientSpec& a, const EtaQuotientSpec& b) { return a * b; })
      .def("__truediv__", [](const EtaQuotientSpec& a, const EtaQuotientSpec& b) { return a / b; })
      .def("__pow__", &EtaQuotientSpec::power)
      .def("__eq__", [](const EtaQuotientSpec& a, const EtaQuotientSpec& b) { return a == b; })
      .def("__str__", &render)
      .def("__repr__", [](const EtaQuotientSpec& s) { return "EtaQuotient('" + render(s) + "')"; });

  m.def("parse", &parse, py::arg("text"));
  m.def("family_spec", [](const std::string& name) { return family_spec(parse_family(name)); });
  m.def("expand", [](const py::object& expr, Exponent N) { return expand_spec(as_spec(expr), N); },
        py::arg("expr"), py::arg("N"), "expand a parsed spec or an expression string through q^N");
  m.def("expand_eta", &expand_eta, py::arg("k"), py::arg("N"));

  m.def("huff", [](const Series& s, Exponent modulus, Exponent residue) { return huff(s, {modulus, residue}); },
        py::arg("series"), py::arg("modulus") = 3, py::arg("residue") = 0);
  m.def("deflate", &deflate, py::arg("series"), py::arg("m"));
  m.def("extract_progression", &extract_progression, py::arg("series"), py::arg("m"), py::arg("r"));

  m.def("valuation", [](const py::int_& v, unsigned long p) { return valuation_py(valuation(from_py(v), p)); },
        py::arg("value"), py::arg("p") = 3, "p-adic valuation; None for zero");
  m.def("oracle_count", [](const std::string& family, Exponent n, Exponent cap) {
    return to_py(oracle_count(parse_family(family), n, cap));
  }, py::arg("family"), py::arg("n"), py::arg("cap") = kDefaultOracleCap);

  m.def("build_matrix", [](std::size_t rows) {
    const MatrixTable t = build_matrix(rows);
    py::list out;
    for (std::size_t i = 1; i <= t.depth(); ++i) out.append(to_py(t.row(i)));
    return out;
  }, py::arg("rows"), "rows 1..rows of M; row i has i entries");
  m.def("verify_huff_expansion", [](std::size_t i, Exponent N) {
    return verify_huff_expansion(build_matrix(i), i, N);
  }, py::arg("i"), py::arg("N"));

  m.def("vector_chain", [](const std::string& family, Exponent alpha_max) {
    py::list out;
    for (const auto& v : vector_chain(parse_vector_family(family), alpha_max)) {
      const ValuationReport r = check_valuations(v);
      py::list nu;
      py::list bound;
      for (const auto& row : r.rows) {
        nu.append(valuation_py(row.nu));
        bound.append(row.bound);
      }
      py::dict d;
      d["family"] = family;
      d["alpha"] = v.alpha;
      d["entries"] = to_py(v.entries);
      d["nu"] = nu;
      d["bound"] = bound;
      d["valuations_pass"] = r.pass;
      out.append(d);
    }
    return out;
  }, py::arg("family"), py::arg("alpha_max"));

  m.def("verify_claim_json", [](const std::string& family, Exponent stride, Exponent offset,
                                unsigned long modulus_base, unsigned modulus_exponent, Exponent n_max,
                                Exponent n_budget) {
    CongruenceClaim c{family + "/" + std::to_string(stride) + "n+" + std::to_string(offset),
                      parse_family(family), stride, offset, modulus_base, modulus_exponent};
    c.validate();
    return claim_json(verify_claim(c, n_max, n_budget)).dump();
  });
  m.def("theorem_suite_json", [](Exponent alpha_t1, Exponent alpha_t2, std::optional<Exponent> n_max,
                                 Exponent n_budget) {
    TheoremOptions o{alpha_t1, alpha_t2, n_max, n_budget};
    py::gil_scoped_release release;
    return suite_json(theorem_suite(o)).dump();
  });
  m.def("identity_suite_json", [](Exponent order) {
    IdentityOptions o;
    o.order = order;
    py::gil_scoped_release release;
    return suite_json(identity_suite(o)).dump();
  });
}
