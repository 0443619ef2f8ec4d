#include <complex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ramanujan/cli.hpp"
#include "ramanujan/congruence.hpp"
#include "ramanujan/elliptic.hpp"
#include "ramanujan/padic.hpp"
#include "ramanujan/report.hpp"
#include "ramanujan/tau.hpp"

namespace py = pybind11;
using namespace ramanujan;

// Python int <-> mpz_class through decimal strings.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    const std::string digits = py::str(src);
    return value.set_str(digits, 10) == 0;
  }

  static handle cast(const mpz_class& x, return_value_policy, handle) {
    const std::string digits = x.get_str(10);
    return PyLong_FromString(digits.c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

py::object json_loads(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

py::list records_to_python(const VerificationReport& report) {
  py::list out;
  for (const auto& r : report) out.append(json_loads(to_json_line(r)));
  return out;
}

Rational to_rational(const py::object& x) { return parse_rational(std::string(py::str(x))); }

py::object to_fraction(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(py::cast(Integer(q.get_num())),
                                                            py::cast(Integer(q.get_den())));
}

IntPolynomial poly_from(const std::vector<Integer>& coeffs) { return IntPolynomial(coeffs); }

CongruenceLaw law_by_id(const std::string& id) {
  for (auto& law : stated_congruences()) {
    if (law.id == id) return law;
  }
  throw py::value_error("unknown congruence law '" + id + "'");
}

RhsForm rhs_by_name(const std::string& name) {
  if (name == "1+p^11") return RhsForm::one_plus_p11;
  if (name == "1+p") return RhsForm::one_plus_p;
  throw py::value_error("rhs must be '1+p^11' or '1+p'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact tau-function expansion, law verification, and p-adic / elliptic-curve tools";

  py::class_<TauTable>(m, "TauTable")
      .def(py::init([](std::size_t max_n) { return compute_tau_table(max_n); }), py::arg("max_n"))
      .def_static("from_text",
                  [](const std::string& text) {
                    std::istringstream in(text);
                    return read_tau_table(in);
                  })
      .def("to_text",
           [](const TauTable& t) {
             std::ostringstream out;
             write_tau_table(out, t);
             return out.str();
           })
      .def_property_readonly("max_n", &TauTable::max_n)
      .def("__len__", &TauTable::max_n)
      .def("__getitem__", [](const TauTable& t, std::size_t n) {
        if (n == 0 || n > t.max_n()) throw py::index_error("tau index out of range");
        return t.at(n);
      })
      .def("values", [](const TauTable& t) { return t.expansion().values(); })
      .def("__eq__", [](const TauTable& a, const TauTable& b) { return a == b; });

  m.def("tau", [](std::size_t n) { return compute_tau_table(n).at(n); }, py::arg("n"));
  m.def("tau_table_via_cube", &tau_table_via_cube, py::arg("max_n"));
  m.def("tau_extended", &tau_extended, py::arg("n"), py::arg("table"));
  m.def("verify_conjecture_one", [](const TauTable& t) { return records_to_python(verify_conjecture_one(t)); });
  m.def("verify_deligne_bound", [](const TauTable& t) { return records_to_python(verify_deligne_bound(t)); });
  m.def("verify_eigenform",
        [](const TauTable& t, std::uint64_t p_max) { return records_to_python(verify_eigenform(t, p_max)); },
        py::arg("table"), py::arg("p_max"));
  m.def("verify_congruence",
        [](const std::string& law, const TauTable& t) { return records_to_python(verify_congruence(law_by_id(law), t)); },
        py::arg("law"), py::arg("table"));
  m.def("find_counterexample_scan",
        [](const Integer& modulus, const std::string& rhs, const TauTable& t, const std::set<std::uint64_t>& excluded) {
          return find_counterexample_scan(modulus, rhs_by_name(rhs), t, excluded);
        },
        py::arg("modulus"), py::arg("rhs"), py::arg("table"), py::arg("excluded") = std::set<std::uint64_t>{});
  m.def("hecke_apply",
        [](const std::vector<Integer>& coeffs, std::uint64_t p, unsigned weight) {
          return hecke_apply(QExpansion(coeffs), p, WeightLevel(weight)).values();
        },
        py::arg("coefficients"), py::arg("p"), py::arg("weight") = 12);
  m.def("mobius_act",
        [](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::complex<double> z) {
          return mobius_act(MobiusMatrix(a, b, c, d), z);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("z"));
  m.def("evaluate_delta", &evaluate_delta, py::arg("z"), py::arg("table"));

  m.def("vp", [](std::uint64_t p, const py::object& x) { return vp(p, to_rational(x)); }, py::arg("p"), py::arg("x"));
  m.def("padic_abs", [](std::uint64_t p, const py::object& x) { return to_fraction(padic_abs(p, to_rational(x))); },
        py::arg("p"), py::arg("x"));
  m.def("roots_mod_pk",
        [](const std::vector<Integer>& f, std::uint64_t p, unsigned k) { return roots_mod_pk(poly_from(f), p, k); },
        py::arg("coefficients"), py::arg("p"), py::arg("k"));
  m.def("hensel_lift",
        [](const std::vector<Integer>& f, std::uint64_t p, const Integer& r, unsigned k) {
          return hensel_lift(poly_from(f), p, r, k);
        },
        py::arg("coefficients"), py::arg("p"), py::arg("r"), py::arg("k"));
  m.def("has_root_in_zp",
        [](const std::vector<Integer>& f, std::uint64_t p, unsigned effort, std::optional<unsigned> witness_precision) {
          return json_loads(to_json(has_root_in_zp(poly_from(f), p, effort, witness_precision)));
        },
        py::arg("coefficients"), py::arg("p"), py::arg("effort"), py::arg("witness_precision") = py::none());
  m.def("is_square_in_qp",
        [](const py::object& a, std::uint64_t p, unsigned precision) {
          return json_loads(to_json(is_square_in_qp(to_rational(a), p, precision)));
        },
        py::arg("a"), py::arg("p"), py::arg("precision") = 10);
  m.def("monic_integrality",
        [](const std::vector<Integer>& f, std::uint64_t p) {
          return json_loads(to_json(monic_root_in_qp_reduces_to_zp(poly_from(f), p)));
        },
        py::arg("coefficients"), py::arg("p"));

  m.def("reduce_curve",
        [](const Integer& a, const Integer& b, std::uint64_t p) { return json_loads(to_json(reduce_curve(CurveSpec(a, b), p))); },
        py::arg("a"), py::arg("b"), py::arg("p"));
  m.def("ap_sweep",
        [](const Integer& a, const Integer& b, std::uint64_t p_max) {
          py::list out;
          for (const auto& r : ap_sweep(CurveSpec(a, b), p_max)) out.append(json_loads(to_json(r)));
          return out;
        },
        py::arg("a"), py::arg("b"), py::arg("p_max"));
  m.def("count_affine_naive", &count_affine_naive, py::arg("a"), py::arg("b"), py::arg("p"));
  m.def("count_affine_by_character", &count_affine_by_character, py::arg("a"), py::arg("b"), py::arg("p"));

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::vector<const char*> argv{"ramanujan"};
          for (const auto& a : args) argv.push_back(a.c_str());
          std::ostringstream out, err;
          const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));

  py::register_exception<EnumerationBudgetError>(m, "EnumerationBudgetError", PyExc_ValueError);
}
