#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "fracgruss/errors.hpp"
#include "fracgruss/harness.hpp"
#include "fracgruss/operators.hpp"
#include "fracgruss/quadrature.hpp"
#include "fracgruss/reductions.hpp"
#include "fracgruss/serialization.hpp"
#include "fracgruss/special.hpp"

namespace py = pybind11;
namespace fg = fracgruss;

namespace {

fg::CheckOptions options(double tol, std::size_t cert_grid) {
  fg::CheckOptions opt;
  opt.tol = tol;
  opt.cert_grid = cert_grid;
  return opt;
}

}  // namespace

PYBIND11_MODULE(_fracgruss, m) {
  m.doc() = "Generalized fractional integral evaluation and Gruss-type checks";

  py::register_exception<fg::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<fg::ParseError>(m, "FunctionParseError", PyExc_ValueError);
  py::register_exception<fg::PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<fg::EvalError>(m, "EvalError", PyExc_ArithmeticError);
  py::register_exception<fg::InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);
  py::register_exception<fg::UnsupportedReductionError>(m, "UnsupportedReductionError",
                                                        PyExc_ValueError);

  m.def("log_gamma", &fg::log_gamma, py::arg("x"));

  py::class_<fg::OperatorParams>(m, "OperatorParams")
      .def(py::init<double, double, double, double, double>(), py::arg("rho"), py::arg("alpha"),
           py::arg("beta"), py::arg("eta"), py::arg("k"))
      .def_readonly("rho", &fg::OperatorParams::rho)
      .def_readonly("alpha", &fg::OperatorParams::alpha)
      .def_readonly("beta", &fg::OperatorParams::beta)
      .def_readonly("eta", &fg::OperatorParams::eta)
      .def_readonly("k", &fg::OperatorParams::k)
      .def("__repr__", [](const fg::OperatorParams& p) { return "OperatorParams" + p.describe(); })
      .def("__eq__", [](const fg::OperatorParams& a, const fg::OperatorParams& b) {
        return a == b;
      });

  m.def("lambda_value", &fg::lambda_value, py::arg("params"), py::arg("x"));

  py::class_<fg::FunctionSpec>(m, "FunctionSpec")
      .def_static("parse", &fg::FunctionSpec::parse, py::arg("text"))
      .def_static("constant", &fg::FunctionSpec::constant, py::arg("c"))
      .def_static("variable", &fg::FunctionSpec::variable)
      .def_static("power", &fg::FunctionSpec::power, py::arg("exponent"))
      .def("__call__", [](const fg::FunctionSpec& f, double tau) { return f(tau); },
           py::arg("tau"))
      .def("serialize", &fg::FunctionSpec::serialize)
      .def("__eq__", [](const fg::FunctionSpec& a, const fg::FunctionSpec& b) { return a == b; })
      .def("__add__", [](const fg::FunctionSpec& a, const fg::FunctionSpec& b) { return a + b; })
      .def("__sub__", [](const fg::FunctionSpec& a, const fg::FunctionSpec& b) { return a - b; })
      .def("__mul__", [](const fg::FunctionSpec& a, const fg::FunctionSpec& b) { return a * b; })
      .def("__rmul__", [](const fg::FunctionSpec& f, double c) { return c * f; })
      .def("__repr__",
           [](const fg::FunctionSpec& f) { return "FunctionSpec('" + f.serialize() + "')"; });

  py::class_<fg::QuadratureRule>(m, "QuadratureRule")
      .def_readonly("n", &fg::QuadratureRule::n)
      .def_readonly("a", &fg::QuadratureRule::a)
      .def_readonly("b", &fg::QuadratureRule::b)
      .def_readonly("nodes", &fg::QuadratureRule::nodes)
      .def_readonly("weights", &fg::QuadratureRule::weights);

  m.def("jacobi_rule", &fg::jacobi_rule, py::arg("n"), py::arg("a"), py::arg("b"));

  py::class_<fg::OperatorResult>(m, "OperatorResult")
      .def_readonly("value", &fg::OperatorResult::value)
      .def_readonly("rule_size", &fg::OperatorResult::rule_size)
      .def_readonly("params", &fg::OperatorResult::params)
      .def_readonly("x", &fg::OperatorResult::x)
      .def("__repr__", [](const fg::OperatorResult& r) {
        return "OperatorResult(value=" + fg::format_double(r.value) + ")";
      });

  m.def("left_integral", &fg::left_integral, py::arg("f"), py::arg("params"), py::arg("x"),
        py::arg("n") = fg::kDefaultNodes);
  m.def("right_integral", &fg::right_integral, py::arg("f"), py::arg("params"), py::arg("x"),
        py::arg("b"), py::arg("n") = fg::kDefaultNodes);
  m.def("power_closed_form", &fg::power_closed_form, py::arg("s"), py::arg("params"),
        py::arg("x"));
  m.def("check_composition", &fg::check_composition, py::arg("f"), py::arg("outer"),
        py::arg("inner"), py::arg("x"), py::arg("n") = fg::kDefaultNodes,
        py::arg("tol") = fg::kDefaultTol);

  m.def("preset_params", &fg::preset_params, py::arg("name"), py::arg("alpha"),
        py::arg("rho") = 1.0, py::arg("eta") = 0.0);
  m.def("reduction_presets", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& p : fg::reduction_presets()) out.emplace_back(p.name, p.description);
    return out;
  });
  m.def("classical_rl", &fg::classical_rl, py::arg("f"), py::arg("alpha"), py::arg("x"),
        py::arg("n") = fg::kDefaultNodes);

  py::class_<fg::ConstantBounds>(m, "ConstantBounds")
      .def(py::init<double, double>(), py::arg("m"), py::arg("M"))
      .def_readonly("m", &fg::ConstantBounds::m)
      .def_readonly("M", &fg::ConstantBounds::M);

  py::class_<fg::BoundedFunction>(m, "BoundedFunction")
      .def(py::init<fg::FunctionSpec, fg::FunctionSpec, fg::FunctionSpec>(), py::arg("fn"),
           py::arg("lower"), py::arg("upper"))
      .def_readonly("fn", &fg::BoundedFunction::fn)
      .def_readonly("lower", &fg::BoundedFunction::lower)
      .def_readonly("upper", &fg::BoundedFunction::upper)
      .def("certify", &fg::BoundedFunction::certify, py::arg("x"),
           py::arg("grid") = fg::kDefaultCertGrid);

  py::class_<fg::TwoParamCase>(m, "TwoParamCase")
      .def(py::init<fg::OperatorParams, fg::OperatorParams, double, std::size_t>(),
           py::arg("first"), py::arg("second"), py::arg("x"),
           py::arg("nodes") = fg::kDefaultNodes)
      .def_readonly("first", &fg::TwoParamCase::first)
      .def_readonly("second", &fg::TwoParamCase::second)
      .def_readonly("x", &fg::TwoParamCase::x)
      .def_readonly("nodes", &fg::TwoParamCase::nodes);

  py::class_<fg::CheckReport>(m, "CheckReport")
      .def_readonly("theorem_id", &fg::CheckReport::theorem_id)
      .def_readonly("lhs", &fg::CheckReport::lhs)
      .def_readonly("rhs", &fg::CheckReport::rhs)
      .def_readonly("slack", &fg::CheckReport::slack)
      .def_readonly("scale", &fg::CheckReport::scale)
      .def_readonly("tol", &fg::CheckReport::tol)
      .def_readonly("holds", &fg::CheckReport::holds)
      .def_readonly("seed", &fg::CheckReport::seed)
      .def("normalized_slack", &fg::CheckReport::normalized_slack)
      .def("to_json", [](const fg::CheckReport& r) { return r.to_json().dump(); })
      .def("__repr__", [](const fg::CheckReport& r) {
        return "CheckReport(" + r.theorem_id + ", slack=" + fg::format_double(r.slack) +
               ", holds=" + (r.holds ? std::string("True") : std::string("False")) + ")";
      });

  m.def("functional_T", &fg::functional_T, py::arg("phi"), py::arg("psi"), py::arg("omega"),
        py::arg("params"), py::arg("x"), py::arg("n") = fg::kDefaultNodes);
  m.def("functional_K", &fg::functional_K, py::arg("phi"), py::arg("psi"), py::arg("omega"),
        py::arg("case"));

  m.def(
      "check_thm1",
      [](const fg::BoundedFunction& v, const fg::TwoParamCase& c, double tol,
         std::size_t cert_grid) { return fg::check_thm1(v, c, options(tol, cert_grid)); },
      py::arg("v"), py::arg("case"), py::arg("tol") = fg::kDefaultTol,
      py::arg("cert_grid") = fg::kDefaultCertGrid);
  m.def(
      "check_cor1",
      [](const fg::FunctionSpec& v, const fg::ConstantBounds& b, const fg::TwoParamCase& c,
         double tol, std::size_t cert_grid) {
        return fg::check_cor1(v, b, c, options(tol, cert_grid));
      },
      py::arg("v"), py::arg("bounds"), py::arg("case"), py::arg("tol") = fg::kDefaultTol,
      py::arg("cert_grid") = fg::kDefaultCertGrid);
  m.def(
      "residual_lemma1",
      [](const fg::BoundedFunction& v, const fg::OperatorParams& p, double x, std::size_t n,
         double tol, std::size_t cert_grid) {
        return fg::residual_lemma1(v, p, x, n, options(tol, cert_grid));
      },
      py::arg("v"), py::arg("params"), py::arg("x"), py::arg("n") = fg::kDefaultNodes,
      py::arg("tol") = fg::kDefaultTol, py::arg("cert_grid") = fg::kDefaultCertGrid);
  m.def(
      "check_thm2",
      [](const fg::BoundedFunction& v, const fg::BoundedFunction& u, const fg::OperatorParams& p,
         double x, std::size_t n, double tol, std::size_t cert_grid) {
        return fg::check_thm2(v, u, p, x, n, options(tol, cert_grid));
      },
      py::arg("v"), py::arg("u"), py::arg("params"), py::arg("x"),
      py::arg("n") = fg::kDefaultNodes, py::arg("tol") = fg::kDefaultTol,
      py::arg("cert_grid") = fg::kDefaultCertGrid);
  m.def(
      "check_cs_one_param",
      [](const fg::FunctionSpec& v, const fg::FunctionSpec& u, const fg::OperatorParams& p,
         double x, std::size_t n, double tol) {
        return fg::check_cs_one_param(v, u, p, x, n, options(tol, fg::kDefaultCertGrid));
      },
      py::arg("v"), py::arg("u"), py::arg("params"), py::arg("x"),
      py::arg("n") = fg::kDefaultNodes, py::arg("tol") = fg::kDefaultTol);
  m.def(
      "residual_lemma2",
      [](const fg::BoundedFunction& v, const fg::TwoParamCase& c, double tol,
         std::size_t cert_grid) { return fg::residual_lemma2(v, c, options(tol, cert_grid)); },
      py::arg("v"), py::arg("case"), py::arg("tol") = fg::kDefaultTol,
      py::arg("cert_grid") = fg::kDefaultCertGrid);
  m.def(
      "check_thm3",
      [](const fg::BoundedFunction& v, const fg::BoundedFunction& u, const fg::TwoParamCase& c,
         double tol, std::size_t cert_grid) {
        return fg::check_thm3(v, u, c, options(tol, cert_grid));
      },
      py::arg("v"), py::arg("u"), py::arg("case"), py::arg("tol") = fg::kDefaultTol,
      py::arg("cert_grid") = fg::kDefaultCertGrid);

  py::enum_<fg::Thm4Part>(m, "Thm4Part")
      .value("a", fg::Thm4Part::a)
      .value("b", fg::Thm4Part::b)
      .value("c", fg::Thm4Part::c)
      .value("d", fg::Thm4Part::d);
  m.def(
      "check_thm4",
      [](fg::Thm4Part part, const fg::BoundedFunction& v, const fg::BoundedFunction& u,
         const fg::TwoParamCase& c, double tol, std::size_t cert_grid) {
        return fg::check_thm4(part, v, u, c, options(tol, cert_grid));
      },
      py::arg("part"), py::arg("v"), py::arg("u"), py::arg("case"),
      py::arg("tol") = fg::kDefaultTol, py::arg("cert_grid") = fg::kDefaultCertGrid);

  py::enum_<fg::Cor2Part>(m, "Cor2Part")
      .value("A", fg::Cor2Part::A)
      .value("B", fg::Cor2Part::B)
      .value("C", fg::Cor2Part::C)
      .value("D", fg::Cor2Part::D);
  m.def(
      "check_cor2",
      [](fg::Cor2Part part, const fg::FunctionSpec& v, const fg::FunctionSpec& u,
         const fg::ConstantBounds& vb, const fg::ConstantBounds& ub, const fg::TwoParamCase& c,
         double tol, std::size_t cert_grid) {
        return fg::check_cor2(part, v, u, vb, ub, c, options(tol, cert_grid));
      },
      py::arg("part"), py::arg("v"), py::arg("u"), py::arg("v_bounds"), py::arg("u_bounds"),
      py::arg("case"), py::arg("tol") = fg::kDefaultTol,
      py::arg("cert_grid") = fg::kDefaultCertGrid);
  m.def(
      "check_dahmani_remark",
      [](const fg::FunctionSpec& v, const fg::FunctionSpec& u, const fg::ConstantBounds& vb,
         const fg::ConstantBounds& ub, const fg::OperatorParams& p, double x, std::size_t n,
         double tol, std::size_t cert_grid) {
        return fg::check_dahmani_remark(v, u, vb, ub, p, x, n, options(tol, cert_grid));
      },
      py::arg("v"), py::arg("u"), py::arg("v_bounds"), py::arg("u_bounds"), py::arg("params"),
      py::arg("x"), py::arg("n") = fg::kDefaultNodes, py::arg("tol") = fg::kDefaultTol,
      py::arg("cert_grid") = fg::kDefaultCertGrid);

  m.def(
      "run_check_from_case",
      [](const std::string& theorem_id, const std::string& case_json, double tol) {
        return fg::run_check_from_case(theorem_id, nlohmann::json::parse(case_json),
                                       options(tol, fg::kDefaultCertGrid));
      },
      py::arg("theorem_id"), py::arg("case_json"), py::arg("tol") = fg::kDefaultTol);

  py::enum_<fg::CaseFamily>(m, "CaseFamily")
      .value("constant", fg::CaseFamily::constant)
      .value("monomial", fg::CaseFamily::monomial)
      .value("polynomial", fg::CaseFamily::polynomial)
      .value("trig_poly", fg::CaseFamily::trig_poly)
      .value("exp_mix", fg::CaseFamily::exp_mix);

  py::class_<fg::GeneratedCase>(m, "GeneratedCase")
      .def_readonly("v", &fg::GeneratedCase::v)
      .def_readonly("u", &fg::GeneratedCase::u)
      .def_readonly("params", &fg::GeneratedCase::params)
      .def_readonly("seed", &fg::GeneratedCase::seed);

  m.def("generate_case", &fg::generate_case, py::arg("seed"), py::arg("family"),
        py::arg("x_max"), py::arg("nodes") = fg::kDefaultNodes);
  m.def("derive_trial_seed", &fg::derive_trial_seed, py::arg("master_seed"), py::arg("index"));
  m.def("known_theorem_ids", [] { return fg::known_theorem_ids(); });
  m.def(
      "run_check",
      [](const std::string& id, const fg::GeneratedCase& gc, double tol) {
        return fg::run_check(id, gc, options(tol, fg::kDefaultCertGrid));
      },
      py::arg("theorem_id"), py::arg("case"), py::arg("tol") = fg::kDefaultTol);

  m.def(
      "run_suite",
      [](const std::string& config_json) {
        fg::SuiteConfig config =
            fg::suite_config_from_json(nlohmann::json::parse(config_json));
        fg::SuiteReport report = fg::run_suite(config);
        return report.to_json().dump();
      },
      py::arg("config_json"),
      "Run a suite from a JSON config string; returns the JSON report string.");
}
