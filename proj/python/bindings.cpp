#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mproots/bench.hpp"

namespace py = pybind11;
using namespace mproots;

PYBIND11_MODULE(_mproots, m) {
    m.doc() = "Arbitrary-precision derivative-free root finding and convergence benchmarks";

    py::register_exception<MalformedLiteral>(m, "MalformedLiteral", PyExc_ValueError);
    py::register_exception<UnknownProblem>(m, "UnknownProblem", PyExc_KeyError);
    py::register_exception<UnknownMethod>(m, "UnknownMethod", PyExc_KeyError);
    py::register_exception<NoConvergence>(m, "NoConvergence", PyExc_RuntimeError);
    py::register_exception<DegenerateNodes>(m, "DegenerateNodes", PyExc_ArithmeticError);
    py::register_exception<WeightSingular>(m, "WeightSingular", PyExc_ArithmeticError);
    py::register_exception<InsufficientTrace>(m, "InsufficientTrace", PyExc_ValueError);
    py::register_exception<ZeroError>(m, "ZeroError", PyExc_ArithmeticError);

    py::class_<PrecisionContext>(m, "PrecisionContext")
        .def(py::init<>())
        .def(py::init<long>(), py::arg("digits"))
        .def_readonly("digits", &PrecisionContext::digits)
        .def("__repr__", [](const PrecisionContext& c) {
            return "PrecisionContext(digits=" + std::to_string(c.digits) + ")";
        });

    py::class_<Real>(m, "Real")
        .def(py::init([](const std::string& text, const PrecisionContext& ctx) {
                 return parse_real(text, ctx);
             }),
             py::arg("text"), py::arg("ctx") = PrecisionContext())
        .def_property_readonly("digits", &Real::digits)
        .def("to_sci", &Real::to_sci, py::arg("sig_digits"))
        .def("is_zero", &Real::is_zero)
        .def("is_finite", &Real::is_finite)
        .def("log10_abs", &Real::log10_abs)
        .def("round_to", &Real::round_to, py::arg("digits"))
        .def("__str__", &Real::to_string)
        .def("__repr__", [](const Real& r) { return "Real('" + r.to_string() + "')"; })
        .def("__float__", &Real::to_double)
        .def("__abs__", [](const Real& r) { return abs(r); })
        .def("__neg__", [](const Real& r) { return -r; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(py::self + long())
        .def(long() + py::self)
        .def(py::self - long())
        .def(long() - py::self)
        .def(py::self * long())
        .def(long() * py::self)
        .def(py::self / long())
        .def(long() / py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self);

    m.def("parse_real", &parse_real, py::arg("text"), py::arg("ctx") = PrecisionContext());
    m.def("approx_eq", &approx_eq, py::arg("a"), py::arg("b"), py::arg("tol_digits"));
    m.def("pow10", &pow10, py::arg("e"), py::arg("ctx") = PrecisionContext());
    m.def("real_exp", [](const Real& x) { return exp(x); });
    m.def("real_ln", [](const Real& x) { return ln(x); });
    m.def("real_sin", [](const Real& x) { return sin(x); });
    m.def("real_cos", [](const Real& x) { return cos(x); });
    m.def("real_sqrt", [](const Real& x) { return sqrt(x); });

    py::class_<Problem>(m, "Problem")
        .def(py::init<>())
        .def_readwrite("id", &Problem::id)
        .def_readwrite("evaluate", &Problem::evaluate)
        .def_readwrite("derivative", &Problem::derivative)
        .def_readwrite("alpha_hint", &Problem::alpha_hint)
        .def_readwrite("x0", &Problem::x0)
        .def_readwrite("alpha_exact", &Problem::alpha_exact)
        .def_readwrite("alpha_refined", &Problem::alpha_refined)
        .def("x0_at", &Problem::x0_at, py::arg("ctx") = PrecisionContext())
        .def("alpha_hint_at", &Problem::alpha_hint_at, py::arg("ctx") = PrecisionContext())
        .def("__repr__", [](const Problem& p) { return "Problem('" + p.id + "')"; });

    m.def("get_problem", &get_problem, py::arg("id"));
    m.def("problem_ids", []() { return problem_ids(); });
    m.def("refine_root", &refine_root, py::arg("problem"), py::arg("ctx") = PrecisionContext());

    py::enum_<Scheme>(m, "Scheme")
        .value("Newton", Scheme::Newton)
        .value("Steffensen", Scheme::Steffensen)
        .value("Family", Scheme::Family)
        .value("KungTraub", Scheme::KungTraub)
        .value("ThukralM1", Scheme::ThukralM1)
        .value("ThukralM2", Scheme::ThukralM2)
        .value("ThukralM3", Scheme::ThukralM3)
        .value("Petkovic1", Scheme::Petkovic1)
        .value("Petkovic2", Scheme::Petkovic2);

    py::enum_<GKind>(m, "GKind").value("G1", GKind::G1).value("G2", GKind::G2);
    py::enum_<HKind>(m, "HKind")
        .value("H1", HKind::H1)
        .value("H2", HKind::H2)
        .value("H3", HKind::H3)
        .value("H4", HKind::H4)
        .value("H5", HKind::H5);

    py::class_<MethodConfig>(m, "MethodConfig")
        .def(py::init<>())
        .def_readwrite("scheme", &MethodConfig::scheme)
        .def_readwrite("kappa", &MethodConfig::kappa)
        .def_readwrite("beta", &MethodConfig::beta)
        .def_readwrite("omega", &MethodConfig::omega)
        .def_readwrite("g_kind", &MethodConfig::g_kind)
        .def_readwrite("h_kind", &MethodConfig::h_kind);

    m.def("make_named_config", &make_named_config, py::arg("name"),
          py::arg("ctx") = PrecisionContext());

    py::enum_<StepStatus>(m, "StepStatus")
        .value("Advanced", StepStatus::Advanced)
        .value("ConvergedExactly", StepStatus::ConvergedExactly)
        .value("Degenerate", StepStatus::Degenerate);

    py::class_<StepResult>(m, "StepResult")
        .def_readonly("next_x", &StepResult::next_x)
        .def_readonly("evals_used", &StepResult::evals_used)
        .def_readonly("status", &StepResult::status);

    py::class_<IterateFrame>(m, "IterateFrame")
        .def(py::init([](Real x, Real w, Real y, Real z, Real fx, Real fw, Real fy, Real fz) {
                 return IterateFrame{std::move(x), std::move(w), std::move(y), std::move(z),
                                     std::move(fx), std::move(fw), std::move(fy), std::move(fz)};
             }),
             py::arg("x"), py::arg("w"), py::arg("y"), py::arg("z"), py::arg("fx"), py::arg("fw"),
             py::arg("fy"), py::arg("fz"));

    py::class_<InterpSystem>(m, "InterpSystem")
        .def_readonly("a", &InterpSystem::a)
        .def_readonly("b", &InterpSystem::b)
        .def_readonly("c", &InterpSystem::c)
        .def_readonly("v1", &InterpSystem::v1)
        .def_readonly("v2", &InterpSystem::v2)
        .def_readonly("v3", &InterpSystem::v3)
        .def_readonly("r1", &InterpSystem::r1)
        .def_readonly("r2", &InterpSystem::r2)
        .def_readonly("r3", &InterpSystem::r3);

    m.def("divided_difference", &divided_difference, py::arg("f"), py::arg("p"), py::arg("q"));
    m.def("make_interp_system", &make_interp_system, py::arg("frame"));
    m.def("psi_derivative_estimate", &psi_derivative_estimate, py::arg("frame"));
    m.def("eval_weight_G", &eval_weight_G, py::arg("kind"), py::arg("omega"), py::arg("t1"),
          py::arg("t2"));
    m.def("eval_weight_H", &eval_weight_H, py::arg("kind"), py::arg("s1"), py::arg("s2"));

    py::class_<WeightConditionReport>(m, "WeightConditionReport")
        .def_readonly("g_value_ok", &WeightConditionReport::g_value_ok)
        .def_readonly("g_dt1_ok", &WeightConditionReport::g_dt1_ok)
        .def_readonly("g_dt2_ok", &WeightConditionReport::g_dt2_ok)
        .def_readonly("h_value_ok", &WeightConditionReport::h_value_ok)
        .def_readonly("h_ds1_ok", &WeightConditionReport::h_ds1_ok)
        .def_readonly("h_ds2_ok", &WeightConditionReport::h_ds2_ok)
        .def_readonly("second_partials_bounded", &WeightConditionReport::second_partials_bounded)
        .def_readonly("max_second_partial", &WeightConditionReport::max_second_partial)
        .def("all_ok", &WeightConditionReport::all_ok);

    m.def("check_weight_conditions", &check_weight_conditions, py::arg("g_kind"), py::arg("omega"),
          py::arg("h_kind"), py::arg("ctx") = PrecisionContext());

    m.def("family_iterate", &family_iterate, py::arg("f"), py::arg("x"), py::arg("cfg"));
    m.def("steffensen_iterate", &steffensen_iterate, py::arg("f"), py::arg("x"), py::arg("kappa"));
    m.def("newton_iterate", &newton_iterate, py::arg("f"), py::arg("df"), py::arg("x"));
    m.def("kung_traub_iterate", &kung_traub_iterate, py::arg("f"), py::arg("x"), py::arg("beta"));
    m.def("thukral_iterate", &thukral_iterate, py::arg("f"), py::arg("x"), py::arg("beta"),
          py::arg("variant"));
    m.def("petkovic_iterate", &petkovic_iterate, py::arg("f"), py::arg("x"), py::arg("beta"),
          py::arg("variant"));

    py::enum_<TraceStatus>(m, "TraceStatus")
        .value("Completed", TraceStatus::Completed)
        .value("ConvergedExactly", TraceStatus::ConvergedExactly)
        .value("Degenerate", TraceStatus::Degenerate);

    py::class_<IterationTrace>(m, "IterationTrace")
        .def_readonly("iterates", &IterationTrace::iterates)
        .def_readonly("errors", &IterationTrace::errors)
        .def_readonly("clamped", &IterationTrace::clamped)
        .def_readonly("total_evals", &IterationTrace::total_evals)
        .def_readonly("status", &IterationTrace::status);

    m.def("run_budgeted", &run_budgeted, py::arg("cfg"), py::arg("problem"), py::arg("budget"),
          py::arg("ctx") = PrecisionContext());
    m.def("coc", &coc, py::arg("trace"), py::arg("alpha"));
    m.def("fit_order", &fit_order, py::arg("trace"), py::arg("alpha"));

    py::class_<RunSpec>(m, "RunSpec")
        .def(py::init<>())
        .def_readwrite("methods", &RunSpec::methods)
        .def_readwrite("problems", &RunSpec::problems)
        .def_readwrite("budget", &RunSpec::budget)
        .def_readwrite("digits", &RunSpec::digits)
        .def_readwrite("kappa", &RunSpec::kappa)
        .def_readwrite("beta", &RunSpec::beta)
        .def_readwrite("omega", &RunSpec::omega);

    py::class_<BenchCell>(m, "BenchCell")
        .def_readonly("method", &BenchCell::method)
        .def_readonly("problem", &BenchCell::problem)
        .def_readonly("final_error", &BenchCell::final_error)
        .def_readonly("coc", &BenchCell::coc)
        .def_readonly("status", &BenchCell::status);

    py::class_<BenchmarkReport>(m, "BenchmarkReport")
        .def_readonly("cells", &BenchmarkReport::cells)
        .def_readonly("digits", &BenchmarkReport::digits)
        .def_readonly("budget", &BenchmarkReport::budget)
        .def_readonly("kappa", &BenchmarkReport::kappa)
        .def_readonly("beta", &BenchmarkReport::beta)
        .def_readonly("omega", &BenchmarkReport::omega)
        .def_readonly("timestamp", &BenchmarkReport::timestamp);

    m.def("method_ids", []() { return method_ids(); });
    m.def("run_benchmark", &run_benchmark, py::arg("spec"));
    m.def(
        "render_report",
        [](const BenchmarkReport& report, const std::string& format) {
            auto f = parse_format(format);
            if (!f) throw py::value_error("format must be md, csv or json");
            return render_report(report, *f);
        },
        py::arg("report"), py::arg("format") = "md");
}
