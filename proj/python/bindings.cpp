#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "limitset/copulas.hpp"
#include "limitset/errors.hpp"
#include "limitset/limitset_local.hpp"
#include "limitset/limitset_smooth.hpp"
#include "limitset/margins.hpp"
#include "limitset/measures.hpp"
#include "limitset/resample.hpp"
#include "limitset/study.hpp"

namespace py = pybind11;
using namespace limitset;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Boundary-set estimation of bivariate extremal dependence";

    py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<numerical_error>(m, "NumericalError", PyExc_ArithmeticError);

    // ---- data containers ----

    py::class_<RawSample>(m, "RawSample")
        .def(py::init<>())
        .def(py::init([](std::vector<double> y1, std::vector<double> y2) {
                 RawSample s;
                 s.y1 = std::move(y1);
                 s.y2 = std::move(y2);
                 return s;
             }),
             py::arg("y1"), py::arg("y2"))
        .def_readwrite("y1", &RawSample::y1)
        .def_readwrite("y2", &RawSample::y2)
        .def("__len__", &RawSample::size);

    py::class_<BivariateSample>(m, "BivariateSample")
        .def(py::init<>())
        .def(py::init([](std::vector<double> x1, std::vector<double> x2) {
                 BivariateSample s;
                 s.x1 = std::move(x1);
                 s.x2 = std::move(x2);
                 return s;
             }),
             py::arg("x1"), py::arg("x2"))
        .def_readwrite("x1", &BivariateSample::x1)
        .def_readwrite("x2", &BivariateSample::x2)
        .def("__len__", &BivariateSample::size);

    py::class_<BoundaryPoints>(m, "BoundaryPoints")
        .def(py::init<>())
        .def(py::init([](std::vector<double> w, std::vector<double> x1,
                         std::vector<double> x2) {
                 BoundaryPoints b;
                 b.w = std::move(w);
                 b.x1 = std::move(x1);
                 b.x2 = std::move(x2);
                 return b;
             }),
             py::arg("w"), py::arg("x1"), py::arg("x2"))
        .def_readwrite("w", &BoundaryPoints::w)
        .def_readwrite("x1", &BoundaryPoints::x1)
        .def_readwrite("x2", &BoundaryPoints::x2)
        .def("__len__", &BoundaryPoints::size);

    // ---- copula simulators and oracles ----

    py::class_<CopulaSpec>(m, "CopulaSpec")
        .def_static("gaussian", &CopulaSpec::gaussian, py::arg("rho"))
        .def_static("logistic", &CopulaSpec::logistic, py::arg("gamma"))
        .def_static("inverted_logistic", &CopulaSpec::inverted_logistic,
                    py::arg("gamma"))
        .def_static("asymmetric_logistic", &CopulaSpec::asymmetric_logistic,
                    py::arg("gamma"), py::arg("theta1"), py::arg("theta2"))
        .def_readwrite("rho", &CopulaSpec::rho)
        .def_readwrite("gamma", &CopulaSpec::gamma)
        .def_readwrite("theta1", &CopulaSpec::theta1)
        .def_readwrite("theta2", &CopulaSpec::theta2)
        .def("validate", &CopulaSpec::validate)
        .def("name", &CopulaSpec::name)
        .def("__repr__",
             [](const CopulaSpec& s) { return "<CopulaSpec " + s.name() + ">"; });

    m.def("sample_copula", &sample_copula, py::arg("spec"), py::arg("n"),
          py::arg("seed"), py::call_guard<py::gil_scoped_release>());
    m.def("gauge", &gauge, py::arg("spec"), py::arg("x1"), py::arg("x2"));
    m.def("true_boundary", &true_boundary, py::arg("spec"), py::arg("k"));
    m.def("true_measures", &true_measures, py::arg("spec"), py::arg("omega_grid"),
          py::arg("delta_grid"));

    // ---- margins ----

    m.def("to_exponential_margins", &to_exponential_margins, py::arg("raw"));

    // ---- boundary estimation ----

    py::class_<PipelineConfig>(m, "PipelineConfig")
        .def(py::init<>())
        .def_readwrite("k", &PipelineConfig::k)
        .def_readwrite("m", &PipelineConfig::m)
        .def_readwrite("q_u", &PipelineConfig::q_u)
        .def_readwrite("q", &PipelineConfig::q)
        .def_readwrite("kappa", &PipelineConfig::kappa)
        .def_readwrite("eta_exceedances", &PipelineConfig::eta_exceedances)
        .def_readwrite("angle_override", &PipelineConfig::angle_override);

    py::class_<LocalFit>(m, "LocalFit")
        .def_readonly("w", &LocalFit::w)
        .def_readonly("u", &LocalFit::u)
        .def_readonly("sigma", &LocalFit::sigma)
        .def_readonly("xi", &LocalFit::xi)
        .def_readonly("r_hat", &LocalFit::r_hat);

    py::class_<LimitSetEstimate>(m, "LimitSetEstimate")
        .def_readonly("points", &LimitSetEstimate::points)
        .def_readonly("scale_factor", &LimitSetEstimate::scale_factor)
        .def_readonly("eta_h", &LimitSetEstimate::eta_h);

    py::class_<LocalStage>(m, "LocalStage")
        .def_readonly("g_hat", &LocalStage::g_hat)
        .def_readonly("fits", &LocalStage::fits)
        .def_readonly("angles", &LocalStage::angles)
        .def_readonly("eta_h", &LocalStage::eta_h)
        .def_readonly("w_min", &LocalStage::w_min)
        .def_readonly("w_max", &LocalStage::w_max);

    py::class_<FitResult>(m, "FitResult")
        .def_readonly("g_hat", &FitResult::g_hat)
        .def_readonly("g_local", &FitResult::g_local)
        .def_readonly("degree", &FitResult::degree)
        .def_readonly("mae", &FitResult::mae)
        .def_readonly("per_degree", &FitResult::per_degree)
        .def_readonly("local_fits", &FitResult::local_fits)
        .def_readonly("eta_h", &FitResult::eta_h)
        .def_readonly("w_min", &FitResult::w_min)
        .def_readonly("w_max", &FitResult::w_max);

    m.def("estimate_local", &estimate_local, py::arg("sample"), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("estimate", &estimate, py::arg("sample"), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());

    // ---- dependence measures ----

    py::class_<TauCurve>(m, "TauCurve")
        .def_readonly("delta", &TauCurve::delta)
        .def_readonly("value", &TauCurve::value)
        .def_readonly("estimable", &TauCurve::estimable);

    py::class_<NormalTailFit>(m, "NormalTailFit")
        .def_readonly("beta", &NormalTailFit::beta)
        .def_readonly("mu", &NormalTailFit::mu)
        .def_readonly("sigma", &NormalTailFit::sigma);

    py::class_<DependenceSummary>(m, "DependenceSummary")
        .def_readonly("eta", &DependenceSummary::eta)
        .def_readonly("omega_grid", &DependenceSummary::omega_grid)
        .def_readonly("lambda_", &DependenceSummary::lambda)
        .def_readonly("tau1", &DependenceSummary::tau1)
        .def_readonly("tau2", &DependenceSummary::tau2)
        .def_readonly("alpha1", &DependenceSummary::alpha1)
        .def_readonly("alpha2", &DependenceSummary::alpha2)
        .def_readonly("beta1", &DependenceSummary::beta1)
        .def_readonly("beta2", &DependenceSummary::beta2)
        .def_readonly("chi", &DependenceSummary::chi);

    py::class_<SummaryConfig>(m, "SummaryConfig")
        .def(py::init<>())
        .def_readwrite("omega_grid", &SummaryConfig::omega_grid)
        .def_readwrite("delta_grid", &SummaryConfig::delta_grid)
        .def_readwrite("beta_threshold_q", &SummaryConfig::beta_threshold_q);

    m.def("eta_from_boundary", &eta_from_boundary, py::arg("boundary"));
    m.def("lambda_from_boundary", &lambda_from_boundary, py::arg("boundary"),
          py::arg("omega_grid"));
    m.def("tau_from_boundary", &tau_from_boundary, py::arg("boundary"),
          py::arg("delta_grid"), py::arg("margin"));
    m.def(
        "alpha_from_boundary",
        [](const BoundaryPoints& b) {
            double a1 = 0, a2 = 0;
            alpha_from_boundary(b, a1, a2);
            return py::make_tuple(a1, a2);
        },
        py::arg("boundary"));
    m.def("beta_fit", &beta_fit, py::arg("sample"), py::arg("alpha"),
          py::arg("margin"), py::arg("threshold_q") = 0.9);
    m.def("summarize", &summarize, py::arg("sample"), py::arg("boundary"),
          py::arg("config"), py::call_guard<py::gil_scoped_release>());

    // ---- rank-based baselines ----

    m.def("hill_eta", &hill_eta, py::arg("sample"), py::arg("n_exceed") = 500);
    m.def("peng_eta", &peng_eta, py::arg("sample"), py::arg("c") = 500);
    m.def("draisma_eta", &draisma_eta, py::arg("sample"), py::arg("c") = 500);
    m.def("hill_lambda", &hill_lambda, py::arg("sample"), py::arg("omega_grid"),
          py::arg("threshold_q") = 0.95);
    m.def("hill_tau", &hill_tau, py::arg("sample"), py::arg("delta_grid"),
          py::arg("margin"), py::arg("threshold_q") = 0.85,
          py::arg("min_qualifying") = 20);

    // ---- bootstrap ----

    py::class_<BootstrapPlan>(m, "BootstrapPlan")
        .def(py::init<>())
        .def_readwrite("n", &BootstrapPlan::n)
        .def_readwrite("block_mean", &BootstrapPlan::block_mean)
        .def_readwrite("replicates", &BootstrapPlan::replicates)
        .def_readwrite("seed", &BootstrapPlan::seed)
        .def_readwrite("keep_boundaries", &BootstrapPlan::keep_boundaries);

    py::class_<BootstrapResult>(m, "BootstrapResult")
        .def_readonly("replicates", &BootstrapResult::replicates)
        .def_readonly("boundaries", &BootstrapResult::boundaries)
        .def_readonly("failures", &BootstrapResult::failures)
        .def_readonly("lower", &BootstrapResult::lower)
        .def_readonly("upper", &BootstrapResult::upper);

    m.def("stationary_bootstrap_indices", &stationary_bootstrap_indices,
          py::arg("plan"), py::arg("b"));
    m.def("bootstrap_measures", &bootstrap_measures, py::arg("raw"),
          py::arg("config"), py::arg("summary_config"), py::arg("plan"),
          py::call_guard<py::gil_scoped_release>());

    // ---- replication studies ----

    py::class_<StudyConfig>(m, "StudyConfig")
        .def(py::init<>())
        .def_readwrite("cases", &StudyConfig::cases)
        .def_readwrite("replicates", &StudyConfig::replicates)
        .def_readwrite("n", &StudyConfig::n)
        .def_readwrite("pipeline", &StudyConfig::pipeline)
        .def_readwrite("omega_grid", &StudyConfig::omega_grid)
        .def_readwrite("delta_grid", &StudyConfig::delta_grid)
        .def_readwrite("beta_threshold_q", &StudyConfig::beta_threshold_q)
        .def_readwrite("seed", &StudyConfig::seed)
        .def_readwrite("threads", &StudyConfig::threads)
        .def_readwrite("with_baselines", &StudyConfig::with_baselines);

    py::class_<StudyRecord>(m, "StudyRecord")
        .def_readonly("case_index", &StudyRecord::case_index)
        .def_readonly("replicate", &StudyRecord::replicate)
        .def_readonly("failed", &StudyRecord::failed)
        .def_readonly("error", &StudyRecord::error)
        .def_readonly("degree", &StudyRecord::degree)
        .def_readonly("eta_g", &StudyRecord::eta_g)
        .def_readonly("eta_h", &StudyRecord::eta_h)
        .def_readonly("eta_p", &StudyRecord::eta_p)
        .def_readonly("eta_d", &StudyRecord::eta_d)
        .def_readonly("alpha1", &StudyRecord::alpha1)
        .def_readonly("alpha2", &StudyRecord::alpha2)
        .def_readonly("beta1", &StudyRecord::beta1)
        .def_readonly("beta2", &StudyRecord::beta2)
        .def_readonly("lambda_", &StudyRecord::lambda)
        .def_readonly("tau_g1", &StudyRecord::tau_g1)
        .def_readonly("tau_h1", &StudyRecord::tau_h1)
        .def_readonly("tau_g1_monotone", &StudyRecord::tau_g1_monotone)
        .def_readonly("tau_h1_monotone", &StudyRecord::tau_h1_monotone)
        .def_readonly("violations", &StudyRecord::violations);

    py::class_<ScalarScore>(m, "ScalarScore")
        .def_readonly("truth", &ScalarScore::truth)
        .def_readonly("bias", &ScalarScore::bias)
        .def_readonly("rmse", &ScalarScore::rmse)
        .def_readonly("count", &ScalarScore::count);

    py::class_<CaseAggregate>(m, "CaseAggregate")
        .def_readonly("case_index", &CaseAggregate::case_index)
        .def_readonly("label", &CaseAggregate::label)
        .def_readonly("failures", &CaseAggregate::failures)
        .def_readonly("degree_counts", &CaseAggregate::degree_counts)
        .def_readonly("eta_g", &CaseAggregate::eta_g)
        .def_readonly("eta_h", &CaseAggregate::eta_h)
        .def_readonly("eta_p", &CaseAggregate::eta_p)
        .def_readonly("eta_d", &CaseAggregate::eta_d)
        .def_readonly("alpha1", &CaseAggregate::alpha1)
        .def_readonly("tau_g1_monotone_rate", &CaseAggregate::tau_g1_monotone_rate)
        .def_readonly("tau_h1_monotone_rate", &CaseAggregate::tau_h1_monotone_rate)
        .def_readonly("violation_count", &CaseAggregate::violation_count);

    py::class_<StudyResult>(m, "StudyResult")
        .def_readonly("config", &StudyResult::config)
        .def_readonly("records", &StudyResult::records)
        .def_readonly("aggregates", &StudyResult::aggregates);

    m.def("tau_is_monotone", &tau_is_monotone, py::arg("curve"));
    m.def("consistency_violations", &consistency_violations, py::arg("summary"),
          py::arg("boundary"));
    m.def("run_study", &run_study, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
}
