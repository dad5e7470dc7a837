#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "asp/bayes.hpp"
#include "asp/case_study.hpp"
#include "asp/censoring.hpp"
#include "asp/error.hpp"
#include "asp/mle_distribution.hpp"
#include "asp/plan.hpp"
#include "asp/simulate.hpp"
#include "asp/solver.hpp"

namespace py = pybind11;
using namespace asp;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Acceptance sampling plans for exponential lifetimes under Type I hybrid censoring";

    auto invalid = py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<NumericFailure>(m, "NumericFailure", PyExc_ArithmeticError);
    (void)invalid;

    py::class_<CensoringScheme>(m, "CensoringScheme")
        .def(py::init([](int n, int gamma, double T) { return CensoringScheme{n, gamma, T}; }), py::arg("n"),
             py::arg("gamma"), py::arg("T"))
        .def_readwrite("n", &CensoringScheme::n)
        .def_readwrite("gamma", &CensoringScheme::gamma)
        .def_readwrite("T", &CensoringScheme::T)
        .def("__repr__", [](const CensoringScheme& s) {
            return "CensoringScheme(n=" + std::to_string(s.n) + ", gamma=" + std::to_string(s.gamma) +
                   ", T=" + std::to_string(s.T) + ")";
        });

    py::class_<CensoredSample>(m, "CensoredSample")
        .def_readonly("failures", &CensoredSample::failures)
        .def_readonly("t_star", &CensoredSample::t_star)
        .def_property_readonly("failure_count", &CensoredSample::failure_count);

    m.def("censor", [](const std::vector<double>& x, const CensoringScheme& s) { return censor(x, s); },
          py::arg("lifetimes"), py::arg("scheme"));
    m.def("simulate_sample", &simulate_sample, py::arg("scheme"), py::arg("theta"), py::arg("seed"));
    m.def("mle", &mle, py::arg("sample"), py::arg("scheme"));

    py::class_<MleMoments>(m, "MleMoments")
        .def_readonly("mean", &MleMoments::mean)
        .def_readonly("second_moment", &MleMoments::second_moment)
        .def_readonly("variance", &MleMoments::variance);
    m.def("mle_pdf", &mle_pdf, py::arg("x"), py::arg("scheme"), py::arg("theta"),
          py::arg("precision_bits") = kDefaultPrecisionBits);
    m.def("mle_cdf", &mle_cdf, py::arg("x"), py::arg("scheme"), py::arg("theta"),
          py::arg("precision_bits") = kDefaultPrecisionBits);
    m.def("mle_moments", &mle_moments, py::arg("scheme"), py::arg("theta"),
          py::arg("precision_bits") = kDefaultPrecisionBits);

    py::class_<Prior>(m, "Prior")
        .def(py::init([](double a, double b) { return Prior{a, b}; }), py::arg("a") = 0.0, py::arg("b") = 0.0)
        .def_readwrite("a", &Prior::a)
        .def_readwrite("b", &Prior::b);

    py::enum_<LossKind>(m, "LossKind").value("SEL", LossKind::Sel).value("LINEX", LossKind::Linex);
    py::class_<LossSpec>(m, "LossSpec")
        .def_static("sel", &LossSpec::sel)
        .def_static("linex", &LossSpec::linex, py::arg("c"))
        .def_readonly("kind", &LossSpec::kind)
        .def_readonly("c", &LossSpec::c)
        .def("__repr__", [](const LossSpec& l) { return to_string(l); });

    py::class_<EstimatorMoments>(m, "EstimatorMoments")
        .def(py::init([](double mean, double variance) { return EstimatorMoments{mean, variance}; }),
             py::arg("mean"), py::arg("variance"))
        .def_readonly("mean", &EstimatorMoments::mean)
        .def_readonly("variance", &EstimatorMoments::variance);

    m.def("sel_estimate", &sel_estimate, py::arg("theta_mle"), py::arg("failures"), py::arg("prior"));
    m.def("linex_estimate", &linex_estimate, py::arg("theta_mle"), py::arg("failures"), py::arg("prior"),
          py::arg("c"));
    m.def("bayes_estimate", &bayes_estimate, py::arg("theta_mle"), py::arg("failures"), py::arg("prior"),
          py::arg("loss"));
    m.def("posterior_pdf", &posterior_pdf, py::arg("theta"), py::arg("theta_mle"), py::arg("failures"),
          py::arg("prior"));
    m.def(
        "estimator_moments",
        [](const CensoringScheme& s, double theta, const Prior& p, const LossSpec& l, std::optional<int> d) {
            return estimator_moments(s, theta, p, l, d.value_or(s.gamma));
        },
        py::arg("scheme"), py::arg("theta"), py::arg("prior"), py::arg("loss"), py::arg("d_convention") = py::none());

    py::class_<PlanSpec>(m, "PlanSpec")
        .def(py::init([](double theta_A, double theta_U, double T, double alpha, double beta, double C,
                         const Prior& prior, const LossSpec& loss) {
                 return PlanSpec{theta_A, theta_U, T, alpha, beta, C, prior, loss};
             }),
             py::arg("theta_A"), py::arg("theta_U"), py::arg("T"), py::arg("alpha") = 0.05, py::arg("beta") = 0.05,
             py::arg("C") = 1.0, py::arg("prior") = Prior{1.25, 2.5}, py::arg("loss") = LossSpec::sel())
        .def_readwrite("theta_A", &PlanSpec::theta_A)
        .def_readwrite("theta_U", &PlanSpec::theta_U)
        .def_readwrite("T", &PlanSpec::T)
        .def_readwrite("alpha", &PlanSpec::alpha)
        .def_readwrite("beta", &PlanSpec::beta)
        .def_readwrite("C", &PlanSpec::C)
        .def_readwrite("prior", &PlanSpec::prior)
        .def_readwrite("loss", &PlanSpec::loss);

    py::class_<PlanProbabilities>(m, "PlanProbabilities")
        .def_readonly("p_a", &PlanProbabilities::p_a)
        .def_readonly("p_r", &PlanProbabilities::p_r)
        .def_readonly("p_c", &PlanProbabilities::p_c)
        .def_readonly("P_a", &PlanProbabilities::P_a)
        .def_readonly("P_r", &PlanProbabilities::P_r);
    m.def("plan_probabilities", &plan_probabilities, py::arg("t1"), py::arg("t2"), py::arg("moments"));

    py::class_<PlanEvaluation>(m, "PlanEvaluation")
        .def_readonly("at_A", &PlanEvaluation::at_A)
        .def_readonly("at_U", &PlanEvaluation::at_U)
        .def_readonly("prob_A", &PlanEvaluation::prob_A)
        .def_readonly("prob_U", &PlanEvaluation::prob_U)
        .def_readonly("etc", &PlanEvaluation::etc)
        .def_readonly("slack_alpha", &PlanEvaluation::slack_alpha)
        .def_readonly("slack_beta", &PlanEvaluation::slack_beta)
        .def_property_readonly("feasible", [](const PlanEvaluation& e) { return e.feasible(); });
    m.def(
        "evaluate_plan",
        [](const PlanSpec& spec, const CensoringScheme& s, double t1, double t2, std::optional<int> d) {
            return evaluate_plan(spec, s, t1, t2, d);
        },
        py::arg("spec"), py::arg("scheme"), py::arg("t1"), py::arg("t2"), py::arg("d_convention") = py::none());

    py::class_<PlanSolution>(m, "PlanSolution")
        .def(py::init([](int gamma, int n, double t1, double t2, bool feasible) {
                 PlanSolution s;
                 s.gamma = gamma;
                 s.n = n;
                 s.t1 = t1;
                 s.t2 = t2;
                 s.feasible = feasible;
                 return s;
             }),
             py::arg("gamma"), py::arg("n"), py::arg("t1"), py::arg("t2"), py::arg("feasible") = true)
        .def_readonly("gamma", &PlanSolution::gamma)
        .def_readonly("n", &PlanSolution::n)
        .def_readonly("t1", &PlanSolution::t1)
        .def_readonly("t2", &PlanSolution::t2)
        .def_readonly("etc", &PlanSolution::etc)
        .def_readonly("feasible", &PlanSolution::feasible)
        .def_readonly("slack_alpha", &PlanSolution::slack_alpha)
        .def_readonly("slack_beta", &PlanSolution::slack_beta)
        .def_readonly("evaluations", &PlanSolution::evaluations)
        .def("__repr__", [](const PlanSolution& s) {
            return "PlanSolution(gamma=" + std::to_string(s.gamma) + ", n=" + std::to_string(s.n) +
                   ", t1=" + std::to_string(s.t1) + ", t2=" + std::to_string(s.t2) + ", etc=" +
                   std::to_string(s.etc) + ", feasible=" + (s.feasible ? "True" : "False") + ")";
        });

    m.def(
        "solve_plan",
        [](const PlanSpec& spec, int n_max, double t_max, std::uint64_t seed, std::optional<int> d,
           int generations, int restarts) {
            SolverSettings st;
            st.d_convention = d;
            st.generations = generations;
            st.restarts = restarts;
            py::gil_scoped_release release;
            return solve_plan(spec, {n_max, t_max}, seed, st);
        },
        py::arg("spec"), py::arg("n_max") = 150, py::arg("t_max") = 0.0, py::arg("seed") = 1,
        py::arg("d_convention") = py::none(), py::arg("generations") = 300, py::arg("restarts") = 4);
    m.def(
        "integer_thresholds",
        [](const PlanSpec& spec, const PlanSolution& s, std::optional<int> d) {
            SolverSettings st;
            st.d_convention = d;
            return integer_thresholds(spec, s, st);
        },
        py::arg("spec"), py::arg("solution"), py::arg("d_convention") = py::none());

    py::class_<SimulationReport>(m, "SimulationReport")
        .def_readonly("trials", &SimulationReport::trials)
        .def_readonly("empirical_P_a", &SimulationReport::empirical_P_a)
        .def_readonly("empirical_P_r", &SimulationReport::empirical_P_r)
        .def_readonly("mean_iterations", &SimulationReport::mean_iterations)
        .def_readonly("empirical_etc", &SimulationReport::empirical_etc)
        .def_readonly("se_P", &SimulationReport::se_P)
        .def_readonly("se_iterations", &SimulationReport::se_iterations)
        .def_readonly("se_etc", &SimulationReport::se_etc)
        .def_readonly("rounds", &SimulationReport::rounds)
        .def_readonly("rounds_accept", &SimulationReport::rounds_accept)
        .def_readonly("rounds_continue", &SimulationReport::rounds_continue)
        .def_readonly("rounds_reject", &SimulationReport::rounds_reject)
        .def_readonly("rounds_without_failure", &SimulationReport::rounds_without_failure)
        .def_readonly("round_estimate_mean", &SimulationReport::round_estimate_mean)
        .def_readonly("round_estimate_variance", &SimulationReport::round_estimate_variance);
    m.def(
        "run_plan",
        [](const PlanSolution& s, const PlanSpec& spec, double theta, std::int64_t trials, std::uint64_t seed,
           bool tstar) {
            SimulationOptions opt;
            opt.duration = tstar ? RoundDuration::TStar : RoundDuration::Estimate;
            py::gil_scoped_release release;
            return run_plan(s, spec, theta, trials, seed, opt);
        },
        py::arg("solution"), py::arg("spec"), py::arg("theta"), py::arg("trials"), py::arg("seed") = 1,
        py::arg("tstar_duration") = false);

    py::enum_<Decision>(m, "Decision")
        .value("ACCEPT", Decision::Accept)
        .value("CONTINUE", Decision::Continue)
        .value("REJECT", Decision::Reject);
    py::class_<DecisionPath>(m, "DecisionPath")
        .def_readonly("sample", &DecisionPath::sample)
        .def_readonly("theta_mle", &DecisionPath::theta_mle)
        .def_readonly("estimate", &DecisionPath::estimate)
        .def_readonly("decision", &DecisionPath::decision);
    m.def(
        "apply_plan",
        [](const std::vector<double>& x, const CensoringScheme& s, double t1, double t2, const Prior& p,
           const LossSpec& l) { return apply_plan(x, s, t1, t2, p, l); },
        py::arg("lifetimes"), py::arg("scheme"), py::arg("t1"), py::arg("t2"), py::arg("prior"), py::arg("loss"));
}
