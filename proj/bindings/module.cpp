#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "csbound/bench.hpp"
#include "csbound/bounds.hpp"
#include "csbound/model.hpp"
#include "csbound/oracles.hpp"
#include "csbound/recovery.hpp"
#include "csbound/special.hpp"
#include "csbound/verify.hpp"

namespace py = pybind11;
using namespace csbound;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bayesian lower bounds and sparse-recovery benchmarks for "
              "noisy compressed sensing";

    py::class_<Rng>(m, "Rng")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def_static("substream", &Rng::substream, py::arg("master"),
                    py::arg("id"))
        .def("uniform", &Rng::uniform)
        .def("normal", &Rng::normal);

    py::class_<BgPrior>(m, "BgPrior")
        .def(py::init([](double p, double sigma, double sigma0) {
                 BgPrior prior{p, sigma, sigma0};
                 prior.validate();
                 return prior;
             }),
             py::arg("p"), py::arg("sigma"), py::arg("sigma0") = 1e-5)
        .def_readonly("p", &BgPrior::p)
        .def_readonly("sigma", &BgPrior::sigma)
        .def_readonly("sigma0", &BgPrior::sigma0)
        .def("expected_active", &BgPrior::expected_active, py::arg("m"));

    py::enum_<EnsembleKind>(m, "EnsembleKind")
        .value("Gaussian", EnsembleKind::Gaussian)
        .value("BernoulliPm1", EnsembleKind::BernoulliPm1);

    py::class_<EnsembleSpec>(m, "EnsembleSpec")
        .def(py::init([](EnsembleKind kind, double sigma_r2) {
                 EnsembleSpec spec{kind, sigma_r2};
                 spec.validate();
                 return spec;
             }),
             py::arg("kind") = EnsembleKind::Gaussian,
             py::arg("sigma_r2") = 1.0)
        .def_readonly("kind", &EnsembleSpec::kind)
        .def_readonly("sigma_r2", &EnsembleSpec::sigma_r2);

    py::class_<CsModel>(m, "CsModel")
        .def(py::init([](int m_, int n, const BgPrior& prior, double sigma_e2,
                         const EnsembleSpec& ensemble,
                         const Eigen::MatrixXd& psi) {
                 CsModel model;
                 model.m = m_;
                 model.n = n;
                 model.prior = prior;
                 model.sigma_e2 = sigma_e2;
                 model.ensemble = ensemble;
                 model.psi = psi;
                 model.validate();
                 return model;
             }),
             py::arg("m"), py::arg("n"), py::arg("prior"),
             py::arg("sigma_e2") = 1e-4,
             py::arg("ensemble") = EnsembleSpec{},
             py::arg("psi") = Eigen::MatrixXd())
        .def_readonly("m", &CsModel::m)
        .def_readonly("n", &CsModel::n)
        .def_readonly("sigma_e2", &CsModel::sigma_e2)
        .def_readonly("prior", &CsModel::prior);

    m.def("sample_signal", &sample_signal, py::arg("prior"), py::arg("m"),
          py::arg("rng"));
    m.def("sample_matrix", &sample_matrix, py::arg("spec"), py::arg("n"),
          py::arg("m"), py::arg("rng"));
    m.def(
        "measure",
        [](const CsModel& model, const Eigen::MatrixXd& phi,
           const Eigen::VectorXd& w, Rng& rng) {
            Measurement meas = measure(model, phi, w, rng);
            return py::make_tuple(meas.y, meas.d);
        },
        py::arg("model"), py::arg("phi"), py::arg("w"), py::arg("rng"));

    m.def("erfcx", &erfcx, py::arg("a"));
    m.def("c1", &c1, py::arg("a"));
    m.def("c2", &c2, py::arg("a"));
    m.def("bg_prior_info", &bg_prior_info, py::arg("prior"));

    py::class_<BlindIntermediates>(m, "BlindIntermediates")
        .def_readonly("a", &BlindIntermediates::a)
        .def_readonly("c1", &BlindIntermediates::c1)
        .def_readonly("c2", &BlindIntermediates::c2)
        .def_readonly("b1", &BlindIntermediates::b1)
        .def_readonly("b2", &BlindIntermediates::b2);

    py::class_<ACoeffs>(m, "ACoeffs")
        .def_readonly("a1", &ACoeffs::a1)
        .def_readonly("a2", &ACoeffs::a2)
        .def_readonly("inter", &ACoeffs::inter);

    m.def("blind_a_coeffs", &blind_a_coeffs, py::arg("prior"),
          py::arg("sigma_e2"), py::arg("sigma_r2"), py::arg("m"));

    py::enum_<Regime>(m, "Regime")
        .value("Ok", Regime::Ok)
        .value("OutOfRegime", Regime::OutOfRegime)
        .value("Degenerate", Regime::Degenerate);

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("per_coeff_bound", &BoundReport::per_coeff_bound)
        .def_readonly("avg_bound", &BoundReport::avg_bound)
        .def_readonly("regime", &BoundReport::regime)
        .def_property_readonly("intermediates",
                               [](const BoundReport& r) {
                                   return r.intermediates;
                               });

    m.def("nonblind_bcrb", &nonblind_bcrb, py::arg("model"),
          py::arg("prior_info_diag"));
    m.def("nonblind_bcrb_bg", &nonblind_bcrb_bg, py::arg("model"));
    m.def("blind_bcrb", &blind_bcrb, py::arg("model"));

    py::class_<QuadratureSpec>(m, "QuadratureSpec")
        .def(py::init<>())
        .def_readwrite("abs_tol", &QuadratureSpec::abs_tol)
        .def_readwrite("rel_tol", &QuadratureSpec::rel_tol)
        .def_readwrite("max_subdivisions", &QuadratureSpec::max_subdivisions)
        .def_readwrite("truncation_radius", &QuadratureSpec::truncation_radius);

    m.def("quad_c1", &quad_c1, py::arg("a"), py::arg("spec") = QuadratureSpec{});
    m.def("quad_c2", &quad_c2, py::arg("a"), py::arg("spec") = QuadratureSpec{});
    m.def("quad_erfcx", &quad_erfcx, py::arg("a"),
          py::arg("spec") = QuadratureSpec{});

    py::class_<PriorInfoBreakdown>(m, "PriorInfoBreakdown")
        .def_readonly("d1", &PriorInfoBreakdown::d1)
        .def_readonly("d2", &PriorInfoBreakdown::d2)
        .def_readonly("d3", &PriorInfoBreakdown::d3)
        .def_readonly("j_pii", &PriorInfoBreakdown::j_pii);

    m.def("prior_info_breakdown", &prior_info_breakdown, py::arg("prior"),
          py::arg("spec") = QuadratureSpec{});

    py::class_<McEstimate>(m, "McEstimate")
        .def_readonly("value", &McEstimate::value)
        .def_readonly("std_err", &McEstimate::std_err)
        .def_readonly("samples", &McEstimate::samples);

    m.def("mc_blind_jd", &mc_blind_jd, py::arg("prior"), py::arg("sigma_e2"),
          py::arg("sigma_r2"), py::arg("m"), py::arg("samples"), py::arg("rng"));
    m.def("mc_offdiag_check", &mc_offdiag_check, py::arg("prior"),
          py::arg("sigma_e2"), py::arg("sigma_r2"), py::arg("m"),
          py::arg("samples"), py::arg("rng"), py::arg("antithetic") = false);

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("omp_iters", &SolverConfig::omp_iters)
        .def_readwrite("sl0_sigma_min", &SolverConfig::sl0_sigma_min)
        .def_readwrite("sl0_decrease", &SolverConfig::sl0_decrease)
        .def_readwrite("sl0_inner_iters", &SolverConfig::sl0_inner_iters)
        .def_readwrite("sl0_step", &SolverConfig::sl0_step)
        .def_readwrite("bp_tol", &SolverConfig::bp_tol)
        .def_readwrite("bp_max_iters", &SolverConfig::bp_max_iters);

    py::class_<RecoveryOutput>(m, "RecoveryOutput")
        .def_readonly("w_hat", &RecoveryOutput::w_hat)
        .def_readonly("iterations", &RecoveryOutput::iterations)
        .def_readonly("residual_norm", &RecoveryOutput::residual_norm)
        .def_readonly("support", &RecoveryOutput::support)
        .def_readonly("converged", &RecoveryOutput::converged);

    m.def("omp", &omp_solve, py::arg("d"), py::arg("y"),
          py::arg("cfg") = SolverConfig{});
    m.def("sl0", &sl0_solve, py::arg("d"), py::arg("y"),
          py::arg("cfg") = SolverConfig{});
    m.def("bp_l1", &bp_l1, py::arg("d"), py::arg("y"),
          py::arg("cfg") = SolverConfig{});
    m.def("least_squares", &least_squares, py::arg("columns"), py::arg("y"));

    m.def("mse_db", &mse_db, py::arg("squared_errors"));

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("n", &SweepRow::n)
        .def_readonly("curve", &SweepRow::curve)
        .def_readonly("value_db", &SweepRow::value_db)
        .def_readonly("trials", &SweepRow::trials)
        .def_readonly("failures", &SweepRow::failures);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("rows", &SweepResult::rows)
        .def_readonly("master_seed", &SweepResult::master_seed)
        .def_readonly("n_grid", &SweepResult::n_grid)
        .def_readonly("solver_names", &SweepResult::solver_names)
        .def_readonly("per_trial", &SweepResult::per_trial);

    py::class_<SweepConfig>(m, "SweepConfig")
        .def(py::init<>())
        .def_readwrite("model", &SweepConfig::model)
        .def_readwrite("n_grid", &SweepConfig::n_grid)
        .def_readwrite("trials", &SweepConfig::trials)
        .def_readwrite("master_seed", &SweepConfig::master_seed)
        .def_readwrite("solvers", &SweepConfig::solvers)
        .def_readwrite("solver_cfg", &SweepConfig::solver_cfg)
        .def_readwrite("workers", &SweepConfig::workers)
        .def_readwrite("keep_per_trial", &SweepConfig::keep_per_trial);

    m.def("run_sweep",
          static_cast<SweepResult (*)(const SweepConfig&)>(&run_sweep),
          py::arg("cfg"), py::call_guard<py::gil_scoped_release>());

    py::class_<VerifyRow>(m, "VerifyRow")
        .def_readonly("name", &VerifyRow::name)
        .def_readonly("computed", &VerifyRow::computed)
        .def_readonly("expected", &VerifyRow::expected)
        .def_readonly("tolerance", &VerifyRow::tolerance)
        .def_readonly("pass_", &VerifyRow::pass);

    m.def("run_verification", &run_verification, py::arg("seed") = 0,
          py::call_guard<py::gil_scoped_release>());
}
