"""Bayesian lower bounds and sparse-recovery benchmarks for noisy compressed sensing."""

from ._core import (
    ACoeffs,
    BgPrior,
    BlindIntermediates,
    BoundReport,
    CsModel,
    EnsembleKind,
    EnsembleSpec,
    McEstimate,
    PriorInfoBreakdown,
    QuadratureSpec,
    RecoveryOutput,
    Regime,
    Rng,
    SolverConfig,
    SweepConfig,
    SweepResult,
    SweepRow,
    VerifyRow,
    bg_prior_info,
    blind_a_coeffs,
    blind_bcrb,
    bp_l1,
    c1,
    c2,
    erfcx,
    least_squares,
    mc_blind_jd,
    mc_offdiag_check,
    measure,
    mse_db,
    nonblind_bcrb,
    nonblind_bcrb_bg,
    omp,
    prior_info_breakdown,
    quad_c1,
    quad_c2,
    quad_erfcx,
    run_sweep,
    run_verification,
    sample_matrix,
    sample_signal,
    sl0,
)

__all__ = [
    "ACoeffs",
    "BgPrior",
    "BlindIntermediates",
    "BoundReport",
    "CsModel",
    "EnsembleKind",
    "EnsembleSpec",
    "McEstimate",
    "PriorInfoBreakdown",
    "QuadratureSpec",
    "RecoveryOutput",
    "Regime",
    "Rng",
    "SolverConfig",
    "SweepConfig",
    "SweepResult",
    "SweepRow",
    "VerifyRow",
    "bg_prior_info",
    "blind_a_coeffs",
    "blind_bcrb",
    "bp_l1",
    "c1",
    "c2",
    "erfcx",
    "least_squares",
    "mc_blind_jd",
    "mc_offdiag_check",
    "measure",
    "mse_db",
    "nonblind_bcrb",
    "nonblind_bcrb_bg",
    "omp",
    "prior_info_breakdown",
    "quad_c1",
    "quad_c2",
    "quad_erfcx",
    "run_sweep",
    "run_verification",
    "sample_matrix",
    "sample_signal",
    "sl0",
]

__version__ = "0.1.0"
