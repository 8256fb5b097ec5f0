//! Order-K trigonometric regression for periodic data under three response
//! models — Gaussian least squares, log-normal least squares, and a gamma
//! GLM with log link — plus a generalized gamma simulator and a seeded
//! Monte Carlo harness that measures coefficient bias under harmonic
//! underspecification.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the CLI live
//! in the companion `trigfit` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod design;
pub mod experiments;
pub mod gensim;
pub mod models;
pub mod numerics;
pub mod specfun;

pub use design::{
    amp_phase_to_beta, basis_row, beta_to_amp_phase, design_matrix, equispaced_times,
    gram_matrix, nyquist_check, AmpPhase, BasisMatrix, DesignError, DesignSpec, Harmonic,
    NyquistCheck,
};
pub use experiments::{
    compare_orders, missing_data_policy, predicted_expectation, run_mc_bias,
    run_mc_bias_with_control, CoefficientSummary, ComparisonTable, ExperimentError, FitCell,
    MCConfig, MCReport, Method, MethodReport, PolicyExclusion, RawSeries, Series,
    SeriesComparison,
};
pub use gensim::{
    gg_density, gg_lambda, sample_gamma, sample_gg, simulate_dataset, GGSpec, GensimError,
    RngStream,
};
pub use models::{
    covariance_glm, covariance_ols, fit_glm, fit_lognormal, fit_ols, predict, FitError,
    FitResult, GammaLog, GlmControl, GlmFamily, ModelKind,
};
pub use numerics::{spd_inverse, spd_solve, NumericsError, SpdMatrix};
pub use specfun::{c_zero, digamma, expected_log_gg, ln_gamma, GGShape, SpecFunError};
