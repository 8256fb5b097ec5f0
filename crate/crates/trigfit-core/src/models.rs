//! The three fitters: Gaussian least squares, log-normal least squares
//! (least squares on the log response), and the gamma GLM with log link
//! solved by iteratively reweighted least squares.

use alloc::vec::Vec;
use core::fmt;

use crate::design::{basis_row, gram_matrix, BasisMatrix, DesignSpec};
use crate::numerics::{spd_inverse, spd_solve, NumericsError, SpdMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    Ols,
    Lognormal,
    GammaGlmLog,
}

impl ModelKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ModelKind::Ols => "ols",
            ModelKind::Lognormal => "lognormal",
            ModelKind::GammaGlmLog => "gamma-glm-log",
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum FitError {
    /// The normal-equation matrix is not positive definite; the design does
    /// not identify 2K+1 coefficients (e.g. n ≤ 2K aliasing).
    RankDeficientDesign,
    /// n ≤ 2K+1 leaves no residual degrees of freedom for a variance
    /// estimate.
    InsufficientSamples { n: usize, n_params: usize },
    /// Offending indices of non-positive responses.
    NonPositiveResponse { indices: Vec<usize> },
    NonFiniteResponse { index: usize },
    /// IRLS did not reach the convergence criterion; carries the last
    /// iterate and the deviance trace.
    NotConverged { beta: Vec<f64>, deviance_trace: Vec<f64> },
    DimensionMismatch { expected: usize, got: usize },
    NonPositiveWeight { index: usize },
    Numerics(NumericsError),
}

impl fmt::Display for FitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FitError::RankDeficientDesign => {
                write!(f, "design matrix is rank deficient; cannot identify coefficients")
            }
            FitError::InsufficientSamples { n, n_params } => {
                write!(f, "n = {n} samples leave no residual degrees of freedom for {n_params} parameters")
            }
            FitError::NonPositiveResponse { indices } => {
                write!(f, "response must be strictly positive; offending indices {indices:?}")
            }
            FitError::NonFiniteResponse { index } => {
                write!(f, "response at index {index} is not finite")
            }
            FitError::NotConverged { deviance_trace, .. } => {
                write!(f, "IRLS did not converge after {} iterations", deviance_trace.len().saturating_sub(1))
            }
            FitError::DimensionMismatch { expected, got } => {
                write!(f, "expected {expected} coefficients, got {got}")
            }
            FitError::NonPositiveWeight { index } => {
                write!(f, "weight at index {index} is not positive")
            }
            FitError::Numerics(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for FitError {}

impl From<NumericsError> for FitError {
    fn from(e: NumericsError) -> Self {
        match e {
            NumericsError::NotPositiveDefinite { .. } => FitError::RankDeficientDesign,
            other => FitError::Numerics(other),
        }
    }
}

/// Fit output common to all three model kinds.
///
/// `fitted_values` are on the response scale for `ols` and `gamma-glm-log`
/// and on the log scale for `lognormal` (the `model_kind` field is the flag).
/// `sigma2_hat`/`covariance` are absent when n = 2K+1 leaves no residual
/// degrees of freedom; `dispersion_hat` is the GLM analogue.
#[derive(Debug, Clone, PartialEq)]
pub struct FitResult {
    pub model_kind: ModelKind,
    pub beta_hat: Vec<f64>,
    pub covariance: Option<SpdMatrix>,
    pub sigma2_hat: Option<f64>,
    pub dispersion_hat: Option<f64>,
    pub fitted_values: Vec<f64>,
    pub residuals: Vec<f64>,
    pub converged: bool,
    pub iterations: usize,
    pub deviance: Option<f64>,
}

impl FitResult {
    pub fn order(&self) -> usize {
        (self.beta_hat.len() - 1) / 2
    }
}

/// Variance function, link, and link derivative of a GLM family.
/// Only the gamma family with log link ships; the trait is the extension
/// seam for other families.
pub trait GlmFamily {
    /// V(μ); the conditional variance is φ·V(μ).
    fn variance(&self, mu: f64) -> f64;
    fn link(&self, mu: f64) -> f64;
    fn inv_link(&self, eta: f64) -> f64;
    /// dμ/dη evaluated at η.
    fn mu_eta(&self, eta: f64) -> f64;
    /// Unit deviance contribution d(y, μ); the model deviance is Σᵢ dᵢ.
    fn deviance_term(&self, y: f64, mu: f64) -> f64;
    /// Whether a response value is admissible for this family.
    fn valid_response(&self, y: f64) -> bool;
}

/// Gamma responses with log link: V(μ) = μ², g = log.
#[derive(Debug, Clone, Copy, Default)]
pub struct GammaLog;

impl GlmFamily for GammaLog {
    fn variance(&self, mu: f64) -> f64 {
        mu * mu
    }

    fn link(&self, mu: f64) -> f64 {
        libm::log(mu)
    }

    fn inv_link(&self, eta: f64) -> f64 {
        libm::exp(eta)
    }

    fn mu_eta(&self, eta: f64) -> f64 {
        libm::exp(eta)
    }

    fn deviance_term(&self, y: f64, mu: f64) -> f64 {
        2.0 * ((y - mu) / mu - libm::log(y / mu))
    }

    fn valid_response(&self, y: f64) -> bool {
        y > 0.0
    }
}

/// IRLS stopping parameters: relative deviance change below `tol` within
/// `max_iter` sweeps.
#[derive(Debug, Clone, Copy)]
pub struct GlmControl {
    pub max_iter: usize,
    pub tol: f64,
}

impl Default for GlmControl {
    fn default() -> Self {
        Self { max_iter: 200, tol: 1e-10 }
    }
}

// Fisher scoring with a non-canonical link converges linearly, so a small
// deviance change does not pin the coefficients. The loop also tracks the
// contraction rate r = stepₜ/stepₜ₋₁ and stops once the geometric tail
// step·r/(1−r) — the remaining distance to the fixed point — is below this
// bound, so a restarted fit cannot move any coefficient by more than 1e-10.
const IRLS_TAIL_TOL: f64 = 5e-11;

fn check_finite(y: &[f64]) -> Result<(), FitError> {
    match y.iter().position(|v| !v.is_finite()) {
        Some(index) => Err(FitError::NonFiniteResponse { index }),
        None => Ok(()),
    }
}

fn check_response_len(basis: &BasisMatrix, y: &[f64]) -> Result<(), FitError> {
    if y.len() != basis.n_rows() {
        return Err(FitError::DimensionMismatch { expected: basis.n_rows(), got: y.len() });
    }
    Ok(())
}

/// Normal-equation solve shared by the Gaussian and log-normal paths.
fn least_squares(basis: &BasisMatrix, y: &[f64], kind: ModelKind) -> Result<FitResult, FitError> {
    check_response_len(basis, y)?;
    check_finite(y)?;
    let gram = gram_matrix(basis);
    let rhs = basis.mul_t_vec(y);
    let beta_hat = spd_solve(&gram, &rhs)?;
    let fitted_values = basis.mul_vec(&beta_hat);
    let residuals: Vec<f64> = y.iter().zip(&fitted_values).map(|(&yi, &fi)| yi - fi).collect();
    let n = basis.n_rows();
    let p = basis.n_cols();
    let (sigma2_hat, covariance) = if n > p {
        let rss: f64 = residuals.iter().map(|r| r * r).sum();
        let sigma2 = rss / (n - p) as f64;
        (Some(sigma2), Some(spd_inverse(&gram)?.scaled(sigma2)))
    } else {
        (None, None)
    };
    Ok(FitResult {
        model_kind: kind,
        beta_hat,
        covariance,
        sigma2_hat,
        dispersion_hat: None,
        fitted_values,
        residuals,
        converged: true,
        iterations: 1,
        deviance: None,
    })
}

/// Least squares fit of y on the trigonometric basis.
pub fn fit_ols(basis: &BasisMatrix, y: &[f64]) -> Result<FitResult, FitError> {
    least_squares(basis, y, ModelKind::Ols)
}

/// Least squares on log(y); identical to `fit_ols(basis, log y)` with the
/// model kind flag set. Fitted values and residuals are on the log scale.
pub fn fit_lognormal(basis: &BasisMatrix, y: &[f64]) -> Result<FitResult, FitError> {
    check_response_len(basis, y)?;
    check_finite(y)?;
    let offending: Vec<usize> =
        y.iter().enumerate().filter(|(_, &v)| v <= 0.0).map(|(i, _)| i).collect();
    if !offending.is_empty() {
        return Err(FitError::NonPositiveResponse { indices: offending });
    }
    let log_y: Vec<f64> = y.iter().map(|&v| libm::log(v)).collect();
    least_squares(basis, &log_y, ModelKind::Lognormal)
}

/// Fit a GLM by iteratively reweighted least squares, starting from the
/// log-response least squares coefficients.
pub fn fit_glm<F: GlmFamily>(
    basis: &BasisMatrix,
    y: &[f64],
    family: &F,
    control: &GlmControl,
) -> Result<FitResult, FitError> {
    check_response_len(basis, y)?;
    check_finite(y)?;
    let offending: Vec<usize> =
        y.iter().enumerate().filter(|(_, &v)| !family.valid_response(v)).map(|(i, _)| i).collect();
    if !offending.is_empty() {
        return Err(FitError::NonPositiveResponse { indices: offending });
    }
    let n = basis.n_rows();
    let p = basis.n_cols();

    let log_y: Vec<f64> = y.iter().map(|&v| libm::log(v)).collect();
    let mut beta = least_squares(basis, &log_y, ModelKind::GammaGlmLog)?.beta_hat;

    let deviance_of = |beta: &[f64]| -> f64 {
        (0..n)
            .map(|i| {
                let eta: f64 = basis.row(i).iter().zip(beta).map(|(&b, &c)| b * c).sum();
                family.deviance_term(y[i], family.inv_link(eta))
            })
            .sum()
    };

    let mut deviance = deviance_of(&beta);
    let mut trace = alloc::vec![deviance];
    let mut converged = false;
    let mut iterations = 0;
    let mut prev_step = 0.0_f64;

    while iterations < control.max_iter {
        iterations += 1;
        // One weighted least squares sweep on the working response
        // z_i = η_i + (y_i − μ_i)·dη/dμ with weights w_i = (dμ/dη)²/V(μ).
        let mut wgram = alloc::vec![0.0; p * p];
        let mut wrhs = alloc::vec![0.0; p];
        for i in 0..n {
            let row = basis.row(i);
            let eta: f64 = row.iter().zip(&beta).map(|(&b, &c)| b * c).sum();
            let mu = family.inv_link(eta);
            let slope = family.mu_eta(eta);
            let w = slope * slope / family.variance(mu);
            let z = eta + (y[i] - mu) / slope;
            for r in 0..p {
                wrhs[r] += w * row[r] * z;
                for c in r..p {
                    wgram[r * p + c] += w * row[r] * row[c];
                }
            }
        }
        for r in 0..p {
            for c in 0..r {
                wgram[r * p + c] = wgram[c * p + r];
            }
        }
        let next = spd_solve(&SpdMatrix::from_raw(p, wgram), &wrhs)?;
        let step = next
            .iter()
            .zip(&beta)
            .fold(0.0_f64, |m, (&a, &b)| m.max((a - b).abs()));
        beta = next;
        let new_deviance = deviance_of(&beta);
        trace.push(new_deviance);
        if !new_deviance.is_finite() {
            return Err(FitError::NotConverged { beta, deviance_trace: trace });
        }
        let deviance_settled =
            (new_deviance - deviance).abs() / (0.1 + new_deviance.abs()) < control.tol;
        deviance = new_deviance;
        let rate = if prev_step > 0.0 { (step / prev_step).min(0.99) } else { 0.5 };
        prev_step = step;
        let remaining = step * rate / (1.0 - rate);
        if deviance_settled && remaining <= IRLS_TAIL_TOL {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(FitError::NotConverged { beta, deviance_trace: trace });
    }

    // Verify the fixed point: the score Σ fᵢ wᵢ (yᵢ − μᵢ) dη/dμ must vanish.
    let fitted_values: Vec<f64> = (0..n)
        .map(|i| {
            let eta: f64 = basis.row(i).iter().zip(&beta).map(|(&b, &c)| b * c).sum();
            family.inv_link(eta)
        })
        .collect();
    let mut score = alloc::vec![0.0; p];
    let mut weights = alloc::vec![0.0; n];
    for i in 0..n {
        let mu = fitted_values[i];
        let eta = family.link(mu);
        let slope = family.mu_eta(eta);
        let w = slope * slope / family.variance(mu);
        weights[i] = w;
        let u = w * (y[i] - mu) / slope;
        for (s, &b) in score.iter_mut().zip(basis.row(i)) {
            *s += b * u;
        }
    }
    let score_inf = score.iter().fold(0.0_f64, |m, &v| m.max(v.abs()));
    if score_inf > 1e-8 * n as f64 {
        return Err(FitError::NotConverged { beta, deviance_trace: trace });
    }

    let residuals: Vec<f64> = y.iter().zip(&fitted_values).map(|(&yi, &mi)| yi - mi).collect();
    let (dispersion_hat, covariance) = if n > p {
        let pearson: f64 = (0..n)
            .map(|i| {
                let r = y[i] - fitted_values[i];
                r * r / family.variance(fitted_values[i])
            })
            .sum();
        let phi = pearson / (n - p) as f64;
        let cov = covariance_glm(basis, &weights)?.scaled(phi);
        (Some(phi), Some(cov))
    } else {
        (None, None)
    };

    Ok(FitResult {
        model_kind: ModelKind::GammaGlmLog,
        beta_hat: beta,
        covariance,
        sigma2_hat: None,
        dispersion_hat,
        fitted_values,
        residuals,
        converged: true,
        iterations,
        deviance: Some(deviance),
    })
}

/// Gaussian coefficient covariance σ̂²·(Σ f fᵀ)⁻¹ with
/// σ̂² = Σ rᵢ²/(n − 2K − 1).
pub fn covariance_ols(
    basis: &BasisMatrix,
    residuals: &[f64],
    order: usize,
) -> Result<SpdMatrix, FitError> {
    let n = basis.n_rows();
    let p = 2 * order + 1;
    if p != basis.n_cols() {
        return Err(FitError::DimensionMismatch { expected: basis.n_cols(), got: p });
    }
    if residuals.len() != n {
        return Err(FitError::DimensionMismatch { expected: n, got: residuals.len() });
    }
    if n <= p {
        return Err(FitError::InsufficientSamples { n, n_params: p });
    }
    let sigma2 = residuals.iter().map(|r| r * r).sum::<f64>() / (n - p) as f64;
    Ok(spd_inverse(&gram_matrix(basis))?.scaled(sigma2))
}

/// Inverse of the weighted Gram matrix (Σ wᵢ f fᵀ)⁻¹; dispersion scaling is
/// applied by the caller.
pub fn covariance_glm(basis: &BasisMatrix, weights: &[f64]) -> Result<SpdMatrix, FitError> {
    check_response_len(basis, weights)
        .map_err(|_| FitError::DimensionMismatch { expected: basis.n_rows(), got: weights.len() })?;
    if let Some(index) = weights.iter().position(|&w| !(w > 0.0) || !w.is_finite()) {
        return Err(FitError::NonPositiveWeight { index });
    }
    let p = basis.n_cols();
    let mut wgram = alloc::vec![0.0; p * p];
    for (i, &w) in weights.iter().enumerate() {
        let row = basis.row(i);
        for r in 0..p {
            for c in r..p {
                wgram[r * p + c] += w * row[r] * row[c];
            }
        }
    }
    for r in 0..p {
        for c in 0..r {
            wgram[r * p + c] = wgram[c * p + r];
        }
    }
    Ok(spd_inverse(&SpdMatrix::from_raw(p, wgram))?)
}

/// Evaluate a fitted model at new times: f(x)ᵀβ̂ for the least squares kinds,
/// exp(f(x)ᵀβ̂) for the gamma GLM.
pub fn predict(fit: &FitResult, spec: &DesignSpec, at: &[f64]) -> Result<Vec<f64>, FitError> {
    if spec.n_params() != fit.beta_hat.len() {
        return Err(FitError::DimensionMismatch {
            expected: fit.beta_hat.len(),
            got: spec.n_params(),
        });
    }
    Ok(at
        .iter()
        .map(|&x| {
            let eta: f64 = basis_row(x, spec.omega(), spec.order())
                .iter()
                .zip(&fit.beta_hat)
                .map(|(&b, &c)| b * c)
                .sum();
            match fit.model_kind {
                ModelKind::GammaGlmLog => libm::exp(eta),
                _ => eta,
            }
        })
        .collect())
}
