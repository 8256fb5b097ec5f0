//! Generalized gamma data-generating process: mean-linked scale (so that
//! E[Y|x] = exp(f*(x)ᵀβ*)), density, samplers, and equispaced dataset
//! simulation.
//!
//! Randomness comes from [`RngStream`], a seeded ChaCha8 stream: identical
//! (seed, stream) pairs give identical, platform-independent draw sequences.

use alloc::vec::Vec;
use core::fmt;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::design::{basis_row, equispaced_times};
use crate::specfun::{ln_gamma, GGShape};

#[derive(Debug, Clone, PartialEq)]
pub enum GensimError {
    /// Coefficient vector must have odd length 2K*+1 ≥ 3 with finite entries.
    BadCoefficients { len: usize },
    NonFiniteCoefficient { index: usize },
    BadOmega { value: f64 },
    /// Sample count at or below the 2K* Nyquist limit.
    NyquistViolation { n: usize, order_star: usize },
    NonPositiveValue { name: &'static str, value: f64 },
}

impl fmt::Display for GensimError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GensimError::BadCoefficients { len } => {
                write!(f, "true coefficient vector must have odd length >= 3, got {len}")
            }
            GensimError::NonFiniteCoefficient { index } => {
                write!(f, "true coefficient at index {index} is not finite")
            }
            GensimError::BadOmega { value } => {
                write!(f, "angular frequency must be finite and positive, got {value}")
            }
            GensimError::NyquistViolation { n, order_star } => {
                write!(f, "n = {n} does not exceed 2K* = {}: true harmonics alias", 2 * order_star)
            }
            GensimError::NonPositiveValue { name, value } => {
                write!(f, "{name} must be positive, got {value}")
            }
        }
    }
}

impl core::error::Error for GensimError {}

/// The data-generating process: true coefficients β* of order K*, angular
/// frequency ω, and generalized gamma shape (κ, ρ).
#[derive(Debug, Clone, PartialEq)]
pub struct GGSpec {
    beta_star: Vec<f64>,
    order_star: usize,
    omega: f64,
    shape: GGShape,
}

impl GGSpec {
    pub fn new(beta_star: Vec<f64>, omega: f64, shape: GGShape) -> Result<Self, GensimError> {
        if beta_star.len() < 3 || beta_star.len() % 2 == 0 {
            return Err(GensimError::BadCoefficients { len: beta_star.len() });
        }
        if let Some(index) = beta_star.iter().position(|v| !v.is_finite()) {
            return Err(GensimError::NonFiniteCoefficient { index });
        }
        if !(omega.is_finite() && omega > 0.0) {
            return Err(GensimError::BadOmega { value: omega });
        }
        let order_star = (beta_star.len() - 1) / 2;
        Ok(Self { beta_star, order_star, omega, shape })
    }

    pub fn beta_star(&self) -> &[f64] {
        &self.beta_star
    }

    pub fn order_star(&self) -> usize {
        self.order_star
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn shape(&self) -> GGShape {
        self.shape
    }

    /// Linear predictor f*(x)ᵀβ* on the log-mean scale.
    pub fn log_mean(&self, x: f64) -> f64 {
        basis_row(x, self.omega, self.order_star)
            .iter()
            .zip(&self.beta_star)
            .map(|(&b, &c)| b * c)
            .sum()
    }
}

/// Deterministic random stream: ChaCha8 keyed by `seed_from_u64(seed)` with
/// the 64-bit stream id applied via `set_stream`. Uniform doubles take the
/// high 53 bits of each output word. One (seed, stream) pair must never be
/// consumed concurrently; distinct streams are independent.
#[derive(Debug, Clone)]
pub struct RngStream {
    rng: ChaCha8Rng,
    seed: u64,
    stream: u64,
}

const U53_SCALE: f64 = 1.0 / 9007199254740992.0; // 2^-53

impl RngStream {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self { rng, seed, stream }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self) -> u64 {
        self.stream
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform on (0, 1]; never returns 0, safe under log.
    pub fn uniform_open_closed(&mut self) -> f64 {
        ((self.next_u64() >> 11) + 1) as f64 * U53_SCALE
    }

    /// Uniform on [0, 1).
    pub fn uniform_half_open(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * U53_SCALE
    }

    /// Standard normal via the Box–Muller cosine branch; consumes exactly
    /// two words per draw.
    pub fn standard_normal(&mut self) -> f64 {
        let u1 = self.uniform_open_closed();
        let u2 = self.uniform_half_open();
        libm::sqrt(-2.0 * libm::log(u1)) * libm::cos(2.0 * core::f64::consts::PI * u2)
    }
}

/// The scale λ(x) = Γ(κ/ρ)·exp(f*(x)ᵀβ*)/Γ((κ+1)/ρ), chosen so that
/// E[Y|x] = exp(f*(x)ᵀβ*).
pub fn gg_lambda(x: f64, spec: &GGSpec) -> f64 {
    let shape = spec.shape();
    let a = shape.kappa() / shape.rho();
    let b = (shape.kappa() + 1.0) / shape.rho();
    let log_lambda = ln_gamma(a).expect("validated shape") - ln_gamma(b).expect("validated shape")
        + spec.log_mean(x);
    libm::exp(log_lambda)
}

/// Generalized gamma density ρ y^{κ−1} exp(−(y/λ)^ρ) / (λ^κ Γ(κ/ρ)).
pub fn gg_density(y: f64, lambda: f64, shape: GGShape) -> Result<f64, GensimError> {
    if !(y > 0.0) {
        return Err(GensimError::NonPositiveValue { name: "y", value: y });
    }
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(GensimError::NonPositiveValue { name: "lambda", value: lambda });
    }
    let kappa = shape.kappa();
    let rho = shape.rho();
    let log_density = libm::log(rho) + (kappa - 1.0) * libm::log(y)
        - libm::pow(y / lambda, rho)
        - kappa * libm::log(lambda)
        - ln_gamma(kappa / rho).expect("validated shape");
    Ok(libm::exp(log_density))
}

/// Draw from Gamma(shape, scale 1) by the Marsaglia–Tsang squeeze; shapes
/// below 1 use the boost Gamma(shape+1)·U^{1/shape}.
pub fn sample_gamma(stream: &mut RngStream, shape: f64) -> f64 {
    assert!(shape > 0.0 && shape.is_finite(), "gamma shape must be positive");
    if shape < 1.0 {
        let boosted = sample_gamma_at_least_one(stream, shape + 1.0);
        let u = stream.uniform_open_closed();
        return boosted * libm::pow(u, 1.0 / shape);
    }
    sample_gamma_at_least_one(stream, shape)
}

fn sample_gamma_at_least_one(stream: &mut RngStream, shape: f64) -> f64 {
    let d = shape - 1.0 / 3.0;
    let c = 1.0 / libm::sqrt(9.0 * d);
    loop {
        let z = stream.standard_normal();
        let v = 1.0 + c * z;
        if v <= 0.0 {
            continue;
        }
        let v3 = v * v * v;
        let u = stream.uniform_open_closed();
        if u < 1.0 - 0.0331 * z * z * z * z {
            return d * v3;
        }
        if libm::log(u) < 0.5 * z * z + d * (1.0 - v3 + libm::log(v3)) {
            return d * v3;
        }
    }
}

/// Draw Y = λ(x)·G^{1/ρ} with G ~ Gamma(κ/ρ, 1); Y then has the generalized
/// gamma density with scale λ(x).
pub fn sample_gg(stream: &mut RngStream, x: f64, spec: &GGSpec) -> f64 {
    let shape = spec.shape();
    let g = sample_gamma(stream, shape.kappa() / shape.rho());
    gg_lambda(x, spec) * libm::pow(g, 1.0 / shape.rho())
}

/// Equispaced times over one period and independent generalized gamma
/// responses at each time.
pub fn simulate_dataset(
    stream: &mut RngStream,
    spec: &GGSpec,
    n: usize,
) -> Result<(Vec<f64>, Vec<f64>), GensimError> {
    if n <= 2 * spec.order_star() {
        return Err(GensimError::NyquistViolation { n, order_star: spec.order_star() });
    }
    let times = equispaced_times(n, spec.omega()).expect("validated n and omega");
    let responses = times.iter().map(|&x| sample_gg(stream, x, spec)).collect();
    Ok((times, responses))
}
