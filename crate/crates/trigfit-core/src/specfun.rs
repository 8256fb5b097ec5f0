//! Log-gamma, digamma, and the derived constants of the generalized gamma
//! log-transform analysis.
//!
//! All functions take positive real arguments only and return a
//! [`SpecFunError`] on domain violations instead of NaN.

use core::fmt;

/// Shape parameters (κ, ρ) of a generalized gamma distribution.
///
/// Both must be strictly positive and finite; construction enforces this.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GGShape {
    kappa: f64,
    rho: f64,
}

impl GGShape {
    pub fn new(kappa: f64, rho: f64) -> Result<Self, SpecFunError> {
        if !(kappa.is_finite() && kappa > 0.0) {
            return Err(SpecFunError::Domain { name: "kappa", value: kappa });
        }
        if !(rho.is_finite() && rho > 0.0) {
            return Err(SpecFunError::Domain { name: "rho", value: rho });
        }
        Ok(Self { kappa, rho })
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }
}

/// Domain error for a special-function argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpecFunError {
    /// Argument outside the (0, ∞) domain or non-finite.
    Domain { name: &'static str, value: f64 },
}

impl fmt::Display for SpecFunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecFunError::Domain { name, value } => {
                write!(f, "{name} must be a finite positive real, got {value}")
            }
        }
    }
}

impl core::error::Error for SpecFunError {}

// Stirling series coefficients B_{2n} / (2n (2n-1)) for ln Γ.
const LN_GAMMA_STIRLING: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
];

// Asymptotic series coefficients B_{2n} / (2n) for ψ.
const DIGAMMA_ASYMP: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
];

/// Natural logarithm of the gamma function for u > 0.
///
/// Arguments below 10 are shifted up by the recurrence
/// Γ(u+1) = u Γ(u) and the shifted value is evaluated with a
/// Stirling series.
pub fn ln_gamma(u: f64) -> Result<f64, SpecFunError> {
    if !(u.is_finite() && u > 0.0) {
        return Err(SpecFunError::Domain { name: "u", value: u });
    }
    let mut shift = 0.0;
    let mut z = u;
    while z < 10.0 {
        shift += libm::log(z);
        z += 1.0;
    }
    Ok(stirling_ln_gamma(z) - shift)
}

fn stirling_ln_gamma(z: f64) -> f64 {
    const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;
    let mut series = 0.0;
    let w = 1.0 / (z * z);
    // Horner evaluation in 1/z^2, one leading 1/z factor.
    for &c in LN_GAMMA_STIRLING.iter().rev() {
        series = series * w + c;
    }
    (z - 0.5) * libm::log(z) - z + HALF_LN_TWO_PI + series / z
}

/// Digamma function ψ(u) = d lnΓ(u) / du for u > 0.
///
/// Uses the recurrence ψ(u) = ψ(u+1) − 1/u to push the argument above 6,
/// then the asymptotic expansion ψ(z) ≈ ln z − 1/(2z) − Σ B_{2n}/(2n z^{2n}).
pub fn digamma(u: f64) -> Result<f64, SpecFunError> {
    if !(u.is_finite() && u > 0.0) {
        return Err(SpecFunError::Domain { name: "u", value: u });
    }
    let mut acc = 0.0;
    let mut z = u;
    while z < 6.0 {
        acc -= 1.0 / z;
        z += 1.0;
    }
    let w = 1.0 / (z * z);
    let mut series = 0.0;
    for &c in DIGAMMA_ASYMP.iter().rev() {
        series = series * w + c;
    }
    Ok(acc + libm::log(z) - 0.5 / z - series * w)
}

/// The intercept shift c₀ = ψ(κ/ρ)/ρ − lnΓ((κ+1)/ρ) + lnΓ(κ/ρ) incurred by
/// log-transforming a generalized gamma response.
pub fn c_zero(shape: GGShape) -> Result<f64, SpecFunError> {
    let a = shape.kappa / shape.rho;
    let b = (shape.kappa + 1.0) / shape.rho;
    Ok(digamma(a)? / shape.rho - ln_gamma(b)? + ln_gamma(a)?)
}

/// E[log Y] = log λ + ψ(κ/ρ)/ρ for Y generalized gamma with scale λ.
pub fn expected_log_gg(lambda: f64, shape: GGShape) -> Result<f64, SpecFunError> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(SpecFunError::Domain { name: "lambda", value: lambda });
    }
    Ok(libm::log(lambda) + digamma(shape.kappa / shape.rho)? / shape.rho)
}
