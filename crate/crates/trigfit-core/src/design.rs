//! Sampling schedules, the trigonometric regression basis, Gram-matrix
//! machinery, and conversions between linear coefficients and the
//! amplitude/phase parameterization.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use crate::numerics::SpdMatrix;

const TWO_PI: f64 = 2.0 * PI;

/// Errors from design construction and coefficient conversions.
#[derive(Debug, Clone, PartialEq)]
pub enum DesignError {
    EmptyTimes,
    NonFiniteTime { index: usize, value: f64 },
    BadOmega { value: f64 },
    BadOrder,
    /// Coefficient vectors must have odd length 2K+1 ≥ 3.
    BadCoefficientLength { len: usize },
}

impl fmt::Display for DesignError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DesignError::EmptyTimes => write!(f, "sampling schedule is empty"),
            DesignError::NonFiniteTime { index, value } => {
                write!(f, "time at index {index} is not finite: {value}")
            }
            DesignError::BadOmega { value } => {
                write!(f, "angular frequency must be finite and positive, got {value}")
            }
            DesignError::BadOrder => write!(f, "model order must be at least 1"),
            DesignError::BadCoefficientLength { len } => {
                write!(f, "coefficient vector must have odd length 2K+1 >= 3, got {len}")
            }
        }
    }
}

impl core::error::Error for DesignError {}

/// A sampling schedule together with the angular frequency ω and model
/// order K. Times are stored as given; no modular reduction is applied.
#[derive(Debug, Clone, PartialEq)]
pub struct DesignSpec {
    times: Vec<f64>,
    omega: f64,
    order: usize,
}

impl DesignSpec {
    pub fn new(times: Vec<f64>, omega: f64, order: usize) -> Result<Self, DesignError> {
        if times.is_empty() {
            return Err(DesignError::EmptyTimes);
        }
        for (index, &value) in times.iter().enumerate() {
            if !value.is_finite() {
                return Err(DesignError::NonFiniteTime { index, value });
            }
        }
        if !(omega.is_finite() && omega > 0.0) {
            return Err(DesignError::BadOmega { value: omega });
        }
        if order == 0 {
            return Err(DesignError::BadOrder);
        }
        Ok(Self { times, omega, order })
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of samples n.
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of basis columns p = 2K+1.
    pub fn n_params(&self) -> usize {
        2 * self.order + 1
    }
}

/// The n × (2K+1) matrix whose i-th row is f(X_i); row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisMatrix {
    n: usize,
    p: usize,
    data: Vec<f64>,
}

impl BasisMatrix {
    pub fn n_rows(&self) -> usize {
        self.n
    }

    pub fn n_cols(&self) -> usize {
        self.p
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.p..(i + 1) * self.p]
    }

    /// Matrix-vector product Bv, length n.
    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.p);
        (0..self.n)
            .map(|i| self.row(i).iter().zip(v).map(|(&b, &x)| b * x).sum())
            .collect()
    }

    /// Transposed product Bᵀw, length p.
    pub fn mul_t_vec(&self, w: &[f64]) -> Vec<f64> {
        assert_eq!(w.len(), self.n);
        let mut out = alloc::vec![0.0; self.p];
        for (i, &wi) in w.iter().enumerate() {
            for (o, &b) in out.iter_mut().zip(self.row(i)) {
                *o += b * wi;
            }
        }
        out
    }
}

/// One oscillation harmonic in amplitude/phase form. The phase lives in the
/// principal atan2 branch (−π, π]; when the amplitude is zero the phase is
/// reported as 0 and `phase_defined` is false.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Harmonic {
    pub amplitude: f64,
    pub phase: f64,
    pub phase_defined: bool,
}

/// Midline plus per-harmonic amplitude and phase parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct AmpPhase {
    pub midline: f64,
    pub harmonics: Vec<Harmonic>,
}

/// Equispaced schedule X_i = 2π(i−1)/(ωn) for i = 1..n: one full period,
/// endpoint not repeated.
pub fn equispaced_times(n: usize, omega: f64) -> Result<Vec<f64>, DesignError> {
    if n == 0 {
        return Err(DesignError::EmptyTimes);
    }
    if !(omega.is_finite() && omega > 0.0) {
        return Err(DesignError::BadOmega { value: omega });
    }
    Ok((0..n).map(|i| TWO_PI * i as f64 / (omega * n as f64)).collect())
}

/// Regression-function row f(x) = [1, sin ωx, cos ωx, …, sin Kωx, cos Kωx].
pub fn basis_row(x: f64, omega: f64, order: usize) -> Vec<f64> {
    let mut row = Vec::with_capacity(2 * order + 1);
    row.push(1.0);
    for k in 1..=order {
        let arg = k as f64 * omega * x;
        row.push(libm::sin(arg));
        row.push(libm::cos(arg));
    }
    row
}

/// Stack basis rows for every time in the design.
pub fn design_matrix(spec: &DesignSpec) -> BasisMatrix {
    let p = spec.n_params();
    let mut data = Vec::with_capacity(spec.len() * p);
    for &x in spec.times() {
        data.extend_from_slice(&basis_row(x, spec.omega(), spec.order()));
    }
    BasisMatrix { n: spec.len(), p, data }
}

/// Gram matrix Σᵢ f(Xᵢ) f(Xᵢ)ᵀ. Under an equispaced design with n > 2K this
/// equals diag(n, n/2, …, n/2).
pub fn gram_matrix(basis: &BasisMatrix) -> SpdMatrix {
    let p = basis.n_cols();
    let mut upper = alloc::vec![0.0; p * p];
    for i in 0..basis.n_rows() {
        let row = basis.row(i);
        for r in 0..p {
            for c in r..p {
                upper[r * p + c] += row[r] * row[c];
            }
        }
    }
    for r in 0..p {
        for c in 0..r {
            upper[r * p + c] = upper[c * p + r];
        }
    }
    SpdMatrix::from_raw(p, upper)
}

/// Outcome of the aliasing check n > 2K.
#[derive(Debug, Clone, PartialEq)]
pub struct NyquistCheck {
    pub pass: bool,
    pub n: usize,
    pub order: usize,
}

impl fmt::Display for NyquistCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass {
            write!(f, "n = {} exceeds 2K = {}: harmonics identifiable", self.n, 2 * self.order)
        } else {
            write!(
                f,
                "n = {} does not exceed 2K = {}: order-{} harmonics alias and are not identifiable",
                self.n,
                2 * self.order,
                self.order
            )
        }
    }
}

/// Check the identifiability condition n > 2K.
pub fn nyquist_check(n: usize, order: usize) -> NyquistCheck {
    NyquistCheck { pass: n > 2 * order, n, order }
}

/// Convert linear coefficients to amplitude/phase form:
/// μ_k = √(β²_{2k−1} + β²_{2k}), φ_k = atan2(−β_{2k−1}, β_{2k}).
pub fn beta_to_amp_phase(beta: &[f64]) -> Result<AmpPhase, DesignError> {
    if beta.len() < 3 || beta.len() % 2 == 0 {
        return Err(DesignError::BadCoefficientLength { len: beta.len() });
    }
    let order = (beta.len() - 1) / 2;
    let mut harmonics = Vec::with_capacity(order);
    for k in 1..=order {
        let bs = beta[2 * k - 1];
        let bc = beta[2 * k];
        let amplitude = libm::hypot(bs, bc);
        if amplitude == 0.0 {
            harmonics.push(Harmonic { amplitude: 0.0, phase: 0.0, phase_defined: false });
        } else {
            harmonics.push(Harmonic {
                amplitude,
                phase: libm::atan2(-bs, bc),
                phase_defined: true,
            });
        }
    }
    Ok(AmpPhase { midline: beta[0], harmonics })
}

/// Inverse conversion: β_{2k−1} = −μ_k sin φ_k, β_{2k} = μ_k cos φ_k.
pub fn amp_phase_to_beta(ap: &AmpPhase) -> Vec<f64> {
    let mut beta = Vec::with_capacity(2 * ap.harmonics.len() + 1);
    beta.push(ap.midline);
    for h in &ap.harmonics {
        beta.push(-h.amplitude * libm::sin(h.phase));
        beta.push(h.amplitude * libm::cos(h.phase));
    }
    beta
}
