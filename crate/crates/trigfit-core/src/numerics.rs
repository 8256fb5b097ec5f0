//! Dense symmetric positive-definite linear algebra for the (2K+1)-sized
//! systems produced by the fitters. Cholesky without pivoting; a failed
//! pivot is surfaced as `NotPositiveDefinite`, never regularized.

use alloc::vec::Vec;
use core::fmt;

/// Hard cap on matrix dimension; the fitters never exceed 2K+1 with
/// n > 2K, so anything bigger signals a caller bug.
pub const MAX_DIM: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub enum NumericsError {
    /// A Cholesky pivot fell at or below p·ε·max-diagonal: the matrix is not
    /// positive definite, e.g. the Gram matrix of an aliased design (n ≤ 2K).
    NotPositiveDefinite { pivot_index: usize },
    NotSymmetric { row: usize, col: usize },
    DimensionTooLarge { dim: usize },
    DimensionMismatch { expected: usize, got: usize },
}

impl fmt::Display for NumericsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumericsError::NotPositiveDefinite { pivot_index } => {
                write!(f, "matrix is not positive definite (pivot {pivot_index} too small); the design is likely rank deficient")
            }
            NumericsError::NotSymmetric { row, col } => {
                write!(f, "matrix entry ({row},{col}) breaks symmetry")
            }
            NumericsError::DimensionTooLarge { dim } => {
                write!(f, "dimension {dim} exceeds the supported cap {MAX_DIM}")
            }
            NumericsError::DimensionMismatch { expected, got } => {
                write!(f, "vector length {got} does not match matrix dimension {expected}")
            }
        }
    }
}

impl core::error::Error for NumericsError {}

/// Symmetric real matrix, row-major, dimension ≤ [`MAX_DIM`].
#[derive(Debug, Clone, PartialEq)]
pub struct SpdMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SpdMatrix {
    /// Build from row-major entries, validating symmetry to 1e-12 relative.
    pub fn new(dim: usize, data: Vec<f64>) -> Result<Self, NumericsError> {
        if dim > MAX_DIM {
            return Err(NumericsError::DimensionTooLarge { dim });
        }
        if data.len() != dim * dim {
            return Err(NumericsError::DimensionMismatch { expected: dim * dim, got: data.len() });
        }
        let scale = data.iter().fold(0.0_f64, |m, &v| m.max(v.abs()));
        for r in 0..dim {
            for c in (r + 1)..dim {
                let d = (data[r * dim + c] - data[c * dim + r]).abs();
                if d > 1e-12 * scale.max(1.0) {
                    return Err(NumericsError::NotSymmetric { row: r, col: c });
                }
            }
        }
        Ok(Self { dim, data })
    }

    /// Crate-internal constructor for matrices symmetric by construction.
    pub(crate) fn from_raw(dim: usize, data: Vec<f64>) -> Self {
        debug_assert!(dim <= MAX_DIM);
        debug_assert_eq!(data.len(), dim * dim);
        Self { dim, data }
    }

    pub fn identity(dim: usize) -> Self {
        let mut data = alloc::vec![0.0; dim * dim];
        for i in 0..dim {
            data[i * dim + i] = 1.0;
        }
        Self { dim, data }
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let dim = diag.len();
        let mut data = alloc::vec![0.0; dim * dim];
        for (i, &d) in diag.iter().enumerate() {
            data[i * dim + i] = d;
        }
        Self { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.dim + col]
    }

    /// Multiply every entry by a scalar (covariance scaling).
    pub fn scaled(&self, factor: f64) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|&v| v * factor).collect() }
    }

    /// Rows as nested vectors, for serialization.
    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.dim).map(|r| self.data[r * self.dim..(r + 1) * self.dim].to_vec()).collect()
    }

    fn cholesky(&self) -> Result<Vec<f64>, NumericsError> {
        let p = self.dim;
        let max_diag = (0..p).fold(0.0_f64, |m, i| m.max(self.get(i, i)));
        let threshold = p as f64 * f64::EPSILON * max_diag;
        let mut lower = alloc::vec![0.0; p * p];
        for j in 0..p {
            let mut d = self.get(j, j);
            for k in 0..j {
                d -= lower[j * p + k] * lower[j * p + k];
            }
            if d <= threshold {
                return Err(NumericsError::NotPositiveDefinite { pivot_index: j });
            }
            let ljj = libm::sqrt(d);
            lower[j * p + j] = ljj;
            for i in (j + 1)..p {
                let mut s = self.get(i, j);
                for k in 0..j {
                    s -= lower[i * p + k] * lower[j * p + k];
                }
                lower[i * p + j] = s / ljj;
            }
        }
        Ok(lower)
    }
}

fn forward_substitute(lower: &[f64], p: usize, b: &mut [f64]) {
    for i in 0..p {
        let mut s = b[i];
        for k in 0..i {
            s -= lower[i * p + k] * b[k];
        }
        b[i] = s / lower[i * p + i];
    }
}

fn back_substitute_transposed(lower: &[f64], p: usize, b: &mut [f64]) {
    for i in (0..p).rev() {
        let mut s = b[i];
        for k in (i + 1)..p {
            s -= lower[k * p + i] * b[k];
        }
        b[i] = s / lower[i * p + i];
    }
}

/// Solve Ax = b for symmetric positive definite A via Cholesky.
pub fn spd_solve(a: &SpdMatrix, b: &[f64]) -> Result<Vec<f64>, NumericsError> {
    if b.len() != a.dim {
        return Err(NumericsError::DimensionMismatch { expected: a.dim, got: b.len() });
    }
    let lower = a.cholesky()?;
    let mut x = b.to_vec();
    forward_substitute(&lower, a.dim, &mut x);
    back_substitute_transposed(&lower, a.dim, &mut x);
    Ok(x)
}

/// Inverse of a symmetric positive definite matrix. The result is exactly
/// symmetric: it is assembled as L⁻ᵀL⁻¹ from the Cholesky factor.
pub fn spd_inverse(a: &SpdMatrix) -> Result<SpdMatrix, NumericsError> {
    let p = a.dim;
    let lower = a.cholesky()?;
    // Columns of L⁻¹: forward-solve against unit vectors.
    let mut linv = alloc::vec![0.0; p * p];
    for j in 0..p {
        let mut e = alloc::vec![0.0; p];
        e[j] = 1.0;
        forward_substitute(&lower, p, &mut e);
        for i in 0..p {
            linv[i * p + j] = e[i];
        }
    }
    let mut inv = alloc::vec![0.0; p * p];
    for r in 0..p {
        for c in r..p {
            // (L⁻ᵀ L⁻¹)[r,c] = Σ_k L⁻¹[k,r]·L⁻¹[k,c]; L⁻¹ is lower triangular.
            let mut s = 0.0;
            for k in c..p {
                s += linv[k * p + r] * linv[k * p + c];
            }
            inv[r * p + c] = s;
            inv[c * p + r] = s;
        }
    }
    Ok(SpdMatrix::from_raw(p, inv))
}
