//! Quantum computation: unit-norm complex amplitude vectors, unitary gates,
//! and seeded measurement in the computational basis.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::ModelError;
use crate::linalg::{SMatrix, SVector};
use crate::models::{GateDescriptor, Model, Violation};
use crate::semiring::{self, COMPLEX_TOL};
use crate::textio::AnyMatrix;

pub fn check_normalized(entries: &[Complex64]) -> Result<(), Violation> {
    if let Some(index) = entries.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Violation::NonFinite { index });
    }
    let norm_sq: f64 = entries.iter().map(Complex64::norm_sqr).sum();
    if (norm_sq - 1.0).abs() > COMPLEX_TOL {
        return Err(Violation::Norm { norm_sq });
    }
    Ok(())
}

/// `M†M = I` entrywise within `tol`.
pub fn check_unitary(m: &SMatrix<Complex64>, tol: f64) -> Result<(), Violation> {
    if !m.is_square() {
        return Err(Violation::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    for i in 0..n {
        if let Some(j) = m.row(i).iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Violation::NonFinite { index: i * n + j });
        }
    }
    for i in 0..n {
        for j in 0..n {
            let dot: Complex64 = (0..n).map(|k| m.get(k, i).conj() * m.get(k, j)).sum();
            let target = if i == j { 1.0 } else { 0.0 };
            let deviation = (dot - Complex64::new(target, 0.0)).norm();
            if deviation > tol {
                return Err(Violation::NotUnitary { row: i, col: j, deviation });
            }
        }
    }
    Ok(())
}

/// Membership in `U(n)`. Non-square input is an error, not `false`.
pub fn is_unitary(m: &SMatrix<Complex64>, tol: f64) -> Result<bool, ModelError> {
    match check_unitary(m, tol) {
        Ok(()) => Ok(true),
        Err(Violation::NotSquare { rows, cols }) => {
            Err(crate::error::AlgebraError::NotSquare { rows, cols }.into())
        }
        Err(_) => Ok(false),
    }
}

/// A normalized amplitude vector.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumState(SVector<Complex64>);

impl QuantumState {
    pub fn new(v: SVector<Complex64>) -> Result<Self, ModelError> {
        check_normalized(v.entries())?;
        Ok(QuantumState(v))
    }

    pub fn from_entries(entries: Vec<Complex64>) -> Result<Self, ModelError> {
        Self::new(SVector::new(&semiring::complex(), entries)?)
    }

    pub fn vector(&self) -> &SVector<Complex64> {
        &self.0
    }

    pub fn entries(&self) -> &[Complex64] {
        self.0.entries()
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.entries().iter().map(Complex64::norm_sqr).collect()
    }

    pub fn measure(&self, seed: u64) -> usize {
        sample_index(&self.probabilities(), seed)
    }
}

pub fn apply_unitary(m: &SMatrix<Complex64>, q: &QuantumState) -> Result<QuantumState, ModelError> {
    check_unitary(m, COMPLEX_TOL)?;
    QuantumState::new(m.mat_vec(q.vector())?)
}

/// Draws `u` uniform in `[0,1)` from SplitMix64 seeded with `seed` and returns
/// the first index of positive probability whose cumulative mass reaches `u`.
fn sample_index(probs: &[f64], seed: u64) -> usize {
    let total: f64 = probs.iter().sum();
    let u: f64 = SplitMix64::seed_from_u64(seed).gen::<f64>() * total;
    let mut cdf = 0.0;
    let mut last = 0;
    for (i, &p) in probs.iter().enumerate() {
        if p <= 0.0 {
            continue;
        }
        cdf += p;
        last = i;
        if u <= cdf {
            return i;
        }
    }
    last
}

/// Samples a basis index with probability `|a_i|²`. Deterministic in `seed`.
pub fn measure(amplitudes: &[Complex64], seed: u64) -> Result<usize, ModelError> {
    check_normalized(amplitudes)?;
    let probs: Vec<f64> = amplitudes.iter().map(Complex64::norm_sqr).collect();
    Ok(sample_index(&probs, seed))
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn quantum_gate(name: &str) -> Result<GateDescriptor, ModelError> {
    let s = semiring::complex();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let perm = |images: &[usize]| {
        let n = images.len();
        SMatrix::from_fn(&s, n, n, |i, j| if images[j] == i { c(1.0) } else { c(0.0) })
    };
    let (arity, matrix) = match name {
        "X" => (1, perm(&[1, 0])),
        "Z" => (1, SMatrix::from_fn(&s, 2, 2, |i, j| if i != j { c(0.0) } else if i == 0 { c(1.0) } else { c(-1.0) })),
        "H" => (1, SMatrix::from_fn(&s, 2, 2, |i, j| if i == 1 && j == 1 { c(-h) } else { c(h) })),
        "CNOT" => (2, perm(&[0, 1, 3, 2])),
        "SWAP" => (2, perm(&[0, 2, 1, 3])),
        other => return Err(ModelError::UnknownGate(other.to_string())),
    };
    Ok(GateDescriptor { model: Model::Quantum, name: name.to_string(), arity, matrix: AnyMatrix::Complex(matrix) })
}
