//! The four computation models and what they share: a model tag, membership
//! violations, and gate descriptors.

use std::fmt;
use std::str::FromStr;

use crate::linalg::{SMatrix, SVector};
use crate::scalar::{ComplexScalar, Rational, UnitScalar};
use crate::semiring::{self, SemiringInstance};
use crate::textio::{AnyMatrix, AnyVector};

pub mod classical;
pub mod fuzzy;
pub mod quantum;
pub mod stochastic;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    Classical,
    Stochastic,
    Quantum,
    Fuzzy,
}

impl Model {
    pub const ALL: [Model; 4] = [Model::Classical, Model::Stochastic, Model::Quantum, Model::Fuzzy];

    pub fn name(self) -> &'static str {
        match self {
            Model::Classical => "classical",
            Model::Stochastic => "stochastic",
            Model::Quantum => "quantum",
            Model::Fuzzy => "fuzzy",
        }
    }

    /// Name of the semiring instance the model's matrices live over.
    pub fn instance_name(self) -> &'static str {
        match self {
            Model::Classical => "boolean",
            Model::Stochastic => "probability",
            Model::Quantum => "complex",
            Model::Fuzzy => "fuzz-mv",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Model::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown model `{s}`"))
    }
}

/// Why a matrix or state failed its model's membership predicate.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    NotSquare { rows: usize, cols: usize },
    WrongInstance { expected: &'static str, found: &'static str },
    EntryOutOfRange { row: usize, col: usize, value: String },
    NonBinaryEntry { row: usize, col: usize, value: String },
    RowOnes { row: usize, count: usize },
    ColumnOnes { col: usize, count: usize },
    ColumnSum { col: usize, sum: String },
    ColumnMin { col: usize, min: String },
    StateEntryOutOfRange { index: usize, value: String },
    StateSum { sum: String },
    StateMin { min: String },
    NotBasisState { ones: usize },
    Norm { norm_sq: f64 },
    NonFinite { index: usize },
    NotUnitary { row: usize, col: usize, deviation: f64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            Violation::WrongInstance { expected, found } => {
                write!(f, "expected a {expected} matrix, found {found}")
            }
            Violation::EntryOutOfRange { row, col, value } => {
                write!(f, "entry ({row},{col}) = {value} outside [0,1]")
            }
            Violation::NonBinaryEntry { row, col, value } => {
                write!(f, "entry ({row},{col}) = {value} is not 0 or 1")
            }
            Violation::RowOnes { row, count } => write!(f, "row {row} has {count} nonzero entries"),
            Violation::ColumnOnes { col, count } => {
                write!(f, "column {col} has {count} nonzero entries")
            }
            Violation::ColumnSum { col, sum } => write!(f, "column {col} sum {sum}"),
            Violation::ColumnMin { col, min } => write!(f, "column {col} min {min}"),
            Violation::StateEntryOutOfRange { index, value } => {
                write!(f, "entry {index} = {value} outside [0,1]")
            }
            Violation::StateSum { sum } => write!(f, "sum {sum}"),
            Violation::StateMin { min } => write!(f, "min {min}"),
            Violation::NotBasisState { ones } => {
                write!(f, "not a basis state ({ones} entries equal to 1)")
            }
            Violation::Norm { norm_sq } => write!(f, "squared norm {norm_sq}"),
            Violation::NonFinite { index } => write!(f, "entry {index} is not finite"),
            Violation::NotUnitary { row, col, deviation } => {
                write!(f, "(M†M)[{row},{col}] deviates from identity by {deviation:e}")
            }
        }
    }
}

/// A named gate together with its matrix and wire count.
#[derive(Debug, Clone)]
pub struct GateDescriptor {
    pub model: Model,
    pub name: String,
    pub arity: usize,
    pub matrix: AnyMatrix,
}

impl GateDescriptor {
    pub fn dimension(&self) -> usize {
        1 << self.arity
    }
}

/// Number of wires `n` with `2^n == dim`, if `dim` is a power of two.
pub fn wires_for_dimension(dim: usize) -> Option<usize> {
    (dim.is_power_of_two()).then(|| dim.trailing_zeros() as usize)
}

/// Shared surface of the three models whose state is a vector over a semiring.
pub trait VectorModel {
    type Scalar: Clone + fmt::Display + fmt::Debug;

    const MODEL: Model;

    fn instance() -> SemiringInstance<Self::Scalar>;

    fn check_gate(m: &SMatrix<Self::Scalar>) -> Result<(), Violation>;

    fn check_state(v: &SVector<Self::Scalar>) -> Result<(), Violation>;

    fn builtin_gate(name: &str) -> Option<GateDescriptor>;

    /// Basis state for bits listed most-significant first.
    fn basis_state(bits: &[bool]) -> SVector<Self::Scalar>;

    fn format_scalar(x: &Self::Scalar) -> String;

    fn unwrap_matrix(m: &AnyMatrix) -> Option<SMatrix<Self::Scalar>>;

    fn wrap_matrix(m: SMatrix<Self::Scalar>) -> AnyMatrix;

    fn unwrap_vector(v: &AnyVector) -> Option<SVector<Self::Scalar>>;

    fn wrap_vector(v: SVector<Self::Scalar>) -> AnyVector;
}

pub struct StochasticModel;
pub struct QuantumModel;
pub struct FuzzyModel;

pub(crate) fn bits_to_index(bits: &[bool]) -> usize {
    bits.iter().fold(0, |acc, &b| (acc << 1) | usize::from(b))
}

impl VectorModel for StochasticModel {
    type Scalar = Rational;
    const MODEL: Model = Model::Stochastic;

    fn instance() -> SemiringInstance<Rational> {
        semiring::probability()
    }

    fn check_gate(m: &SMatrix<Rational>) -> Result<(), Violation> {
        stochastic::check_stochastic(m)
    }

    fn check_state(v: &SVector<Rational>) -> Result<(), Violation> {
        stochastic::check_prob_vector(v)
    }

    fn builtin_gate(name: &str) -> Option<GateDescriptor> {
        stochastic::stochastic_gate(name).ok()
    }

    fn basis_state(bits: &[bool]) -> SVector<Rational> {
        SVector::basis(&Self::instance(), 1 << bits.len(), bits_to_index(bits))
    }

    fn format_scalar(x: &Rational) -> String {
        crate::scalar::format_rational(x)
    }

    fn unwrap_matrix(m: &AnyMatrix) -> Option<SMatrix<Rational>> {
        m.to_probability()
    }

    fn wrap_matrix(m: SMatrix<Rational>) -> AnyMatrix {
        AnyMatrix::Rational(m)
    }

    fn unwrap_vector(v: &AnyVector) -> Option<SVector<Rational>> {
        v.to_probability()
    }

    fn wrap_vector(v: SVector<Rational>) -> AnyVector {
        AnyVector::Rational(v)
    }
}

impl VectorModel for QuantumModel {
    type Scalar = ComplexScalar;
    const MODEL: Model = Model::Quantum;

    fn instance() -> SemiringInstance<ComplexScalar> {
        semiring::complex()
    }

    fn check_gate(m: &SMatrix<ComplexScalar>) -> Result<(), Violation> {
        quantum::check_unitary(m, semiring::COMPLEX_TOL)
    }

    fn check_state(v: &SVector<ComplexScalar>) -> Result<(), Violation> {
        quantum::check_normalized(v.entries())
    }

    fn builtin_gate(name: &str) -> Option<GateDescriptor> {
        quantum::quantum_gate(name).ok()
    }

    fn basis_state(bits: &[bool]) -> SVector<ComplexScalar> {
        SVector::basis(&Self::instance(), 1 << bits.len(), bits_to_index(bits))
    }

    fn format_scalar(x: &ComplexScalar) -> String {
        crate::scalar::format_complex(x)
    }

    fn unwrap_matrix(m: &AnyMatrix) -> Option<SMatrix<ComplexScalar>> {
        m.to_complex()
    }

    fn wrap_matrix(m: SMatrix<ComplexScalar>) -> AnyMatrix {
        AnyMatrix::Complex(m)
    }

    fn unwrap_vector(v: &AnyVector) -> Option<SVector<ComplexScalar>> {
        v.to_complex()
    }

    fn wrap_vector(v: SVector<ComplexScalar>) -> AnyVector {
        AnyVector::Complex(v)
    }
}

impl VectorModel for FuzzyModel {
    type Scalar = UnitScalar;
    const MODEL: Model = Model::Fuzzy;

    fn instance() -> SemiringInstance<UnitScalar> {
        semiring::fuzz_mv()
    }

    fn check_gate(m: &SMatrix<UnitScalar>) -> Result<(), Violation> {
        fuzzy::check_fuzzy_gate(m)
    }

    fn check_state(v: &SVector<UnitScalar>) -> Result<(), Violation> {
        fuzzy::check_fuzzy_state(v)
    }

    fn builtin_gate(name: &str) -> Option<GateDescriptor> {
        fuzzy::fuzzy_gate(name).ok()
    }

    fn basis_state(bits: &[bool]) -> SVector<UnitScalar> {
        fuzzy::fuzzy_basis_ket(bits).into_vector()
    }

    fn format_scalar(x: &UnitScalar) -> String {
        x.to_string()
    }

    fn unwrap_matrix(m: &AnyMatrix) -> Option<SMatrix<UnitScalar>> {
        m.to_fuzzy()
    }

    fn wrap_matrix(m: SMatrix<UnitScalar>) -> AnyMatrix {
        AnyMatrix::Unit(m)
    }

    fn unwrap_vector(v: &AnyVector) -> Option<SVector<UnitScalar>> {
        v.to_fuzzy()
    }

    fn wrap_vector(v: SVector<UnitScalar>) -> AnyVector {
        AnyVector::Unit(v)
    }
}

/// Generic permutation check by semiring roles: exactly one `one` per row and
/// per column, every other entry `zero`.
pub fn check_permutation_roles<T: Clone + fmt::Display>(m: &SMatrix<T>) -> Result<(), Violation> {
    if !m.is_square() {
        return Err(Violation::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let s = m.instance();
    let n = m.rows();
    for i in 0..n {
        for j in 0..n {
            let x = m.get(i, j);
            if !s.is_zero(x) && !s.is_one(x) {
                return Err(Violation::NonBinaryEntry { row: i, col: j, value: x.to_string() });
            }
        }
    }
    for i in 0..n {
        let count = m.row(i).iter().filter(|x| s.is_one(x)).count();
        if count != 1 {
            return Err(Violation::RowOnes { row: i, count });
        }
    }
    for j in 0..n {
        let count = m.column(j).filter(|x| s.is_one(x)).count();
        if count != 1 {
            return Err(Violation::ColumnOnes { col: j, count });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_names_round_trip() {
        for m in Model::ALL {
            assert_eq!(m.name().parse::<Model>().unwrap(), m);
        }
        assert!("analog".parse::<Model>().is_err());
    }

    #[test]
    fn wires_for_dimension_powers() {
        assert_eq!(wires_for_dimension(1), Some(0));
        assert_eq!(wires_for_dimension(8), Some(3));
        assert_eq!(wires_for_dimension(6), None);
    }
}
