//! Probabilistic computation: exact rational probability vectors and
//! column-stochastic matrices.

use num_traits::{One, Signed};

use crate::error::ModelError;
use crate::linalg::{SMatrix, SVector};
use crate::models::classical::classical_permutation;
use crate::models::{GateDescriptor, Model, Violation};
use crate::scalar::{format_rational, Rational};
use crate::semiring;
use crate::textio::AnyMatrix;

fn in_unit(x: &Rational) -> bool {
    !x.is_negative() && *x <= Rational::one()
}

pub fn check_prob_vector(v: &SVector<Rational>) -> Result<(), Violation> {
    if v.instance().name() != "probability" {
        return Err(Violation::WrongInstance { expected: "probability", found: v.instance().name() });
    }
    if let Some((index, x)) = v.entries().iter().enumerate().find(|(_, x)| !in_unit(x)) {
        return Err(Violation::StateEntryOutOfRange { index, value: format_rational(x) });
    }
    let sum: Rational = v.entries().iter().sum();
    if !sum.is_one() {
        return Err(Violation::StateSum { sum: format_rational(&sum) });
    }
    Ok(())
}

/// Square, entries in `[0,1]`, every column summing to exactly 1.
pub fn check_stochastic(m: &SMatrix<Rational>) -> Result<(), Violation> {
    if m.instance().name() != "probability" {
        return Err(Violation::WrongInstance { expected: "probability", found: m.instance().name() });
    }
    if !m.is_square() {
        return Err(Violation::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    for i in 0..m.rows() {
        for (j, x) in m.row(i).iter().enumerate() {
            if !in_unit(x) {
                return Err(Violation::EntryOutOfRange { row: i, col: j, value: format_rational(x) });
            }
        }
    }
    for j in 0..m.cols() {
        let sum: Rational = m.column(j).sum();
        if !sum.is_one() {
            return Err(Violation::ColumnSum { col: j, sum: format_rational(&sum) });
        }
    }
    Ok(())
}

/// Membership in `Stoch(n)`. Non-square input is an error, not `false`.
pub fn is_stochastic(m: &SMatrix<Rational>) -> Result<bool, ModelError> {
    match check_stochastic(m) {
        Ok(()) => Ok(true),
        Err(Violation::NotSquare { rows, cols }) => {
            Err(crate::error::AlgebraError::NotSquare { rows, cols }.into())
        }
        Err(_) => Ok(false),
    }
}

/// A probability vector: entries in `[0,1]` summing to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbState(SVector<Rational>);

impl ProbState {
    pub fn new(v: SVector<Rational>) -> Result<Self, ModelError> {
        check_prob_vector(&v)?;
        Ok(ProbState(v))
    }

    pub fn from_entries(entries: Vec<Rational>) -> Result<Self, ModelError> {
        Self::new(SVector::new(&semiring::probability(), entries)?)
    }

    pub fn vector(&self) -> &SVector<Rational> {
        &self.0
    }

    pub fn into_vector(self) -> SVector<Rational> {
        self.0
    }

    pub fn entries(&self) -> &[Rational] {
        self.0.entries()
    }
}

/// One step of the chain, `p ↦ M p`.
pub fn markov_step(m: &SMatrix<Rational>, p: &ProbState) -> Result<ProbState, ModelError> {
    check_stochastic(m)?;
    let next = m.mat_vec(p.vector())?;
    debug_assert!(check_prob_vector(&next).is_ok());
    Ok(ProbState(next))
}

/// `[[1-p, p], [p, 1-p]]`: a NOT that fires with probability `p`.
pub fn bit_flip(p: &Rational) -> Result<SMatrix<Rational>, ModelError> {
    if !in_unit(p) {
        return Err(ModelError::Invalid(format!("flip probability {} outside [0,1]", format_rational(p))));
    }
    let q = Rational::one() - p;
    Ok(SMatrix::from_fn(&semiring::probability(), 2, 2, |i, j| if i == j { q.clone() } else { p.clone() }))
}

/// Permutation gates lifted to probability matrices: NOT, CNOT, SWAP, TOFFOLI.
pub fn stochastic_gate(name: &str) -> Result<GateDescriptor, ModelError> {
    if !matches!(name, "NOT" | "CNOT" | "SWAP" | "TOFFOLI") {
        return Err(ModelError::UnknownGate(name.to_string()));
    }
    let perm = classical_permutation(name)?;
    let matrix = perm.to_matrix(&semiring::probability());
    Ok(GateDescriptor {
        model: Model::Stochastic,
        name: name.to_string(),
        arity: perm.len().trailing_zeros() as usize,
        matrix: AnyMatrix::Rational(matrix),
    })
}

/// `1 - x`, used by callers building complementary distributions.
pub fn complement(x: &Rational) -> Rational {
    Rational::one() - x
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn mat(rows: Vec<Vec<Rational>>) -> SMatrix<Rational> {
        SMatrix::from_rows(&semiring::probability(), rows).unwrap()
    }

    #[test]
    fn membership() {
        assert!(is_stochastic(&mat(vec![vec![r(9, 10), r(2, 10)], vec![r(1, 10), r(8, 10)]])).unwrap());
        let off = mat(vec![vec![r(1, 2), r(1, 2)], vec![r(1, 3), r(1, 2)]]);
        assert!(!is_stochastic(&off).unwrap());
        assert_eq!(check_stochastic(&off), Err(Violation::ColumnSum { col: 0, sum: "5/6".into() }));
        let rect = SMatrix::from_fn(&semiring::probability(), 2, 1, |_, _| r(1, 2));
        assert!(is_stochastic(&rect).is_err());
    }

    #[test]
    fn prob_vectors() {
        assert!(ProbState::from_entries(vec![r(1, 3), r(2, 3)]).is_ok());
        assert!(matches!(
            ProbState::from_entries(vec![r(1, 3), r(1, 3)]),
            Err(ModelError::Membership(Violation::StateSum { .. }))
        ));
    }

    #[test]
    fn step_example() {
        let m = mat(vec![vec![r(9, 10), r(2, 10)], vec![r(1, 10), r(8, 10)]]);
        let p = ProbState::from_entries(vec![r(1, 1), r(0, 1)]).unwrap();
        let q = markov_step(&m, &p).unwrap();
        assert_eq!(q.entries(), &[r(9, 10), r(1, 10)]);
        let q2 = markov_step(&m, &q).unwrap();
        assert_eq!(q2.entries(), &[r(83, 100), r(17, 100)]);
    }

    #[test]
    fn permutation_gates_are_stochastic() {
        for name in ["NOT", "CNOT", "SWAP", "TOFFOLI"] {
            let g = stochastic_gate(name).unwrap();
            assert!(is_stochastic(&g.matrix.to_probability().unwrap()).unwrap(), "{name}");
        }
        assert!(stochastic_gate("AND").is_err());
    }

    fn prob() -> impl Strategy<Value = Rational> {
        (0i64..=10).prop_map(|n| r(n, 10))
    }

    proptest! {
        #[test]
        fn products_of_flips_stay_stochastic(p in prob(), q in prob(), a in prob()) {
            let m = bit_flip(&p).unwrap().mat_mul(&bit_flip(&q).unwrap()).unwrap();
            prop_assert!(is_stochastic(&m).unwrap());
            let v = ProbState::from_entries(vec![a.clone(), complement(&a)]).unwrap();
            prop_assert!(markov_step(&m, &v).is_ok());
        }
    }
}
