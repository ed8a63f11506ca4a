//! Fuzzy computation over `fuzz-mv`: states with a zero entry (or the
//! all-ones vector), gates whose columns each reach zero (or the all-ones
//! matrix).
//!
//! In this semiring `zero` is the number 1 and `one` is the number 0, so the
//! fuzzy kets are `|0⟩ = (0, 1)` and `|1⟩ = (1, 0)`.

use crate::error::ModelError;
use crate::linalg::{SMatrix, SVector};
use crate::models::{GateDescriptor, Model, Violation};
use crate::scalar::UnitScalar;
use crate::semiring::{self, SemiringInstance};
use crate::textio::AnyMatrix;

fn instance() -> SemiringInstance<UnitScalar> {
    semiring::fuzz_mv()
}

fn require_fuzz_mv(s: &SemiringInstance<UnitScalar>) -> Result<(), Violation> {
    if s.name() == "fuzz-mv" {
        Ok(())
    } else {
        Err(Violation::WrongInstance { expected: "fuzz-mv", found: s.name() })
    }
}

pub fn check_fuzzy_state(v: &SVector<UnitScalar>) -> Result<(), Violation> {
    require_fuzz_mv(v.instance())?;
    let min = v.entries().iter().copied().fold(UnitScalar::ONE, UnitScalar::wedge);
    if min.is_zero() || v.entries().iter().all(UnitScalar::is_one) {
        Ok(())
    } else {
        Err(Violation::StateMin { min: min.to_string() })
    }
}

pub fn is_fuzzy_state(v: &SVector<UnitScalar>) -> bool {
    check_fuzzy_state(v).is_ok()
}

pub fn check_fuzzy_gate(m: &SMatrix<UnitScalar>) -> Result<(), Violation> {
    require_fuzz_mv(m.instance())?;
    if !m.is_square() {
        return Err(Violation::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let all_ones = (0..m.rows()).all(|i| m.row(i).iter().all(UnitScalar::is_one));
    if all_ones {
        return Ok(());
    }
    for j in 0..m.cols() {
        let min = m.column(j).copied().fold(UnitScalar::ONE, UnitScalar::wedge);
        if !min.is_zero() {
            return Err(Violation::ColumnMin { col: j, min: min.to_string() });
        }
    }
    Ok(())
}

/// Membership in `G(n)`. Non-square input is an error, not `false`.
pub fn is_fuzzy_gate(m: &SMatrix<UnitScalar>) -> Result<bool, ModelError> {
    match check_fuzzy_gate(m) {
        Ok(()) => Ok(true),
        Err(Violation::NotSquare { rows, cols }) => {
            Err(crate::error::AlgebraError::NotSquare { rows, cols }.into())
        }
        Err(_) => Ok(false),
    }
}

/// A vector of `S(n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyState(SVector<UnitScalar>);

impl FuzzyState {
    pub fn new(v: SVector<UnitScalar>) -> Result<Self, ModelError> {
        check_fuzzy_state(&v)?;
        Ok(FuzzyState(v))
    }

    pub fn from_entries(entries: Vec<UnitScalar>) -> Result<Self, ModelError> {
        Self::new(SVector::new(&instance(), entries)?)
    }

    pub fn vector(&self) -> &SVector<UnitScalar> {
        &self.0
    }

    pub fn into_vector(self) -> SVector<UnitScalar> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[UnitScalar] {
        self.0.entries()
    }
}

/// `M ∘ v` for a fuzzy gate and state; the result is again a fuzzy state.
pub fn fuzzy_apply(m: &SMatrix<UnitScalar>, v: &FuzzyState) -> Result<FuzzyState, ModelError> {
    check_fuzzy_gate(m)?;
    let out = m.mat_vec(v.vector())?;
    debug_assert!(is_fuzzy_state(&out));
    Ok(FuzzyState(out))
}

/// Componentwise `⊙` of two fuzzy bits. `S(2)` is closed under it.
pub fn fuzzy_pointwise_product(u: &FuzzyState, v: &FuzzyState) -> Result<FuzzyState, ModelError> {
    if u.len() != 2 || v.len() != 2 {
        return Err(ModelError::Invalid(format!(
            "pointwise product is defined on fuzzy bits, got lengths {} and {}",
            u.len(),
            v.len()
        )));
    }
    let entries = u.entries().iter().zip(v.entries()).map(|(a, b)| a.odot(*b)).collect();
    Ok(FuzzyState(SVector::from_parts(&instance(), entries)))
}

/// Componentwise `¬`. This is not an operation on `S(2)`: `(0, 1/2)` maps to
/// `(1, 1/2)`, which has no zero entry. The result is returned as a plain
/// vector for that reason.
pub fn negate_pair(v: &FuzzyState) -> SVector<UnitScalar> {
    SVector::from_parts(&instance(), v.entries().iter().map(|x| x.neg()).collect())
}

/// Kronecker product of fuzzy states, left to right.
pub fn fuzzy_tensor(states: &[FuzzyState]) -> Result<FuzzyState, ModelError> {
    let (first, rest) = states
        .split_first()
        .ok_or_else(|| ModelError::Invalid("tensor of no states".into()))?;
    let mut acc = first.vector().clone();
    for s in rest {
        acc = acc.kron(s.vector())?;
    }
    FuzzyState::new(acc)
}

/// `|b_1 … b_n⟩` with bits listed most-significant first. It has `one` (the
/// number 0) at index `Σ b_i 2^{n-i}` and `zero` (the number 1) elsewhere.
pub fn fuzzy_basis_ket(bits: &[bool]) -> FuzzyState {
    let index = super::bits_to_index(bits);
    FuzzyState(SVector::basis(&instance(), 1 << bits.len(), index))
}

/// The fuzzy bit `(a, b)`, checked.
pub fn fuzzy_bit(a: UnitScalar, b: UnitScalar) -> Result<FuzzyState, ModelError> {
    FuzzyState::from_entries(vec![a, b])
}

pub fn fuzzy_identity(n: usize) -> SMatrix<UnitScalar> {
    SMatrix::identity(&instance(), n)
}

/// `J = [[1,0],[0,1]]` numerically: it exchanges the two fuzzy kets.
pub fn fuzzy_not() -> SMatrix<UnitScalar> {
    let s = instance();
    SMatrix::from_fn(&s, 2, 2, |i, j| if i == j { s.zero() } else { s.one() })
}

/// The all-`zero` matrix: every entry is the number 1.
pub fn fuzzy_zero(n: usize) -> SMatrix<UnitScalar> {
    SMatrix::zero(&instance(), n)
}

pub fn fuzzy_swap() -> SMatrix<UnitScalar> {
    let s = instance();
    let images = [0usize, 2, 1, 3];
    SMatrix::from_fn(&s, 4, 4, |i, j| if images[j] == i { s.one() } else { s.zero() })
}

pub fn fuzzy_gate(name: &str) -> Result<GateDescriptor, ModelError> {
    let (arity, matrix) = match name {
        "FID" => (1, fuzzy_identity(2)),
        "FNOT" => (1, fuzzy_not()),
        "FZERO" => (1, fuzzy_zero(2)),
        "SWAP" => (2, fuzzy_swap()),
        other => return Err(ModelError::UnknownGate(other.to_string())),
    };
    Ok(GateDescriptor { model: Model::Fuzzy, name: name.to_string(), arity, matrix: AnyMatrix::Unit(matrix) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn u(n: i64, d: i64) -> UnitScalar {
        UnitScalar::new(n, d).unwrap()
    }

    fn mat(rows: &[[(i64, i64); 2]; 2]) -> SMatrix<UnitScalar> {
        SMatrix::from_rows(
            &instance(),
            rows.iter().map(|r| r.iter().map(|&(n, d)| u(n, d)).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn state_membership() {
        let v = |e: Vec<UnitScalar>| SVector::new(&instance(), e).unwrap();
        assert!(is_fuzzy_state(&v(vec![u(0, 1), u(1, 2)])));
        assert!(is_fuzzy_state(&v(vec![u(1, 1), u(1, 1)])));
        assert!(!is_fuzzy_state(&v(vec![u(1, 2), u(1, 2)])));
        let mm = SVector::new(&semiring::max_min(), vec![u(0, 1), u(1, 1)]).unwrap();
        assert!(matches!(check_fuzzy_state(&mm), Err(Violation::WrongInstance { .. })));
    }

    #[test]
    fn gate_membership() {
        assert!(is_fuzzy_gate(&mat(&[[(0, 1), (1, 1)], [(1, 2), (0, 1)]])).unwrap());
        assert!(is_fuzzy_gate(&fuzzy_zero(2)).unwrap());
        assert!(is_fuzzy_gate(&fuzzy_not()).unwrap());
        let bad = mat(&[[(1, 2), (0, 1)], [(1, 3), (1, 1)]]);
        assert!(!is_fuzzy_gate(&bad).unwrap());
        assert_eq!(check_fuzzy_gate(&bad), Err(Violation::ColumnMin { col: 0, min: "1/3".into() }));
        let rect = SMatrix::from_fn(&instance(), 2, 3, |_, _| UnitScalar::ZERO);
        assert!(is_fuzzy_gate(&rect).is_err());
    }

    #[test]
    fn basis_kets() {
        assert_eq!(fuzzy_basis_ket(&[false]).entries(), &[u(0, 1), u(1, 1)]);
        assert_eq!(fuzzy_basis_ket(&[true]).entries(), &[u(1, 1), u(0, 1)]);
        let k = fuzzy_basis_ket(&[true, false, true]);
        for (i, x) in k.entries().iter().enumerate() {
            assert_eq!(x.is_zero(), i == 5);
        }
    }

    #[test]
    fn not_exchanges_kets() {
        let zero = fuzzy_basis_ket(&[false]);
        let one = fuzzy_basis_ket(&[true]);
        assert_eq!(fuzzy_apply(&fuzzy_not(), &zero).unwrap(), one);
        assert_eq!(fuzzy_apply(&fuzzy_not(), &one).unwrap(), zero);
    }

    #[test]
    fn negation_leaves_the_state_space() {
        let v = fuzzy_bit(u(0, 1), u(1, 2)).unwrap();
        let n = negate_pair(&v);
        assert_eq!(n.entries(), &[u(1, 1), u(1, 2)]);
        assert!(!is_fuzzy_state(&n));
    }

    #[test]
    fn tensor_of_kets() {
        let t = fuzzy_tensor(&[fuzzy_basis_ket(&[true]), fuzzy_basis_ket(&[false])]).unwrap();
        assert_eq!(t, fuzzy_basis_ket(&[true, false]));
        assert!(fuzzy_tensor(&[]).is_err());
    }

    fn unit() -> impl Strategy<Value = UnitScalar> {
        (0i64..=12).prop_map(|n| u(n, 12))
    }

    fn fuzzy_bit_strategy() -> impl Strategy<Value = FuzzyState> {
        prop_oneof![
            unit().prop_map(|x| fuzzy_bit(UnitScalar::ZERO, x).unwrap()),
            unit().prop_map(|x| fuzzy_bit(x, UnitScalar::ZERO).unwrap()),
            Just(fuzzy_bit(UnitScalar::ONE, UnitScalar::ONE).unwrap()),
        ]
    }

    proptest! {
        #[test]
        fn pointwise_product_stays_in_s2(a in fuzzy_bit_strategy(), b in fuzzy_bit_strategy()) {
            let p = fuzzy_pointwise_product(&a, &b).unwrap();
            prop_assert!(is_fuzzy_state(p.vector()));
        }

        #[test]
        fn gates_preserve_states(a in unit(), b in unit(), swap in any::<bool>(), v in fuzzy_bit_strategy()) {
            let (c0, c1) = if swap { ([a, UnitScalar::ZERO], [UnitScalar::ZERO, b]) } else { ([UnitScalar::ZERO, a], [b, UnitScalar::ZERO]) };
            let m = SMatrix::from_rows(&instance(), vec![vec![c0[0], c1[0]], vec![c0[1], c1[1]]]).unwrap();
            prop_assert!(is_fuzzy_gate(&m).unwrap());
            let out = fuzzy_apply(&m, &v).unwrap();
            prop_assert!(is_fuzzy_state(out.vector()));
        }
    }
}
