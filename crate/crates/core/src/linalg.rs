//! Dense vectors and matrices over a [`SemiringInstance`].
//!
//! States are column vectors and operators act by left multiplication.
//! Storage is row-major. Equality goes through the instance's equality, which
//! is exact for the rational carriers and tolerance-based for `complex`.

use std::fmt;

use crate::error::AlgebraError;
use crate::semiring::SemiringInstance;

#[derive(Clone)]
pub struct SVector<T> {
    instance: SemiringInstance<T>,
    entries: Vec<T>,
}

#[derive(Clone)]
pub struct SMatrix<T> {
    instance: SemiringInstance<T>,
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

fn check_instances<T: Clone>(
    a: &SemiringInstance<T>,
    b: &SemiringInstance<T>,
) -> Result<(), AlgebraError> {
    if a.same_as(b) {
        Ok(())
    } else {
        Err(AlgebraError::InstanceMismatch { left: a.name(), right: b.name() })
    }
}

fn check_carrier<T: Clone + fmt::Display>(
    instance: &SemiringInstance<T>,
    entries: &[T],
) -> Result<(), AlgebraError> {
    match entries.iter().find(|x| !instance.contains(x)) {
        Some(bad) => Err(AlgebraError::OutsideCarrier {
            instance: instance.name(),
            value: bad.to_string(),
        }),
        None => Ok(()),
    }
}

impl<T: Clone + fmt::Display> SVector<T> {
    pub fn new(instance: &SemiringInstance<T>, entries: Vec<T>) -> Result<Self, AlgebraError> {
        if entries.is_empty() {
            return Err(AlgebraError::EmptyShape);
        }
        check_carrier(instance, &entries)?;
        Ok(SVector { instance: instance.clone(), entries })
    }
}

impl<T: Clone> SVector<T> {
    pub(crate) fn from_parts(instance: &SemiringInstance<T>, entries: Vec<T>) -> Self {
        debug_assert!(!entries.is_empty());
        SVector { instance: instance.clone(), entries }
    }

    /// The `i`-th free basis vector: `one` at `i`, `zero` elsewhere.
    pub fn basis(instance: &SemiringInstance<T>, len: usize, i: usize) -> Self {
        assert!(i < len, "basis index {i} out of range for length {len}");
        let entries = (0..len)
            .map(|k| if k == i { instance.one() } else { instance.zero() })
            .collect();
        SVector { instance: instance.clone(), entries }
    }

    pub fn instance(&self) -> &SemiringInstance<T> {
        &self.instance
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &T {
        &self.entries[i]
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }

    /// Componentwise semiring addition.
    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        check_instances(&self.instance, &other.instance)?;
        if self.len() != other.len() {
            return Err(AlgebraError::DimensionMismatch {
                op: "add",
                left_rows: self.len(),
                left_cols: 1,
                right_rows: other.len(),
                right_cols: 1,
            });
        }
        let s = &self.instance;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| s.add(a, b)).collect();
        Ok(SVector::from_parts(s, entries))
    }

    /// Scalar action `c·v`, multiplying on the left.
    pub fn scale(&self, c: &T) -> Self {
        let s = &self.instance;
        SVector::from_parts(s, self.entries.iter().map(|x| s.mul(c, x)).collect())
    }

    /// Kronecker product: entry `i·v.len() + j` is `mul(u[i], v[j])`.
    pub fn kron(&self, other: &Self) -> Result<Self, AlgebraError> {
        check_instances(&self.instance, &other.instance)?;
        let s = &self.instance;
        let mut entries = Vec::with_capacity(self.len() * other.len());
        for a in &self.entries {
            for b in &other.entries {
                entries.push(s.mul(a, b));
            }
        }
        Ok(SVector::from_parts(s, entries))
    }
}

impl<T: Clone> PartialEq for SVector<T> {
    fn eq(&self, other: &Self) -> bool {
        self.instance.same_as(&other.instance)
            && self.len() == other.len()
            && self.entries.iter().zip(&other.entries).all(|(a, b)| self.instance.eq(a, b))
    }
}

impl<T: fmt::Display> fmt::Display for SVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for SVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] ({})", self, self.instance.name())
    }
}

impl<T: Clone + fmt::Display> SMatrix<T> {
    pub fn from_rows(
        instance: &SemiringInstance<T>,
        rows: Vec<Vec<T>>,
    ) -> Result<Self, AlgebraError> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if n_rows == 0 || n_cols == 0 {
            return Err(AlgebraError::EmptyShape);
        }
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n_cols {
                return Err(AlgebraError::Ragged { row: i, expected: n_cols, found: row.len() });
            }
            data.extend(row);
        }
        check_carrier(instance, &data)?;
        Ok(SMatrix { instance: instance.clone(), rows: n_rows, cols: n_cols, data })
    }
}

impl<T: Clone> SMatrix<T> {
    pub fn from_fn(
        instance: &SemiringInstance<T>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> T,
    ) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        SMatrix { instance: instance.clone(), rows, cols, data }
    }

    /// `one` on the diagonal, `zero` elsewhere.
    pub fn identity(instance: &SemiringInstance<T>, n: usize) -> Self {
        Self::from_fn(instance, n, n, |i, j| if i == j { instance.one() } else { instance.zero() })
    }

    /// The additive identity of the matrix semiring: every entry is `zero`.
    pub fn zero(instance: &SemiringInstance<T>, n: usize) -> Self {
        Self::from_fn(instance, n, n, |_, _| instance.zero())
    }

    pub fn instance(&self) -> &SemiringInstance<T> {
        &self.instance
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> impl Iterator<Item = &T> + '_ {
        (0..self.rows).map(move |i| self.get(i, j))
    }

    pub fn map<U: Clone>(&self, instance: &SemiringInstance<U>, f: impl Fn(&T) -> U) -> SMatrix<U> {
        SMatrix {
            instance: instance.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    fn mismatch(&self, op: &'static str, rows: usize, cols: usize) -> AlgebraError {
        AlgebraError::DimensionMismatch {
            op,
            left_rows: self.rows,
            left_cols: self.cols,
            right_rows: rows,
            right_cols: cols,
        }
    }

    /// Row-by-column product: `(AB)[i,j] = Σ_k mul(A[i,k], B[k,j])`.
    pub fn mat_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        check_instances(&self.instance, &other.instance)?;
        if self.cols != other.rows {
            return Err(self.mismatch("mat_mul", other.rows, other.cols));
        }
        let s = &self.instance;
        Ok(Self::from_fn(s, self.rows, other.cols, |i, j| {
            s.sum((0..self.cols).map(|k| s.mul(self.get(i, k), other.get(k, j))))
        }))
    }

    pub fn mat_vec(&self, v: &SVector<T>) -> Result<SVector<T>, AlgebraError> {
        check_instances(&self.instance, v.instance())?;
        if self.cols != v.len() {
            return Err(self.mismatch("mat_vec", v.len(), 1));
        }
        let s = &self.instance;
        let entries = (0..self.rows)
            .map(|i| s.sum(self.row(i).iter().zip(v.entries()).map(|(a, x)| s.mul(a, x))))
            .collect();
        Ok(SVector::from_parts(s, entries))
    }

    /// Componentwise semiring addition.
    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        check_instances(&self.instance, &other.instance)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(self.mismatch("add", other.rows, other.cols));
        }
        let s = &self.instance;
        Ok(SMatrix {
            instance: s.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| s.add(a, b)).collect(),
        })
    }

    /// Kronecker product: block `(i, j)` of the result is `mul(A[i,j], B)`.
    pub fn kron(&self, other: &Self) -> Result<Self, AlgebraError> {
        check_instances(&self.instance, &other.instance)?;
        let s = &self.instance;
        let (br, bc) = (other.rows, other.cols);
        Ok(Self::from_fn(s, self.rows * br, self.cols * bc, |r, c| {
            s.mul(self.get(r / br, c / bc), other.get(r % br, c % bc))
        }))
    }
}

impl<T: Clone> PartialEq for SMatrix<T> {
    fn eq(&self, other: &Self) -> bool {
        self.instance.same_as(&other.instance)
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| self.instance.eq(a, b))
    }
}

impl<T: fmt::Display> fmt::Debug for SMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SMatrix<{}> [", self.instance.name())?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
        }
        f.write_str("]")
    }
}

/// Grid-bounded linear-independence certificate.
///
/// Enumerates every coefficient tuple over `grid` and reports whether distinct
/// tuples always give distinct combinations `Σ c_i·v_i`. A `true` answer only
/// covers coefficients drawn from the grid.
pub fn linearly_independent<T: Clone>(
    vs: &[SVector<T>],
    grid: &[T],
) -> Result<bool, AlgebraError> {
    let first = vs.first().ok_or(AlgebraError::EmptyVectorList)?;
    if grid.is_empty() {
        return Err(AlgebraError::EmptyGrid);
    }
    for v in &vs[1..] {
        check_instances(first.instance(), v.instance())?;
        if v.len() != first.len() {
            return Err(AlgebraError::DimensionMismatch {
                op: "linearly_independent",
                left_rows: first.len(),
                left_cols: 1,
                right_rows: v.len(),
                right_cols: 1,
            });
        }
    }
    let r = vs.len();
    let mut combos: Vec<SVector<T>> = Vec::new();
    let mut digits = vec![0usize; r];
    loop {
        let mut combo = vs[0].scale(&grid[digits[0]]);
        for (v, &d) in vs.iter().zip(&digits).skip(1) {
            combo = combo.add(&v.scale(&grid[d]))?;
        }
        // Distinct tuples are enumerated once each, so any repeat is a collision.
        if combos.iter().any(|c| c == &combo) {
            return Ok(false);
        }
        combos.push(combo);
        // odometer increment
        let mut k = 0;
        loop {
            if k == r {
                return Ok(true);
            }
            digits[k] += 1;
            if digits[k] < grid.len() {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ComplexScalar, Rational, UnitScalar};
    use crate::semiring::{boolean, complex, fuzz_mv, max_min, probability};
    use proptest::prelude::*;

    fn u(s: &str) -> UnitScalar {
        s.parse().unwrap()
    }

    fn q(s: &str) -> Rational {
        crate::scalar::parse_rational(s).unwrap()
    }

    fn grid() -> Vec<UnitScalar> {
        ["0", "1/4", "1/3", "1/2", "2/3", "3/4", "1"].iter().map(|s| u(s)).collect()
    }

    fn fm(rows: &[&[&str]]) -> SMatrix<UnitScalar> {
        let rows = rows.iter().map(|r| r.iter().map(|s| u(s)).collect()).collect();
        SMatrix::from_rows(&fuzz_mv(), rows).unwrap()
    }

    fn fv(xs: &[&str]) -> SVector<UnitScalar> {
        SVector::new(&fuzz_mv(), xs.iter().map(|s| u(s)).collect()).unwrap()
    }

    /// Brute-force evaluation of one fuzzy action entry, written out longhand.
    fn brute_action(a: &[[UnitScalar; 2]; 2], v: [UnitScalar; 2]) -> [UnitScalar; 2] {
        let e = |i: usize| {
            let t0 = (a[i][0].to_f64() + v[0].to_f64()).min(1.0);
            let t1 = (a[i][1].to_f64() + v[1].to_f64()).min(1.0);
            t0.min(t1)
        };
        let back = |x: f64| {
            // grid values have denominators dividing 12
            UnitScalar::new((x * 12.0).round() as i64, 12).unwrap()
        };
        [back(e(0)), back(e(1))]
    }

    #[test]
    fn identity_and_zero_shapes() {
        let f = fuzz_mv();
        assert_eq!(SMatrix::identity(&f, 2), fm(&[&["0", "1"], &["1", "0"]]));
        assert_eq!(SMatrix::zero(&f, 2), fm(&[&["1", "1"], &["1", "1"]]));
        let b = boolean();
        let id3 = SMatrix::identity(&b, 3);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(*id3.get(i, j), UnitScalar::from_bool(i == j));
            }
        }
    }

    #[test]
    fn mat_mul_identity_and_absorbing() {
        let f = fuzz_mv();
        let b = fm(&[&["1/3", "0"], &["0", "3/4"]]);
        assert_eq!(SMatrix::identity(&f, 2).mat_mul(&b).unwrap(), b);
        assert_eq!(SMatrix::zero(&f, 2).mat_mul(&b).unwrap(), SMatrix::zero(&f, 2));
        let p = probability();
        let m = SMatrix::from_rows(&p, vec![vec![q("9/10"), q("2/10")], vec![q("1/10"), q("8/10")]])
            .unwrap();
        assert_eq!(m.mat_mul(&SMatrix::identity(&p, 2)).unwrap(), m);
    }

    #[test]
    fn mat_vec_examples() {
        let j = fm(&[&["1", "0"], &["0", "1"]]);
        for &x in &grid() {
            for &y in &grid() {
                let v = SVector::new(&fuzz_mv(), vec![x, y]).unwrap();
                let out = j.mat_vec(&v).unwrap();
                assert_eq!(out.entries(), &[y, x]);
                let one_zero = [UnitScalar::ONE, UnitScalar::ZERO];
                assert_eq!(out.entries(), &brute_action(&[one_zero, [one_zero[1], one_zero[0]]], [x, y]));
            }
        }
        let a = fm(&[&["3/10", "1"], &["0", "0"]]);
        assert_eq!(a.mat_vec(&fv(&["0", "1/2"])).unwrap(), fv(&["3/10", "0"]));

        let p = probability();
        let m = SMatrix::from_rows(&p, vec![vec![q("9/10"), q("2/10")], vec![q("1/10"), q("8/10")]])
            .unwrap();
        let v = SVector::new(&p, vec![q("1/2"), q("1/2")]).unwrap();
        assert_eq!(m.mat_vec(&v).unwrap().entries(), &[q("11/20"), q("9/20")]);
    }

    #[test]
    fn mat_vec_matches_brute_force_on_grid() {
        let g = grid();
        for &a in &g {
            for &b in &g {
                for &x in &g {
                    for &y in &g {
                        let m = [[a, b], [b, a]];
                        let sm = SMatrix::from_rows(&fuzz_mv(), vec![vec![a, b], vec![b, a]]).unwrap();
                        let v = SVector::new(&fuzz_mv(), vec![x, y]).unwrap();
                        assert_eq!(sm.mat_vec(&v).unwrap().entries(), &brute_action(&m, [x, y]));
                    }
                }
            }
        }
    }

    #[test]
    fn add_examples() {
        let f = fuzz_mv();
        let a = fm(&[&["1/2", "0"], &["1/4", "1"]]);
        assert_eq!(a.add(&a).unwrap(), a);
        assert_eq!(a.add(&SMatrix::zero(&f, 2)).unwrap(), a);
        assert_eq!(fv(&["1/2", "0"]).add(&fv(&["1/4", "1"])).unwrap(), fv(&["1/4", "0"]));
    }

    #[test]
    fn errors_on_mismatch() {
        let a = fm(&[&["0", "1"], &["1", "0"]]);
        let b = SMatrix::identity(&max_min(), 2);
        assert!(matches!(a.mat_mul(&b), Err(AlgebraError::InstanceMismatch { .. })));
        let c = SMatrix::identity(&fuzz_mv(), 3);
        assert!(matches!(a.mat_mul(&c), Err(AlgebraError::DimensionMismatch { .. })));
        assert!(matches!(a.mat_vec(&fv(&["0", "0", "0"])), Err(AlgebraError::DimensionMismatch { .. })));
        assert!(matches!(a.add(&c), Err(AlgebraError::DimensionMismatch { .. })));
        assert!(matches!(
            SMatrix::from_rows(&fuzz_mv(), vec![vec![u("0"), u("1")], vec![u("0")]]),
            Err(AlgebraError::Ragged { row: 1, .. })
        ));
        assert!(matches!(
            SVector::new(&boolean(), vec![UnitScalar::HALF]),
            Err(AlgebraError::OutsideCarrier { .. })
        ));
    }

    #[test]
    fn kron_examples() {
        let f = fuzz_mv();
        let id = SMatrix::identity(&f, 2);
        let one = SMatrix::identity(&f, 1);
        let a = fm(&[&["1/2", "0"], &["0", "1/3"]]);
        assert_eq!(a.kron(&one).unwrap(), a);
        assert_eq!(id.kron(&id).unwrap(), SMatrix::identity(&f, 4));

        assert_eq!(fv(&["0", "1"]).kron(&fv(&["0", "1"])).unwrap(), fv(&["0", "1", "1", "1"]));
        assert_eq!(fv(&["0", "1"]).kron(&fv(&["1", "0"])).unwrap(), fv(&["1", "0", "1", "1"]));

        let c = complex();
        let z = |re: f64, im: f64| ComplexScalar::new(re, im);
        let x = SMatrix::from_rows(&c, vec![vec![z(0., 0.), z(1., 0.)], vec![z(1., 0.), z(0., 0.)]])
            .unwrap();
        let xx = x.kron(&x).unwrap();
        let ket00 = SVector::basis(&c, 4, 0);
        assert_eq!(xx.mat_vec(&ket00).unwrap(), SVector::basis(&c, 4, 3));

        let (al, be, ga, de) = (z(0.6, 0.0), z(0.0, 0.8), z(0.5, 0.5), z(0.5, -0.5));
        let u1 = SVector::new(&c, vec![al, be]).unwrap();
        let u2 = SVector::new(&c, vec![ga, de]).unwrap();
        let t = u1.kron(&u2).unwrap();
        assert_eq!(t.entries(), &[al * ga, al * de, be * ga, be * de]);
    }

    #[test]
    fn fuzzy_identity_kron_acts_as_identity() {
        let f = fuzz_mv();
        let id4 = SMatrix::identity(&f, 2).kron(&SMatrix::identity(&f, 2)).unwrap();
        let g = grid();
        for &a in &g {
            for &b in &g {
                for &c in &g {
                    let v = SVector::new(&f, vec![UnitScalar::ZERO, a, b, c]).unwrap();
                    assert_eq!(id4.mat_vec(&v).unwrap(), v);
                }
            }
        }
    }

    #[test]
    fn linear_independence_examples() {
        let g = grid();
        let ket0 = fv(&["0", "1"]);
        let ket1 = fv(&["1", "0"]);
        assert!(linearly_independent(&[ket0.clone(), ket1.clone()], &g).unwrap());
        assert!(!linearly_independent(&[ket0.clone(), ket0.clone()], &g).unwrap());
        // c·(0,0) = (c,c) under ⊕, so distinct coefficients never collide.
        assert!(linearly_independent(&[fv(&["0", "0"])], &g).unwrap());
        // The additive identity absorbs every coefficient.
        assert!(!linearly_independent(&[fv(&["1", "1"])], &g).unwrap());
        assert!(matches!(linearly_independent(&[ket0], &[]), Err(AlgebraError::EmptyGrid)));
        assert!(matches!(
            linearly_independent::<UnitScalar>(&[], &g),
            Err(AlgebraError::EmptyVectorList)
        ));
    }

    fn gate_strategy(n: usize) -> impl Strategy<Value = SMatrix<UnitScalar>> {
        prop::collection::vec(0usize..7, n * n).prop_map(move |idx| {
            let g = grid();
            SMatrix::from_fn(&fuzz_mv(), n, n, |i, j| g[idx[i * n + j]])
        })
    }

    proptest! {
        #[test]
        fn mat_mul_is_associative(a in gate_strategy(2), b in gate_strategy(2), c in gate_strategy(2)) {
            let left = a.mat_mul(&b).unwrap().mat_mul(&c).unwrap();
            let right = a.mat_mul(&b.mat_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn mat_mul_distributes_over_add(a in gate_strategy(3), b in gate_strategy(3), c in gate_strategy(3)) {
            let bc = b.add(&c).unwrap();
            prop_assert_eq!(a.mat_mul(&bc).unwrap(), a.mat_mul(&b).unwrap().add(&a.mat_mul(&c).unwrap()).unwrap());
            prop_assert_eq!(bc.mat_mul(&a).unwrap(), b.mat_mul(&a).unwrap().add(&c.mat_mul(&a).unwrap()).unwrap());
        }

        #[test]
        fn kron_mixed_product(a in gate_strategy(2), b in gate_strategy(2), c in gate_strategy(2), d in gate_strategy(2)) {
            let left = a.kron(&b).unwrap().mat_mul(&c.kron(&d).unwrap()).unwrap();
            let right = a.mat_mul(&c).unwrap().kron(&b.mat_mul(&d).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn kron_vec_symmetry_and_associativity(
            x in prop::collection::vec(0usize..7, 1..4),
            y in prop::collection::vec(0usize..7, 1..4),
            z in prop::collection::vec(0usize..7, 1..4),
        ) {
            let g = grid();
            let mk = |ix: &[usize]| fv_from(&ix.iter().map(|&i| g[i]).collect::<Vec<_>>());
            let (u, v, w) = (mk(&x), mk(&y), mk(&z));
            let uv = u.kron(&v).unwrap();
            let vu = v.kron(&u).unwrap();
            prop_assert_eq!(uv.len(), u.len() * v.len());
            for i in 0..u.len() {
                for j in 0..v.len() {
                    prop_assert_eq!(uv.get(i * v.len() + j), vu.get(j * u.len() + i));
                }
            }
            prop_assert_eq!(uv.kron(&w).unwrap(), u.kron(&v.kron(&w).unwrap()).unwrap());
        }

        #[test]
        fn kron_of_basis_vectors_enumerates_product_basis(s in 1usize..5, t in 1usize..5) {
            let f = fuzz_mv();
            for i in 0..s {
                for j in 0..t {
                    let e = SVector::basis(&f, s, i).kron(&SVector::basis(&f, t, j)).unwrap();
                    prop_assert_eq!(e, SVector::basis(&f, s * t, i * t + j));
                }
            }
        }
    }

    fn fv_from(xs: &[UnitScalar]) -> SVector<UnitScalar> {
        SVector::new(&fuzz_mv(), xs.to_vec()).unwrap()
    }
}
