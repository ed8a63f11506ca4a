//! Brute-force law checker over finite rational grids.
//!
//! Scalars are integer numerators over the grid's common denominator `d`, so
//! `x ⊕ y = min(x + y, d)` and `x ⊙ y = max(0, x + y - d)` are evaluated on
//! machine integers without going through [`crate::linalg`]. Agreement with
//! the main implementation is itself one of the checks.
//!
//! Enumeration is exhaustive for 2×2 gates and `S(2)`. Size-4 combinations
//! are capped at [`SAMPLE_CAP`], taken in lexicographic order of the index
//! tuple; the mixed-product checks take evenly strided samples instead.

use std::fmt;
use std::time::{Duration, Instant};

use num_integer::gcd;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg::{SMatrix, SVector};
use crate::models::fuzzy;
use crate::models::stochastic;
use crate::scalar::{format_rational, Rational, UnitScalar};
use crate::semiring::{self, SemiringInstance};

pub const SAMPLE_CAP: usize = 100_000;
pub const AGREEMENT_TRIPLES: usize = 10_000;
const KEPT_FAILURES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("unknown grid `{0}` (expected coarse, standard or fine)")]
    UnknownGrid(String),
    #[error("unknown check family `{0}`")]
    UnknownCheck(String),
}

/// Grid values `nums[i] / denom`, ascending, with `0` and `denom` included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    name: &'static str,
    denom: i64,
    nums: Vec<i64>,
}

impl Grid {
    /// `{0, 1/2, 1}`
    pub fn coarse() -> Self {
        Grid { name: "coarse", denom: 2, nums: vec![0, 1, 2] }
    }

    /// `G = {0, 1/4, 1/3, 1/2, 2/3, 3/4, 1}`
    pub fn standard() -> Self {
        Grid { name: "standard", denom: 12, nums: vec![0, 3, 4, 6, 8, 9, 12] }
    }

    /// Multiples of 1/6.
    pub fn fine() -> Self {
        Grid { name: "fine", denom: 6, nums: (0..=6).collect() }
    }

    pub fn by_name(name: &str) -> Result<Self, OracleError> {
        match name {
            "coarse" => Ok(Self::coarse()),
            "standard" => Ok(Self::standard()),
            "fine" => Ok(Self::fine()),
            other => Err(OracleError::UnknownGrid(other.to_string())),
        }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn len(&self) -> usize {
        self.nums.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nums.is_empty()
    }

    pub fn unit_values(&self) -> Vec<UnitScalar> {
        self.nums.iter().map(|&n| UnitScalar::new(n, self.denom).expect("grid value in [0,1]")).collect()
    }

    pub fn rational_values(&self) -> Vec<Rational> {
        self.nums.iter().map(|&n| Rational::new(n.into(), self.denom.into())).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub inputs: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: String,
    pub cases: u64,
    /// First few failures; `failure_count` has the total.
    pub failures: Vec<Failure>,
    pub failure_count: u64,
    pub note: Option<String>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<4} {:<30} cases {:>9}  failures {:>6}  {:>8.3}s",
            if self.passed() { "ok" } else { "FAIL" },
            self.name,
            self.cases,
            self.failure_count,
            self.elapsed.as_secs_f64()
        )?;
        if let Some(note) = &self.note {
            write!(f, "  ({note})")?;
        }
        Ok(())
    }
}

struct Recorder {
    name: String,
    cases: u64,
    failures: Vec<Failure>,
    failure_count: u64,
    notes: Vec<String>,
    start: Instant,
}

impl Recorder {
    fn new(name: impl Into<String>) -> Self {
        Recorder {
            name: name.into(),
            cases: 0,
            failures: Vec::new(),
            failure_count: 0,
            notes: Vec::new(),
            start: Instant::now(),
        }
    }

    fn check(&mut self, ok: bool, failure: impl FnOnce() -> Failure) {
        self.cases += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(failure());
            }
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn finish(self) -> CheckReport {
        CheckReport {
            name: self.name,
            cases: self.cases,
            failures: self.failures,
            failure_count: self.failure_count,
            note: (!self.notes.is_empty()).then(|| self.notes.join("; ")),
            elapsed: self.start.elapsed(),
        }
    }
}

fn fail(inputs: impl Into<String>, expected: impl fmt::Display, actual: impl fmt::Display) -> Failure {
    Failure { inputs: inputs.into(), expected: expected.to_string(), actual: actual.to_string() }
}

// ---------------------------------------------------------------------------
// Generic semiring axioms

/// Every semiring axiom over all grid triples, evaluated through the
/// instance's own operations. Grid points outside the carrier are skipped.
pub fn check_semiring_axioms<T: Clone + fmt::Display>(
    s: &SemiringInstance<T>,
    grid: &[T],
) -> CheckReport {
    let mut rec = Recorder::new(format!("semiring-axioms/{}", s.name()));
    let g: Vec<&T> = grid.iter().filter(|x| s.contains(x)).collect();
    let (zero, one) = (s.zero(), s.one());
    let same = |a: &T, b: &T| s.eq(a, b);
    for &a in &g {
        let inputs = || format!("a={a}");
        let z = s.add(a, &zero);
        rec.check(same(&z, a), || fail(format!("{} a+0", inputs()), a, &z));
        let l = s.mul(&one, a);
        rec.check(same(&l, a), || fail(format!("{} 1·a", inputs()), a, &l));
        let r = s.mul(a, &one);
        rec.check(same(&r, a), || fail(format!("{} a·1", inputs()), a, &r));
        let la = s.mul(&zero, a);
        rec.check(same(&la, &zero), || fail(format!("{} 0·a", inputs()), &zero, &la));
        let ra = s.mul(a, &zero);
        rec.check(same(&ra, &zero), || fail(format!("{} a·0", inputs()), &zero, &ra));
        if s.is_idempotent() {
            let aa = s.add(a, a);
            rec.check(same(&aa, a), || fail(format!("{} a+a", inputs()), a, &aa));
        }
        for &b in &g {
            let ab = s.add(a, b);
            let ba = s.add(b, a);
            rec.check(same(&ab, &ba), || fail(format!("a={a} b={b} a+b=b+a"), &ab, &ba));
            for &c in &g {
                let inputs = || format!("a={a} b={b} c={c}");
                let x = s.add(&s.add(a, b), c);
                let y = s.add(a, &s.add(b, c));
                rec.check(same(&x, &y), || fail(format!("{} (a+b)+c", inputs()), &y, &x));
                let x = s.mul(&s.mul(a, b), c);
                let y = s.mul(a, &s.mul(b, c));
                rec.check(same(&x, &y), || fail(format!("{} (ab)c", inputs()), &y, &x));
                let x = s.mul(a, &s.add(b, c));
                let y = s.add(&s.mul(a, b), &s.mul(a, c));
                rec.check(same(&x, &y), || fail(format!("{} a(b+c)", inputs()), &y, &x));
                let x = s.mul(&s.add(a, b), c);
                let y = s.add(&s.mul(a, c), &s.mul(b, c));
                rec.check(same(&x, &y), || fail(format!("{} (a+b)c", inputs()), &y, &x));
            }
        }
    }
    rec.note(format!("{} grid points", g.len()));
    rec.finish()
}

/// `fuzz-mv` with multiplication replaced by clamped subtraction
/// `max(0, a - b)`. It must fail the axioms.
pub fn corrupted_instance() -> SemiringInstance<UnitScalar> {
    SemiringInstance::custom(
        "corrupted",
        |a, b| a.wedge(*b),
        |a, b| {
            let d = a.ratio() - b.ratio();
            if d > num_rational::Ratio::zero() {
                UnitScalar::from_ratio(d).expect("difference of unit values")
            } else {
                UnitScalar::ZERO
            }
        },
        UnitScalar::ONE,
        UnitScalar::ZERO,
        true,
    )
}

// ---------------------------------------------------------------------------
// Integer MV arithmetic over a common denominator

type Mat<const N: usize> = [[i64; N]; N];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowReduction {
    /// `(Av)_i = ∧_j (a_ij ⊕ v_j)`, the real action.
    Min,
    /// `∨` in place of `∧`; a deliberate mutation.
    Max,
}

#[derive(Clone, Copy)]
struct Mv {
    d: i64,
}

impl Mv {
    fn oplus(self, a: i64, b: i64) -> i64 {
        (a + b).min(self.d)
    }

    fn odot(self, a: i64, b: i64) -> i64 {
        (a + b - self.d).max(0)
    }

    fn compose<const N: usize>(self, a: &Mat<N>, b: &Mat<N>) -> Mat<N> {
        let mut c = [[0; N]; N];
        for i in 0..N {
            for j in 0..N {
                c[i][j] = (0..N).map(|k| self.oplus(a[i][k], b[k][j])).min().expect("N > 0");
            }
        }
        c
    }

    fn act<const N: usize>(self, red: RowReduction, a: &Mat<N>, v: &[i64; N]) -> [i64; N] {
        let mut out = [0; N];
        for i in 0..N {
            let terms = (0..N).map(|j| self.oplus(a[i][j], v[j]));
            out[i] = match red {
                RowReduction::Min => terms.min(),
                RowReduction::Max => terms.max(),
            }
            .expect("N > 0");
        }
        out
    }

    fn identity<const N: usize>(self) -> Mat<N> {
        let mut m = [[self.d; N]; N];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 0;
        }
        m
    }

    fn zero<const N: usize>(self) -> Mat<N> {
        [[self.d; N]; N]
    }

    fn j2(self) -> Mat<2> {
        [[self.d, 0], [0, self.d]]
    }

    fn is_gate<const N: usize>(self, m: &Mat<N>) -> bool {
        m.iter().flatten().all(|&x| x == self.d) || (0..N).all(|j| (0..N).any(|i| m[i][j] == 0))
    }

    fn is_state(self, v: &[i64]) -> bool {
        v.iter().all(|&x| x == self.d) || v.contains(&0)
    }

    fn kron2(self, a: &Mat<2>, b: &Mat<2>) -> Mat<4> {
        let mut r = [[0; 4]; 4];
        for (i1, j1, i2, j2) in quad() {
            r[2 * i1 + i2][2 * j1 + j2] = self.oplus(a[i1][j1], b[i2][j2]);
        }
        r
    }

    fn kron_vec(self, u: &[i64], v: &[i64]) -> Vec<i64> {
        u.iter().flat_map(|&x| v.iter().map(move |&y| self.oplus(x, y))).collect()
    }

    fn fmt(self, x: i64) -> String {
        let g = gcd(x, self.d);
        if x == 0 {
            "0".into()
        } else if g == self.d {
            (x / g).to_string()
        } else {
            format!("{}/{}", x / g, self.d / g)
        }
    }

    fn fmt_vec(self, v: &[i64]) -> String {
        let parts: Vec<String> = v.iter().map(|&x| self.fmt(x)).collect();
        format!("({})", parts.join(","))
    }

    fn fmt_mat<const N: usize>(self, m: &Mat<N>) -> String {
        let rows: Vec<String> = m
            .iter()
            .map(|r| r.iter().map(|&x| self.fmt(x)).collect::<Vec<_>>().join(","))
            .collect();
        format!("[[{}]]", rows.join("],["))
    }
}

fn quad() -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..16).map(|k| (k >> 3 & 1, k >> 2 & 1, k >> 1 & 1, k & 1))
}

fn meet<const N: usize>(a: &Mat<N>, b: &Mat<N>) -> Mat<N> {
    let mut c = *a;
    for i in 0..N {
        for j in 0..N {
            c[i][j] = c[i][j].min(b[i][j]);
        }
    }
    c
}

fn meet_vec<const N: usize>(u: &[i64; N], v: &[i64; N]) -> [i64; N] {
    let mut w = *u;
    for i in 0..N {
        w[i] = w[i].min(v[i]);
    }
    w
}

/// Columns `(a, c)` with `a ∧ c = 0`, lexicographic in grid index.
fn columns2(g: &Grid) -> Vec<[i64; 2]> {
    let mut out = Vec::new();
    for &a in &g.nums {
        for &c in &g.nums {
            if a.min(c) == 0 {
                out.push([a, c]);
            }
        }
    }
    out
}

/// All 2×2 grid gates: column-min-0 matrices, then the all-ones matrix.
fn gates2(g: &Grid) -> Vec<Mat<2>> {
    let cols = columns2(g);
    let mut out = Vec::with_capacity(cols.len() * cols.len() + 1);
    for c0 in &cols {
        for c1 in &cols {
            out.push([[c0[0], c1[0]], [c0[1], c1[1]]]);
        }
    }
    out.push([[g.denom; 2]; 2]);
    out
}

fn states2(g: &Grid) -> Vec<[i64; 2]> {
    let mut out = columns2(g);
    out.push([g.denom; 2]);
    out
}

fn states4(g: &Grid) -> Vec<[i64; 4]> {
    let mut out = Vec::new();
    for &a in &g.nums {
        for &b in &g.nums {
            for &c in &g.nums {
                for &d in &g.nums {
                    if a.min(b).min(c).min(d) == 0 {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out.push([g.denom; 4]);
    out
}

fn gates4(g: &Grid, mv: Mv) -> Vec<Mat<4>> {
    let small = gates2(g);
    let mut out = Vec::with_capacity(small.len() * small.len());
    for a in &small {
        for b in &small {
            out.push(mv.kron2(a, b));
        }
    }
    out
}

/// Number of 2×2 grid gates: `(2k - 1)^2 + 1` for a grid of `k` points.
pub fn gate_count(g: &Grid) -> usize {
    gates2(g).len()
}

/// Index tuples `(i, j)` over `n × m` in lexicographic order, at most `cap`.
fn lex_pairs(n: usize, m: usize, cap: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..m).map(move |j| (i, j))).take(cap)
}

fn lex_triples(n: usize, m: usize, l: usize, cap: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n)
        .flat_map(move |i| (0..m).flat_map(move |j| (0..l).map(move |k| (i, j, k))))
        .take(cap)
}

/// `count` evenly spaced points of `0..total` (all of them if fewer).
fn strided(total: u128, count: u128) -> impl Iterator<Item = u128> {
    let n = total.min(count);
    (0..n).map(move |k| k * total / n)
}

fn digits(mut x: u128, radices: &[usize]) -> Vec<usize> {
    let mut out = vec![0; radices.len()];
    for (slot, &r) in out.iter_mut().zip(radices).rev() {
        *slot = (x % r as u128) as usize;
        x /= r as u128;
    }
    out
}

// ---------------------------------------------------------------------------
// Gate laws

fn gate_laws<const N: usize>(
    rec: &mut Recorder,
    mv: Mv,
    gates: &[Mat<N>],
    cap: Option<usize>,
) {
    let id: Mat<N> = mv.identity();
    let zero: Mat<N> = mv.zero();
    let fm = |m: &Mat<N>| mv.fmt_mat(m);
    rec.check(mv.is_gate(&id) && mv.is_gate(&zero), || fail("identity and zero", "gates", "not gates"));
    for a in gates {
        rec.check(mv.is_gate(a), || fail(fm(a), "gate", "not a gate"));
        let x = mv.compose(&id, a);
        rec.check(x == *a, || fail(format!("I∘{}", fm(a)), fm(a), fm(&x)));
        let x = mv.compose(a, &id);
        rec.check(x == *a, || fail(format!("{}∘I", fm(a)), fm(a), fm(&x)));
        let x = mv.compose(&zero, a);
        rec.check(x == zero, || fail(format!("Z∘{}", fm(a)), fm(&zero), fm(&x)));
        let x = mv.compose(a, &zero);
        rec.check(x == zero, || fail(format!("{}∘Z", fm(a)), fm(&zero), fm(&x)));
        let x = meet(a, &zero);
        rec.check(x == *a, || fail(format!("{}∧Z", fm(a)), fm(a), fm(&x)));
    }
    let n = gates.len();
    let pair_cap = cap.unwrap_or(usize::MAX);
    for (i, j) in lex_pairs(n, n, pair_cap) {
        let (a, b) = (&gates[i], &gates[j]);
        let p = mv.compose(a, b);
        rec.check(mv.is_gate(&p), || fail(format!("{}∘{}", fm(a), fm(b)), "gate", fm(&p)));
        let s = meet(a, b);
        rec.check(mv.is_gate(&s) && s == meet(b, a), || fail(format!("{}∧{}", fm(a), fm(b)), "commutative gate", fm(&s)));
    }
    // Exhaustive triples use a product table; capped triples compute directly.
    let table: Option<Vec<Mat<N>>> = cap.is_none().then(|| {
        let mut t = Vec::with_capacity(n * n);
        for a in gates {
            for b in gates {
                t.push(mv.compose(a, b));
            }
        }
        t
    });
    let prod = |i: usize, j: usize| match &table {
        Some(t) => t[i * n + j],
        None => mv.compose(&gates[i], &gates[j]),
    };
    for (i, j, k) in lex_triples(n, n, n, pair_cap) {
        let (a, b, c) = (&gates[i], &gates[j], &gates[k]);
        let ab = prod(i, j);
        let bc = prod(j, k);
        let ac = prod(i, k);
        let inputs = || format!("A={} B={} C={}", fm(a), fm(b), fm(c));
        let x = mv.compose(&ab, c);
        let y = mv.compose(a, &bc);
        rec.check(x == y, || fail(format!("{} (A∘B)∘C", inputs()), fm(&y), fm(&x)));
        let x = mv.compose(a, &meet(b, c));
        let y = meet(&ab, &ac);
        rec.check(x == y, || fail(format!("{} A∘(B∧C)", inputs()), fm(&y), fm(&x)));
        let x = mv.compose(&meet(a, b), c);
        let y = meet(&ac, &bc);
        rec.check(x == y, || fail(format!("{} (A∧B)∘C", inputs()), fm(&y), fm(&x)));
        let x = meet(&meet(a, b), c);
        let y = meet(a, &meet(b, c));
        rec.check(x == y, || fail(format!("{} (A∧B)∧C", inputs()), fm(&y), fm(&x)));
    }
}

/// Closure, identity/zero, associativity, both distributive laws and the
/// involution `J∘J = I` for fuzzy gates of size 2 (exhaustive) or 4
/// (Kronecker products of size-2 gates, capped combinations).
pub fn check_mv_gate_laws(grid: &Grid, size: usize) -> CheckReport {
    let mv = Mv { d: grid.denom };
    let mut rec = Recorder::new(format!("mv-gate-laws/{size}"));
    match size {
        2 => {
            let gates = gates2(grid);
            let j = mv.j2();
            let id: Mat<2> = mv.identity();
            let jj = mv.compose(&j, &j);
            rec.check(jj == id, || fail("J∘J", mv.fmt_mat(&id), mv.fmt_mat(&jj)));
            rec.check(gates.contains(&j), || fail("J in grid gates", "present", "absent"));
            gate_laws(&mut rec, mv, &gates, None);
            rec.note(format!("{} gates, exhaustive", gates.len()));
        }
        4 => {
            let gates = gates4(grid, mv);
            let id2: Mat<2> = mv.identity();
            let i4 = mv.kron2(&id2, &id2);
            rec.check(i4 == mv.identity::<4>(), || fail("I⊗I", "I(4)", mv.fmt_mat(&i4)));
            let jj = mv.kron2(&mv.j2(), &mv.j2());
            let sq = mv.compose(&jj, &jj);
            rec.check(sq == i4, || fail("(J⊗J)∘(J⊗J)", mv.fmt_mat(&i4), mv.fmt_mat(&sq)));
            gate_laws(&mut rec, mv, &gates, Some(SAMPLE_CAP));
            let n = gates.len() as u128;
            rec.note(format!(
                "{} Kronecker gates; pairs {} of {}, triples {} of {}, lexicographic",
                gates.len(),
                (n * n).min(SAMPLE_CAP as u128),
                n * n,
                (n * n * n).min(SAMPLE_CAP as u128),
                n * n * n
            ));
        }
        other => rec.check(false, || fail(format!("size {other}"), "2 or 4", "unsupported")),
    }
    rec.finish()
}

// ---------------------------------------------------------------------------
// Action laws

fn action_laws<const N: usize>(
    rec: &mut Recorder,
    mv: Mv,
    red: RowReduction,
    gates: &[Mat<N>],
    states: &[[i64; N]],
    cap: usize,
) {
    let fm = |m: &Mat<N>| mv.fmt_mat(m);
    let fv = |v: &[i64]| mv.fmt_vec(v);
    let zero: Mat<N> = mv.zero();
    let id: Mat<N> = mv.identity();
    let ones = [mv.d; N];
    for v in states {
        let z = mv.act(red, &zero, v);
        rec.check(z == ones, || fail(format!("Z{}", fv(v)), fv(&ones), fv(&z)));
        let x = mv.act(red, &id, v);
        rec.check(x == *v, || fail(format!("I{}", fv(v)), fv(v), fv(&x)));
    }
    let fz = semiring::fuzz_mv();
    for (i, k) in lex_pairs(gates.len(), states.len(), cap) {
        let (a, v) = (&gates[i], &states[k]);
        let av = mv.act(red, a, v);
        rec.check(mv.is_state(&av), || fail(format!("{}{}", fm(a), fv(v)), "state", fv(&av)));
        let m = to_smatrix(&fz, mv, a);
        let w = to_svector(&fz, mv, v);
        let lib = m.mat_vec(&w).expect("shapes agree");
        rec.check(same_vec(mv, &lib, &av), || fail(format!("{}{} vs mat_vec", fm(a), fv(v)), fv(&av), &lib));
    }
    for (i, k, l) in lex_triples(gates.len(), states.len(), states.len(), cap) {
        let (a, v, w) = (&gates[i], &states[k], &states[l]);
        let x = mv.act(red, a, &meet_vec(v, w));
        let y = meet_vec(&mv.act(red, a, v), &mv.act(red, a, w));
        rec.check(x == y, || fail(format!("A={} v={} v'={} A(v∧v')", fm(a), fv(v), fv(w)), fv(&y), fv(&x)));
    }
    for (i, j, k) in lex_triples(gates.len(), gates.len(), states.len(), cap) {
        let (a, b, v) = (&gates[i], &gates[j], &states[k]);
        let x = mv.act(red, &mv.compose(a, b), v);
        let y = mv.act(red, a, &mv.act(red, b, v));
        rec.check(x == y, || fail(format!("A={} B={} v={} (A∘B)v", fm(a), fm(b), fv(v)), fv(&y), fv(&x)));
    }
}

/// `A v ∈ S`, `Z v = (1,…,1)`, `I v = v`, `A(v ∧ v') = Av ∧ Av'` and
/// `(A∘B)v = A(Bv)`, plus agreement of the action with `mat_vec`.
pub fn check_action_laws(grid: &Grid, size: usize, reduction: RowReduction) -> CheckReport {
    let mv = Mv { d: grid.denom };
    let suffix = if reduction == RowReduction::Max { "/max-mutant" } else { "" };
    let mut rec = Recorder::new(format!("action-laws/{size}{suffix}"));
    match size {
        2 => {
            let (g, s) = (gates2(grid), states2(grid));
            action_laws(&mut rec, mv, reduction, &g, &s, usize::MAX);
            rec.note(format!("{} gates x {} states, exhaustive", g.len(), s.len()));
        }
        4 => {
            let (g, s) = (gates4(grid, mv), states4(grid));
            action_laws(&mut rec, mv, reduction, &g, &s, SAMPLE_CAP);
            rec.note(format!("{} gates x {} states, each family capped at {SAMPLE_CAP}, lexicographic", g.len(), s.len()));
        }
        other => rec.check(false, || fail(format!("size {other}"), "2 or 4", "unsupported")),
    }
    rec.finish()
}

// ---------------------------------------------------------------------------
// Tensor laws

/// The four two-bit kets in order `|00⟩, |01⟩, |10⟩, |11⟩`, written with the
/// grid denominator as 1.
pub const TWO_BIT_KETS: [[i64; 4]; 4] = [[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]];

/// Tensor closure of `S(2) ⊗ S(2)`, dimension multiplicativity, the basis-ket
/// table, coordinate-permutation symmetry, associativity, the product basis
/// and the mixed-product laws.
pub fn check_tensor_laws(grid: &Grid) -> CheckReport {
    let mv = Mv { d: grid.denom };
    let d = grid.denom;
    let mut rec = Recorder::new("tensor-laws");
    let s2 = states2(grid);
    let fv = |v: &[i64]| mv.fmt_vec(v);

    for u in &s2 {
        for v in &s2 {
            let t = mv.kron_vec(u, v);
            rec.check(mv.is_state(&t), || fail(format!("{}⊗{}", fv(u), fv(v)), "state in S(4)", fv(&t)));
            rec.check(t.len() == 4, || fail(format!("{}⊗{} length", fv(u), fv(v)), 4, t.len()));
            let swapped = mv.kron_vec(v, u);
            let ok = (0..2).all(|i| (0..2).all(|j| t[i * 2 + j] == swapped[j * 2 + i]));
            rec.check(ok, || fail(format!("{}⊗{} vs swap", fv(u), fv(v)), fv(&t), fv(&swapped)));
            for w in &s2 {
                let x = mv.kron_vec(&mv.kron_vec(u, v), w);
                let y = mv.kron_vec(u, &mv.kron_vec(v, w));
                rec.check(x == y, || fail(format!("({}⊗{})⊗{}", fv(u), fv(v), fv(w)), fv(&y), fv(&x)));
                rec.check(x.len() == 8, || fail("length of triple tensor", 8, x.len()));
            }
        }
    }

    let ket = |b: bool| if b { vec![d, 0] } else { vec![0, d] };
    for (idx, expected) in TWO_BIT_KETS.iter().enumerate() {
        let (b1, b2) = (idx & 2 == 2, idx & 1 == 1);
        let t = mv.kron_vec(&ket(b1), &ket(b2));
        let want: Vec<i64> = expected.iter().map(|&x| x * d).collect();
        rec.check(t == want, || fail(format!("|{}{}⟩", u8::from(b1), u8::from(b2)), fv(&want), fv(&t)));
        let lib = fuzzy::fuzzy_basis_ket(&[b1, b2]);
        rec.check(same_vec(mv, lib.vector(), &t), || fail(format!("fuzzy_basis_ket {idx}"), fv(&t), lib.vector()));
    }

    let basis = |n: usize, i: usize| -> Vec<i64> { (0..n).map(|k| if k == i { 0 } else { d }).collect() };
    for (sn, tn) in [(2, 2), (2, 4), (4, 2), (4, 4)] {
        for i in 0..sn {
            for j in 0..tn {
                let t = mv.kron_vec(&basis(sn, i), &basis(tn, j));
                let want = basis(sn * tn, i * tn + j);
                rec.check(t == want, || fail(format!("e{i}(R^{sn})⊗e{j}(R^{tn})"), fv(&want), fv(&t)));
            }
        }
    }

    let s4 = states4(grid);
    for (i, k) in lex_pairs(s2.len(), s4.len(), SAMPLE_CAP) {
        let (u, v) = (&s2[i][..], &s4[k][..]);
        let t = mv.kron_vec(u, v);
        let swapped = mv.kron_vec(v, u);
        rec.check(t.len() == 8 && mv.is_state(&t), || fail(format!("{}⊗{}", fv(u), fv(v)), "state in S(8)", fv(&t)));
        let ok = (0..2).all(|a| (0..4).all(|b| t[a * 4 + b] == swapped[b * 2 + a]));
        rec.check(ok, || fail(format!("{}⊗{} vs swap", fv(u), fv(v)), fv(&t), fv(&swapped)));
    }

    let g = gates2(grid);
    let n = g.len();
    let fm2 = |m: &Mat<2>| mv.fmt_mat(m);
    for q in strided((n as u128).pow(4), SAMPLE_CAP as u128) {
        let ix = digits(q, &[n, n, n, n]);
        let (a, b, c, e) = (&g[ix[0]], &g[ix[1]], &g[ix[2]], &g[ix[3]]);
        let x = mv.compose(&mv.kron2(a, b), &mv.kron2(c, e));
        let y = mv.kron2(&mv.compose(a, c), &mv.compose(b, e));
        rec.check(x == y, || {
            fail(format!("A={} B={} C={} D={} (A⊗B)∘(C⊗D)", fm2(a), fm2(b), fm2(c), fm2(e)), mv.fmt_mat(&y), mv.fmt_mat(&x))
        });
    }
    let m = s2.len();
    for q in strided((n * n * m * m) as u128, SAMPLE_CAP as u128) {
        let ix = digits(q, &[n, n, m, m]);
        let (a, b, u, v) = (&g[ix[0]], &g[ix[1]], &s2[ix[2]], &s2[ix[3]]);
        let uv: [i64; 4] = mv.kron_vec(u, v).try_into().expect("length 4");
        let x = mv.act(RowReduction::Min, &mv.kron2(a, b), &uv);
        let y = mv.kron_vec(&mv.act(RowReduction::Min, a, u), &mv.act(RowReduction::Min, b, v));
        rec.check(x[..] == y[..], || fail(format!("A={} B={} u={} v={} (A⊗B)(u⊗v)", fm2(a), fm2(b), fv(u), fv(v)), fv(&y), fv(&x)));
    }
    rec.note(format!(
        "mixed-product laws on {} strided samples each",
        SAMPLE_CAP.min((n as u128).pow(4) as usize)
    ));
    rec.finish()
}

// ---------------------------------------------------------------------------
// Stochastic matrices

type R2 = [[Rational; 2]; 2];

fn r2_mul(a: &R2, b: &R2) -> R2 {
    let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn r2_is_stochastic(m: &R2) -> bool {
    let in_unit = |x: &Rational| !x.is_negative() && *x <= Rational::one();
    m.iter().flatten().all(in_unit) && (0..2).all(|j| (&m[0][j] + &m[1][j]).is_one())
}

fn r2_fmt(m: &R2) -> String {
    format!(
        "[[{},{}],[{},{}]]",
        format_rational(&m[0][0]),
        format_rational(&m[0][1]),
        format_rational(&m[1][0]),
        format_rational(&m[1][1])
    )
}

/// `[[d, -b], [-c, a]] / (ad - bc)`, or `None` when singular.
pub fn inverse_2x2(m: &R2) -> Option<R2> {
    let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
    if det.is_zero() {
        return None;
    }
    Some([
        [&m[1][1] / &det, -&m[0][1] / &det],
        [-&m[1][0] / &det, &m[0][0] / &det],
    ])
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// The faulty-NOT chain `[[9/10, 2/10], [1/10, 8/10]]`.
pub fn faulty_chain() -> R2 {
    [[rat(9, 10), rat(2, 10)], [rat(1, 10), rat(8, 10)]]
}

/// Product closure and associativity of 2×2 column-stochastic grid matrices,
/// with exhibits of a singular member and an invertible member whose inverse
/// is not stochastic.
pub fn check_stochastic_semigroup(grid: &Grid) -> CheckReport {
    let mut rec = Recorder::new("stochastic-semigroup");
    let vals = grid.rational_values();
    let one = Rational::one();
    let mats: Vec<R2> = vals
        .iter()
        .flat_map(|a| vals.iter().map(move |b| (a.clone(), b.clone())))
        .map(|(a, b)| [[a.clone(), b.clone()], [&one - a, &one - b]])
        .collect();
    let n = mats.len();
    let prod: Vec<R2> = mats.iter().flat_map(|a| mats.iter().map(move |b| r2_mul(a, b))).collect();
    let p = semiring::probability();
    for i in 0..n {
        for j in 0..n {
            let m = &prod[i * n + j];
            rec.check(r2_is_stochastic(m), || fail(format!("{}·{}", r2_fmt(&mats[i]), r2_fmt(&mats[j])), "stochastic", r2_fmt(m)));
            let lib = SMatrix::from_rows(&p, vec![mats[i][0].to_vec(), mats[i][1].to_vec()])
                .and_then(|a| a.mat_mul(&SMatrix::from_rows(&p, vec![mats[j][0].to_vec(), mats[j][1].to_vec()])?))
                .expect("valid shapes");
            let agree = (0..2).all(|r| (0..2).all(|c| *lib.get(r, c) == m[r][c]));
            rec.check(agree, || fail(format!("mat_mul {i},{j}"), r2_fmt(m), format!("{lib:?}")));
            rec.check(stochastic::is_stochastic(&lib).unwrap_or(false), || fail(format!("is_stochastic {i},{j}"), true, false));
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let x = r2_mul(&prod[i * n + j], &mats[k]);
                let y = r2_mul(&mats[i], &prod[j * n + k]);
                rec.check(x == y, || fail(format!("({i}·{j})·{k}"), r2_fmt(&y), r2_fmt(&x)));
            }
        }
    }

    let mut singular = 0usize;
    let mut escaping = 0usize;
    for m in &mats {
        match inverse_2x2(m) {
            None => singular += 1,
            Some(inv) => {
                let id = r2_mul(m, &inv);
                let ok = id[0][0].is_one() && id[1][1].is_one() && id[0][1].is_zero() && id[1][0].is_zero();
                rec.check(ok, || fail(format!("{}·inverse", r2_fmt(m)), "I", r2_fmt(&id)));
                if !r2_is_stochastic(&inv) {
                    escaping += 1;
                }
            }
        }
    }
    rec.check(singular > 0, || fail("singular grid member", "≥ 1", 0));
    rec.check(escaping > 0, || fail("invertible grid member with non-stochastic inverse", "≥ 1", 0));

    let half = rat(1, 2);
    let flat = [[half.clone(), half.clone()], [half.clone(), half]];
    rec.check(r2_is_stochastic(&flat) && inverse_2x2(&flat).is_none(), || {
        fail(r2_fmt(&flat), "stochastic and singular", "invertible")
    });
    let chain = faulty_chain();
    match inverse_2x2(&chain) {
        Some(inv) => {
            let negative = inv.iter().flatten().any(|x| x.is_negative());
            rec.check(r2_is_stochastic(&chain) && negative && !r2_is_stochastic(&inv), || {
                fail(r2_fmt(&chain), "inverse with a negative entry", r2_fmt(&inv))
            });
        }
        None => rec.check(false, || fail(r2_fmt(&chain), "invertible", "singular")),
    }
    rec.note(format!("{n} matrices; {singular} singular, {escaping} with non-stochastic inverse"));
    rec.finish()
}

// ---------------------------------------------------------------------------
// Fuzzy bits

/// First grid state of `S(2)` whose componentwise negation leaves `S(2)`.
pub fn negation_counterexample(grid: &Grid) -> Option<(UnitScalar, UnitScalar)> {
    let mv = Mv { d: grid.denom };
    states2(grid)
        .into_iter()
        .find(|v| !mv.is_state(&[grid.denom - v[0], grid.denom - v[1]]))
        .map(|v| (UnitScalar::new(v[0], grid.denom).unwrap(), UnitScalar::new(v[1], grid.denom).unwrap()))
}

/// `(S(2), ⊙)` is a commutative monoid with identity `(1, 1)`; `¬` is not an
/// operation on `S(2)`, which is exhibited rather than assumed.
pub fn check_fuzzy_bit_semigroup(grid: &Grid) -> CheckReport {
    let mv = Mv { d: grid.denom };
    let mut rec = Recorder::new("fuzzy-bit-semigroup");
    let s = states2(grid);
    let fv = |v: &[i64]| mv.fmt_vec(v);
    let op = |u: &[i64; 2], v: &[i64; 2]| [mv.odot(u[0], v[0]), mv.odot(u[1], v[1])];
    let unit = [grid.denom; 2];
    for u in &s {
        let x = op(u, &unit);
        rec.check(x == *u, || fail(format!("{}⊙(1,1)", fv(u)), fv(u), fv(&x)));
        for v in &s {
            let uv = op(u, v);
            rec.check(mv.is_state(&uv), || fail(format!("{}⊙{}", fv(u), fv(v)), "state", fv(&uv)));
            rec.check(uv == op(v, u), || fail(format!("{}⊙{} commutes", fv(u), fv(v)), fv(&op(v, u)), fv(&uv)));
            for w in &s {
                let x = op(&uv, w);
                let y = op(u, &op(v, w));
                rec.check(x == y, || fail(format!("({}⊙{})⊙{}", fv(u), fv(v), fv(w)), fv(&y), fv(&x)));
            }
        }
    }
    let found = negation_counterexample(grid);
    rec.check(found.is_some(), || fail("¬ on S(2)", "a state whose negation leaves S(2)", "none found"));
    if let Some((a, b)) = found {
        let lib = fuzzy::negate_pair(&fuzzy::fuzzy_bit(a, b).expect("grid state"));
        rec.check(!fuzzy::is_fuzzy_state(&lib), || fail(format!("negate_pair({a},{b})"), "outside S(2)", &lib));
        rec.note(format!("¬({a},{b}) = ({},{}) is not a fuzzy bit", a.neg(), b.neg()));
    }
    rec.finish()
}

// ---------------------------------------------------------------------------
// Agreement with the main implementation

fn to_smatrix<const N: usize>(s: &SemiringInstance<UnitScalar>, mv: Mv, m: &Mat<N>) -> SMatrix<UnitScalar> {
    SMatrix::from_fn(s, N, N, |i, j| UnitScalar::new(m[i][j], mv.d).expect("grid value"))
}

fn to_svector(s: &SemiringInstance<UnitScalar>, mv: Mv, v: &[i64]) -> SVector<UnitScalar> {
    SVector::new(s, v.iter().map(|&x| UnitScalar::new(x, mv.d).expect("grid value")).collect()).expect("non-empty")
}

fn same_scalar(mv: Mv, x: &UnitScalar, n: i64) -> bool {
    x.numer() * mv.d == n * x.denom()
}

fn same_vec(mv: Mv, lib: &SVector<UnitScalar>, v: &[i64]) -> bool {
    lib.len() == v.len() && lib.entries().iter().zip(v).all(|(x, &n)| same_scalar(mv, x, n))
}

fn same_mat<const N: usize>(mv: Mv, lib: &SMatrix<UnitScalar>, m: &Mat<N>) -> bool {
    lib.rows() == N && (0..N).all(|i| (0..N).all(|j| same_scalar(mv, lib.get(i, j), m[i][j])))
}

fn agreement<const N: usize>(rec: &mut Recorder, mv: Mv, gates: &[Mat<N>], states: &[[i64; N]], count: usize) {
    let s = semiring::fuzz_mv();
    let (n, m) = (gates.len(), states.len());
    for q in strided((n * n * m) as u128, count as u128) {
        let ix = digits(q, &[n, n, m]);
        let (a, b, v) = (&gates[ix[0]], &gates[ix[1]], &states[ix[2]]);
        let (la, lb, lv) = (to_smatrix(&s, mv, a), to_smatrix(&s, mv, b), to_svector(&s, mv, v));
        let inputs = || format!("A={} B={} v={}", mv.fmt_mat(a), mv.fmt_mat(b), mv.fmt_vec(v));
        let ab = mv.compose(a, b);
        let lab = la.mat_mul(&lb).expect("square");
        rec.check(same_mat(mv, &lab, &ab), || fail(format!("{} A∘B", inputs()), mv.fmt_mat(&ab), format!("{lab:?}")));
        let av = mv.act(RowReduction::Min, a, v);
        let lav = la.mat_vec(&lv).expect("shapes");
        rec.check(same_vec(mv, &lav, &av), || fail(format!("{} Av", inputs()), mv.fmt_vec(&av), &lav));
        let abv = mv.act(RowReduction::Min, &ab, v);
        let labv = lab.mat_vec(&lv).expect("shapes");
        rec.check(same_vec(mv, &labv, &abv), || fail(format!("{} (A∘B)v", inputs()), mv.fmt_vec(&abv), &labv));
    }
}

/// Oracle products and actions against `mat_mul`/`mat_vec` on `count`
/// strided `(A, B, v)` triples of size 2, and a tenth as many of size 4.
pub fn check_agreement(grid: &Grid, count: usize) -> CheckReport {
    let mv = Mv { d: grid.denom };
    let mut rec = Recorder::new("oracle-agreement");
    agreement(&mut rec, mv, &gates2(grid), &states2(grid), count);
    agreement(&mut rec, mv, &gates4(grid, mv), &states4(grid), count / 10);
    rec.note(format!("{count} size-2 and {} size-4 triples", count / 10));
    rec.finish()
}

// ---------------------------------------------------------------------------

/// Deliberate corruptions used to show the checks can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutant {
    /// Semiring multiplication replaced by clamped subtraction.
    ClampedSubtraction,
    /// Action rows reduced with `∨` instead of `∧`.
    MaxReduction,
}

pub const CHECK_FAMILIES: [&str; 7] =
    ["semiring", "mv-gates", "action", "tensor", "stochastic", "fuzzy-bits", "agreement"];

/// Runs the selected families (all when `only` is empty) in a fixed order.
pub fn run_checks(grid: &Grid, only: &[String], mutant: Option<Mutant>) -> Result<Vec<CheckReport>, OracleError> {
    if let Some(bad) = only.iter().find(|f| !CHECK_FAMILIES.contains(&f.as_str())) {
        return Err(OracleError::UnknownCheck(bad.clone()));
    }
    let wanted = |f: &str| only.is_empty() || only.iter().any(|o| o == f);
    let mut out = Vec::new();
    if wanted("semiring") {
        let units = grid.unit_values();
        if mutant == Some(Mutant::ClampedSubtraction) {
            out.push(check_semiring_axioms(&corrupted_instance(), &units));
        } else {
            for s in [semiring::fuzz_mv(), semiring::max_min(), semiring::viterbi(), semiring::boolean()] {
                out.push(check_semiring_axioms(&s, &units));
            }
        }
    }
    if wanted("mv-gates") {
        out.push(check_mv_gate_laws(grid, 2));
        out.push(check_mv_gate_laws(grid, 4));
    }
    if wanted("action") {
        let red = if mutant == Some(Mutant::MaxReduction) { RowReduction::Max } else { RowReduction::Min };
        out.push(check_action_laws(grid, 2, red));
        out.push(check_action_laws(grid, 4, red));
    }
    if wanted("tensor") {
        out.push(check_tensor_laws(grid));
    }
    if wanted("stochastic") {
        out.push(check_stochastic_semigroup(grid));
    }
    if wanted("fuzzy-bits") {
        out.push(check_fuzzy_bit_semigroup(grid));
    }
    if wanted("agreement") {
        out.push(check_agreement(grid, AGREEMENT_TRIPLES));
    }
    Ok(out)
}

/// Every check on a named grid.
pub fn run_all(grid_name: &str) -> Result<Vec<CheckReport>, OracleError> {
    run_checks(&Grid::by_name(grid_name)?, &[], None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_sizes() {
        assert_eq!(gate_count(&Grid::coarse()), 26);
        assert_eq!(gate_count(&Grid::standard()), 170);
        assert_eq!(states2(&Grid::standard()).len(), 14);
        assert_eq!(states4(&Grid::standard()).len(), 7usize.pow(4) - 6usize.pow(4) + 1);
        assert!(Grid::by_name("huge").is_err());
    }

    #[test]
    fn integer_arithmetic_matches_unit_scalars() {
        let g = Grid::standard();
        let mv = Mv { d: g.denom };
        for &a in &g.nums {
            for &b in &g.nums {
                let (x, y) = (UnitScalar::new(a, 12).unwrap(), UnitScalar::new(b, 12).unwrap());
                assert!(same_scalar(mv, &x.oplus(y), mv.oplus(a, b)));
                assert!(same_scalar(mv, &x.odot(y), mv.odot(a, b)));
            }
        }
    }

    #[test]
    fn formatting() {
        let mv = Mv { d: 12 };
        assert_eq!(mv.fmt_vec(&[0, 6, 12, 4]), "(0,1/2,1,1/3)");
    }

    #[test]
    fn sampling_helpers() {
        assert_eq!(strided(5, 10).collect::<Vec<_>>(), vec![0, 1, 2, 3, 4]);
        assert_eq!(strided(100, 4).collect::<Vec<_>>(), vec![0, 25, 50, 75]);
        assert_eq!(digits(7, &[2, 2, 2]), vec![1, 1, 1]);
        assert_eq!(digits(5, &[3, 4]), vec![1, 1]);
        assert_eq!(lex_pairs(2, 3, 4).collect::<Vec<_>>(), vec![(0, 0), (0, 1), (0, 2), (1, 0)]);
    }

    #[test]
    fn coarse_suite_passes() {
        for r in run_all("coarse").unwrap() {
            assert!(r.passed(), "{r}\n{:?}", r.failures);
        }
    }

    #[test]
    fn mutants_are_caught() {
        let g = Grid::coarse();
        assert!(!check_semiring_axioms(&corrupted_instance(), &g.unit_values()).passed());
        assert!(!check_action_laws(&g, 2, RowReduction::Max).passed());
    }

    #[test]
    fn faulty_chain_inverse() {
        let inv = inverse_2x2(&faulty_chain()).unwrap();
        assert_eq!(inv, [[rat(8, 7), rat(-2, 7)], [rat(-1, 7), rat(9, 7)]]);
    }
}
