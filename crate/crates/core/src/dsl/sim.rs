use num_complex::Complex64;

use crate::dsl::validate::{ModelState, ResolvedGates, ValidProgram};
use crate::dsl::DslError;
use crate::linalg::{SMatrix, SVector};
use crate::models::classical::{ClassicalState, Permutation};
use crate::models::{quantum, GateDescriptor, Model, Violation};
use crate::semiring::SemiringInstance;
use crate::textio::AnyMatrix;

/// Full operators are materialized only up to this many wires.
pub const MAX_OPERATOR_WIRES: usize = 10;

/// `I(2^(n-hi-1)) ⊗ G ⊗ I(2^lo)` with the gate's own semiring identity.
/// Wire 0 is the least significant bit, so higher wires sit on the left.
fn lift_matrix<T: Clone>(g: &SMatrix<T>, lo: usize, arity: usize, n: usize) -> Result<SMatrix<T>, DslError> {
    let s = g.instance();
    let above = 1usize << (n - lo - arity);
    let below = 1usize << lo;
    let left = SMatrix::identity(s, above).kron(g).map_err(|e| DslError::Internal(e.to_string()))?;
    left.kron(&SMatrix::identity(s, below)).map_err(|e| DslError::Internal(e.to_string()))
}

/// Lifts a local gate acting on adjacent ascending `targets` to an `n`-wire
/// operator.
pub fn lift_gate(g: &GateDescriptor, targets: &[usize], n: usize) -> Result<AnyMatrix, DslError> {
    let bad = |msg: String| DslError::Invalid { line: 0, msg };
    if targets.len() != g.arity {
        return Err(bad(format!("gate `{}` acts on {} wire(s), {} given", g.name, g.arity, targets.len())));
    }
    if targets.windows(2).any(|p| p[1] != p[0] + 1) {
        return Err(bad(format!("wires {targets:?} are not adjacent and ascending")));
    }
    let lo = targets[0];
    if lo + g.arity > n {
        return Err(bad(format!("wires {targets:?} out of range for {n} wire(s)")));
    }
    if n > MAX_OPERATOR_WIRES {
        return Err(DslError::Unsupported(format!("{n}-wire operators are not materialized (limit {MAX_OPERATOR_WIRES})")));
    }
    if g.matrix.rows() != g.dimension() || g.matrix.cols() != g.dimension() {
        return Err(bad(format!("gate `{}` matrix does not match arity {}", g.name, g.arity)));
    }
    Ok(match &g.matrix {
        AnyMatrix::Unit(m) => AnyMatrix::Unit(lift_matrix(m, lo, g.arity, n)?),
        AnyMatrix::Rational(m) => AnyMatrix::Rational(lift_matrix(m, lo, g.arity, n)?),
        AnyMatrix::Complex(m) => AnyMatrix::Complex(lift_matrix(m, lo, g.arity, n)?),
    })
}

/// `(I ⊗ G ⊗ I) v` computed without forming the lifted matrix: each output
/// entry only mixes the `2^arity` entries that differ on the target wires.
pub(crate) fn apply_local<T: Clone>(g: &SMatrix<T>, lo: usize, arity: usize, v: &SVector<T>) -> SVector<T> {
    let s = g.instance();
    let mask = (1usize << arity) - 1;
    let entries = (0..v.len())
        .map(|i| {
            let r = (i >> lo) & mask;
            let rest = i & !(mask << lo);
            s.sum((0..=mask).map(|c| s.mul(g.get(r, c), v.get(rest | (c << lo)))))
        })
        .collect();
    SVector::from_parts(s, entries)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Measurement {
    pub seed: u64,
    pub index: usize,
}

/// Snapshots after every step, in order, plus the optional measurement.
#[derive(Debug, Clone)]
pub struct SimulationTrace {
    pub initial: ModelState,
    pub snapshots: Vec<ModelState>,
    pub measurement: Option<Measurement>,
}

impl SimulationTrace {
    pub fn final_state(&self) -> &ModelState {
        self.snapshots.last().unwrap_or(&self.initial)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SimOptions {
    /// Replaces the seed of a `measure` directive.
    pub seed: Option<u64>,
    /// Measure at the end even without a `measure` directive (quantum only).
    pub force_measure: bool,
}

fn run_dense<T: Clone>(
    init: &SVector<T>,
    gates: &[SMatrix<T>],
    p: &ValidProgram,
    wrap: fn(SVector<T>) -> ModelState,
) -> Result<Vec<ModelState>, DslError> {
    let mut state = init.clone();
    let mut out = Vec::with_capacity(gates.len());
    for (i, (g, step)) in gates.iter().zip(p.steps()).enumerate() {
        state = apply_local(g, step.wires[0], step.wires.len(), &state);
        let snap = wrap(state.clone());
        if let Err(v) = snap.check() {
            return Err(closure_failure(i + 1, step.pos.line, v));
        }
        out.push(snap);
    }
    Ok(out)
}

fn closure_failure(step: usize, line: usize, v: Violation) -> DslError {
    DslError::Internal(format!("state after step {step} (line {line}) left the state space: {v}"))
}

fn run_classical(init: &ClassicalState, perms: &[Permutation], p: &ValidProgram) -> Vec<ModelState> {
    let mut state = init.clone();
    perms
        .iter()
        .zip(p.steps())
        .map(|(perm, step)| {
            state.apply_local(perm, step.wires[0], step.wires.len());
            ModelState::Classical(state.clone())
        })
        .collect()
}

/// Runs the program from `initial`, which must belong to the program's model.
pub fn simulate_from(p: &ValidProgram, initial: ModelState, opts: SimOptions) -> Result<SimulationTrace, DslError> {
    let mismatch = || DslError::ModelMismatch { left: p.model(), right: initial.model() };
    let snapshots = match (&p.gates, &initial) {
        (ResolvedGates::Classical(g), ModelState::Classical(s)) => {
            if s.n_bits() != p.wire_count() {
                return Err(DslError::Invalid { line: 0, msg: "initial register width differs from the circuit".into() });
            }
            run_classical(s, g, p)
        }
        (ResolvedGates::Stochastic(g), ModelState::Stochastic(v)) => run_dense(v, g, p, ModelState::Stochastic)?,
        (ResolvedGates::Quantum(g), ModelState::Quantum(v)) => run_dense(v, g, p, ModelState::Quantum)?,
        (ResolvedGates::Fuzzy(g), ModelState::Fuzzy(v)) => run_dense(v, g, p, ModelState::Fuzzy)?,
        _ => return Err(mismatch()),
    };
    let mut trace = SimulationTrace { initial, snapshots, measurement: None };
    let seed = opts.seed.or(p.program().measure_seed());
    if p.program().measure.is_some() || opts.force_measure {
        if p.model() != Model::Quantum {
            return Err(DslError::Invalid { line: 0, msg: format!("cannot measure a {} circuit", p.model()) });
        }
        let seed = seed.unwrap_or(0);
        let ModelState::Quantum(v) = trace.final_state() else { unreachable!("quantum program") };
        let index = quantum::measure(v.entries(), seed).map_err(|e| DslError::Internal(e.to_string()))?;
        trace.measurement = Some(Measurement { seed, index });
    }
    Ok(trace)
}

/// Applies each step in order to the running state, checking membership of
/// every intermediate state.
pub fn simulate(p: &ValidProgram, opts: SimOptions) -> Result<SimulationTrace, DslError> {
    simulate_from(p, p.initial().clone(), opts)
}

fn compose<T: Clone>(n: usize, s: &SemiringInstance<T>, lifted: Vec<SMatrix<T>>) -> Result<SMatrix<T>, DslError> {
    lifted.into_iter().try_fold(SMatrix::identity(s, 1 << n), |acc, l| {
        l.mat_mul(&acc).map_err(|e| DslError::Internal(e.to_string()))
    })
}

/// `L_k ∘ … ∘ L_1` over the lifted steps; the identity for an empty program.
pub fn composed_operator(p: &ValidProgram) -> Result<AnyMatrix, DslError> {
    let n = p.wire_count();
    if n > MAX_OPERATOR_WIRES {
        return Err(DslError::Unsupported(format!("{n}-wire operators are not materialized (limit {MAX_OPERATOR_WIRES})")));
    }
    Ok(match &p.gates {
        ResolvedGates::Classical(perms) => {
            let b = crate::semiring::boolean();
            let mats: Vec<_> = perms.iter().map(|q| q.to_matrix(&b)).collect();
            AnyMatrix::Unit(compose(n, &b, lift_steps(&mats, p)?)?)
        }
        ResolvedGates::Stochastic(gs) => {
            AnyMatrix::Rational(compose(n, &crate::semiring::probability(), lift_steps(gs, p)?)?)
        }
        ResolvedGates::Quantum(gs) => AnyMatrix::Complex(compose(n, &crate::semiring::complex(), lift_steps(gs, p)?)?),
        ResolvedGates::Fuzzy(gs) => AnyMatrix::Unit(compose(n, &crate::semiring::fuzz_mv(), lift_steps(gs, p)?)?),
    })
}

fn lift_steps<T: Clone>(gates: &[SMatrix<T>], p: &ValidProgram) -> Result<Vec<SMatrix<T>>, DslError> {
    gates
        .iter()
        .zip(p.steps())
        .map(|(g, step)| lift_matrix(g, step.wires[0], step.wires.len(), p.wire_count()))
        .collect()
}

/// Image of every basis index under a classical program.
pub fn classical_images(p: &ValidProgram) -> Result<Permutation, DslError> {
    let ResolvedGates::Classical(perms) = &p.gates else {
        return Err(DslError::ModelMismatch { left: Model::Classical, right: p.model() });
    };
    let n = p.wire_count();
    if n > crate::dsl::validate::MAX_DENSE_WIRES {
        return Err(DslError::Unsupported(format!("{n}-wire permutation tables are not materialized")));
    }
    let images = (0..1u64 << n)
        .map(|x| {
            let init = ClassicalState::from_index(n, x).expect("index in range");
            let out = run_classical(&init, perms, p);
            out.last().and_then(ModelState::as_classical).map_or(x, |s| s.index().expect("fits")) as usize
        })
        .collect();
    Permutation::new(images).map_err(|e| DslError::Internal(e.to_string()))
}

/// True iff both programs compose to the same operator, exactly, or within
/// the complex tolerance for quantum programs.
pub fn equivalence_check(a: &ValidProgram, b: &ValidProgram) -> Result<bool, DslError> {
    if a.model() != b.model() {
        return Err(DslError::ModelMismatch { left: a.model(), right: b.model() });
    }
    if a.wire_count() != b.wire_count() {
        return Err(DslError::Invalid {
            line: 0,
            msg: format!("wire counts differ: {} vs {}", a.wire_count(), b.wire_count()),
        });
    }
    if a.model() == Model::Classical {
        return Ok(classical_images(a)? == classical_images(b)?);
    }
    Ok(match (composed_operator(a)?, composed_operator(b)?) {
        (AnyMatrix::Unit(x), AnyMatrix::Unit(y)) => x == y,
        (AnyMatrix::Rational(x), AnyMatrix::Rational(y)) => x == y,
        (AnyMatrix::Complex(x), AnyMatrix::Complex(y)) => x == y,
        _ => return Err(DslError::Internal("operators over different carriers".into())),
    })
}

/// Quantum amplitudes of the final state, if the trace is quantum.
pub fn final_amplitudes(t: &SimulationTrace) -> Option<&[Complex64]> {
    match t.final_state() {
        ModelState::Quantum(v) => Some(v.entries()),
        _ => None,
    }
}
