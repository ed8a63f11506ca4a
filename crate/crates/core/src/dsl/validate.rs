use std::collections::HashMap;
use std::fmt;
use std::path::{Path, PathBuf};

use num_complex::Complex64;

use crate::dsl::ast::{CircuitProgram, GateRef, InitSpec, InitValues, Pos, Step};
use crate::dsl::DslError;
use crate::linalg::{SMatrix, SVector};
use crate::models::classical::{classical_gate_descriptor, ClassicalState, Permutation};
use crate::models::{
    fuzzy, quantum, stochastic, wires_for_dimension, FuzzyModel, GateDescriptor, Model,
    QuantumModel, StochasticModel, VectorModel, Violation,
};
use crate::scalar::{format_complex, format_rational, Rational, UnitScalar};
use crate::semiring;
use crate::textio::{parse_text, AnyMatrix, Parsed};

/// Dense state vectors are capped at `2^MAX_DENSE_WIRES` entries.
pub const MAX_DENSE_WIRES: usize = 20;
/// Classical registers are simulated bit by bit and may be wider.
pub const MAX_CLASSICAL_WIRES: usize = 4096;

/// User-registered named gates, looked up before the built-in names.
#[derive(Debug, Clone, Default)]
pub struct GateLibrary {
    gates: HashMap<(Model, String), GateDescriptor>,
}

impl GateLibrary {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers a gate after checking its dimension and membership.
    pub fn register(&mut self, desc: GateDescriptor) -> Result<(), DslError> {
        let what = format!("gate `{}`", desc.name);
        let rows = desc.matrix.rows();
        if rows != desc.dimension() || desc.matrix.cols() != rows {
            return Err(DslError::Invalid {
                line: 0,
                msg: format!("{what}: {rows}x{} matrix for arity {}", desc.matrix.cols(), desc.arity),
            });
        }
        check_descriptor(desc.model, &desc.matrix).map_err(|e| match e {
            Ok(violation) => DslError::Membership { line: 0, what: what.clone(), violation },
            Err(msg) => DslError::Invalid { line: 0, msg: format!("{what}: {msg}") },
        })?;
        self.gates.insert((desc.model, desc.name.clone()), desc);
        Ok(())
    }

    pub fn get(&self, model: Model, name: &str) -> Option<&GateDescriptor> {
        self.gates.get(&(model, name.to_string()))
    }
}

fn builtin(model: Model, name: &str) -> Option<GateDescriptor> {
    match model {
        Model::Classical => classical_gate_descriptor(name).ok(),
        Model::Stochastic => StochasticModel::builtin_gate(name),
        Model::Quantum => QuantumModel::builtin_gate(name),
        Model::Fuzzy => FuzzyModel::builtin_gate(name),
    }
}

/// Membership of a gate matrix in its model. `Err(Err(_))` means the matrix
/// is over the wrong instance altogether.
fn check_descriptor(model: Model, m: &AnyMatrix) -> Result<(), Result<Violation, String>> {
    let wrong = || Err(format!("{} matrix cannot be used in a {model} circuit", m.instance_name()));
    let res = match model {
        Model::Classical => match m.to_boolean() {
            Some(b) => Permutation::from_matrix(&b).map(|_| ()),
            None => return Err(wrong()),
        },
        Model::Stochastic => match m.to_probability() {
            Some(p) => stochastic::check_stochastic(&p),
            None => return Err(wrong()),
        },
        Model::Quantum => match m.to_complex() {
            Some(c) => quantum::check_unitary(&c, semiring::COMPLEX_TOL),
            None => return Err(wrong()),
        },
        Model::Fuzzy => match m.to_fuzzy() {
            Some(f) => fuzzy::check_fuzzy_gate(&f),
            None => return Err(wrong()),
        },
    };
    res.map_err(Ok)
}

/// A program state in one of the four models.
#[derive(Debug, Clone, PartialEq)]
pub enum ModelState {
    Classical(ClassicalState),
    Stochastic(SVector<Rational>),
    Quantum(SVector<Complex64>),
    Fuzzy(SVector<UnitScalar>),
}

impl ModelState {
    pub fn model(&self) -> Model {
        match self {
            ModelState::Classical(_) => Model::Classical,
            ModelState::Stochastic(_) => Model::Stochastic,
            ModelState::Quantum(_) => Model::Quantum,
            ModelState::Fuzzy(_) => Model::Fuzzy,
        }
    }

    pub fn check(&self) -> Result<(), Violation> {
        match self {
            ModelState::Classical(_) => Ok(()),
            ModelState::Stochastic(v) => stochastic::check_prob_vector(v),
            ModelState::Quantum(v) => quantum::check_normalized(v.entries()),
            ModelState::Fuzzy(v) => fuzzy::check_fuzzy_state(v),
        }
    }

    /// Space-separated literals; exact for all models but quantum.
    pub fn render(&self) -> String {
        let join = |parts: Vec<String>| parts.join(" ");
        match self {
            ModelState::Classical(s) => s.to_string(),
            ModelState::Stochastic(v) => join(v.entries().iter().map(format_rational).collect()),
            ModelState::Quantum(v) => join(v.entries().iter().map(format_complex).collect()),
            ModelState::Fuzzy(v) => join(v.entries().iter().map(ToString::to_string).collect()),
        }
    }

    pub fn as_fuzzy(&self) -> Option<&SVector<UnitScalar>> {
        match self {
            ModelState::Fuzzy(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_classical(&self) -> Option<&ClassicalState> {
        match self {
            ModelState::Classical(s) => Some(s),
            _ => None,
        }
    }
}

impl fmt::Display for ModelState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Gates resolved to the model's own representation.
#[derive(Debug, Clone)]
pub(crate) enum ResolvedGates {
    Classical(Vec<Permutation>),
    Stochastic(Vec<SMatrix<Rational>>),
    Quantum(Vec<SMatrix<Complex64>>),
    Fuzzy(Vec<SMatrix<UnitScalar>>),
}

/// A program whose gates, wiring and initial state have all been checked.
#[derive(Debug, Clone)]
pub struct ValidProgram {
    program: CircuitProgram,
    descriptors: Vec<GateDescriptor>,
    pub(crate) gates: ResolvedGates,
    initial: ModelState,
}

impl ValidProgram {
    pub fn program(&self) -> &CircuitProgram {
        &self.program
    }

    pub fn model(&self) -> Model {
        self.program.model
    }

    pub fn wire_count(&self) -> usize {
        self.program.wire_count
    }

    pub fn steps(&self) -> &[Step] {
        &self.program.steps
    }

    pub fn descriptors(&self) -> &[GateDescriptor] {
        &self.descriptors
    }

    pub fn initial(&self) -> &ModelState {
        &self.initial
    }
}

/// Where `@file` gate references are resolved from.
#[derive(Debug, Clone, Default)]
pub struct ValidateOptions<'a> {
    pub library: Option<&'a GateLibrary>,
    pub base_dir: Option<PathBuf>,
}

fn invalid(pos: Pos, msg: impl Into<String>) -> DslError {
    DslError::Invalid { line: pos.line, msg: msg.into() }
}

fn load_gate_file(model: Model, path: &str, base: Option<&Path>, pos: Pos) -> Result<GateDescriptor, DslError> {
    let full = base.map_or_else(|| PathBuf::from(path), |b| b.join(path));
    let file_err = |msg: String| DslError::GateFile { line: pos.line, path: path.to_string(), msg };
    let text = std::fs::read_to_string(&full).map_err(|e| file_err(e.to_string()))?;
    let matrix = match parse_text(&text).map_err(|e| file_err(e.to_string()))? {
        Parsed::Matrix(m) => m,
        Parsed::Vector(_) => return Err(file_err("expected a matrix, found a vector".into())),
    };
    let arity = match wires_for_dimension(matrix.rows()) {
        Some(a) if a > 0 => a,
        _ => return Err(invalid(pos, format!("gate file `{path}` has {} rows, not a power of two", matrix.rows()))),
    };
    Ok(GateDescriptor { model, name: format!("@{path}"), arity, matrix })
}

fn resolve(step: &Step, model: Model, opts: &ValidateOptions<'_>) -> Result<GateDescriptor, DslError> {
    match &step.gate {
        GateRef::File(path) => load_gate_file(model, path, opts.base_dir.as_deref(), step.pos),
        GateRef::Named(name) => {
            if let Some(g) = opts.library.and_then(|l| l.get(model, name)) {
                return Ok(g.clone());
            }
            if let Some(g) = builtin(model, name) {
                return Ok(g);
            }
            let elsewhere: Vec<&str> =
                Model::ALL.iter().filter(|&&m| builtin(m, name).is_some()).map(|m| m.name()).collect();
            Err(invalid(
                step.pos,
                if elsewhere.is_empty() {
                    format!("unknown gate `{name}`")
                } else {
                    format!("gate `{name}` belongs to the {} model, not {model}", elsewhere.join("/"))
                },
            ))
        }
    }
}

fn check_wiring(step: &Step, arity: usize, wire_count: usize) -> Result<(), DslError> {
    if step.wires.len() != arity {
        return Err(invalid(
            step.pos,
            format!("gate `{}` acts on {arity} wire(s), {} given", step.gate, step.wires.len()),
        ));
    }
    if let Some(&w) = step.wires.iter().find(|&&w| w >= wire_count) {
        return Err(invalid(step.pos, format!("wire {w} out of range (circuit has {wire_count})")));
    }
    if step.wires.windows(2).any(|p| p[1] != p[0] + 1) {
        return Err(invalid(step.pos, format!("wires {:?} are not adjacent and ascending", step.wires)));
    }
    Ok(())
}

fn dense_initial<M: VectorModel>(
    p: &CircuitProgram,
    from_values: impl Fn(&InitValues) -> Option<Vec<M::Scalar>>,
) -> Result<SVector<M::Scalar>, DslError> {
    let dim = 1usize << p.wire_count;
    let v = match &p.init {
        InitSpec::Ket(bits) => M::basis_state(bits),
        InitSpec::Vec(values) => {
            if values.len() != dim {
                return Err(invalid(p.init_pos, format!("initial vector has {} entries, expected {dim}", values.len())));
            }
            let entries = from_values(values).ok_or_else(|| invalid(p.init_pos, "initial vector scalar type mismatch"))?;
            SVector::new(&M::instance(), entries).map_err(|e| invalid(p.init_pos, e.to_string()))?
        }
    };
    M::check_state(&v).map_err(|violation| DslError::Membership {
        line: p.init_pos.line,
        what: "initial state".into(),
        violation,
    })?;
    Ok(v)
}

fn dense_gates<M: VectorModel>(
    steps: &[Step],
    descs: &[GateDescriptor],
) -> Result<Vec<SMatrix<M::Scalar>>, DslError> {
    steps
        .iter()
        .zip(descs)
        .map(|(step, d)| {
            let m = M::unwrap_matrix(&d.matrix).ok_or_else(|| {
                invalid(step.pos, format!("{} matrix cannot be used in a {} circuit", d.matrix.instance_name(), M::MODEL))
            })?;
            M::check_gate(&m).map_err(|violation| DslError::Membership {
                line: step.pos.line,
                what: format!("gate `{}`", step.gate),
                violation,
            })?;
            Ok(m)
        })
        .collect()
}

fn classical_initial(p: &CircuitProgram) -> Result<ClassicalState, DslError> {
    match &p.init {
        InitSpec::Ket(bits) => Ok(ClassicalState::from_ket(bits)),
        InitSpec::Vec(InitValues::Unit(v)) => {
            if p.wire_count > MAX_DENSE_WIRES || v.len() != 1 << p.wire_count {
                return Err(invalid(p.init_pos, format!("initial vector has {} entries for {} wires", v.len(), p.wire_count)));
            }
            if let Some((index, x)) = v.iter().enumerate().find(|(_, x)| !x.is_zero() && !x.is_one()) {
                return Err(DslError::Membership {
                    line: p.init_pos.line,
                    what: "initial state".into(),
                    violation: Violation::StateEntryOutOfRange { index, value: x.to_string() },
                });
            }
            let ones: Vec<usize> = v.iter().enumerate().filter(|(_, x)| x.is_one()).map(|(i, _)| i).collect();
            match ones[..] {
                [i] => ClassicalState::from_index(p.wire_count, i as u64).map_err(|e| invalid(p.init_pos, e.to_string())),
                _ => Err(DslError::Membership {
                    line: p.init_pos.line,
                    what: "initial state".into(),
                    violation: Violation::NotBasisState { ones: ones.len() },
                }),
            }
        }
        InitSpec::Vec(_) => Err(invalid(p.init_pos, "initial vector scalar type mismatch")),
    }
}

/// Resolves every gate, checks wiring and membership of gates and initial
/// state.
pub fn validate(program: CircuitProgram, opts: &ValidateOptions<'_>) -> Result<ValidProgram, DslError> {
    let p = &program;
    let limit = if p.model == Model::Classical { MAX_CLASSICAL_WIRES } else { MAX_DENSE_WIRES };
    if p.wire_count > limit {
        return Err(DslError::Unsupported(format!("{} wires exceeds the {} limit of {limit}", p.wire_count, p.model)));
    }
    if let InitSpec::Ket(bits) = &p.init {
        if bits.len() != p.wire_count {
            return Err(invalid(p.init_pos, format!("ket has {} bits, circuit has {} wires", bits.len(), p.wire_count)));
        }
    }
    if let Some((_, pos)) = p.measure {
        if p.model != Model::Quantum {
            return Err(invalid(pos, format!("`measure` is only available in quantum circuits, not {}", p.model)));
        }
    }
    let mut descriptors = Vec::with_capacity(p.steps.len());
    for step in &p.steps {
        let d = resolve(step, p.model, opts)?;
        check_wiring(step, d.arity, p.wire_count)?;
        descriptors.push(d);
    }
    let (gates, initial) = match p.model {
        Model::Classical => {
            let perms = p
                .steps
                .iter()
                .zip(&descriptors)
                .map(|(step, d)| {
                    let b = d.matrix.to_boolean().ok_or_else(|| {
                        invalid(step.pos, format!("{} matrix cannot be used in a classical circuit", d.matrix.instance_name()))
                    })?;
                    Permutation::from_matrix(&b).map_err(|violation| DslError::Membership {
                        line: step.pos.line,
                        what: format!("gate `{}`", step.gate),
                        violation,
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            (ResolvedGates::Classical(perms), ModelState::Classical(classical_initial(p)?))
        }
        Model::Stochastic => {
            let gates = dense_gates::<StochasticModel>(&p.steps, &descriptors)?;
            let init = dense_initial::<StochasticModel>(p, |v| match v {
                InitValues::Rational(r) => Some(r.clone()),
                _ => None,
            })?;
            (ResolvedGates::Stochastic(gates), ModelState::Stochastic(init))
        }
        Model::Quantum => {
            let gates = dense_gates::<QuantumModel>(&p.steps, &descriptors)?;
            let init = dense_initial::<QuantumModel>(p, |v| match v {
                InitValues::Complex(c) => Some(c.clone()),
                _ => None,
            })?;
            (ResolvedGates::Quantum(gates), ModelState::Quantum(init))
        }
        Model::Fuzzy => {
            let gates = dense_gates::<FuzzyModel>(&p.steps, &descriptors)?;
            let init = dense_initial::<FuzzyModel>(p, |v| match v {
                InitValues::Unit(u) => Some(u.clone()),
                _ => None,
            })?;
            (ResolvedGates::Fuzzy(gates), ModelState::Fuzzy(init))
        }
    };
    Ok(ValidProgram { program, descriptors, gates, initial })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_circuit;

    fn check(src: &str) -> Result<ValidProgram, DslError> {
        validate(parse_circuit(src).unwrap(), &ValidateOptions::default())
    }

    #[test]
    fn fuzzy_gate_file_names_failing_column() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("g.mat"), "instance fuzz-mv 2 2\n1/2 0\n1/4 1\n").unwrap();
        let p = parse_circuit("model fuzzy\nwires 1\ninit ket 0\ngate @g.mat 0\n").unwrap();
        let opts = ValidateOptions { library: None, base_dir: Some(dir.path().to_path_buf()) };
        match validate(p, &opts) {
            Err(DslError::Membership { line: 4, violation, .. }) => {
                assert_eq!(violation, Violation::ColumnMin { col: 0, min: "1/4".into() });
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn quantum_initial_vector() {
        assert!(check("model quantum\nwires 1\ninit vec 0.6 0.8\n").is_ok());
        assert!(matches!(
            check("model quantum\nwires 1\ninit vec 0.6 0.6\n"),
            Err(DslError::Membership { violation: Violation::Norm { .. }, .. })
        ));
    }

    #[test]
    fn stochastic_initial_sum() {
        match check("model stochastic\nwires 1\ninit vec 1/2 1/3\n") {
            Err(DslError::Membership { violation: Violation::StateSum { sum }, .. }) => assert_eq!(sum, "5/6"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn model_gate_mismatch() {
        match check("model fuzzy\nwires 1\ninit ket 0\ngate H 0\n") {
            Err(DslError::Invalid { line: 4, msg }) => assert!(msg.contains("quantum"), "{msg}"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(check("model fuzzy\nwires 1\ninit ket 0\ngate NOPE 0\n"), Err(DslError::Invalid { .. })));
    }

    #[test]
    fn wiring_errors() {
        let bad = [
            "model quantum\nwires 2\ninit ket 00\ngate X 2\n",
            "model quantum\nwires 3\ninit ket 000\ngate CNOT 0 2\n",
            "model quantum\nwires 2\ninit ket 00\ngate CNOT 1 0\n",
            "model quantum\nwires 2\ninit ket 00\ngate CNOT 0\n",
            "model quantum\nwires 2\ninit ket 0\n",
            "model fuzzy\nwires 1\ninit ket 0\nmeasure seed 3\n",
        ];
        for src in bad {
            assert!(matches!(check(src), Err(DslError::Invalid { .. })), "{src}");
        }
    }

    #[test]
    fn classical_vector_init_must_be_a_basis_state() {
        let v = check("model classical\nwires 2\ninit vec 0 0 1 0\n").unwrap();
        assert_eq!(v.initial().as_classical().unwrap().index(), Some(2));
        assert!(matches!(
            check("model classical\nwires 1\ninit vec 1 1\n"),
            Err(DslError::Membership { violation: Violation::NotBasisState { ones: 2 }, .. })
        ));
    }

    #[test]
    fn library_gates_are_checked_on_registration() {
        let mut lib = GateLibrary::new();
        let s = semiring::fuzz_mv();
        let bad = SMatrix::from_fn(&s, 2, 2, |_, _| UnitScalar::HALF);
        let desc = |m| GateDescriptor { model: Model::Fuzzy, name: "G".into(), arity: 1, matrix: AnyMatrix::Unit(m) };
        assert!(lib.register(desc(bad)).is_err());
        lib.register(desc(fuzzy::fuzzy_not())).unwrap();
        let p = parse_circuit("model fuzzy\nwires 1\ninit ket 0\ngate G 0\n").unwrap();
        assert!(validate(p, &ValidateOptions { library: Some(&lib), base_dir: None }).is_ok());
    }
}
