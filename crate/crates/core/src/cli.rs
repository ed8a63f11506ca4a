//! Command-line front end. [`run`] is the whole program minus process exit.
//!
//! Exit codes: 0 success, 1 domain or membership failure, 2 parse or input
//! error, 3 internal invariant breach.

use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::dsl::{self, DslError, SimOptions, SimulationTrace, ValidateOptions};
use crate::error::TextError;
use crate::linalg::{SMatrix, SVector};
use crate::models::classical::{self, synthesize_circuit, TruthTable};
use crate::models::{FuzzyModel, Model, QuantumModel, StochasticModel, VectorModel, Violation};
use crate::oracle::{self, Grid, Mutant};
use crate::scalar::UnitScalar;
use crate::textio::{self, AnyMatrix, AnyVector, Parsed};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "fuzzcomp", version, about = "Fuzzy, classical, stochastic and quantum circuit toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a matrix or vector file against a model's membership predicate.
    Check {
        model: Model,
        /// Matrix or vector file, `-` for stdin.
        file: PathBuf,
    },
    /// Apply a gate to a state.
    Apply { model: Model, gate: PathBuf, state: PathBuf },
    /// Kronecker product of two matrices or two vectors.
    Kron { model: Model, a: PathBuf, b: PathBuf },
    /// Run a `.circ` program.
    Simulate {
        circuit: PathBuf,
        /// Print the state after every step.
        #[arg(long)]
        trace: bool,
        /// Override the seed of a `measure` directive.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run a quantum `.circ` program and measure at the end.
    Sample {
        circuit: PathBuf,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Synthesize a classical circuit from a truth table.
    Synth { table: PathBuf },
    /// Run the brute-force law checks.
    Verify {
        #[arg(long, default_value = "standard")]
        grid: String,
        /// Restrict to one check family; may be repeated.
        #[arg(long = "check", value_name = "FAMILY")]
        checks: Vec<String>,
        #[arg(long, hide = true)]
        mutant: Option<MutantArg>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MutantArg {
    ClampedSubtraction,
    MaxReduction,
}

impl clap::builder::ValueParserFactory for Model {
    type Parser = clap::builder::ValueParser;

    fn value_parser() -> Self::Parser {
        clap::builder::ValueParser::new(|s: &str| s.parse::<Model>())
    }
}

enum Failure {
    Domain(String),
    Parse(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Domain(_) => EXIT_DOMAIN,
            Failure::Parse(_) => EXIT_PARSE,
            Failure::Internal(_) => EXIT_INTERNAL,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Domain(m) | Failure::Parse(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(format!("output: {e}"))
    }
}

fn from_dsl(path: &Path, e: DslError) -> Failure {
    let msg = format!("{}: {e}", path.display());
    match e {
        DslError::Syntax { .. } | DslError::GateFile { .. } => Failure::Parse(msg),
        DslError::Internal(_) => Failure::Internal(msg),
        _ => Failure::Domain(msg),
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let result = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        std::fs::read_to_string(path)
    };
    result.map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn read_parsed(path: &Path) -> Result<Parsed, Failure> {
    let text = read_input(path)?;
    textio::parse_text(&text).map_err(|e: TextError| Failure::Parse(format!("{}: {e}", path.display())))
}

/// A file checked against one model, in that model's representation.
enum Item<T> {
    Matrix(SMatrix<T>),
    Vector(SVector<T>),
}

fn wrong_instance(model: Model, found: &'static str) -> Violation {
    Violation::WrongInstance { expected: model.instance_name(), found }
}

fn found_instance(p: &Parsed) -> &'static str {
    match p {
        Parsed::Matrix(m) => m.instance_name(),
        Parsed::Vector(v) => v.instance_name(),
    }
}

fn dense_item<M: VectorModel>(p: &Parsed) -> Result<Item<M::Scalar>, Violation> {
    let item = match p {
        Parsed::Matrix(m) => M::unwrap_matrix(m).map(Item::Matrix),
        Parsed::Vector(v) => M::unwrap_vector(v).map(Item::Vector),
    };
    let item = item.ok_or_else(|| wrong_instance(M::MODEL, found_instance(p)))?;
    match &item {
        Item::Matrix(m) => M::check_gate(m)?,
        Item::Vector(v) => M::check_state(v)?,
    }
    Ok(item)
}

fn check_basis_state(v: &SVector<UnitScalar>) -> Result<(), Violation> {
    let ones = v.entries().iter().filter(|x| x.is_one()).count();
    if ones == 1 {
        Ok(())
    } else {
        Err(Violation::NotBasisState { ones })
    }
}

fn classical_item(p: &Parsed) -> Result<Item<UnitScalar>, Violation> {
    let item = match p {
        Parsed::Matrix(m) => m.to_boolean().map(Item::Matrix),
        Parsed::Vector(v) => v.to_boolean().map(Item::Vector),
    };
    let item = item.ok_or_else(|| wrong_instance(Model::Classical, found_instance(p)))?;
    match &item {
        Item::Matrix(m) => classical::check_permutation(m)?,
        Item::Vector(v) => check_basis_state(v)?,
    }
    Ok(item)
}

fn member(path: &Path, what: &str, v: Violation) -> Failure {
    Failure::Domain(format!("{}: {what}: {v}", path.display()))
}

fn cmd_check(model: Model, path: &Path, out: &mut dyn Write) -> Result<i32, Failure> {
    let parsed = read_parsed(path)?;
    let verdict = match model {
        Model::Classical => classical_item(&parsed).map(drop),
        Model::Stochastic => dense_item::<StochasticModel>(&parsed).map(drop),
        Model::Quantum => dense_item::<QuantumModel>(&parsed).map(drop),
        Model::Fuzzy => dense_item::<FuzzyModel>(&parsed).map(drop),
    };
    match verdict {
        Ok(()) => {
            writeln!(out, "ok")?;
            Ok(EXIT_OK)
        }
        Err(v) => {
            writeln!(out, "fail {v}")?;
            Ok(EXIT_DOMAIN)
        }
    }
}

struct Pair<T> {
    a: Item<T>,
    b: Item<T>,
}

fn load_pair<T>(
    a: &Path,
    b: &Path,
    load: impl Fn(&Parsed) -> Result<Item<T>, Violation>,
) -> Result<Pair<T>, Failure> {
    let pa = read_parsed(a)?;
    let pb = read_parsed(b)?;
    let ia = load(&pa).map_err(|v| member(a, "not a member", v))?;
    let ib = load(&pb).map_err(|v| member(b, "not a member", v))?;
    Ok(Pair { a: ia, b: ib })
}

enum Output<T> {
    Matrix(SMatrix<T>),
    Vector(SVector<T>),
}

fn apply_pair<T: Clone>(pair: Pair<T>, gate: &Path, state: &Path) -> Result<SVector<T>, Failure> {
    let Item::Matrix(g) = pair.a else {
        return Err(Failure::Domain(format!("{}: expected a gate matrix, found a vector", gate.display())));
    };
    let Item::Vector(v) = pair.b else {
        return Err(Failure::Domain(format!("{}: expected a state vector, found a matrix", state.display())));
    };
    g.mat_vec(&v).map_err(|e| Failure::Domain(e.to_string()))
}

fn kron_pair<T: Clone>(pair: Pair<T>) -> Result<Output<T>, Failure> {
    let err = |e: crate::error::AlgebraError| Failure::Domain(e.to_string());
    match (pair.a, pair.b) {
        (Item::Matrix(a), Item::Matrix(b)) => a.kron(&b).map(Output::Matrix).map_err(err),
        (Item::Vector(a), Item::Vector(b)) => a.kron(&b).map(Output::Vector).map_err(err),
        _ => Err(Failure::Domain("kron needs two matrices or two vectors".into())),
    }
}

fn dense_apply<M: VectorModel>(gate: &Path, state: &Path) -> Result<AnyVector, Failure> {
    let pair = load_pair(gate, state, dense_item::<M>)?;
    let r = apply_pair(pair, gate, state)?;
    M::check_state(&r).map_err(|v| Failure::Internal(format!("result left the state space: {v}")))?;
    Ok(M::wrap_vector(r))
}

fn classical_apply(gate: &Path, state: &Path) -> Result<AnyVector, Failure> {
    let pair = load_pair(gate, state, classical_item)?;
    let r = apply_pair(pair, gate, state)?;
    check_basis_state(&r).map_err(|v| Failure::Internal(format!("result left the state space: {v}")))?;
    Ok(AnyVector::Unit(r))
}

fn cmd_apply(model: Model, gate: &Path, state: &Path, out: &mut dyn Write) -> Result<i32, Failure> {
    let v = match model {
        Model::Classical => classical_apply(gate, state)?,
        Model::Stochastic => dense_apply::<StochasticModel>(gate, state)?,
        Model::Quantum => dense_apply::<QuantumModel>(gate, state)?,
        Model::Fuzzy => dense_apply::<FuzzyModel>(gate, state)?,
    };
    writeln!(out, "{}", textio::render_vector_line(&v))?;
    Ok(EXIT_OK)
}

enum AnyOutput {
    Matrix(AnyMatrix),
    Vector(AnyVector),
}

fn dense_kron<M: VectorModel>(a: &Path, b: &Path) -> Result<AnyOutput, Failure> {
    let breach = |v: Violation| Failure::Internal(format!("product is not a member: {v}"));
    Ok(match kron_pair(load_pair(a, b, dense_item::<M>)?)? {
        Output::Matrix(m) => {
            M::check_gate(&m).map_err(breach)?;
            AnyOutput::Matrix(M::wrap_matrix(m))
        }
        Output::Vector(v) => {
            M::check_state(&v).map_err(breach)?;
            AnyOutput::Vector(M::wrap_vector(v))
        }
    })
}

fn classical_kron(a: &Path, b: &Path) -> Result<AnyOutput, Failure> {
    let breach = |v: Violation| Failure::Internal(format!("product is not a member: {v}"));
    Ok(match kron_pair(load_pair(a, b, classical_item)?)? {
        Output::Matrix(m) => {
            classical::check_permutation(&m).map_err(breach)?;
            AnyOutput::Matrix(AnyMatrix::Unit(m))
        }
        Output::Vector(v) => {
            check_basis_state(&v).map_err(breach)?;
            AnyOutput::Vector(AnyVector::Unit(v))
        }
    })
}

fn cmd_kron(model: Model, a: &Path, b: &Path, out: &mut dyn Write) -> Result<i32, Failure> {
    let r = match model {
        Model::Classical => classical_kron(a, b)?,
        Model::Stochastic => dense_kron::<StochasticModel>(a, b)?,
        Model::Quantum => dense_kron::<QuantumModel>(a, b)?,
        Model::Fuzzy => dense_kron::<FuzzyModel>(a, b)?,
    };
    match r {
        AnyOutput::Matrix(m) => write!(out, "{}", textio::render_matrix(&m))?,
        AnyOutput::Vector(v) => writeln!(out, "{}", textio::render_vector_line(&v))?,
    }
    Ok(EXIT_OK)
}

fn print_trace(p: &dsl::ValidProgram, t: &SimulationTrace, trace: bool, out: &mut dyn Write) -> io::Result<()> {
    if trace {
        writeln!(out, "init {}", t.initial)?;
        for (i, (step, snap)) in p.steps().iter().zip(&t.snapshots).enumerate() {
            let wires: Vec<String> = step.wires.iter().map(ToString::to_string).collect();
            writeln!(out, "step {} {} {}: {snap}", i + 1, step.gate, wires.join(" "))?;
        }
    }
    writeln!(out, "final {}", t.final_state())?;
    if let Some(m) = t.measurement {
        writeln!(out, "measure seed {} index {}", m.seed, m.index)?;
    }
    Ok(())
}

fn cmd_simulate(path: &Path, opts: SimOptions, trace: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let text = read_input(path)?;
    let program = dsl::parse_circuit(&text).map_err(|e| from_dsl(path, e))?;
    let base_dir = (path.as_os_str() != "-").then(|| path.parent().map(Path::to_path_buf)).flatten();
    let vopts = ValidateOptions { library: None, base_dir };
    let valid = dsl::validate(program, &vopts).map_err(|e| from_dsl(path, e))?;
    if opts.force_measure && valid.model() != Model::Quantum {
        return Err(Failure::Domain(format!("{}: sample needs a quantum circuit, found {}", path.display(), valid.model())));
    }
    let t = dsl::simulate(&valid, opts).map_err(|e| from_dsl(path, e))?;
    print_trace(&valid, &t, trace, out)?;
    Ok(EXIT_OK)
}

fn cmd_synth(path: &Path, out: &mut dyn Write) -> Result<i32, Failure> {
    let text = read_input(path)?;
    let table = TruthTable::parse(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    let circuit = synthesize_circuit(&table);
    let program = circuit.to_circ();
    dsl::check_synthesized(&program, &circuit, &table)
        .map_err(|e| Failure::Internal(format!("synthesized circuit failed its self-check: {e}")))?;
    write!(out, "{program}")?;
    Ok(EXIT_OK)
}

fn cmd_verify(grid: &str, checks: &[String], mutant: Option<MutantArg>, out: &mut dyn Write) -> Result<i32, Failure> {
    let grid = Grid::by_name(grid).map_err(|e| Failure::Parse(e.to_string()))?;
    let mutant = mutant.map(|m| match m {
        MutantArg::ClampedSubtraction => Mutant::ClampedSubtraction,
        MutantArg::MaxReduction => Mutant::MaxReduction,
    });
    let reports = oracle::run_checks(&grid, checks, mutant).map_err(|e| Failure::Parse(e.to_string()))?;
    let mut failed = 0;
    for r in &reports {
        writeln!(out, "{r}")?;
        if !r.passed() {
            failed += 1;
            for f in &r.failures {
                writeln!(out, "    {}: expected {}, got {}", f.inputs, f.expected, f.actual)?;
            }
        }
    }
    if failed == 0 {
        writeln!(out, "grid {}: all {} checks passed", grid.name(), reports.len())?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "grid {}: {failed} of {} checks failed", grid.name(), reports.len())?;
        Ok(EXIT_DOMAIN)
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    match cli.command {
        Command::Check { model, file } => cmd_check(model, &file, out),
        Command::Apply { model, gate, state } => cmd_apply(model, &gate, &state, out),
        Command::Kron { model, a, b } => cmd_kron(model, &a, &b, out),
        Command::Simulate { circuit, trace, seed } => {
            cmd_simulate(&circuit, SimOptions { seed, force_measure: false }, trace, out)
        }
        Command::Sample { circuit, trace, seed } => {
            cmd_simulate(&circuit, SimOptions { seed, force_measure: true }, trace, out)
        }
        Command::Synth { table } => cmd_synth(&table, out),
        Command::Verify { grid, checks, mutant } => cmd_verify(&grid, &checks, mutant, out),
    }
}

/// Parses `args` (program name first) and runs one subcommand.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}
