use std::fmt;

use num_complex::Complex64;

use crate::models::Model;
use crate::scalar::{format_rational, Rational, UnitScalar};

/// 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

/// Literal initial amplitudes, already parsed with the model's scalar syntax.
#[derive(Debug, Clone, PartialEq)]
pub enum InitValues {
    Unit(Vec<UnitScalar>),
    Rational(Vec<Rational>),
    Complex(Vec<Complex64>),
}

impl InitValues {
    pub fn len(&self) -> usize {
        match self {
            InitValues::Unit(v) => v.len(),
            InitValues::Rational(v) => v.len(),
            InitValues::Complex(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum InitSpec {
    /// Bits most-significant first: `ket 10` sets wire 1.
    Ket(Vec<bool>),
    Vec(InitValues),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GateRef {
    Named(String),
    /// A matrix file, written `@path` in source.
    File(String),
}

impl fmt::Display for GateRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GateRef::Named(n) => f.write_str(n),
            GateRef::File(p) => write!(f, "@{p}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Step {
    pub gate: GateRef,
    pub wires: Vec<usize>,
    pub pos: Pos,
}

impl PartialEq for Step {
    fn eq(&self, other: &Self) -> bool {
        self.gate == other.gate && self.wires == other.wires
    }
}

/// A parsed `.circ` program. Equality ignores source positions.
#[derive(Debug, Clone)]
pub struct CircuitProgram {
    pub model: Model,
    pub wire_count: usize,
    pub init: InitSpec,
    pub init_pos: Pos,
    pub steps: Vec<Step>,
    pub measure: Option<(u64, Pos)>,
}

impl CircuitProgram {
    pub fn measure_seed(&self) -> Option<u64> {
        self.measure.map(|(s, _)| s)
    }
}

impl PartialEq for CircuitProgram {
    fn eq(&self, other: &Self) -> bool {
        self.model == other.model
            && self.wire_count == other.wire_count
            && self.init == other.init
            && self.steps == other.steps
            && self.measure_seed() == other.measure_seed()
    }
}

/// Shortest decimal that reads back to the same `f64`.
fn format_complex_exact(z: &Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}{}i", z.re, z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

impl fmt::Display for CircuitProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "model {}", self.model)?;
        writeln!(f, "wires {}", self.wire_count)?;
        match &self.init {
            InitSpec::Ket(bits) => {
                let s: String = bits.iter().map(|&b| if b { '1' } else { '0' }).collect();
                writeln!(f, "init ket {s}")?;
            }
            InitSpec::Vec(values) => {
                let parts: Vec<String> = match values {
                    InitValues::Unit(v) => v.iter().map(ToString::to_string).collect(),
                    InitValues::Rational(v) => v.iter().map(format_rational).collect(),
                    InitValues::Complex(v) => v.iter().map(format_complex_exact).collect(),
                };
                writeln!(f, "init vec {}", parts.join(" "))?;
            }
        }
        for step in &self.steps {
            let wires: Vec<String> = step.wires.iter().map(ToString::to_string).collect();
            writeln!(f, "gate {} {}", step.gate, wires.join(" "))?;
        }
        if let Some(seed) = self.measure_seed() {
            writeln!(f, "measure seed {seed}")?;
        }
        Ok(())
    }
}
