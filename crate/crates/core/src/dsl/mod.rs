//! The `.circ` circuit language: parsing, validation and simulation.
//!
//! ```text
//! model quantum          # classical | stochastic | quantum | fuzzy
//! wires 2
//! init ket 00            # or: init vec <2^wires scalars>
//! gate H 1               # gate <NAME|@matrix-file> <adjacent ascending wires>
//! gate CNOT 0 1
//! measure seed 7         # quantum only, last
//! ```
//!
//! A gate on wires `lo..lo+k` is lifted as `I ⊗ G ⊗ I(2^lo)`; its most
//! significant bit is its highest wire, so `CNOT 0 1` is controlled by wire 1.

use thiserror::Error;

use crate::models::classical::{ClassicalState, SynthCircuit, TruthTable};
use crate::models::{Model, Violation};

mod ast;
mod parse;
mod sim;
mod validate;

pub use ast::{CircuitProgram, GateRef, InitSpec, InitValues, Pos, Step};
pub use parse::parse_circuit;
pub use sim::{
    classical_images, composed_operator, equivalence_check, final_amplitudes, lift_gate, simulate,
    simulate_from, Measurement, SimOptions, SimulationTrace, MAX_OPERATOR_WIRES,
};
pub use validate::{
    validate, GateLibrary, ModelState, ValidProgram, ValidateOptions, MAX_CLASSICAL_WIRES,
    MAX_DENSE_WIRES,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DslError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}: {msg}")]
    Invalid { line: usize, msg: String },
    #[error("line {line}: {what}: {violation}")]
    Membership { line: usize, what: String, violation: Violation },
    #[error("line {line}: gate file `{path}`: {msg}")]
    GateFile { line: usize, path: String, msg: String },
    #[error("model mismatch: {left} vs {right}")]
    ModelMismatch { left: Model, right: Model },
    #[error("{0}")]
    Unsupported(String),
    #[error("internal error: {0}")]
    Internal(String),
}

/// Parses and validates `text` with default options.
pub fn load_program(text: &str) -> Result<ValidProgram, DslError> {
    validate(parse_circuit(text)?, &ValidateOptions::default())
}

/// Runs an emitted synthesis program on every input and compares the output
/// wires with the table.
pub fn check_synthesized(text: &str, circuit: &SynthCircuit, table: &TruthTable) -> Result<(), String> {
    let program = load_program(text).map_err(|e| format!("emitted circuit does not load: {e}"))?;
    if program.model() != Model::Classical || program.wire_count() != circuit.wire_count() {
        return Err("emitted circuit has the wrong shape".into());
    }
    for x in 0..1u64 << table.n_inputs() {
        let init = ClassicalState::from_index(circuit.wire_count(), x).map_err(|e| e.to_string())?;
        let trace = simulate_from(&program, ModelState::Classical(init), SimOptions::default())
            .map_err(|e| e.to_string())?;
        let out = trace.final_state().as_classical().expect("classical trace");
        let got = circuit
            .outputs()
            .iter()
            .enumerate()
            .fold(0u64, |acc, (k, &w)| acc | (u64::from(out.bit(w)) << k));
        if got != table.eval(x) {
            return Err(format!("input {x}: circuit gives {got}, table gives {}", table.eval(x)));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::classical::synthesize_circuit;

    #[test]
    fn synthesized_programs_pass_their_self_check() {
        for n in 1..=3usize {
            for code in 0..1u64 << (1 << n) {
                let t = TruthTable::from_fn(n, 1, |x| (code >> x) & 1).unwrap();
                let c = synthesize_circuit(&t);
                check_synthesized(&c.to_circ(), &c, &t).unwrap_or_else(|e| panic!("n={n} code={code}: {e}"));
            }
        }
    }

    #[test]
    fn self_check_catches_a_wrong_table() {
        let t = TruthTable::parse("0 1 1 0").unwrap();
        let c = synthesize_circuit(&t);
        let other = TruthTable::parse("0 1 1 1").unwrap();
        assert!(check_synthesized(&c.to_circ(), &c, &other).is_err());
    }
}
