//! Classical circuits: truth tables, permutation matrices, synthesis over
//! AND/XOR/NOT with constant ancillas, and reversible XOR-target embedding.
//!
//! Bit order everywhere: wire/bit 0 is the least significant bit of a basis
//! index, so `|b_{n-1} … b_0⟩` is basis vector `Σ 2^i b_i`.

use std::fmt;

use crate::error::ModelError;
use crate::linalg::SMatrix;
use crate::models::{check_permutation_roles, GateDescriptor, Model, Violation};
use crate::scalar::UnitScalar;
use crate::semiring::{self, SemiringInstance};
use crate::textio::AnyMatrix;

/// A classical register in a basis state. `bits[i]` is wire `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalState {
    bits: Vec<bool>,
}

impl ClassicalState {
    pub fn from_index(n_bits: usize, index: u64) -> Result<Self, ModelError> {
        if n_bits == 0 {
            return Err(ModelError::Invalid("a register needs at least one bit".into()));
        }
        if n_bits < 64 && index >> n_bits != 0 {
            return Err(ModelError::Invalid(format!(
                "basis index {index} out of range for {n_bits} bits"
            )));
        }
        let bits = (0..n_bits).map(|i| i < 64 && (index >> i) & 1 == 1).collect();
        Ok(ClassicalState { bits })
    }

    /// Builds a state from bits written most-significant first, as in `|10⟩`.
    pub fn from_ket(bits_msb_first: &[bool]) -> Self {
        ClassicalState { bits: bits_msb_first.iter().rev().copied().collect() }
    }

    pub fn n_bits(&self) -> usize {
        self.bits.len()
    }

    pub fn bit(&self, wire: usize) -> bool {
        self.bits[wire]
    }

    pub fn set_bit(&mut self, wire: usize, value: bool) {
        self.bits[wire] = value;
    }

    /// The basis index, when the register fits in 64 bits.
    pub fn index(&self) -> Option<u64> {
        if self.bits.len() > 64 {
            return None;
        }
        Some(self.bits.iter().enumerate().fold(0u64, |acc, (i, &b)| acc | (u64::from(b) << i)))
    }

    /// Bits most-significant first, e.g. `"10"` for wire 1 set.
    pub fn ket_string(&self) -> String {
        self.bits.iter().rev().map(|&b| if b { '1' } else { '0' }).collect()
    }

    /// Applies a local permutation to the adjacent wires `lo..lo+arity`.
    pub fn apply_local(&mut self, perm: &Permutation, lo: usize, arity: usize) {
        let local = (0..arity).fold(0usize, |acc, i| acc | (usize::from(self.bits[lo + i]) << i));
        let image = perm.apply(local);
        for i in 0..arity {
            self.bits[lo + i] = (image >> i) & 1 == 1;
        }
    }
}

impl fmt::Display for ClassicalState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ket {}", self.ket_string())?;
        if let Some(i) = self.index() {
            write!(f, " index {i}")?;
        }
        Ok(())
    }
}

/// `f: {0,1}^n → {0,1}^m`; `outputs[x]` packs output bit `k` at bit `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    n_inputs: usize,
    n_outputs: usize,
    outputs: Vec<u64>,
}

pub const MAX_TABLE_INPUTS: usize = 20;

impl TruthTable {
    pub fn new(n_inputs: usize, n_outputs: usize, outputs: Vec<u64>) -> Result<Self, ModelError> {
        if n_inputs == 0 || n_inputs > MAX_TABLE_INPUTS {
            return Err(ModelError::Invalid(format!(
                "truth tables take 1..={MAX_TABLE_INPUTS} inputs, got {n_inputs}"
            )));
        }
        if n_outputs == 0 || n_outputs > 63 {
            return Err(ModelError::Invalid(format!("unsupported output width {n_outputs}")));
        }
        let expected = 1usize << n_inputs;
        if outputs.len() != expected {
            return Err(ModelError::TableSize { expected, found: outputs.len() });
        }
        if let Some(bad) = outputs.iter().find(|&&w| w >> n_outputs != 0) {
            return Err(ModelError::Invalid(format!("output word {bad} exceeds {n_outputs} bits")));
        }
        Ok(TruthTable { n_inputs, n_outputs, outputs })
    }

    /// Single-output table from `f(0), f(1), …, f(2^n - 1)`.
    pub fn single(bits: &[bool]) -> Result<Self, ModelError> {
        let n = bits.len().trailing_zeros() as usize;
        if !bits.len().is_power_of_two() || bits.len() < 2 {
            return Err(ModelError::TableSize { expected: 1 << n.max(1), found: bits.len() });
        }
        Self::new(n, 1, bits.iter().map(|&b| u64::from(b)).collect())
    }

    pub fn from_fn(n_inputs: usize, n_outputs: usize, f: impl Fn(u64) -> u64) -> Result<Self, ModelError> {
        if n_inputs == 0 || n_inputs > MAX_TABLE_INPUTS {
            return Err(ModelError::Invalid(format!("unsupported input width {n_inputs}")));
        }
        Self::new(n_inputs, n_outputs, (0..1u64 << n_inputs).map(f).collect())
    }

    /// Reads whitespace-separated `0`/`1` outputs, one per input in index order.
    pub fn parse(text: &str) -> Result<Self, ModelError> {
        let mut bits = Vec::new();
        for tok in text
            .lines()
            .map(|l| l.split_once('#').map_or(l, |(b, _)| b))
            .flat_map(str::split_whitespace)
        {
            match tok {
                "0" => bits.push(false),
                "1" => bits.push(true),
                other => return Err(ModelError::Invalid(format!("`{other}` is not a bit"))),
            }
        }
        Self::single(&bits)
    }

    pub fn n_inputs(&self) -> usize {
        self.n_inputs
    }

    pub fn n_outputs(&self) -> usize {
        self.n_outputs
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.outputs[x as usize]
    }

    pub fn outputs(&self) -> &[u64] {
        &self.outputs
    }

    fn output_column(&self, k: usize) -> Vec<bool> {
        self.outputs.iter().map(|w| (w >> k) & 1 == 1).collect()
    }
}

/// The standard irreversible gates as truth tables. Two-input gates read
/// input bit 0 as `x` and bit 1 as `y`; FANOUT has two output bits.
pub fn classical_gate(name: &str) -> Result<TruthTable, ModelError> {
    let two = |f: fn(bool, bool) -> bool| {
        TruthTable::from_fn(2, 1, |i| u64::from(f(i & 1 == 1, i & 2 == 2)))
    };
    match name {
        "NOT" => TruthTable::new(1, 1, vec![1, 0]),
        "AND" => two(|x, y| x && y),
        "OR" => two(|x, y| x || y),
        "XOR" => two(|x, y| x ^ y),
        "NAND" => two(|x, y| !(x && y)),
        "NOR" => two(|x, y| !(x || y)),
        "FANOUT" => TruthTable::new(1, 2, vec![0b00, 0b11]),
        other => Err(ModelError::UnknownGate(other.to_string())),
    }
}

/// A permutation of basis indices: column `j` of the matrix has its single
/// `one` in row `images[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, ModelError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(ModelError::Invalid(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, j: usize) -> usize {
        self.images[j]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&j| self.images[j]).collect() }
    }

    pub fn is_involution(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &i)| self.images[i] == j)
    }

    pub fn to_matrix<T: Clone>(&self, instance: &SemiringInstance<T>) -> SMatrix<T> {
        let n = self.images.len();
        SMatrix::from_fn(instance, n, n, |i, j| {
            if self.images[j] == i {
                instance.one()
            } else {
                instance.zero()
            }
        })
    }

    pub fn from_matrix<T: Clone + fmt::Display>(m: &SMatrix<T>) -> Result<Self, Violation> {
        check_permutation_roles(m)?;
        let s = m.instance();
        let images = (0..m.cols())
            .map(|j| m.column(j).position(|x| s.is_one(x)).expect("checked above"))
            .collect();
        Ok(Permutation { images })
    }
}

/// Membership in `P(N)`: exactly one nonzero (one) per row and column.
pub fn check_permutation(m: &SMatrix<UnitScalar>) -> Result<(), Violation> {
    check_permutation_roles(m)
}

pub fn is_permutation_matrix<T: Clone + fmt::Display>(m: &SMatrix<T>) -> Result<bool, ModelError> {
    match check_permutation_roles(m) {
        Ok(()) => Ok(true),
        Err(Violation::NotSquare { rows, cols }) => {
            Err(crate::error::AlgebraError::NotSquare { rows, cols }.into())
        }
        Err(_) => Ok(false),
    }
}

/// `(x, y) ↦ (x, y ⊕ f(x))` on `n + m` bits, with `y` in the low `m` bits.
pub fn reversible_embed(t: &TruthTable) -> Permutation {
    let m = t.n_outputs;
    let size = 1usize << (t.n_inputs + m);
    let images = (0..size)
        .map(|idx| {
            let x = idx >> m;
            let y = idx & ((1 << m) - 1);
            (x << m) | (y ^ t.eval(x as u64) as usize)
        })
        .collect();
    Permutation { images }
}

pub fn reversible_embed_matrix(t: &TruthTable) -> SMatrix<UnitScalar> {
    reversible_embed(t).to_matrix(&semiring::boolean())
}

fn cnot_permutation() -> Permutation {
    // |00⟩→|00⟩, |01⟩→|01⟩, |10⟩→|11⟩, |11⟩→|10⟩; the control is the high wire
    Permutation { images: vec![0, 1, 3, 2] }
}

fn swap_permutation() -> Permutation {
    Permutation { images: vec![0, 2, 1, 3] }
}

/// Reversible permutation for a classical gate name as used in circuits.
/// Irreversible gates are replaced by their XOR-target embedding, whose
/// target is the lowest wire.
pub fn classical_permutation(name: &str) -> Result<Permutation, ModelError> {
    Ok(match name {
        "NOT" => Permutation { images: vec![1, 0] },
        "CNOT" => cnot_permutation(),
        "SWAP" => swap_permutation(),
        "TOFFOLI" => reversible_embed(&classical_gate("AND")?),
        "AND" | "OR" | "XOR" | "NAND" | "NOR" | "FANOUT" => reversible_embed(&classical_gate(name)?),
        other => return Err(ModelError::UnknownGate(other.to_string())),
    })
}

pub fn classical_gate_descriptor(name: &str) -> Result<GateDescriptor, ModelError> {
    let perm = classical_permutation(name)?;
    let arity = perm.len().trailing_zeros() as usize;
    Ok(GateDescriptor {
        model: Model::Classical,
        name: name.to_string(),
        arity,
        matrix: AnyMatrix::Unit(perm.to_matrix(&semiring::boolean())),
    })
}

/// One step of a synthesized straight-line circuit. Every gate writes a fresh
/// wire.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SynthStep {
    Ancilla { wire: usize, value: bool },
    Not { input: usize, output: usize },
    And { a: usize, b: usize, output: usize },
    Or { a: usize, b: usize, output: usize },
    Xor { a: usize, b: usize, output: usize },
}

/// Straight-line circuit over AND, XOR, NOT (and OR for the constant-1 base
/// case) with constant ancillas. Wires `0..n_inputs` carry the inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthCircuit {
    n_inputs: usize,
    wire_count: usize,
    steps: Vec<SynthStep>,
    outputs: Vec<usize>,
}

impl SynthCircuit {
    pub fn n_inputs(&self) -> usize {
        self.n_inputs
    }

    pub fn wire_count(&self) -> usize {
        self.wire_count
    }

    pub fn steps(&self) -> &[SynthStep] {
        &self.steps
    }

    pub fn outputs(&self) -> &[usize] {
        &self.outputs
    }

    pub fn gate_count(&self) -> usize {
        self.steps.iter().filter(|s| !matches!(s, SynthStep::Ancilla { .. })).count()
    }

    /// Evaluates all wires for input `x`.
    pub fn run(&self, x: u64) -> Vec<bool> {
        let mut w = vec![false; self.wire_count];
        for (i, bit) in w.iter_mut().enumerate().take(self.n_inputs) {
            *bit = (x >> i) & 1 == 1;
        }
        for step in &self.steps {
            match *step {
                SynthStep::Ancilla { wire, value } => w[wire] = value,
                SynthStep::Not { input, output } => w[output] = !w[input],
                SynthStep::And { a, b, output } => w[output] = w[a] && w[b],
                SynthStep::Or { a, b, output } => w[output] = w[a] || w[b],
                SynthStep::Xor { a, b, output } => w[output] = w[a] ^ w[b],
            }
        }
        w
    }

    /// Packed output word for input `x`.
    pub fn evaluate(&self, x: u64) -> u64 {
        let w = self.run(x);
        self.outputs.iter().enumerate().fold(0, |acc, (k, &o)| acc | (u64::from(w[o]) << k))
    }

    /// Compiles the circuit into a classical `.circ` program. Each gate writes
    /// its output into a zero-initialized wire through the XOR-target
    /// embedding; operands are brought next to each other with SWAPs that are
    /// undone right after the gate.
    pub fn to_circ(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "# synthesized: {} input(s) on wires 0..{}, wire 0 least significant\n",
            self.n_inputs,
            self.n_inputs - 1
        ));
        let outs: Vec<String> = self.outputs.iter().map(ToString::to_string).collect();
        out.push_str(&format!("# outputs: {}\n", outs.join(" ")));
        out.push_str("model classical\n");
        out.push_str(&format!("wires {}\n", self.wire_count));
        out.push_str(&format!("init ket {}\n", "0".repeat(self.wire_count)));
        for step in &self.steps {
            match *step {
                SynthStep::Ancilla { wire, value: true } => {
                    out.push_str(&format!("gate NOT {wire}\n"));
                }
                SynthStep::Ancilla { value: false, .. } => {}
                SynthStep::Not { input, output } => {
                    emit_routed(&mut out, "CNOT", &[output, input]);
                    out.push_str(&format!("gate NOT {output}\n"));
                }
                SynthStep::And { a, b, output } => emit_routed(&mut out, "AND", &[output, a, b]),
                SynthStep::Or { a, b, output } => emit_routed(&mut out, "OR", &[output, a, b]),
                SynthStep::Xor { a, b, output } => emit_routed(&mut out, "XOR", &[output, a, b]),
            }
        }
        out
    }
}

/// Emits `gate NAME` on wires whose gate-bit order (least significant first)
/// is `targets`, routing with adjacent SWAPs.
fn emit_routed(out: &mut String, name: &str, targets: &[usize]) {
    let base = *targets.iter().min().expect("gate has wires");
    let top = *targets.iter().max().expect("gate has wires");
    // layout[p] is the logical wire currently at physical position base + p
    let mut layout: Vec<usize> = (base..=top).collect();
    let mut swaps = Vec::new();
    for (j, &t) in targets.iter().enumerate() {
        let mut q = layout.iter().position(|&w| w == t).expect("target in range");
        while q > j {
            layout.swap(q - 1, q);
            swaps.push(base + q - 1);
            q -= 1;
        }
    }
    for &s in &swaps {
        out.push_str(&format!("gate SWAP {} {}\n", s, s + 1));
    }
    let wires: Vec<String> = (base..base + targets.len()).map(|w| w.to_string()).collect();
    out.push_str(&format!("gate {name} {}\n", wires.join(" ")));
    for &s in swaps.iter().rev() {
        out.push_str(&format!("gate SWAP {} {}\n", s, s + 1));
    }
}

struct Builder {
    wire_count: usize,
    steps: Vec<SynthStep>,
}

impl Builder {
    fn fresh(&mut self) -> usize {
        self.wire_count += 1;
        self.wire_count - 1
    }

    /// Returns the wire carrying `f(vars)`, where `table[x]` is indexed with
    /// `vars[i]` as bit `i` of `x`.
    fn synth(&mut self, table: &[bool], vars: &[usize]) -> usize {
        if let [var] = vars {
            return match (table[0], table[1]) {
                (false, true) => *var,
                (true, false) => {
                    let output = self.fresh();
                    self.steps.push(SynthStep::Not { input: *var, output });
                    output
                }
                (false, false) => {
                    let anc = self.fresh();
                    self.steps.push(SynthStep::Ancilla { wire: anc, value: false });
                    let output = self.fresh();
                    self.steps.push(SynthStep::And { a: *var, b: anc, output });
                    output
                }
                (true, true) => {
                    let anc = self.fresh();
                    self.steps.push(SynthStep::Ancilla { wire: anc, value: true });
                    let output = self.fresh();
                    self.steps.push(SynthStep::Or { a: *var, b: anc, output });
                    output
                }
            };
        }
        // Cofactors on the most significant variable: f = (¬x ∧ f0) ⊕ (x ∧ f1).
        let (rest, top) = vars.split_at(vars.len() - 1);
        let top = top[0];
        let half = table.len() / 2;
        let f0 = self.synth(&table[..half], rest);
        let f1 = self.synth(&table[half..], rest);
        let not_x = self.fresh();
        self.steps.push(SynthStep::Not { input: top, output: not_x });
        let left = self.fresh();
        self.steps.push(SynthStep::And { a: not_x, b: f0, output: left });
        let right = self.fresh();
        self.steps.push(SynthStep::And { a: top, b: f1, output: right });
        let output = self.fresh();
        self.steps.push(SynthStep::Xor { a: left, b: right, output });
        output
    }
}

/// Recursive cofactor synthesis. Each output bit is built independently.
pub fn synthesize_circuit(t: &TruthTable) -> SynthCircuit {
    let mut b = Builder { wire_count: t.n_inputs, steps: Vec::new() };
    let vars: Vec<usize> = (0..t.n_inputs).collect();
    let outputs = (0..t.n_outputs).map(|k| b.synth(&t.output_column(k), &vars)).collect();
    SynthCircuit { n_inputs: t.n_inputs, wire_count: b.wire_count, steps: b.steps, outputs }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(bits: &[u8]) -> TruthTable {
        TruthTable::single(&bits.iter().map(|&b| b == 1).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn permutation_membership() {
        let b = semiring::boolean();
        let swap = Permutation::new(vec![1, 0]).unwrap().to_matrix(&b);
        assert!(is_permutation_matrix(&swap).unwrap());
        assert!(is_permutation_matrix(&SMatrix::identity(&b, 4)).unwrap());
        let bad = SMatrix::from_rows(
            &b,
            vec![vec![UnitScalar::ONE, UnitScalar::ONE], vec![UnitScalar::ZERO, UnitScalar::ZERO]],
        )
        .unwrap();
        assert!(!is_permutation_matrix(&bad).unwrap());
        assert_eq!(check_permutation(&bad), Err(Violation::RowOnes { row: 0, count: 2 }));
        let rect = SMatrix::from_fn(&b, 2, 3, |_, _| UnitScalar::ZERO);
        assert!(is_permutation_matrix(&rect).is_err());
    }

    #[test]
    fn gate_tables() {
        let not = classical_gate("NOT").unwrap();
        assert_eq!((not.eval(0), not.eval(1)), (1, 0));
        let fanout = classical_gate("FANOUT").unwrap();
        assert_eq!((fanout.eval(0), fanout.eval(1)), (0b00, 0b11));
        assert_eq!(classical_gate("XOR").unwrap().eval(0b11), 0);
        assert_eq!(classical_gate("NAND").unwrap().outputs(), &[1, 1, 1, 0]);
        assert_eq!(classical_gate("NOR").unwrap().outputs(), &[1, 0, 0, 0]);
        assert!(matches!(classical_gate("MUX"), Err(ModelError::UnknownGate(_))));
    }

    #[test]
    fn synthesis_base_cases() {
        let id = synthesize_circuit(&table(&[0, 1]));
        assert!(id.steps().is_empty());
        assert_eq!(id.outputs(), &[0]);

        let zero = synthesize_circuit(&table(&[0, 0]));
        assert_eq!(
            zero.steps(),
            &[SynthStep::Ancilla { wire: 1, value: false }, SynthStep::And { a: 0, b: 1, output: 2 }]
        );
        let one = synthesize_circuit(&table(&[1, 1]));
        assert_eq!(
            one.steps(),
            &[SynthStep::Ancilla { wire: 1, value: true }, SynthStep::Or { a: 0, b: 1, output: 2 }]
        );
        let flip = synthesize_circuit(&table(&[1, 0]));
        assert_eq!(flip.steps(), &[SynthStep::Not { input: 0, output: 1 }]);
    }

    #[test]
    fn synthesis_is_exhaustively_correct_up_to_four_inputs() {
        for n in 1..=4usize {
            let count = 1u64 << (1 << n);
            // every table for n ≤ 3, a deterministic stride through n = 4
            let stride = if n == 4 { 257 } else { 1 };
            let mut code = 0u64;
            while code < count {
                let t = TruthTable::from_fn(n, 1, |x| (code >> x) & 1).unwrap();
                let c = synthesize_circuit(&t);
                for x in 0..1u64 << n {
                    assert_eq!(c.evaluate(x), t.eval(x), "n={n} table={code:#x} x={x}");
                }
                code += stride;
            }
        }
    }

    #[test]
    fn multi_output_synthesis() {
        let fanout = classical_gate("FANOUT").unwrap();
        let c = synthesize_circuit(&fanout);
        assert_eq!(c.evaluate(0), 0);
        assert_eq!(c.evaluate(1), 3);
    }

    #[test]
    fn reversible_embedding_examples() {
        let not = reversible_embed(&classical_gate("NOT").unwrap());
        assert!(not.is_involution());
        assert_eq!(not.compose(&not), Permutation::identity(4));

        let toffoli = reversible_embed(&classical_gate("AND").unwrap());
        for idx in 0..8usize {
            let (x0, x1, y) = ((idx >> 1) & 1, (idx >> 2) & 1, idx & 1);
            let expected = (idx & !1) | (y ^ (x0 & x1));
            assert_eq!(toffoli.apply(idx), expected);
        }

        let zero = reversible_embed(&table(&[0, 0]));
        assert_eq!(zero, Permutation::identity(4));
        assert!(is_permutation_matrix(&reversible_embed_matrix(&table(&[0, 1, 1, 0]))).unwrap());
    }

    #[test]
    fn cnot_matches_its_truth_table() {
        let cnot = classical_permutation("CNOT").unwrap();
        let ket = |s: &str| ClassicalState::from_ket(&s.chars().map(|c| c == '1').collect::<Vec<_>>());
        let mut state = ket("10");
        state.apply_local(&cnot, 0, 2);
        assert_eq!(state, ket("11"));
        state.apply_local(&cnot, 0, 2);
        assert_eq!(state, ket("10"));
        assert_eq!(cnot, reversible_embed(&TruthTable::new(1, 1, vec![0, 1]).unwrap()));
    }

    #[test]
    fn state_indexing() {
        let s = ClassicalState::from_index(3, 5).unwrap();
        assert_eq!(s.ket_string(), "101");
        assert_eq!(s.index(), Some(5));
        assert!(ClassicalState::from_index(2, 4).is_err());
        assert_eq!(s.to_string(), "ket 101 index 5");
    }

    #[test]
    fn table_parsing() {
        assert_eq!(TruthTable::parse("0 1 1 0\n").unwrap(), table(&[0, 1, 1, 0]));
        assert!(matches!(TruthTable::parse("0 1 1"), Err(ModelError::TableSize { .. })));
        assert!(TruthTable::parse("0 2").is_err());
    }
}
