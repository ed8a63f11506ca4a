use fuzzcomp::dsl::{self, equivalence_check, load_program, ModelState, SimOptions};
use fuzzcomp::models::fuzzy;

#[test]
fn quantum_equivalences() {
    let x = load_program("model quantum\nwires 1\ninit ket 0\ngate X 0\n").unwrap();
    let hzh = load_program("model quantum\nwires 1\ninit ket 0\ngate H 0\ngate Z 0\ngate H 0\n").unwrap();
    assert!(equivalence_check(&x, &hzh).unwrap());
    let h = load_program("model quantum\nwires 1\ninit ket 0\ngate H 0\n").unwrap();
    assert!(!equivalence_check(&x, &h).unwrap());
}

#[test]
fn classical_involutions_cancel() {
    let empty = load_program("model classical\nwires 3\ninit ket 000\n").unwrap();
    let twice = load_program("model classical\nwires 3\ninit ket 000\ngate TOFFOLI 0 1 2\ngate TOFFOLI 0 1 2\n").unwrap();
    assert!(equivalence_check(&empty, &twice).unwrap());
    let once = load_program("model classical\nwires 3\ninit ket 000\ngate TOFFOLI 0 1 2\n").unwrap();
    assert!(!equivalence_check(&empty, &once).unwrap());
}

#[test]
fn models_do_not_compare() {
    let a = load_program("model fuzzy\nwires 1\ninit ket 0\n").unwrap();
    let b = load_program("model quantum\nwires 1\ninit ket 0\n").unwrap();
    assert!(equivalence_check(&a, &b).is_err());
}

#[test]
fn fuzzy_three_wire_trace_stays_in_the_state_space() {
    let p = load_program(
        "model fuzzy\nwires 3\ninit vec 0 1/4 1/2 1 1 1 3/4 1\ngate FNOT 2\ngate SWAP 0 1\ngate FZERO 1\ngate FID 0\n",
    )
    .unwrap();
    let t = dsl::simulate(&p, SimOptions::default()).unwrap();
    assert_eq!(t.snapshots.len(), 4);
    for s in &t.snapshots {
        assert!(fuzzy::is_fuzzy_state(s.as_fuzzy().unwrap()), "{s}");
    }
    let ModelState::Fuzzy(v) = t.final_state() else { panic!("fuzzy trace") };
    assert!(v.entries().iter().all(|x| x.is_one()) || v.entries().iter().any(|x| x.is_zero()));
}

#[test]
fn stochastic_bit_flip_chain() {
    let p = load_program(
        "model stochastic\nwires 1\ninit vec 1 0\ngate NOT 0\ngate NOT 0\n",
    )
    .unwrap();
    let t = dsl::simulate(&p, SimOptions::default()).unwrap();
    assert_eq!(t.final_state().to_string(), "1 0");
    assert_eq!(t.snapshots[0].to_string(), "0 1");
}

#[test]
fn invalid_wiring_is_rejected_with_its_line() {
    for (src, line) in [
        ("model quantum\nwires 2\ninit ket 00\ngate CNOT 1 0\n", 4),
        ("model quantum\nwires 3\ninit ket 000\ngate CNOT 0 2\n", 4),
        ("model quantum\nwires 1\ninit ket 0\n\ngate X 1\n", 5),
        ("model fuzzy\nwires 1\ninit ket 00\n", 3),
        ("model stochastic\nwires 1\ninit vec 1/2 1/3\n", 3),
    ] {
        let e = load_program(src).unwrap_err();
        assert!(e.to_string().starts_with(&format!("line {line}")), "{src}: {e}");
    }
}
