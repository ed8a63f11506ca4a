use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn fuzzcomp(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fuzzcomp"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn check_reads_stdin() {
    let o = fuzzcomp(&["check", "fuzzy", "-"], Some("instance fuzz-mv 2 2\n0 1\n1 0\n"));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "ok\n");
    let o = fuzzcomp(&["check", "stochastic", "-"], Some("instance probability 2 2\n1/2 1/2\n1/2 0\n"));
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "fail column 1 sum 1/2\n");
}

#[test]
fn fuzzy_column_violation_names_the_column() {
    let o = fuzzcomp(&["check", "fuzzy", "-"], Some("instance fuzz-mv 2 2\n1/4 0\n1/2 1\n"));
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "fail column 0 min 1/4\n");
}

#[test]
fn parse_errors_exit_2_with_position() {
    let o = fuzzcomp(&["check", "fuzzy", "-"], Some("instance fuzz-mv 1 2\n0 3/0\n"));
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
    let o = fuzzcomp(&["simulate", "-"], Some("model fuzzy\nwires 1\ninit vec 0 2/0\n"));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("line 3, column 12"));
}

#[test]
fn validation_errors_exit_1() {
    let o = fuzzcomp(&["simulate", "-"], Some("model fuzzy\nwires 1\ninit ket 0\ngate H 0\n"));
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 4"), "{err}");
}

#[test]
fn quantum_apply_prints_twelve_digits() {
    let d = tempfile::tempdir().unwrap();
    let h = write(d.path(), "h.mat", "instance complex 2 2\n0.7071067811865476 0.7071067811865476\n0.7071067811865476 -0.7071067811865476\n");
    let z = write(d.path(), "z.vec", "instance complex 2 1\n1\n0\n");
    let o = fuzzcomp(&["apply", "quantum", &h, &z], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0.707106781187 0.707106781187\n");
}

#[test]
fn kron_of_matrices_is_a_matrix_file() {
    let d = tempfile::tempdir().unwrap();
    let id = write(d.path(), "id.mat", "instance fuzz-mv 2 2\n0 1\n1 0\n");
    let o = fuzzcomp(&["kron", "fuzzy", &id, &id], None);
    assert_eq!(stdout(&o), "instance fuzz-mv 4 4\n0 1 1 1\n1 0 1 1\n1 1 0 1\n1 1 1 0\n");
    let x = write(d.path(), "x.mat", "instance boolean 2 2\n0 1\n1 0\n");
    let o = fuzzcomp(&["kron", "classical", &x, &x], None);
    assert_eq!(stdout(&o), "instance boolean 4 4\n0 0 0 1\n0 0 1 0\n0 1 0 0\n1 0 0 0\n");
}

#[test]
fn simulate_resolves_gate_files_next_to_the_circuit() {
    let d = tempfile::tempdir().unwrap();
    write(d.path(), "j.mat", "instance fuzz-mv 2 2\n1 0\n0 1\n");
    let c = write(d.path(), "c.circ", "model fuzzy\nwires 2\ninit vec 0 1 1 1\ngate @j.mat 1\n");
    let o = fuzzcomp(&["simulate", &c], None);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), "final 1 1 0 1\n");
    let bad = write(d.path(), "bad.circ", "model fuzzy\nwires 1\ninit ket 0\ngate @missing.mat 0\n");
    assert_eq!(fuzzcomp(&["simulate", &bad], None).status.code(), Some(2));
}

#[test]
fn classical_cnot_and_seeded_bell_sampling() {
    let o = fuzzcomp(&["simulate", "-"], Some("model classical\nwires 2\ninit ket 10\ngate CNOT 0 1\n"));
    assert_eq!(stdout(&o), "final ket 11 index 3\n");
    let bell = "model quantum\nwires 2\ninit ket 00\ngate H 1\ngate CNOT 0 1\nmeasure seed 7\n";
    let a = stdout(&fuzzcomp(&["simulate", "-"], Some(bell)));
    let b = stdout(&fuzzcomp(&["simulate", "-"], Some(bell)));
    assert_eq!(a, b);
    let last = a.lines().last().unwrap();
    assert!(last == "measure seed 7 index 0" || last == "measure seed 7 index 3", "{a}");
}

#[test]
fn synth_output_simulates_to_the_table() {
    let o = fuzzcomp(&["synth", "-"], Some("1 1\n"));
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("gate OR"), "{text}");
    let o = fuzzcomp(&["synth", "-"], Some("0 1\n"));
    assert!(!stdout(&o).contains("gate "), "identity needs no gates");
    assert_eq!(fuzzcomp(&["synth", "-"], Some("0 1 1\n")).status.code(), Some(2));
}

#[test]
fn verify_exit_status_tracks_failures() {
    let o = fuzzcomp(&["verify", "--grid", "coarse"], None);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.lines().filter(|l| l.starts_with("ok ")).count() >= 10, "{out}");
    let o = fuzzcomp(&["verify", "--grid", "coarse", "--check", "semiring", "--mutant", "clamped-subtraction"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}
