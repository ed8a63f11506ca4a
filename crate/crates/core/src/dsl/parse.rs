use crate::dsl::ast::{CircuitProgram, GateRef, InitSpec, InitValues, Pos, Step};
use crate::dsl::DslError;
use crate::models::Model;
use crate::scalar::{parse_complex, parse_rational, LiteralError, UnitScalar};
use crate::textio::tokens_with_columns;

fn syntax(pos: Pos, msg: impl Into<String>) -> DslError {
    DslError::Syntax { line: pos.line, col: pos.col, msg: msg.into() }
}

enum RawInit {
    Ket(Vec<bool>),
    Vec(Vec<(Pos, String)>),
}

fn once<T>(slot: &mut Option<(T, Pos)>, value: T, pos: Pos, name: &str) -> Result<(), DslError> {
    if let Some((_, first)) = slot {
        return Err(syntax(pos, format!("duplicate `{name}` directive (first at line {})", first.line)));
    }
    *slot = Some((value, pos));
    Ok(())
}

fn convert<T>(
    raw: &[(Pos, String)],
    parse: impl Fn(&str) -> Result<T, LiteralError>,
) -> Result<Vec<T>, DslError> {
    raw.iter()
        .map(|(pos, tok)| parse(tok).map_err(|e| syntax(*pos, e.to_string())))
        .collect()
}

/// Parses `.circ` source. Only syntax is checked here; see
/// [`validate`](crate::dsl::validate) for semantics.
pub fn parse_circuit(text: &str) -> Result<CircuitProgram, DslError> {
    let mut model: Option<(Model, Pos)> = None;
    let mut wires: Option<(usize, Pos)> = None;
    let mut init: Option<(RawInit, Pos)> = None;
    let mut measure: Option<(u64, Pos)> = None;
    let mut steps = Vec::new();
    let mut last_line = 1;

    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let code = line.split_once('#').map_or(line, |(before, _)| before);
        let toks = tokens_with_columns(code);
        let Some(&(col, directive)) = toks.first() else { continue };
        let at = |col: usize| Pos { line: line_no, col };
        let args = &toks[1..];
        let end = at(code.trim_end().len() + 1);
        match directive {
            "model" => {
                let [(c, name)] = args else {
                    return Err(syntax(at(col), "expected `model <classical|stochastic|quantum|fuzzy>`"));
                };
                let m = name.parse::<Model>().map_err(|e| syntax(at(*c), e))?;
                once(&mut model, m, at(col), "model")?;
            }
            "wires" => {
                let [(c, n)] = args else {
                    return Err(syntax(at(col), "expected `wires <count>`"));
                };
                let n = match n.parse::<usize>() {
                    Ok(n) if n > 0 => n,
                    _ => return Err(syntax(at(*c), format!("invalid wire count `{n}`"))),
                };
                once(&mut wires, n, at(col), "wires")?;
            }
            "init" => {
                let raw = match args {
                    [(_, "ket"), (c, bits)] => {
                        let parsed: Option<Vec<bool>> = bits
                            .chars()
                            .map(|ch| match ch {
                                '0' => Some(false),
                                '1' => Some(true),
                                _ => None,
                            })
                            .collect();
                        RawInit::Ket(parsed.ok_or_else(|| syntax(at(*c), format!("`{bits}` is not a bit string")))?)
                    }
                    [(_, "ket"), ..] => return Err(syntax(at(col), "expected `init ket <bits>`")),
                    [(c, "vec")] => return Err(syntax(at(*c + 3), "`init vec` needs at least one scalar")),
                    [(_, "vec"), rest @ ..] => {
                        RawInit::Vec(rest.iter().map(|(c, t)| (at(*c), t.to_string())).collect())
                    }
                    [(c, other), ..] => {
                        return Err(syntax(at(*c), format!("expected `ket` or `vec`, found `{other}`")))
                    }
                    [] => return Err(syntax(end, "expected `ket` or `vec`")),
                };
                once(&mut init, raw, at(col), "init")?;
            }
            "gate" => {
                if let Some((_, mpos)) = measure {
                    return Err(syntax(at(col), format!("`gate` after `measure` (line {})", mpos.line)));
                }
                let Some(((gc, name), wire_toks)) = args.split_first() else {
                    return Err(syntax(end, "expected `gate <NAME|@file> <wires…>`"));
                };
                let gate = match name.strip_prefix('@') {
                    Some("") => return Err(syntax(at(*gc), "empty gate file path")),
                    Some(path) => GateRef::File(path.to_string()),
                    None => GateRef::Named(name.to_string()),
                };
                if wire_toks.is_empty() {
                    return Err(syntax(end, "gate needs at least one wire"));
                }
                let wires = wire_toks
                    .iter()
                    .map(|(c, t)| t.parse::<usize>().map_err(|_| syntax(at(*c), format!("invalid wire `{t}`"))))
                    .collect::<Result<Vec<_>, _>>()?;
                steps.push(Step { gate, wires, pos: at(col) });
            }
            "measure" => {
                let seed = match args {
                    [(_, "seed"), (c, k)] => {
                        k.parse::<u64>().map_err(|_| syntax(at(*c), format!("invalid seed `{k}`")))?
                    }
                    _ => return Err(syntax(at(col), "expected `measure seed <int>`")),
                };
                once(&mut measure, seed, at(col), "measure")?;
            }
            other => return Err(syntax(at(col), format!("unknown directive `{other}`"))),
        }
    }

    let eof = Pos { line: last_line, col: 1 };
    let (model, _) = model.ok_or_else(|| syntax(eof, "missing `model` directive"))?;
    let (wire_count, _) = wires.ok_or_else(|| syntax(eof, "missing `wires` directive"))?;
    let (raw, init_pos) = init.ok_or_else(|| syntax(eof, "missing `init` directive"))?;
    let init = match raw {
        RawInit::Ket(bits) => InitSpec::Ket(bits),
        RawInit::Vec(raw) => InitSpec::Vec(match model {
            Model::Classical | Model::Fuzzy => InitValues::Unit(convert(&raw, str::parse::<UnitScalar>)?),
            Model::Stochastic => InitValues::Rational(convert(&raw, parse_rational)?),
            Model::Quantum => InitValues::Complex(convert(&raw, parse_complex)?),
        }),
    };
    Ok(CircuitProgram { model, wire_count, init, init_pos, steps, measure })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err_pos(text: &str) -> (usize, usize, String) {
        match parse_circuit(text) {
            Err(DslError::Syntax { line, col, msg }) => (line, col, msg),
            other => panic!("expected a syntax error, got {other:?}"),
        }
    }

    #[test]
    fn smallest_program() {
        let p = parse_circuit("model fuzzy\nwires 1\ninit ket 0\ngate FNOT 0").unwrap();
        assert_eq!(p.model, Model::Fuzzy);
        assert_eq!(p.wire_count, 1);
        assert_eq!(p.init, InitSpec::Ket(vec![false]));
        assert_eq!(p.steps.len(), 1);
        assert_eq!(p.steps[0].gate, GateRef::Named("FNOT".into()));
        assert_eq!(p.steps[0].pos, Pos { line: 4, col: 1 });
    }

    #[test]
    fn bell_preparation_shape() {
        let p = parse_circuit("model quantum\nwires 2\ninit ket 00\ngate H 0\ngate CNOT 0 1").unwrap();
        assert_eq!(p.model, Model::Quantum);
        let shape: Vec<(String, Vec<usize>)> =
            p.steps.iter().map(|s| (s.gate.to_string(), s.wires.clone())).collect();
        assert_eq!(shape, vec![("H".into(), vec![0]), ("CNOT".into(), vec![0, 1])]);
        assert_eq!(p.measure, None);
    }

    #[test]
    fn zero_denominator_is_reported_at_its_token() {
        let (line, col, msg) = err_pos("model fuzzy\nwires 1\ninit vec 0 2/0\ngate FNOT 0\n");
        assert_eq!((line, col), (3, 12));
        assert!(msg.contains("2/0"), "{msg}");
    }

    #[test]
    fn structural_errors() {
        assert!(err_pos("model fuzzy\nmodel quantum\n").2.contains("duplicate `model`"));
        assert_eq!(err_pos("model fuzzy\nwires 1\ninit ket 0\nfrobnicate 3\n").0, 4);
        assert!(err_pos("model fuzzy\nwires 1\n").2.contains("missing `init`"));
        assert!(err_pos("model fuzzy\nwires 0\n").2.contains("wire count"));
        assert_eq!(err_pos("model fuzzy\nwires 1\ninit ket 0x\n").1, 10);
        assert!(err_pos("model quantum\nwires 1\ninit ket 0\nmeasure seed 1\ngate X 0\n").2.contains("after"));
        assert!(err_pos("model analog\n").2.contains("unknown model"));
        assert_eq!(err_pos("model fuzzy\nwires 1\ninit ket 0\ngate FNOT a\n").1, 11);
    }

    #[test]
    fn comments_and_blank_lines() {
        let p = parse_circuit("# header\n\nmodel stochastic # tag\nwires 1\ninit vec 1/3 2/3\n").unwrap();
        assert_eq!(p.init, InitSpec::Vec(InitValues::Rational(vec![
            parse_rational("1/3").unwrap(),
            parse_rational("2/3").unwrap()
        ])));
        assert!(p.steps.is_empty());
    }

    #[test]
    fn display_round_trips() {
        let sources = [
            "model fuzzy\nwires 2\ninit vec 0 1/2 1 1\ngate FNOT 1\ngate @g.mat 0 1\n",
            "model quantum\nwires 1\ninit vec 0.6 0.8i\ngate H 0\nmeasure seed 9\n",
            "model quantum\nwires 1\ninit vec 0.7071067811865476 -0.7071067811865476-1e-30i\n",
            "model classical\nwires 3\ninit ket 101\ngate TOFFOLI 0 1 2\n",
        ];
        for src in sources {
            let p = parse_circuit(src).unwrap();
            let again = parse_circuit(&p.to_string()).unwrap();
            assert_eq!(p, again, "{src}");
            assert_eq!(p.to_string(), again.to_string());
        }
    }
}
