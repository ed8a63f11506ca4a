//! Matrix and vector text format.
//!
//! ```text
//! # comment
//! instance fuzz-mv 2 2
//! 0 1
//! 1 0
//! ```
//!
//! One row per line, entries separated by whitespace. A file with a single
//! column is read as a (column) vector.

use std::fmt::Display;

use crate::error::{AlgebraError, TextError};
use crate::linalg::{SMatrix, SVector};
use crate::scalar::{
    format_complex, format_rational, parse_complex, parse_rational, ComplexScalar, Rational,
    UnitScalar,
};
use crate::semiring::{self, make_instance, AnyInstance, SemiringInstance};

#[derive(Debug, Clone, PartialEq)]
pub enum AnyMatrix {
    Unit(SMatrix<UnitScalar>),
    Rational(SMatrix<Rational>),
    Complex(SMatrix<ComplexScalar>),
}

#[derive(Debug, Clone, PartialEq)]
pub enum AnyVector {
    Unit(SVector<UnitScalar>),
    Rational(SVector<Rational>),
    Complex(SVector<ComplexScalar>),
}

/// Either shape, as read from a file.
#[derive(Debug, Clone, PartialEq)]
pub enum Parsed {
    Matrix(AnyMatrix),
    Vector(AnyVector),
}

fn to_complex_unit(x: &UnitScalar) -> ComplexScalar {
    ComplexScalar::new(x.to_f64(), 0.0)
}

fn to_complex_rational(x: &Rational) -> ComplexScalar {
    use num_traits::ToPrimitive;
    ComplexScalar::new(x.to_f64().unwrap_or(f64::NAN), 0.0)
}

impl AnyMatrix {
    pub fn instance_name(&self) -> &'static str {
        match self {
            AnyMatrix::Unit(m) => m.instance().name(),
            AnyMatrix::Rational(m) => m.instance().name(),
            AnyMatrix::Complex(m) => m.instance().name(),
        }
    }

    pub fn rows(&self) -> usize {
        match self {
            AnyMatrix::Unit(m) => m.rows(),
            AnyMatrix::Rational(m) => m.rows(),
            AnyMatrix::Complex(m) => m.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            AnyMatrix::Unit(m) => m.cols(),
            AnyMatrix::Rational(m) => m.cols(),
            AnyMatrix::Complex(m) => m.cols(),
        }
    }

    pub fn to_fuzzy(&self) -> Option<SMatrix<UnitScalar>> {
        match self {
            AnyMatrix::Unit(m) if m.instance().name() == "fuzz-mv" => Some(m.clone()),
            _ => None,
        }
    }

    pub fn to_boolean(&self) -> Option<SMatrix<UnitScalar>> {
        match self {
            AnyMatrix::Unit(m) if m.instance().name() == "boolean" => Some(m.clone()),
            _ => None,
        }
    }

    /// Probability matrices; boolean matrices are promoted.
    pub fn to_probability(&self) -> Option<SMatrix<Rational>> {
        match self {
            AnyMatrix::Rational(m) => Some(m.clone()),
            AnyMatrix::Unit(m) if m.instance().name() == "boolean" => {
                Some(m.map(&semiring::probability(), UnitScalar::to_rational))
            }
            _ => None,
        }
    }

    /// Complex matrices; boolean and probability matrices are promoted.
    pub fn to_complex(&self) -> Option<SMatrix<ComplexScalar>> {
        match self {
            AnyMatrix::Complex(m) => Some(m.clone()),
            AnyMatrix::Rational(m) => Some(m.map(&semiring::complex(), to_complex_rational)),
            AnyMatrix::Unit(m) if m.instance().name() == "boolean" => {
                Some(m.map(&semiring::complex(), to_complex_unit))
            }
            _ => None,
        }
    }
}

impl AnyVector {
    pub fn instance_name(&self) -> &'static str {
        match self {
            AnyVector::Unit(v) => v.instance().name(),
            AnyVector::Rational(v) => v.instance().name(),
            AnyVector::Complex(v) => v.instance().name(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            AnyVector::Unit(v) => v.len(),
            AnyVector::Rational(v) => v.len(),
            AnyVector::Complex(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn to_fuzzy(&self) -> Option<SVector<UnitScalar>> {
        match self {
            AnyVector::Unit(v) if v.instance().name() == "fuzz-mv" => Some(v.clone()),
            _ => None,
        }
    }

    pub fn to_boolean(&self) -> Option<SVector<UnitScalar>> {
        match self {
            AnyVector::Unit(v) if v.instance().name() == "boolean" => Some(v.clone()),
            _ => None,
        }
    }

    pub fn to_probability(&self) -> Option<SVector<Rational>> {
        match self {
            AnyVector::Rational(v) => Some(v.clone()),
            AnyVector::Unit(v) if v.instance().name() == "boolean" => Some(SVector::from_parts(
                &semiring::probability(),
                v.entries().iter().map(UnitScalar::to_rational).collect(),
            )),
            _ => None,
        }
    }

    pub fn to_complex(&self) -> Option<SVector<ComplexScalar>> {
        let c = semiring::complex();
        match self {
            AnyVector::Complex(v) => Some(v.clone()),
            AnyVector::Rational(v) => Some(SVector::from_parts(
                &c,
                v.entries().iter().map(to_complex_rational).collect(),
            )),
            AnyVector::Unit(v) if v.instance().name() == "boolean" => Some(SVector::from_parts(
                &c,
                v.entries().iter().map(to_complex_unit).collect(),
            )),
            _ => None,
        }
    }
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> TextError {
    TextError::Syntax { line, col, msg: msg.into() }
}

/// Byte column (1-based) of each whitespace-separated token.
pub(crate) fn tokens_with_columns(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(before, _)| before)
}

fn read_grid<T: Clone + Display>(
    instance: &SemiringInstance<T>,
    body: &[(usize, &str)],
    rows: usize,
    cols: usize,
    parse: impl Fn(&str) -> Result<T, String>,
) -> Result<Vec<Vec<T>>, TextError> {
    let mut out = Vec::with_capacity(rows);
    for &(line_no, line) in body {
        let toks = tokens_with_columns(strip_comment(line));
        if toks.is_empty() {
            continue;
        }
        if out.len() == rows {
            return Err(syntax(line_no, toks[0].0, format!("more than {rows} rows")));
        }
        if toks.len() != cols {
            return Err(syntax(line_no, 1, format!("expected {cols} entries, found {}", toks.len())));
        }
        let mut row = Vec::with_capacity(cols);
        for (col, tok) in toks {
            let x = parse(tok).map_err(|e| syntax(line_no, col, e))?;
            if !instance.contains(&x) {
                return Err(syntax(
                    line_no,
                    col,
                    format!("{tok} is not in the carrier of {}", instance.name()),
                ));
            }
            row.push(x);
        }
        out.push(row);
    }
    if out.len() != rows {
        let last = body.last().map_or(1, |(n, _)| *n);
        return Err(syntax(last, 1, format!("expected {rows} rows, found {}", out.len())));
    }
    Ok(out)
}

fn finish<T: Clone + Display>(
    instance: &SemiringInstance<T>,
    rows: Vec<Vec<T>>,
    as_vector: bool,
) -> Result<Result<SVector<T>, SMatrix<T>>, AlgebraError> {
    if as_vector {
        let entries = rows.into_iter().flatten().collect();
        SVector::new(instance, entries).map(Ok)
    } else {
        SMatrix::from_rows(instance, rows).map(Err)
    }
}

/// Parses the matrix/vector text format.
pub fn parse_text(text: &str) -> Result<Parsed, TextError> {
    let lines: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect();
    let header_pos = lines
        .iter()
        .position(|(_, l)| !strip_comment(l).trim().is_empty())
        .ok_or_else(|| syntax(1, 1, "missing `instance` header"))?;
    let (line_no, header) = lines[header_pos];
    let toks = tokens_with_columns(strip_comment(header));
    if toks[0].1 != "instance" {
        return Err(syntax(line_no, toks[0].0, format!("expected `instance`, found `{}`", toks[0].1)));
    }
    if toks.len() != 4 {
        return Err(syntax(line_no, 1, "header must be `instance <name> <rows> <cols>`"));
    }
    let instance =
        make_instance(toks[1].1).map_err(|e| syntax(line_no, toks[1].0, e.to_string()))?;
    let dim = |(col, tok): (usize, &str)| -> Result<usize, TextError> {
        match tok.parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(syntax(line_no, col, format!("invalid dimension `{tok}`"))),
        }
    };
    let rows = dim(toks[2])?;
    let cols = dim(toks[3])?;
    let body = &lines[header_pos + 1..];
    let as_vector = cols == 1;
    Ok(match instance {
        AnyInstance::Unit(s) => {
            let grid = read_grid(&s, body, rows, cols, |t| {
                t.parse::<UnitScalar>().map_err(|e| e.to_string())
            })?;
            match finish(&s, grid, as_vector)? {
                Ok(v) => Parsed::Vector(AnyVector::Unit(v)),
                Err(m) => Parsed::Matrix(AnyMatrix::Unit(m)),
            }
        }
        AnyInstance::Rational(s) => {
            let grid =
                read_grid(&s, body, rows, cols, |t| parse_rational(t).map_err(|e| e.to_string()))?;
            match finish(&s, grid, as_vector)? {
                Ok(v) => Parsed::Vector(AnyVector::Rational(v)),
                Err(m) => Parsed::Matrix(AnyMatrix::Rational(m)),
            }
        }
        AnyInstance::Complex(s) => {
            let grid =
                read_grid(&s, body, rows, cols, |t| parse_complex(t).map_err(|e| e.to_string()))?;
            match finish(&s, grid, as_vector)? {
                Ok(v) => Parsed::Vector(AnyVector::Complex(v)),
                Err(m) => Parsed::Matrix(AnyMatrix::Complex(m)),
            }
        }
    })
}

fn render_rows(
    name: &str,
    rows: usize,
    cols: usize,
    get: impl Fn(usize, usize) -> String,
) -> String {
    let mut out = format!("instance {name} {rows} {cols}\n");
    for i in 0..rows {
        let line: Vec<String> = (0..cols).map(|j| get(i, j)).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Renders a matrix in the text format (header included).
pub fn render_matrix(m: &AnyMatrix) -> String {
    let (name, r, c) = (m.instance_name(), m.rows(), m.cols());
    match m {
        AnyMatrix::Unit(m) => render_rows(name, r, c, |i, j| m.get(i, j).to_string()),
        AnyMatrix::Rational(m) => render_rows(name, r, c, |i, j| format_rational(m.get(i, j))),
        AnyMatrix::Complex(m) => render_rows(name, r, c, |i, j| format_complex(m.get(i, j))),
    }
}

/// Renders a vector in the text format (header plus one entry per line).
pub fn render_vector_file(v: &AnyVector) -> String {
    let mut out = format!("instance {} {} 1\n", v.instance_name(), v.len());
    for entry in vector_entries(v) {
        out.push_str(&entry);
        out.push('\n');
    }
    out
}

/// Entries of a vector as printed scalars: exact rationals, or twelve
/// significant digits for complex amplitudes.
pub fn vector_entries(v: &AnyVector) -> Vec<String> {
    match v {
        AnyVector::Unit(v) => v.entries().iter().map(ToString::to_string).collect(),
        AnyVector::Rational(v) => v.entries().iter().map(format_rational).collect(),
        AnyVector::Complex(v) => v.entries().iter().map(format_complex).collect(),
    }
}

/// Single-line rendering used for printed states.
pub fn render_vector_line(v: &AnyVector) -> String {
    vector_entries(v).join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fuzzy_matrix() {
        let text = "# fuzzy identity\ninstance fuzz-mv 2 2\n0 1\n1 0\n";
        let Parsed::Matrix(m) = parse_text(text).unwrap() else { panic!("expected matrix") };
        let f = semiring::fuzz_mv();
        assert_eq!(m.to_fuzzy().unwrap(), SMatrix::identity(&f, 2));
        assert_eq!(render_matrix(&m), "instance fuzz-mv 2 2\n0 1\n1 0\n");
    }

    #[test]
    fn parses_column_vector() {
        let text = "instance probability 2 1\n1/2\n0.5\n";
        let Parsed::Vector(v) = parse_text(text).unwrap() else { panic!("expected vector") };
        assert_eq!(render_vector_line(&v), "1/2 1/2");
        assert_eq!(parse_text(&render_vector_file(&v)).unwrap(), Parsed::Vector(v));
    }

    #[test]
    fn reports_positions() {
        let err = parse_text("instance fuzz-mv 2 2\n0 1\n1 2/0\n").unwrap_err();
        assert!(matches!(err, TextError::Syntax { line: 3, col: 3, .. }), "{err:?}");
        let err = parse_text("instance fuzz-mv 2 2\n0 1\n").unwrap_err();
        assert!(matches!(err, TextError::Syntax { .. }));
        let err = parse_text("instance tropical 2 2\n").unwrap_err();
        assert!(matches!(err, TextError::Syntax { line: 1, col: 10, .. }), "{err:?}");
        let err = parse_text("instance boolean 1 2\n0 1/2\n").unwrap_err();
        assert!(matches!(err, TextError::Syntax { line: 2, col: 3, .. }), "{err:?}");
        assert!(parse_text("matrix 2 2\n").is_err());
        assert!(parse_text("").is_err());
    }

    #[test]
    fn promotes_boolean_matrices() {
        let Parsed::Matrix(m) = parse_text("instance boolean 2 2\n0 1\n1 0\n").unwrap() else {
            panic!()
        };
        assert!(m.to_probability().is_some());
        assert!(m.to_complex().is_some());
        assert!(m.to_fuzzy().is_none());
    }
}
