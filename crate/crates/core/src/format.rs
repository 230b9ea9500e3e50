//! Line-oriented text formats for algebras, extending systems and matrices.
//!
//! Algebra files:
//!
//! ```text
//! # aff(2) over F5
//! field F5
//! dim 2
//! names e1 e2
//! [1,2] = 0,1
//! ```
//!
//! Indices are 1-based. Unlisted brackets are zero. A system file starts
//! with the algebra `g` and adds
//!
//! ```text
//! vdim 2
//! vnames x y
//! left 1,2 = 1,0     # e_x <- e_a, a vector in V
//! right 1,2 = 0,0,1  # e_x -> e_a, a vector in g
//! theta 1,2 = ...    # in g
//! quasi 1,2 = ...    # {e_x, e_y} in V
//! ```
//!
//! Matrices on the command line are written row by row, `1,0;0,1`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lie::{BracketEntry, LieAlgebra};
use crate::linalg::{Field, Matrix, Scalar};
use crate::products::ExtendingSystem;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn at_line<T>(line: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } => e,
        other => parse_err(line, other.to_string()),
    })
}

fn parse_vector(field: Field, text: &str, len: usize, line: usize) -> Result<Vec<Scalar>> {
    let v = text
        .split(',')
        .map(|s| at_line(line, field.parse_scalar(s.trim())))
        .collect::<Result<Vec<_>>>()?;
    if v.len() != len {
        return Err(parse_err(line, format!("expected {len} coefficients, found {}", v.len())));
    }
    Ok(v)
}

/// `i,j` with 1-based indices bounded by `bound_i`, `bound_j`.
fn parse_pair(text: &str, bound_i: usize, bound_j: usize, line: usize) -> Result<(usize, usize)> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| parse_err(line, format!("expected an index pair, found {text:?}")))?;
    let index = |s: &str, bound: usize| -> Result<usize> {
        let i: usize = s
            .trim()
            .parse()
            .map_err(|_| parse_err(line, format!("bad index {:?}", s.trim())))?;
        if i == 0 || i > bound {
            return Err(parse_err(line, format!("index {i} out of range 1..={bound}")));
        }
        Ok(i - 1)
    };
    Ok((index(a, bound_i)?, index(b, bound_j)?))
}

fn format_vector(v: &[Scalar]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

struct Header {
    field: Option<Field>,
    dim: Option<usize>,
    names: Option<Vec<String>>,
}

/// Meaningful lines with their 1-based numbers, comments stripped.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn header_line(h: &mut Header, no: usize, line: &str) -> Result<bool> {
    let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
    let rest = rest.trim();
    match key {
        "field" => {
            h.field = Some(at_line(no, rest.parse())?);
        }
        "dim" => {
            h.dim = Some(rest.parse().map_err(|_| parse_err(no, format!("bad dimension {rest:?}")))?);
        }
        "names" => {
            h.names = Some(rest.split_whitespace().map(String::from).collect());
        }
        _ => return Ok(false),
    }
    Ok(true)
}

fn bracket_line(rest: &str, no: usize) -> Result<(&str, &str)> {
    let (lhs, rhs) = rest
        .split_once('=')
        .ok_or_else(|| parse_err(no, "expected `=`"))?;
    Ok((lhs.trim(), rhs.trim()))
}

/// Parses an algebra file. Duplicate and Jacobi failures keep their
/// structured errors.
pub fn parse_algebra(text: &str) -> Result<LieAlgebra> {
    let mut h = Header {
        field: None,
        dim: None,
        names: None,
    };
    let mut raw: Vec<(usize, &str)> = Vec::new();
    for (no, line) in lines(text) {
        if line.starts_with('[') {
            raw.push((no, line));
        } else if !header_line(&mut h, no, line)? {
            return Err(parse_err(no, format!("unrecognised line {line:?}")));
        }
    }
    let field = h.field.ok_or_else(|| parse_err(0, "missing `field` header"))?;
    let dim = h.dim.ok_or_else(|| parse_err(0, "missing `dim` header"))?;
    let entries = parse_brackets(field, dim, &raw)?;
    match h.names {
        Some(names) => LieAlgebra::new(field, names, entries),
        None => LieAlgebra::with_default_names(field, dim, entries),
    }
}

fn parse_brackets(field: Field, dim: usize, raw: &[(usize, &str)]) -> Result<Vec<BracketEntry>> {
    raw.iter()
        .map(|&(no, line)| {
            let (lhs, rhs) = bracket_line(line, no)?;
            let inner = lhs
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| parse_err(no, format!("expected `[i,j]`, found {lhs:?}")))?;
            let (i, j) = parse_pair(inner, dim, dim, no)?;
            Ok((i, j, parse_vector(field, rhs, dim, no)?))
        })
        .collect()
}

/// Writes the canonical text form; `parse_algebra` reads it back to an
/// equal algebra.
pub fn serialize_algebra(l: &LieAlgebra) -> String {
    let mut out = String::new();
    writeln!(out, "field {}", l.field()).unwrap();
    writeln!(out, "dim {}", l.dim()).unwrap();
    if l.dim() > 0 {
        writeln!(out, "names {}", l.names().join(" ")).unwrap();
    }
    for (i, j, v) in l.entries() {
        writeln!(out, "[{},{}] = {}", i + 1, j + 1, format_vector(&v)).unwrap();
    }
    out
}

/// Parses a system file: an algebra `g` plus `vdim`, optional `vnames` and
/// `left`/`right`/`theta`/`quasi` lines.
pub fn parse_system(text: &str) -> Result<ExtendingSystem> {
    let mut h = Header {
        field: None,
        dim: None,
        names: None,
    };
    let mut vdim = None;
    let mut vnames: Option<Vec<String>> = None;
    let mut brackets = Vec::new();
    let mut maps = Vec::new();
    for (no, line) in lines(text) {
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match key {
            _ if line.starts_with('[') => brackets.push((no, line)),
            "vdim" => {
                vdim = Some(
                    rest.trim()
                        .parse::<usize>()
                        .map_err(|_| parse_err(no, format!("bad dimension {:?}", rest.trim())))?,
                )
            }
            "vnames" => vnames = Some(rest.split_whitespace().map(String::from).collect()),
            "left" | "right" | "theta" | "quasi" => maps.push((no, key, rest.trim())),
            _ if header_line(&mut h, no, line)? => {}
            _ => return Err(parse_err(no, format!("unrecognised line {line:?}"))),
        }
    }
    let field = h.field.ok_or_else(|| parse_err(0, "missing `field` header"))?;
    let n = h.dim.ok_or_else(|| parse_err(0, "missing `dim` header"))?;
    let m = vdim.ok_or_else(|| parse_err(0, "missing `vdim` header"))?;
    let entries = parse_brackets(field, n, &brackets)?;
    let g = match h.names {
        Some(names) => LieAlgebra::new(field, names, entries)?,
        None => LieAlgebra::with_default_names(field, n, entries)?,
    };
    let mut sys = ExtendingSystem::zero(g, m);
    if let Some(names) = vnames {
        sys = sys.with_v_names(names)?;
    }
    let mut seen = std::collections::HashSet::new();
    for (no, key, rest) in maps {
        let (lhs, rhs) = bracket_line(rest, no)?;
        let (bi, bj, len) = match key {
            "left" => (m, n, m),
            "right" => (m, n, n),
            "theta" => (m, m, n),
            _ => (m, m, m),
        };
        let (i, j) = parse_pair(lhs, bi, bj, no)?;
        let symmetric = matches!(key, "theta" | "quasi");
        let slot = if symmetric { (key, i.min(j), i.max(j)) } else { (key, i, j) };
        if !seen.insert(slot) {
            return Err(parse_err(no, format!("duplicate {key} entry ({},{})", i + 1, j + 1)));
        }
        let v = parse_vector(field, rhs, len, no)?;
        at_line(
            no,
            match key {
                "left" => sys.set_left(i, j, v),
                "right" => sys.set_right(i, j, v),
                "theta" => sys.set_theta(i, j, v),
                _ => sys.set_quasi(i, j, v),
            },
        )?;
    }
    Ok(sys)
}

pub fn serialize_system(sys: &ExtendingSystem) -> String {
    let (n, m) = (sys.g_dim(), sys.v_dim());
    let mut out = serialize_algebra(sys.g());
    writeln!(out, "vdim {m}").unwrap();
    if m > 0 {
        writeln!(out, "vnames {}", sys.v_names().join(" ")).unwrap();
    }
    let nonzero = |v: &[Scalar]| v.iter().any(|c| !c.is_zero());
    for x in 0..m {
        for a in 0..n {
            if nonzero(sys.left(x, a)) {
                writeln!(out, "left {},{} = {}", x + 1, a + 1, format_vector(sys.left(x, a))).unwrap();
            }
        }
    }
    for x in 0..m {
        for a in 0..n {
            if nonzero(sys.right(x, a)) {
                writeln!(out, "right {},{} = {}", x + 1, a + 1, format_vector(sys.right(x, a))).unwrap();
            }
        }
    }
    for x in 0..m {
        for y in x + 1..m {
            let t = sys.theta(x, y);
            if nonzero(&t) {
                writeln!(out, "theta {},{} = {}", x + 1, y + 1, format_vector(&t)).unwrap();
            }
        }
    }
    for x in 0..m {
        for y in x + 1..m {
            let q = sys.quasi(x, y);
            if nonzero(&q) {
                writeln!(out, "quasi {},{} = {}", x + 1, y + 1, format_vector(&q)).unwrap();
            }
        }
    }
    out
}

/// `"1,0;0,1"`: rows separated by `;`, entries by `,`.
pub fn parse_matrix(field: Field, text: &str) -> Result<Matrix> {
    let rows = text
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|s| field.parse_scalar(s.trim()))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, &rows)
}

pub fn format_matrix(m: &Matrix) -> String {
    m.row_vectors()
        .iter()
        .map(|r| format_vector(r))
        .collect::<Vec<_>>()
        .join(";")
}
