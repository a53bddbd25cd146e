//! The line-oriented `.lpoly` text format.
//!
//! ```text
//! # comment
//! dim 2
//! label 1 0 ; 0
//! label -1 -2 ; -5/2
//! ```
//!
//! Subdivision files concatenate several bodies separated by `---` lines.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;

use super::{Label, LabelledPolyhedron};
use crate::error::{Error, Result};
use crate::lattice::Rational;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).ok()?;
        let d = BigInt::from_str(d.trim()).ok()?;
        if d == BigInt::from(0) {
            return None;
        }
        Some(Rational::new(n, d))
    } else {
        BigInt::from_str(s).ok().map(Rational::from_integer)
    }
}

/// Parse one body; line numbers are carried with each line.
fn parse_body(lines: &[(usize, &str)]) -> Result<LabelledPolyhedron> {
    let mut dim: Option<usize> = None;
    let mut labels = Vec::new();
    for &(no, raw) in lines {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match key {
            "dim" => {
                if dim.is_some() {
                    return Err(parse_err(no, "duplicate dim line"));
                }
                let k = rest
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| parse_err(no, format!("bad dimension '{}'", rest.trim())))?;
                dim = Some(k);
            }
            "label" => {
                let k = dim.ok_or_else(|| parse_err(no, "label before dim line"))?;
                let (vs, r) = rest
                    .split_once(';')
                    .ok_or_else(|| parse_err(no, "expected '<v1> ... <vk> ; <r>'"))?;
                let v: Vec<BigInt> = vs
                    .split_whitespace()
                    .map(|t| BigInt::from_str(t).map_err(|_| parse_err(no, format!("bad integer '{t}'"))))
                    .collect::<Result<_>>()?;
                if v.len() != k {
                    return Err(parse_err(no, format!("expected {k} coordinates, found {}", v.len())));
                }
                let r = parse_rational(r)
                    .ok_or_else(|| parse_err(no, format!("bad rational '{}'", r.trim())))?;
                let label = Label::weighted(v, r).map_err(|e| parse_err(no, e.to_string()))?;
                labels.push(label);
            }
            other => return Err(parse_err(no, format!("unknown keyword '{other}'"))),
        }
    }
    let last = lines.last().map_or(1, |l| l.0);
    let k = dim.ok_or_else(|| parse_err(last, "missing dim line"))?;
    LabelledPolyhedron::new(k, labels).map_err(|e| parse_err(last, e.to_string()))
}

pub fn read_lpoly(text: &str) -> Result<LabelledPolyhedron> {
    let lines: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect();
    parse_body(&lines)
}

pub fn write_lpoly(p: &LabelledPolyhedron) -> String {
    let mut out = format!("dim {}\n", p.dim());
    for l in p.labels() {
        let _ = writeln!(out, "label {l}");
    }
    out
}

pub fn read_subdivision(text: &str) -> Result<Vec<LabelledPolyhedron>> {
    let mut blocks: Vec<Vec<(usize, &str)>> = vec![Vec::new()];
    for (i, line) in text.lines().enumerate() {
        if line.trim() == "---" {
            blocks.push(Vec::new());
        } else {
            blocks.last_mut().expect("nonempty").push((i + 1, line));
        }
    }
    blocks
        .iter()
        .filter(|b| b.iter().any(|(_, l)| !l.split('#').next().unwrap_or("").trim().is_empty()))
        .map(|b| parse_body(b))
        .collect()
}

pub fn write_subdivision(cells: &[LabelledPolyhedron]) -> String {
    cells.iter().map(write_lpoly).collect::<Vec<_>>().join("---\n")
}
