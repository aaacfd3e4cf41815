//! The `.hopf` text format.
//!
//! ```text
//! hopf kC2
//! dim 2
//! cyclotomic 2
//! MULT
//! 0 0 0 1
//! ...
//! ```
//!
//! Sections `MULT` and `COMULT` hold lines `i j k <scalar>`, `UNIT` and
//! `COUNIT` hold `k <scalar>`, `ANTIPODE` holds `i j <scalar>`. Indices are
//! zero-based, `#` starts a comment and omitted entries are zero.

use std::fmt::Write as _;

use super::{HopfData, HopfTensors};
use crate::arith::{CycScalar, CyclotomicField, Field};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Section {
    Mult,
    Comult,
    Unit,
    Counit,
    Antipode,
}

impl Section {
    fn from_keyword(word: &str) -> Option<Section> {
        Some(match word {
            "MULT" => Section::Mult,
            "COMULT" => Section::Comult,
            "UNIT" => Section::Unit,
            "COUNIT" => Section::Counit,
            "ANTIPODE" => Section::Antipode,
            _ => return None,
        })
    }

    fn arity(self) -> usize {
        match self {
            Section::Mult | Section::Comult => 3,
            Section::Antipode => 2,
            Section::Unit | Section::Counit => 1,
        }
    }
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parses a `.hopf` document.
pub fn parse_hopf(text: &str) -> Result<HopfData> {
    let mut name = None;
    let mut dim: Option<usize> = None;
    let mut order: Option<u32> = None;
    let mut tensors: Option<HopfTensors> = None;
    let mut field = None;
    let mut section = None;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = strip_comment(raw);
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let column = line.len() - line.trim_start().len() + 1;
        if let Some(s) = Section::from_keyword(trimmed) {
            if tensors.is_none() {
                let d = dim.ok_or_else(|| parse_err(lineno, column, "section before `dim` header"))?;
                let n = order.unwrap_or(1);
                field = Some(CyclotomicField::new(n).map_err(|e| parse_err(lineno, column, e.to_string()))?);
                tensors = Some(HopfTensors::zeros(d));
            }
            section = Some(s);
            continue;
        }
        let (keyword, rest) = match trimmed.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (trimmed, ""),
        };
        if section.is_none() {
            match keyword {
                "hopf" => {
                    if rest.is_empty() {
                        return Err(parse_err(lineno, column, "missing algebra name"));
                    }
                    name = Some(rest.to_string());
                }
                "dim" => {
                    let d: usize =
                        rest.parse().map_err(|_| parse_err(lineno, column + 4, format!("bad dimension `{rest}`")))?;
                    if d == 0 {
                        return Err(parse_err(lineno, column + 4, "dimension must be positive"));
                    }
                    dim = Some(d);
                }
                "cyclotomic" => {
                    let n: u32 = rest
                        .parse()
                        .map_err(|_| parse_err(lineno, column + 11, format!("bad cyclotomic order `{rest}`")))?;
                    if n == 0 {
                        return Err(parse_err(lineno, column + 11, "cyclotomic order must be positive"));
                    }
                    order = Some(n);
                }
                other => return Err(parse_err(lineno, column, format!("unknown header `{other}`"))),
            }
            continue;
        }
        let s = section.expect("checked above");
        let t = tensors.as_mut().expect("created with the first section");
        let d = dim.expect("dim precedes sections");
        let k_field = field.as_ref().expect("created with the first section");

        let mut indices = Vec::with_capacity(3);
        let mut rest = trimmed;
        for _ in 0..s.arity() {
            let (tok, tail) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
            let col = column + (trimmed.len() - rest.len());
            if tok.is_empty() {
                return Err(parse_err(lineno, col, "missing index"));
            }
            let i: usize = tok.parse().map_err(|_| parse_err(lineno, col, format!("bad index `{tok}`")))?;
            if i >= d {
                return Err(parse_err(lineno, col, format!("index {i} out of range for dimension {d}")));
            }
            indices.push(i);
            rest = tail.trim_start();
        }
        let col = column + (trimmed.len() - rest.len());
        if rest.is_empty() {
            return Err(parse_err(lineno, col, "missing scalar"));
        }
        let value = CycScalar::parse(rest, k_field).map_err(|e| match e {
            Error::Parse { column: c, message, .. } => parse_err(lineno, col + c.saturating_sub(1), message),
            other => parse_err(lineno, col, other.to_string()),
        })?;
        let slot = match s {
            Section::Mult => &mut t.mult[(indices[0] * d + indices[1]) * d + indices[2]],
            Section::Comult => &mut t.comult[(indices[0] * d + indices[1]) * d + indices[2]],
            Section::Antipode => &mut t.antipode[indices[0] * d + indices[1]],
            Section::Unit => &mut t.unit[indices[0]],
            Section::Counit => &mut t.counit[indices[0]],
        };
        *slot = value;
    }

    let name = name.ok_or_else(|| parse_err(1, 1, "missing `hopf <name>` header"))?;
    let dim = dim.ok_or_else(|| parse_err(1, 1, "missing `dim` header"))?;
    let (tensors, field) = match (tensors, field) {
        (Some(t), Some(f)) => (t, f),
        _ => (HopfTensors::zeros(dim), CyclotomicField::new(order.unwrap_or(1))?),
    };
    HopfData::new(name, dim, field, tensors)
}

/// Serializes to the `.hopf` format, writing nonzero entries only.
pub fn write_hopf(h: &HopfData) -> String {
    let d = h.dim();
    let mut out = String::new();
    let _ = writeln!(out, "hopf {}", h.name());
    let _ = writeln!(out, "dim {d}");
    let _ = writeln!(out, "cyclotomic {}", h.field().order());
    let t = h.tensors();
    let emit3 = |out: &mut String, title: &str, data: &[CycScalar]| {
        let _ = writeln!(out, "{title}");
        for (idx, c) in data.iter().enumerate() {
            if !c.is_zero() {
                let _ = writeln!(out, "{} {} {} {}", idx / (d * d), (idx / d) % d, idx % d, c);
            }
        }
    };
    emit3(&mut out, "MULT", &t.mult);
    emit3(&mut out, "COMULT", &t.comult);
    for (title, data) in [("UNIT", &t.unit), ("COUNIT", &t.counit)] {
        let _ = writeln!(out, "{title}");
        for (k, c) in data.iter().enumerate() {
            if !c.is_zero() {
                let _ = writeln!(out, "{k} {c}");
            }
        }
    }
    let _ = writeln!(out, "ANTIPODE");
    for (idx, c) in t.antipode.iter().enumerate() {
        if !c.is_zero() {
            let _ = writeln!(out, "{} {} {}", idx / d, idx % d, c);
        }
    }
    out
}
