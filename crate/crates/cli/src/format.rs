//! JSON documents for Bol and Lie algebras.
//!
//! Emission is canonical: fixed key order, sparse entries with `i < j`
//! sorted lexicographically, zero entries dropped, scalars as reduced
//! fraction strings. Parsing accepts scalars as strings or JSON integers.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use bol_core::envelope::{EnvelopingLie, PairEndo};
use bol_core::lie::LieAlgebra;
use bol_core::linalg::{parse_scalar, render_scalar, Scalar};
use bol_core::{BolAlgebra, Matrix, Vector};
use num_traits::Zero;
use serde_json::{Map, Value};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
}

fn field_err(field: impl Into<String>, message: impl Into<String>) -> FormatError {
    FormatError::Field {
        field: field.into(),
        message: message.into(),
    }
}

type Result<T> = std::result::Result<T, FormatError>;

fn parse_json(text: &str) -> Result<Map<String, Value>> {
    let v: Value = serde_json::from_str(text).map_err(|e| FormatError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e
            .to_string()
            .split(" at line")
            .next()
            .unwrap_or_default()
            .to_string(),
    })?;
    match v {
        Value::Object(m) => Ok(m),
        _ => Err(field_err("document", "expected a JSON object")),
    }
}

fn reject_unknown(doc: &Map<String, Value>, allowed: &[&str]) -> Result<()> {
    match doc.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(field_err(k.as_str(), "unknown field")),
        None => Ok(()),
    }
}

fn scalar(v: &Value, field: &str) -> Result<Scalar> {
    let parsed = match v {
        Value::String(s) => parse_scalar(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_scalar(&n.to_string()),
        _ => None,
    };
    parsed.ok_or_else(|| {
        field_err(
            field,
            format!("expected a rational scalar like \"-3/4\", found {v}"),
        )
    })
}

fn index(v: &Value, field: &str, dim: usize) -> Result<usize> {
    let i = v
        .as_u64()
        .ok_or_else(|| field_err(field, format!("expected a basis index, found {v}")))?;
    if i as usize >= dim {
        return Err(field_err(
            field,
            format!("index {i} out of range for dimension {dim}"),
        ));
    }
    Ok(i as usize)
}

struct Header {
    name: String,
    dim: usize,
    basis: Vec<String>,
}

fn header(doc: &Map<String, Value>) -> Result<Header> {
    let name = doc
        .get("name")
        .ok_or_else(|| field_err("name", "missing"))?
        .as_str()
        .ok_or_else(|| field_err("name", "expected a string"))?
        .to_string();
    let dim = doc
        .get("dim")
        .ok_or_else(|| field_err("dim", "missing"))?
        .as_u64()
        .ok_or_else(|| field_err("dim", "expected a nonnegative integer"))? as usize;
    let basis = match doc.get("basis") {
        None => (0..dim).map(|i| format!("e{i}")).collect(),
        Some(Value::Array(items)) => {
            if items.len() != dim {
                return Err(field_err(
                    "basis",
                    format!("has {} labels for dimension {dim}", items.len()),
                ));
            }
            items
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    v.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| field_err(format!("basis[{i}]"), "expected a string"))
                })
                .collect::<Result<_>>()?
        }
        Some(_) => return Err(field_err("basis", "expected a list of strings")),
    };
    Ok(Header { name, dim, basis })
}

/// Reads `[i, j, ..., "p/q"]` entries with `i < j`; keys are the index
/// tuples, duplicates are rejected.
fn sparse(
    doc: &Map<String, Value>,
    key: &str,
    arity: usize,
    dim: usize,
) -> Result<BTreeMap<Vec<usize>, Scalar>> {
    let mut out = BTreeMap::new();
    let items = match doc.get(key) {
        None => return Ok(out),
        Some(Value::Array(items)) => items,
        Some(_) => return Err(field_err(key, "expected a list of entries")),
    };
    for (n, item) in items.iter().enumerate() {
        let f = format!("{key}[{n}]");
        let parts = item
            .as_array()
            .filter(|a| a.len() == arity + 1)
            .ok_or_else(|| {
                field_err(&f, format!("expected {arity} indices followed by a scalar"))
            })?;
        let idx = parts[..arity]
            .iter()
            .map(|v| index(v, &f, dim))
            .collect::<Result<Vec<_>>>()?;
        if idx[0] >= idx[1] {
            return Err(field_err(
                &f,
                "first index must be smaller than the second; the swapped entry is implied",
            ));
        }
        let s = scalar(&parts[arity], &f)?;
        if out.insert(idx, s).is_some() {
            return Err(field_err(&f, "duplicate entry"));
        }
    }
    Ok(out)
}

pub fn parse_bol(text: &str) -> Result<BolAlgebra> {
    let doc = parse_json(text)?;
    reject_unknown(&doc, &["name", "dim", "basis", "binary", "ternary"])?;
    let h = header(&doc)?;
    let mut b = BolAlgebra::with_labels(h.name, h.basis);
    for (idx, s) in sparse(&doc, "binary", 3, h.dim)? {
        b.set_binary(idx[0], idx[1], idx[2], s);
    }
    for (idx, s) in sparse(&doc, "ternary", 4, h.dim)? {
        b.set_ternary(idx[0], idx[1], idx[2], idx[3], s);
    }
    Ok(b)
}

/// A Lie algebra read from a file, with the envelope extras if present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieDocument {
    pub lie: LieAlgebra,
    pub b_dim: Option<usize>,
    pub h_basis: Vec<PairEndo>,
}

fn matrix(v: &Value, field: &str, n: usize) -> Result<Matrix> {
    let rows = v
        .as_array()
        .filter(|r| r.len() == n)
        .ok_or_else(|| field_err(field, format!("expected {n} rows")))?;
    let mut m = Matrix::zeros(n, n);
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .filter(|r| r.len() == n)
            .ok_or_else(|| field_err(format!("{field}[{i}]"), format!("expected {n} entries")))?;
        for (j, x) in row.iter().enumerate() {
            m[(i, j)] = scalar(x, &format!("{field}[{i}][{j}]"))?;
        }
    }
    Ok(m)
}

fn vector(v: &Value, field: &str, n: usize) -> Result<Vector> {
    let xs = v
        .as_array()
        .filter(|r| r.len() == n)
        .ok_or_else(|| field_err(field, format!("expected {n} entries")))?;
    xs.iter()
        .enumerate()
        .map(|(i, x)| scalar(x, &format!("{field}[{i}]")))
        .collect::<Result<Vec<_>>>()
        .map(Vector::from)
}

pub fn parse_lie(text: &str) -> Result<LieDocument> {
    let doc = parse_json(text)?;
    reject_unknown(
        &doc,
        &["name", "dim", "basis", "brackets", "b_dim", "h_basis"],
    )?;
    let h = header(&doc)?;
    let mut lie = LieAlgebra::with_labels(h.name, h.basis);
    for (idx, s) in sparse(&doc, "brackets", 3, h.dim)? {
        lie.set_bracket(idx[0], idx[1], idx[2], s);
    }
    let b_dim = match doc.get("b_dim") {
        None => None,
        Some(v) => Some(
            v.as_u64()
                .ok_or_else(|| field_err("b_dim", "expected a nonnegative integer"))?
                as usize,
        ),
    };
    let mut h_basis = Vec::new();
    if let Some(v) = doc.get("h_basis") {
        let n = b_dim.ok_or_else(|| field_err("h_basis", "requires b_dim"))?;
        let items = v
            .as_array()
            .ok_or_else(|| field_err("h_basis", "expected a list"))?;
        for (t, item) in items.iter().enumerate() {
            let f = format!("h_basis[{t}]");
            let obj = item
                .as_object()
                .ok_or_else(|| field_err(&f, "expected an object with pi and comp"))?;
            let pi = matrix(
                obj.get("pi").ok_or_else(|| field_err(&f, "missing pi"))?,
                &format!("{f}.pi"),
                n,
            )?;
            let comp = vector(
                obj.get("comp")
                    .ok_or_else(|| field_err(&f, "missing comp"))?,
                &format!("{f}.comp"),
                n,
            )?;
            h_basis.push(PairEndo { pi, comp });
        }
    }
    Ok(LieDocument {
        lie,
        b_dim,
        h_basis,
    })
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn scalar_str(s: &Scalar) -> String {
    quote(&render_scalar(s))
}

fn write_header(out: &mut String, name: &str, labels: &[String]) {
    let basis: Vec<String> = labels.iter().map(|l| quote(l)).collect();
    let _ = writeln!(out, "{{");
    let _ = writeln!(out, "  \"name\": {},", quote(name));
    let _ = writeln!(out, "  \"dim\": {},", labels.len());
    let _ = writeln!(out, "  \"basis\": [{}],", basis.join(", "));
}

fn write_entries(out: &mut String, key: &str, entries: &[(Vec<usize>, &Scalar)], last: bool) {
    let comma = if last { "" } else { "," };
    if entries.is_empty() {
        let _ = writeln!(out, "  \"{key}\": []{comma}");
        return;
    }
    let _ = writeln!(out, "  \"{key}\": [");
    for (n, (idx, s)) in entries.iter().enumerate() {
        let idx: Vec<String> = idx.iter().map(usize::to_string).collect();
        let sep = if n + 1 == entries.len() { "" } else { "," };
        let _ = writeln!(out, "    [{}, {}]{sep}", idx.join(", "), scalar_str(s));
    }
    let _ = writeln!(out, "  ]{comma}");
}

fn binary_entries(b: &BolAlgebra) -> Vec<(Vec<usize>, &Scalar)> {
    let n = b.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for (k, s) in b.binary_basis(i, j).iter().enumerate() {
                if !s.is_zero() {
                    out.push((vec![i, j, k], s));
                }
            }
        }
    }
    out
}

fn ternary_entries(b: &BolAlgebra) -> Vec<(Vec<usize>, &Scalar)> {
    let n = b.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                for (l, s) in b.ternary_basis(i, j, k).iter().enumerate() {
                    if !s.is_zero() {
                        out.push((vec![i, j, k, l], s));
                    }
                }
            }
        }
    }
    out
}

pub fn emit_bol(b: &BolAlgebra) -> String {
    let mut out = String::new();
    write_header(&mut out, b.name(), b.labels());
    write_entries(&mut out, "binary", &binary_entries(b), false);
    write_entries(&mut out, "ternary", &ternary_entries(b), true);
    out.push_str("}\n");
    out
}

fn bracket_entries(g: &LieAlgebra) -> Vec<(Vec<usize>, &Scalar)> {
    let m = g.dim();
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for (k, s) in g.bracket_basis(i, j).iter().enumerate() {
                if !s.is_zero() {
                    out.push((vec![i, j, k], s));
                }
            }
        }
    }
    out
}

fn scalar_list(xs: &[Scalar]) -> String {
    let parts: Vec<String> = xs.iter().map(scalar_str).collect();
    format!("[{}]", parts.join(", "))
}

fn write_h_basis(out: &mut String, b_dim: usize, h: &[PairEndo]) {
    let _ = writeln!(out, "  \"b_dim\": {b_dim},");
    if h.is_empty() {
        let _ = writeln!(out, "  \"h_basis\": []");
        return;
    }
    let _ = writeln!(out, "  \"h_basis\": [");
    for (t, p) in h.iter().enumerate() {
        let rows: Vec<String> = (0..p.pi.rows())
            .map(|i| scalar_list(p.pi.row_slice(i)))
            .collect();
        let sep = if t + 1 == h.len() { "" } else { "," };
        let _ = writeln!(out, "    {{");
        let _ = writeln!(out, "      \"pi\": [{}],", rows.join(", "));
        let _ = writeln!(out, "      \"comp\": {}", scalar_list(p.comp.coords()));
        let _ = writeln!(out, "    }}{sep}");
    }
    let _ = writeln!(out, "  ]");
}

pub fn emit_lie(g: &LieAlgebra) -> String {
    emit_lie_document(&LieDocument {
        lie: g.clone(),
        b_dim: None,
        h_basis: Vec::new(),
    })
}

pub fn emit_lie_document(doc: &LieDocument) -> String {
    let mut out = String::new();
    write_header(&mut out, doc.lie.name(), doc.lie.labels());
    write_entries(
        &mut out,
        "brackets",
        &bracket_entries(&doc.lie),
        doc.b_dim.is_none(),
    );
    if let Some(n) = doc.b_dim {
        write_h_basis(&mut out, n, &doc.h_basis);
    }
    out.push_str("}\n");
    out
}

pub fn envelope_document(env: &EnvelopingLie) -> LieDocument {
    LieDocument {
        lie: env.lie().clone(),
        b_dim: Some(env.b_dim()),
        h_basis: env.h_basis().to_vec(),
    }
}
