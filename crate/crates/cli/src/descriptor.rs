//! Object descriptors: `s3`, `proj:2`, `i1[1]`, `module:{…}`, `complex:{…}`.

use std::collections::BTreeMap;
use std::sync::Arc;

use hwglue::algebra::{injective_module, projective_module, simple_module, AlgElem, PathAlgebra};
use hwglue::derived::{complex_of_module, ProjComplex, PathMatrix};
use hwglue::exactla::{parse_scalar, Matrix};
use hwglue::modrep::Module;
use hwglue::{Error, Result};
use serde::Deserialize;

use crate::format::parse_element;

/// A parsed object: a module, or a complex when shifted or given as one.
#[derive(Clone, Debug)]
pub enum Object {
    Module(Arc<Module>),
    Complex(ProjComplex),
}

#[derive(Clone, Debug)]
pub struct Described {
    pub name: String,
    pub object: Object,
}

impl Described {
    pub fn complex(&self) -> Result<ProjComplex> {
        match &self.object {
            Object::Module(m) => complex_of_module(m),
            Object::Complex(c) => Ok(c.clone()),
        }
    }

    pub fn module(&self) -> Option<&Arc<Module>> {
        match &self.object {
            Object::Module(m) => Some(m),
            Object::Complex(_) => None,
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
struct ModuleLiteral {
    dims: Vec<usize>,
    #[serde(default)]
    arrows: BTreeMap<String, Vec<Vec<Entry>>>,
}

#[derive(Deserialize)]
struct ComplexLiteral {
    lo: i64,
    terms: Vec<Vec<String>>,
    #[serde(default)]
    diffs: Vec<Vec<Vec<String>>>,
}

fn literal_error(msg: impl Into<String>) -> Error {
    Error::Parse { line: 1, col: 1, msg: msg.into() }
}

fn module_literal(alg: &Arc<PathAlgebra>, json: &str) -> Result<Arc<Module>> {
    let lit: ModuleLiteral = serde_json::from_str(json).map_err(|e| literal_error(format!("module literal: {e}")))?;
    let f = alg.field();
    if lit.dims.len() != alg.vertex_count() {
        return Err(Error::DimensionMismatch(format!(
            "{} dimensions for {} vertices",
            lit.dims.len(),
            alg.vertex_count()
        )));
    }
    let mut action = Vec::with_capacity(alg.arrow_count());
    for a in &alg.quiver().arrows {
        let (r, c) = (lit.dims[a.target], lit.dims[a.source]);
        let m = match lit.arrows.get(&a.name) {
            None => Matrix::zeros(f, r, c),
            Some(rows) => {
                let mut out = Vec::with_capacity(rows.len());
                for row in rows {
                    let mut v = Vec::with_capacity(row.len());
                    for e in row {
                        let s = match e {
                            Entry::Int(i) => f.from_i64(*i),
                            Entry::Text(t) => parse_scalar(f, t).ok_or_else(|| literal_error(format!("bad entry {t}")))?,
                        };
                        v.push(s);
                    }
                    if v.len() != c {
                        return Err(Error::DimensionMismatch(format!("arrow {} needs {c} columns", a.name)));
                    }
                    out.push(v);
                }
                if out.len() != r {
                    return Err(Error::DimensionMismatch(format!("arrow {} needs {r} rows", a.name)));
                }
                Matrix::from_rows(f, &out)
            }
        };
        action.push(if r == 0 || c == 0 { Matrix::zeros(f, r, c) } else { m });
    }
    for name in lit.arrows.keys() {
        alg.quiver().arrow_index(name)?;
    }
    Ok(Arc::new(Module::new(alg.clone(), lit.dims, action)?))
}

fn complex_literal(alg: &Arc<PathAlgebra>, json: &str) -> Result<ProjComplex> {
    let lit: ComplexLiteral = serde_json::from_str(json).map_err(|e| literal_error(format!("complex literal: {e}")))?;
    let terms: Vec<Vec<usize>> = lit
        .terms
        .iter()
        .map(|t| t.iter().map(|v| alg.vertex_index(v)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let mut diffs = Vec::with_capacity(lit.diffs.len());
    for (k, d) in lit.diffs.iter().enumerate() {
        let src = terms.get(k).cloned().unwrap_or_default();
        let tgt = terms.get(k + 1).cloned().unwrap_or_default();
        let entries: Vec<Vec<AlgElem>> = d
            .iter()
            .map(|row| row.iter().map(|e| parse_element(alg, e)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        diffs.push(PathMatrix { src, tgt, entries });
    }
    ProjComplex::new(alg, lit.lo, terms, diffs)
}

/// Splits a trailing `[k]` shift off a descriptor.
fn split_shift(s: &str) -> (&str, i64) {
    if let Some(body) = s.strip_suffix(']') {
        if let Some(open) = body.rfind('[') {
            if let Ok(k) = body[open + 1..].trim().parse::<i64>() {
                return (&s[..open], k);
            }
        }
    }
    (s, 0)
}

fn standard(alg: &Arc<PathAlgebra>, kind: char, vertex: &str) -> Result<(String, Arc<Module>)> {
    let v = alg.vertex_index(vertex)?;
    let (label, m) = match kind {
        's' => ("S", simple_module(alg, v)?),
        'p' => ("P", projective_module(alg, v)?),
        'i' => ("I", injective_module(alg, v)?),
        _ => unreachable!("kind is one of s, p, i"),
    };
    Ok((format!("{label}{vertex}"), m))
}

pub fn parse_descriptor(alg: &Arc<PathAlgebra>, text: &str) -> Result<Described> {
    let text = text.trim();
    let (base, shift) = split_shift(text);
    let (name, object) = if let Some(json) = base.strip_prefix("module:") {
        ("M".to_string(), Object::Module(module_literal(alg, json)?))
    } else if let Some(json) = base.strip_prefix("complex:") {
        ("X".to_string(), Object::Complex(complex_literal(alg, json)?))
    } else {
        let (kind, vertex) = if let Some(v) = base.strip_prefix("simple:") {
            ('s', v)
        } else if let Some(v) = base.strip_prefix("proj:") {
            ('p', v)
        } else if let Some(v) = base.strip_prefix("inj:") {
            ('i', v)
        } else {
            let mut cs = base.chars();
            match cs.next() {
                Some(c @ ('s' | 'p' | 'i' | 'S' | 'P' | 'I')) => (c.to_ascii_lowercase(), cs.as_str()),
                _ => return Err(literal_error(format!("unknown object descriptor {text}"))),
            }
        };
        let (n, m) = standard(alg, kind, vertex)?;
        (n, Object::Module(m))
    };
    if shift == 0 {
        return Ok(Described { name, object });
    }
    let c = Described { name: name.clone(), object }.complex()?;
    Ok(Described { name: format!("{name}[{shift}]"), object: Object::Complex(c.shift(shift)) })
}

/// Splits on commas and newlines outside brackets and braces.
fn split_top_level(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for line in s.lines() {
        let line = line.split('#').next().unwrap_or("");
        for c in line.chars() {
            match c {
                '{' | '[' => depth += 1,
                '}' | ']' => depth -= 1,
                _ => {}
            }
            if c == ',' && depth == 0 {
                out.push(std::mem::take(&mut cur));
            } else {
                cur.push(c);
            }
        }
        if depth == 0 {
            out.push(std::mem::take(&mut cur));
        } else {
            cur.push(' ');
        }
    }
    out.push(cur);
    out.into_iter().map(|t| t.trim().to_string()).filter(|t| !t.is_empty()).collect()
}

/// A sequence given inline (`s3,p2,p1`) or as a file with one descriptor
/// per line.
pub fn parse_sequence(alg: &Arc<PathAlgebra>, spec: &str) -> Result<Vec<Described>> {
    let text = match std::fs::read_to_string(spec) {
        Ok(t) if std::path::Path::new(spec).is_file() => t,
        _ => spec.to_string(),
    };
    let items = split_top_level(&text);
    if items.is_empty() {
        return Err(literal_error("empty sequence"));
    }
    items.iter().map(|d| parse_descriptor(alg, d)).collect()
}
