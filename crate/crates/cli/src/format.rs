//! Line-oriented algebra files.
//!
//! ```text
//! # relation words compose right to left: `c b` is c∘b
//! FIELD q
//! VERTICES 1 2 3
//! ARROWS
//! a: 1 -> 2
//! c: 2 -> 3
//! RELATIONS
//! c a = 0
//! BOUND 50
//! ```

use std::sync::Arc;

use hwglue::algebra::{build_path_algebra, AlgElem, PathAlgebra, Quiver, Relation, DEFAULT_LENGTH_BOUND};
use hwglue::exactla::parse_scalar;
use hwglue::{Error, FieldSpec, Result, Scalar};
use num_traits::{One, Signed, Zero};

pub const FORMAT_HEADER: &str = "# hwglue algebra; relation words compose right to left: `c b` is c∘b";

fn parse_error(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

pub fn parse_field(s: &str) -> Result<FieldSpec> {
    match s.trim() {
        "q" | "Q" | "rationals" => Ok(FieldSpec::Rationals),
        t => {
            let p = t
                .strip_prefix("fp:")
                .or_else(|| t.strip_prefix("FP:"))
                .ok_or_else(|| Error::InvalidField(format!("expected q or fp:<p>, got {t}")))?;
            let p: u64 = p.parse().map_err(|_| Error::InvalidField(format!("bad characteristic {p}")))?;
            FieldSpec::prime(p)
        }
    }
}

pub fn field_name(f: FieldSpec) -> String {
    match f {
        FieldSpec::Rationals => "q".into(),
        FieldSpec::PrimeField(p) => format!("fp:{p}"),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Tok {
    Ident(String),
    Num(String),
    Plus,
    Minus,
    Eq,
}

/// Tokens with their 1-based columns. `.`, `*` and `∘` separate arrows.
pub(crate) fn tokenize(s: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() || c == '.' || c == '*' || c == '∘' {
            i += 1;
        } else if c == '+' {
            out.push((Tok::Plus, col));
            i += 1;
        } else if c == '-' {
            out.push((Tok::Minus, col));
            i += 1;
        } else if c == '=' {
            out.push((Tok::Eq, col));
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                i += 1;
            }
            out.push((Tok::Num(chars[start..i].iter().collect()), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else {
            return Err(parse_error(line, col, format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

/// A linear combination of words, each in composition order.
pub(crate) type Combination = Vec<(Scalar, Vec<String>)>;

/// Parses `expr` or `lhs = rhs` into `lhs - rhs`.
pub(crate) fn parse_combination(field: FieldSpec, toks: &[(Tok, usize)], line: usize) -> Result<Combination> {
    let mut out: Combination = Vec::new();
    let mut side = field.one();
    let mut i = 0;
    let mut seen_eq = false;
    let end_col = toks.last().map(|t| t.1 + 1).unwrap_or(1);
    while i < toks.len() {
        let mut sign = field.one();
        while let Some((t, _)) = toks.get(i) {
            match t {
                Tok::Plus => {}
                Tok::Minus => sign = field.neg(&sign),
                _ => break,
            }
            i += 1;
        }
        let mut coef = field.one();
        let mut had_num = false;
        if let Some((Tok::Num(n), col)) = toks.get(i) {
            coef = parse_scalar(field, n).ok_or_else(|| parse_error(line, *col, format!("bad coefficient {n}")))?;
            had_num = true;
            i += 1;
        }
        let mut word = Vec::new();
        while let Some((Tok::Ident(a), _)) = toks.get(i) {
            word.push(a.clone());
            i += 1;
        }
        let col = toks.get(i).map(|t| t.1).unwrap_or(end_col);
        if word.is_empty() {
            if !(had_num && coef.is_zero()) {
                return Err(parse_error(line, col, "expected an arrow word"));
            }
        } else {
            let c = field.mul(&field.mul(&sign, &side), &coef);
            out.push((c, word));
        }
        match toks.get(i) {
            None => break,
            Some((Tok::Eq, c)) => {
                if seen_eq {
                    return Err(parse_error(line, *c, "second `=`"));
                }
                seen_eq = true;
                side = field.neg(&field.one());
                i += 1;
                if i == toks.len() {
                    return Err(parse_error(line, *c + 1, "missing right-hand side"));
                }
            }
            Some((Tok::Plus | Tok::Minus, _)) => {}
            Some((_, c)) => return Err(parse_error(line, *c, "expected `+`, `-` or `=`")),
        }
    }
    Ok(out)
}

#[derive(PartialEq)]
enum Section {
    None,
    Arrows,
    Relations,
}

/// Parses an algebra file; `field` overrides the `FIELD` line.
pub fn parse_algebra_with(text: &str, field: Option<FieldSpec>) -> Result<Arc<PathAlgebra>> {
    let mut file_field = None;
    let mut vertices: Option<Vec<String>> = None;
    let mut arrows: Vec<(String, String, String, usize)> = Vec::new();
    let mut relations: Vec<(String, usize, usize)> = Vec::new();
    let mut bound = DEFAULT_LENGTH_BOUND;
    let mut section = Section::None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        let trimmed = trimmed.trim_end();
        let (head, rest) = match trimmed.split_once(char::is_whitespace) {
            Some((h, r)) => (h, r.trim()),
            None => (trimmed, ""),
        };
        let rest_col = indent + head.len() + 2;
        match head {
            "FIELD" => {
                file_field = Some(parse_field(rest).map_err(|e| parse_error(line, rest_col, e.to_string()))?);
                section = Section::None;
            }
            "VERTICES" => {
                let vs: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if vs.is_empty() {
                    return Err(parse_error(line, rest_col, "no vertices"));
                }
                vertices = Some(vs);
                section = Section::None;
            }
            "BOUND" => {
                bound = rest.parse().map_err(|_| parse_error(line, rest_col, format!("bad bound {rest}")))?;
                section = Section::None;
            }
            "ARROWS" | "RELATIONS" => {
                if !rest.is_empty() {
                    return Err(parse_error(line, rest_col, format!("{head} takes no value on its line")));
                }
                section = if head == "ARROWS" { Section::Arrows } else { Section::Relations };
            }
            _ => match section {
                Section::Arrows => {
                    let (name, ends) = trimmed
                        .split_once(':')
                        .ok_or_else(|| parse_error(line, indent + 1, "expected `name: source -> target`"))?;
                    let (s, t) = ends
                        .split_once("->")
                        .ok_or_else(|| parse_error(line, indent + name.len() + 2, "expected `source -> target`"))?;
                    arrows.push((name.trim().to_string(), s.trim().to_string(), t.trim().to_string(), line));
                }
                Section::Relations => relations.push((trimmed.to_string(), line, indent + 1)),
                Section::None => return Err(parse_error(line, indent + 1, format!("unexpected `{head}`"))),
            },
        }
    }
    let field = field.or(file_field).unwrap_or(FieldSpec::Rationals);
    let vertices = vertices.ok_or_else(|| parse_error(1, 1, "missing VERTICES"))?;
    let triples: Vec<(&str, &str, &str)> = arrows.iter().map(|(n, s, t, _)| (n.as_str(), s.as_str(), t.as_str())).collect();
    let quiver = Quiver::new(&vertices, &triples).map_err(|e| {
        let line = arrows.first().map(|a| a.3).unwrap_or(1);
        parse_error(line, 1, e.to_string())
    })?;
    let mut rels = Vec::new();
    for (text, line, col) in &relations {
        let toks = tokenize(text, *line, *col)?;
        for (t, c) in &toks {
            if let Tok::Ident(a) = t {
                if quiver.arrow_index(a).is_err() {
                    return Err(parse_error(*line, *c, format!("unknown arrow {a}")));
                }
            }
        }
        let comb = parse_combination(field, &toks, *line)?;
        if !comb.is_empty() {
            rels.push(Relation::new(comb));
        }
    }
    build_path_algebra(quiver, rels, field, bound)
}

pub fn parse_algebra(text: &str) -> Result<Arc<PathAlgebra>> {
    parse_algebra_with(text, None)
}

fn format_scalar(c: &Scalar) -> String {
    c.to_string()
}

fn format_combination(terms: &[(Scalar, Vec<String>)]) -> String {
    let mut out = String::new();
    for (k, (c, w)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !a.is_one() {
            out.push_str(&format_scalar(&a));
            out.push(' ');
        }
        out.push_str(&w.join(" "));
    }
    out
}

/// Writes an algebra back in the file format.
pub fn emit_algebra(alg: &PathAlgebra) -> String {
    let q = alg.quiver();
    let mut out = vec![FORMAT_HEADER.to_string(), format!("FIELD {}", field_name(alg.field()))];
    out.push(format!("VERTICES {}", q.vertices.join(" ")));
    out.push("ARROWS".into());
    for a in &q.arrows {
        out.push(format!("{}: {} -> {}", a.name, q.vertices[a.source], q.vertices[a.target]));
    }
    if !alg.relations().is_empty() {
        out.push("RELATIONS".into());
        for r in alg.relations() {
            out.push(format!("{} = 0", format_combination(&r.terms)));
        }
    }
    out.push(format!("BOUND {}", alg.length_bound()));
    out.join("\n") + "\n"
}

/// Parses a path combination such as `2 c b - a` or `e1` into an element.
pub fn parse_element(alg: &PathAlgebra, text: &str) -> Result<AlgElem> {
    let f = alg.field();
    let toks = tokenize(text, 1, 1)?;
    let comb = parse_combination(f, &toks, 1)?;
    let mut e = AlgElem::zero();
    for (c, word) in comb {
        let p = if word.len() == 1 && alg.quiver().arrow_index(&word[0]).is_err() {
            let v = word[0]
                .strip_prefix('e')
                .and_then(|v| alg.vertex_index(v).ok())
                .ok_or_else(|| Error::UnknownArrow(word[0].clone()))?;
            alg.quiver().trivial_path(v)
        } else {
            alg.quiver().path_from_names(&word)?
        };
        e = e.add(f, &alg.path_normal_form(&p).scale(f, &c));
    }
    Ok(e)
}
