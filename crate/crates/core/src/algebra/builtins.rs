use std::sync::Arc;

use super::path_algebra::{build_path_algebra, PathAlgebra, DEFAULT_LENGTH_BOUND};
use super::quiver::{Quiver, Relation};
use crate::error::{Error, Result};
use crate::exactla::FieldSpec;

/// Arrows `a, b: 1 → 2`, `c: 2 → 3`, `d: 3 → 1` with `a∘d = c∘b = d∘c = 0`.
pub fn kalck(field: FieldSpec) -> Result<Arc<PathAlgebra>> {
    let q = Quiver::new(&["1", "2", "3"], &[("a", "1", "2"), ("b", "1", "2"), ("c", "2", "3"), ("d", "3", "1")])?;
    let rels = vec![Relation::monomial(&["a", "d"]), Relation::monomial(&["c", "b"]), Relation::monomial(&["d", "c"])];
    build_path_algebra(q, rels, field, DEFAULT_LENGTH_BOUND)
}

/// The linearly oriented quiver `1 → 2 → … → n` without relations.
pub fn linear(n: usize, field: FieldSpec) -> Result<Arc<PathAlgebra>> {
    if n == 0 {
        return Err(Error::UnknownVertex("linear quiver needs at least one vertex".to_string()));
    }
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let arrow_names: Vec<String> = (1..n).map(arrow_label).collect();
    let arrows: Vec<(&str, &str, &str)> =
        (0..n - 1).map(|i| (arrow_names[i].as_str(), names[i].as_str(), names[i + 1].as_str())).collect();
    let q = Quiver::new(&names, &arrows)?;
    build_path_algebra(q, Vec::new(), field, DEFAULT_LENGTH_BOUND)
}

fn arrow_label(i: usize) -> String {
    // a, b, c, … then a1, b1, …
    let letter = (b'a' + ((i - 1) % 26) as u8) as char;
    let round = (i - 1) / 26;
    if round == 0 { letter.to_string() } else { format!("{letter}{round}") }
}

pub fn a2(field: FieldSpec) -> Result<Arc<PathAlgebra>> {
    linear(2, field)
}

pub fn a3(field: FieldSpec) -> Result<Arc<PathAlgebra>> {
    linear(3, field)
}

/// Cyclic quiver `a: 1 → 2`, `b: 2 → 1` with `a∘b = b∘a = 0`.
pub fn z2(field: FieldSpec) -> Result<Arc<PathAlgebra>> {
    let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")])?;
    build_path_algebra(q, vec![Relation::monomial(&["a", "b"]), Relation::monomial(&["b", "a"])], field, DEFAULT_LENGTH_BOUND)
}

/// A single vertex: the base field.
pub fn point(field: FieldSpec) -> Result<Arc<PathAlgebra>> {
    let q = Quiver::new(&["1"], &[])?;
    build_path_algebra(q, Vec::new(), field, DEFAULT_LENGTH_BOUND)
}

pub const BUILTIN_NAMES: &[&str] = &["kalck", "a2", "a3", "z2", "pt"];

/// Resolves `kalck`, `a2`, `a3`, `a<n>`, `z2`, `pt`.
pub fn builtin(name: &str, field: FieldSpec) -> Option<Result<Arc<PathAlgebra>>> {
    match name {
        "kalck" => Some(kalck(field)),
        "z2" => Some(z2(field)),
        "pt" => Some(point(field)),
        _ => {
            let n: usize = name.strip_prefix('a')?.parse().ok()?;
            if n == 0 {
                return None;
            }
            Some(linear(n, field))
        }
    }
}
