//! Human names for modules and complexes.

use std::collections::BTreeMap;
use std::sync::Arc;

use hwglue::algebra::{injective_module, projective_module, simple_module};
use hwglue::derived::{cohomology_modules, ProjComplex};
use hwglue::modrep::{is_isomorphic, Module};
use hwglue::Result;

/// Every standard module `m` is isomorphic to, such as `S3=P3`, or its
/// dimension vector.
pub fn module_name(m: &Arc<Module>) -> Result<String> {
    if m.is_zero() {
        return Ok("0".into());
    }
    let alg = m.algebra();
    let mut names = Vec::new();
    for (label, make) in [
        ("S", simple_module as fn(&_, usize) -> Result<Arc<Module>>),
        ("P", projective_module),
        ("I", injective_module),
    ] {
        for v in 0..alg.vertex_count() {
            let s = make(alg, v)?;
            if s.dims() == m.dims() && is_isomorphic(&s, m)? {
                names.push(format!("{label}{}", alg.vertex_name(v)));
            }
        }
    }
    if names.is_empty() {
        Ok(format!("M{}", m.dim_vector_string()))
    } else {
        Ok(names.join("="))
    }
}

/// `H^d ≅ name` for every nonzero cohomology module.
pub fn cohomology_names(x: &ProjComplex) -> Result<BTreeMap<i64, String>> {
    cohomology_modules(x)?.iter().map(|(&d, m)| Ok((d, module_name(m)?))).collect()
}

pub fn cohomology_line(x: &ProjComplex) -> Result<String> {
    let h = cohomology_names(x)?;
    if h.is_empty() {
        return Ok("acyclic".into());
    }
    Ok(h.iter().map(|(d, n)| format!("H^{d} ≅ {n}")).collect::<Vec<_>>().join(", "))
}

/// `{0:1, 2:1}`, or `0` for the zero space.
pub fn graded_dims(d: &BTreeMap<i64, usize>) -> String {
    if d.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = d.iter().map(|(l, n)| format!("{l}:{n}")).collect();
    format!("{{{}}}", parts.join(", "))
}
