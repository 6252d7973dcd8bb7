use std::sync::Arc;

use super::path_algebra::PathAlgebra;
use crate::error::Result;
use crate::exactla::Matrix;
use crate::modrep::Module;

/// The simple module at `v`.
pub fn simple_module(alg: &Arc<PathAlgebra>, v: usize) -> Result<Arc<Module>> {
    alg.check_vertex(v)?;
    let f = alg.field();
    let dims: Vec<usize> = (0..alg.vertex_count()).map(|w| usize::from(w == v)).collect();
    let action = alg
        .quiver()
        .arrows
        .iter()
        .map(|a| Matrix::zeros(f, dims[a.target], dims[a.source]))
        .collect();
    Ok(Arc::new(Module::new_unchecked(alg.clone(), dims, action)))
}

/// `A e_v`: at vertex `w` the basis is the paths `v → w`.
pub fn projective_module(alg: &Arc<PathAlgebra>, v: usize) -> Result<Arc<Module>> {
    alg.check_vertex(v)?;
    let f = alg.field();
    let nv = alg.vertex_count();
    let dims: Vec<usize> = (0..nv).map(|w| alg.paths_from_to(v, w).len()).collect();
    let mut action = Vec::new();
    for (x, a) in alg.quiver().arrows.iter().enumerate() {
        let src = alg.paths_from_to(v, a.source);
        let tgt = alg.paths_from_to(v, a.target);
        let xb = alg.arrow_basis(x);
        let mut m = Matrix::zeros(f, tgt.len(), src.len());
        for (c, &p) in src.iter().enumerate() {
            for (k, coeff) in alg.mul(xb, p) {
                let r = tgt.iter().position(|q| q == k).expect("product stays in A e_v");
                m[(r, c)] = coeff.clone();
            }
        }
        action.push(m);
    }
    Ok(Arc::new(Module::new_unchecked(alg.clone(), dims, action)))
}

/// `D(e_v A)`: at vertex `w` the basis is dual to the paths `w → v`.
pub fn injective_module(alg: &Arc<PathAlgebra>, v: usize) -> Result<Arc<Module>> {
    alg.check_vertex(v)?;
    let f = alg.field();
    let nv = alg.vertex_count();
    let dims: Vec<usize> = (0..nv).map(|w| alg.paths_from_to(w, v).len()).collect();
    let mut action = Vec::new();
    for (x, a) in alg.quiver().arrows.iter().enumerate() {
        // (α φ)(y) = φ(y ∘ α) for y: target → v
        let src = alg.paths_from_to(a.source, v);
        let tgt = alg.paths_from_to(a.target, v);
        let xb = alg.arrow_basis(x);
        let mut m = Matrix::zeros(f, tgt.len(), src.len());
        for (r, &y) in tgt.iter().enumerate() {
            for (k, coeff) in alg.mul(y, xb) {
                let c = src.iter().position(|q| q == k).expect("product stays in e_v A");
                m[(r, c)] = coeff.clone();
            }
        }
        action.push(m);
    }
    Ok(Arc::new(Module::new_unchecked(alg.clone(), dims, action)))
}

/// The regular module `A = ⊕_v A e_v`.
pub fn regular_module(alg: &Arc<PathAlgebra>) -> Result<Arc<Module>> {
    let ps: Vec<Arc<Module>> = (0..alg.vertex_count()).map(|v| projective_module(alg, v)).collect::<Result<_>>()?;
    Ok(crate::modrep::direct_sum(alg, &ps)?.module)
}
