use std::sync::Arc;

use super::abelian::{kernel, image, socle_subspace, subspace_dims, top_dims};
use super::endo::endomorphism_algebra;
use super::hom::{hom_space, HomSpace};
use super::module::{Module, ModuleMap};
use crate::error::{Error, Result};
use crate::exactla::{minimal_polynomial, rational_roots, Scalar};

/// Deterministic candidate coefficient vectors for sweeping a space of
/// dimension `d`: basis vectors, pairwise sums and differences, then a
/// few fixed integer combinations.
pub(crate) fn sweep_coefficients(d: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..d {
        let mut v = vec![0; d];
        v[i] = 1;
        out.push(v);
    }
    for i in 0..d {
        for j in (i + 1)..d {
            for (a, b) in [(1, 1), (1, -1), (1, 2), (2, 1)] {
                let mut v = vec![0; d];
                v[i] = a;
                v[j] = b;
                out.push(v);
            }
        }
        if out.len() > 400 {
            break;
        }
    }
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    for _ in 0..12 {
        let v = (0..d)
            .map(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) % 7) as i64 - 3
            })
            .collect();
        out.push(v);
    }
    out
}

fn combination(h: &HomSpace, coeffs: &[i64]) -> ModuleMap {
    let f = h.source().field();
    let c: Vec<Scalar> = coeffs.iter().map(|&x| f.from_i64(x)).collect();
    h.element(&c)
}

/// Outcome of one Fitting splitting attempt.
pub enum SplitOutcome {
    Indecomposable,
    Split(Arc<Module>, Arc<Module>),
}

/// Splits `m` along a Fitting decomposition of some endomorphism, or
/// certifies indecomposability by `dim End/rad End = 1`.
pub fn split_once(m: &Arc<Module>) -> Result<SplitOutcome> {
    if m.is_zero() {
        return Err(Error::DecomposableInput("zero module".to_string()));
    }
    let (end, h) = endomorphism_algebra(m)?;
    if end.semisimple_dim() == 1 {
        return Ok(SplitOutcome::Indecomposable);
    }
    let nexp = m.total_dim() as u64;
    let id = ModuleMap::identity(m.clone());
    for coeffs in sweep_coefficients(h.dim()) {
        let f = m.field();
        let cv: Vec<Scalar> = coeffs.iter().map(|&x| f.from_i64(x)).collect();
        let mp = minimal_polynomial(&end.left_mult(&cv));
        let z = combination(&h, &coeffs);
        for lambda in rational_roots(&mp) {
            let w = z.sub(&id.scale(&lambda)).pow(nexp);
            if w.is_zero() || w.is_isomorphism() {
                continue;
            }
            let (k, _) = kernel(&w)?;
            let (i, _, _) = image(&w)?;
            return Ok(SplitOutcome::Split(k, i));
        }
    }
    if end.field().characteristic() == 0 {
        Err(Error::NotSplit(format!(
            "End has semisimple part of dimension {} but no splitting endomorphism with a rational eigenvalue was found",
            end.semisimple_dim()
        )))
    } else {
        Err(Error::Undecided("no splitting endomorphism found over the prime field".to_string()))
    }
}

/// True when `End(M)/rad End(M)` is one-dimensional.
pub fn is_indecomposable(m: &Arc<Module>) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    match split_once(m)? {
        SplitOutcome::Indecomposable => Ok(true),
        SplitOutcome::Split(..) => Ok(false),
    }
}

/// Exact isomorphism test for certified indecomposables: `X ≅ Y` iff some
/// `g_j ∘ f_i` of Hom basis elements is invertible.
fn indecomposables_isomorphic(x: &Arc<Module>, y: &Arc<Module>) -> Result<bool> {
    if x.dims() != y.dims() {
        return Ok(false);
    }
    let hxy = hom_space(x, y)?;
    let hyx = hom_space(y, x)?;
    for f in hxy.basis() {
        if f.is_isomorphism() {
            return Ok(true);
        }
        for g in hyx.basis() {
            if g.compose(f).is_isomorphism() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Krull–Schmidt decomposition into indecomposables with multiplicities.
pub fn decompose(m: &Arc<Module>) -> Result<Vec<(Arc<Module>, usize)>> {
    let mut stack = vec![m.clone()];
    let mut parts: Vec<Arc<Module>> = Vec::new();
    while let Some(x) = stack.pop() {
        if x.is_zero() {
            continue;
        }
        match split_once(&x)? {
            SplitOutcome::Indecomposable => parts.push(x),
            SplitOutcome::Split(a, b) => {
                stack.push(b);
                stack.push(a);
            }
        }
    }
    let mut groups: Vec<(Arc<Module>, usize)> = Vec::new();
    'outer: for p in parts {
        for (q, k) in groups.iter_mut() {
            if indecomposables_isomorphic(&p, q)? {
                *k += 1;
                continue 'outer;
            }
        }
        groups.push((p, 1));
    }
    groups.sort_by(|a, b| a.0.dims().cmp(b.0.dims()).then(a.1.cmp(&b.1)));
    Ok(groups)
}

/// Decides `M ≅ N`: cheap invariants, then a deterministic sweep of Hom for an
/// invertible map, then comparison of Krull–Schmidt decompositions.
pub fn is_isomorphic(m: &Arc<Module>, n: &Arc<Module>) -> Result<bool> {
    m.same_algebra(n)?;
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    if top_dims(m) != top_dims(n) || subspace_dims(&socle_subspace(m)) != subspace_dims(&socle_subspace(n)) {
        return Ok(false);
    }
    let h = hom_space(m, n)?;
    if h.dim() == 0 {
        return Ok(false);
    }
    if hom_space(m, m)?.dim() != h.dim() || hom_space(n, n)?.dim() != h.dim() {
        return Ok(false);
    }
    for coeffs in sweep_coefficients(h.dim()) {
        if combination(&h, &coeffs).is_isomorphism() {
            return Ok(true);
        }
    }
    let dm = decompose(m)?;
    let dn = decompose(n)?;
    if dm.len() != dn.len() {
        return Ok(false);
    }
    let mut used = vec![false; dn.len()];
    for (x, k) in &dm {
        let mut found = false;
        for (j, (y, l)) in dn.iter().enumerate() {
            if !used[j] && k == l && indecomposables_isomorphic(x, y)? {
                used[j] = true;
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An invertible map `M → N` if one exists.
pub fn find_isomorphism(m: &Arc<Module>, n: &Arc<Module>) -> Result<Option<ModuleMap>> {
    m.same_algebra(n)?;
    if m.dims() != n.dims() {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(ModuleMap::zero(m.clone(), n.clone())));
    }
    let h = hom_space(m, n)?;
    for coeffs in sweep_coefficients(h.dim()) {
        let c = combination(&h, &coeffs);
        if c.is_isomorphism() {
            return Ok(Some(c));
        }
    }
    if is_isomorphic(m, n)? {
        Err(Error::Undecided("modules are isomorphic but the sweep found no isomorphism".to_string()))
    } else {
        Ok(None)
    }
}

/// Dimension of the radical of `Hom(M, N)` for indecomposable `M`, `N`.
pub fn rad_hom(m: &Arc<Module>, n: &Arc<Module>) -> Result<usize> {
    m.same_algebra(n)?;
    for x in [m, n] {
        if !is_indecomposable(x)? {
            return Err(Error::DecomposableInput(format!("module with dimension vector {}", x.dim_vector_string())));
        }
    }
    if indecomposables_isomorphic(m, n)? {
        Ok(hom_space(m, n)?.dim() - 1)
    } else {
        Ok(hom_space(m, n)?.dim())
    }
}
