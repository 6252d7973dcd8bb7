use std::sync::Arc;

use super::module::{Module, ModuleMap};
use crate::error::{Error, Result};
use crate::exactla::Matrix;

/// Per-vertex column bases of a subspace of a module.
pub type Subspace = Vec<Matrix>;

pub fn zero_subspace(m: &Module) -> Subspace {
    m.dims().iter().map(|&d| Matrix::zeros(m.field(), d, 0)).collect()
}

pub fn full_subspace(m: &Module) -> Subspace {
    m.dims().iter().map(|&d| Matrix::identity(m.field(), d)).collect()
}

pub fn subspace_dims(s: &Subspace) -> Vec<usize> {
    s.iter().map(Matrix::cols).collect()
}

/// Smallest submodule containing the given vectors.
pub fn generated_submodule(m: &Module, gens: &Subspace) -> Subspace {
    let mut cur: Subspace = gens.iter().map(Matrix::column_space).collect();
    loop {
        let mut grew = false;
        for (x, a) in m.algebra().quiver().arrows.iter().enumerate() {
            if cur[a.source].cols() == 0 {
                continue;
            }
            let img = m.action(x).mul(&cur[a.source]);
            let extra = cur[a.target].complement_in(&img);
            if extra.cols() > 0 {
                cur[a.target] = cur[a.target].hstack(&extra);
                grew = true;
            }
        }
        if !grew {
            return cur;
        }
    }
}

pub fn sum_subspaces(a: &Subspace, b: &Subspace) -> Subspace {
    a.iter().zip(b).map(|(x, y)| x.hstack(y).column_space()).collect()
}

pub fn intersect_subspaces(a: &Subspace, b: &Subspace) -> Subspace {
    a.iter().zip(b).map(|(x, y)| x.intersect_columns(y)).collect()
}

/// The submodule spanned by `basis` (must be arrow-stable) with its inclusion.
pub fn submodule(m: &Arc<Module>, basis: &Subspace) -> Result<(Arc<Module>, ModuleMap)> {
    let basis: Subspace = basis.iter().map(Matrix::column_space).collect();
    let f = m.field();
    let mut action = Vec::with_capacity(m.algebra().arrow_count());
    for (x, a) in m.algebra().quiver().arrows.iter().enumerate() {
        let img = m.action(x).mul(&basis[a.source]);
        let sol = basis[a.target]
            .solve(&img)?
            .ok_or_else(|| Error::InvalidModule(format!("subspace not stable under arrow {}", a.name)))?;
        action.push(sol);
    }
    let dims = basis.iter().map(Matrix::cols).collect();
    let sub = Arc::new(Module::new_unchecked(m.algebra().clone(), dims, action));
    let _ = f;
    let inc = ModuleMap::new_unchecked(sub.clone(), m.clone(), basis);
    Ok((sub, inc))
}

/// `m / sub` with its projection and a section of each vertex projection.
pub fn quotient(m: &Arc<Module>, sub: &Subspace) -> Result<(Arc<Module>, ModuleMap, Vec<Matrix>)> {
    let f = m.field();
    let mut proj = Vec::with_capacity(m.dims().len());
    let mut sect = Vec::with_capacity(m.dims().len());
    for (v, &d) in m.dims().iter().enumerate() {
        let s = &sub[v];
        let q = if s.cols() == 0 { Matrix::identity(f, d) } else { s.left_kernel_basis() };
        let r = if q.rows() == 0 {
            Matrix::zeros(f, d, 0)
        } else {
            q.solve(&Matrix::identity(f, q.rows()))?.expect("left kernel rows are independent")
        };
        proj.push(q);
        sect.push(r);
    }
    let mut action = Vec::new();
    for (x, a) in m.algebra().quiver().arrows.iter().enumerate() {
        action.push(proj[a.target].mul(m.action(x)).mul(&sect[a.source]));
    }
    let dims = proj.iter().map(Matrix::rows).collect();
    let qm = Arc::new(Module::new_unchecked(m.algebra().clone(), dims, action));
    let p = ModuleMap::new_unchecked(m.clone(), qm.clone(), proj);
    Ok((qm, p, sect))
}

pub fn kernel(f: &ModuleMap) -> Result<(Arc<Module>, ModuleMap)> {
    let basis: Subspace = f.blocks().iter().map(Matrix::kernel_basis).collect();
    submodule(f.source(), &basis)
}

/// Image with inclusion into the target and the factorization of `f`.
pub fn image(f: &ModuleMap) -> Result<(Arc<Module>, ModuleMap, ModuleMap)> {
    let basis: Subspace = f.blocks().iter().map(Matrix::column_space).collect();
    let (im, inc) = submodule(f.target(), &basis)?;
    let mut fac = Vec::new();
    for (v, b) in f.blocks().iter().enumerate() {
        fac.push(inc.block(v).solve(b)?.expect("map lands in its image"));
    }
    let factor = ModuleMap::new_unchecked(f.source().clone(), im.clone(), fac);
    Ok((im, inc, factor))
}

pub fn image_subspace(f: &ModuleMap) -> Subspace {
    f.blocks().iter().map(Matrix::column_space).collect()
}

pub fn cokernel(f: &ModuleMap) -> Result<(Arc<Module>, ModuleMap)> {
    let (c, p, _) = quotient(f.target(), &image_subspace(f))?;
    Ok((c, p))
}

/// A direct sum with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Arc<Module>,
    pub injections: Vec<ModuleMap>,
    pub projections: Vec<ModuleMap>,
}

pub fn direct_sum(alg: &Arc<crate::algebra::PathAlgebra>, ms: &[Arc<Module>]) -> Result<DirectSum> {
    for m in ms {
        if m.algebra().id() != alg.id() {
            return Err(Error::AlgebraMismatch);
        }
    }
    let f = alg.field();
    let nv = alg.vertex_count();
    let dims: Vec<usize> = (0..nv).map(|v| ms.iter().map(|m| m.dim_at(v)).sum()).collect();
    let action = (0..alg.arrow_count())
        .map(|x| {
            let blocks: Vec<Matrix> = ms.iter().map(|m| m.action(x).clone()).collect();
            Matrix::block_diag(f, &blocks)
        })
        .collect();
    let sum = Arc::new(Module::new_unchecked(alg.clone(), dims.clone(), action));
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    let mut offs = vec![0usize; nv];
    for m in ms {
        let mut inj = Vec::new();
        let mut pr = Vec::new();
        for v in 0..nv {
            let mut i = Matrix::zeros(f, dims[v], m.dim_at(v));
            i.set_block(offs[v], 0, &Matrix::identity(f, m.dim_at(v)));
            pr.push(i.transpose());
            inj.push(i);
            offs[v] += m.dim_at(v);
        }
        injections.push(ModuleMap::new_unchecked(m.clone(), sum.clone(), inj));
        projections.push(ModuleMap::new_unchecked(sum.clone(), m.clone(), pr));
    }
    Ok(DirectSum { module: sum, injections, projections })
}

/// `rad M = Σ_α α(M)`.
pub fn radical_subspace(m: &Module) -> Subspace {
    let f = m.field();
    let mut out: Subspace = m.dims().iter().map(|&d| Matrix::zeros(f, d, 0)).collect();
    for (x, a) in m.algebra().quiver().arrows.iter().enumerate() {
        out[a.target] = out[a.target].hstack(m.action(x));
    }
    out.iter().map(Matrix::column_space).collect()
}

/// `soc M = ∩_α ker α`.
pub fn socle_subspace(m: &Module) -> Subspace {
    let f = m.field();
    let mut stacks: Vec<Matrix> = m.dims().iter().map(|&d| Matrix::zeros(f, 0, d)).collect();
    for (x, a) in m.algebra().quiver().arrows.iter().enumerate() {
        stacks[a.source] = stacks[a.source].vstack(m.action(x));
    }
    stacks
        .iter()
        .zip(m.dims())
        .map(|(s, &d)| if s.rows() == 0 { Matrix::identity(f, d) } else { s.kernel_basis() })
        .collect()
}

pub fn radical(m: &Arc<Module>) -> Result<(Arc<Module>, ModuleMap)> {
    submodule(m, &radical_subspace(m))
}

pub fn socle(m: &Arc<Module>) -> Result<(Arc<Module>, ModuleMap)> {
    submodule(m, &socle_subspace(m))
}

pub fn top(m: &Arc<Module>) -> Result<(Arc<Module>, ModuleMap)> {
    let (t, p, _) = quotient(m, &radical_subspace(m))?;
    Ok((t, p))
}

/// Dimension vector of the top, i.e. the multiplicities of simples in `M/rad M`.
pub fn top_dims(m: &Module) -> Vec<usize> {
    let r = radical_subspace(m);
    m.dims().iter().zip(&r).map(|(d, s)| d - s.cols()).collect()
}

/// Radical layers `rad^k M / rad^{k+1} M` as dimension vectors.
pub fn radical_layers(m: &Arc<Module>) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut cur = m.clone();
    while !cur.is_zero() {
        out.push(top_dims(&cur));
        let (r, _) = radical(&cur)?;
        if r.total_dim() == cur.total_dim() {
            return Err(Error::InvalidModule("radical series does not terminate".to_string()));
        }
        cur = r;
    }
    Ok(out)
}
