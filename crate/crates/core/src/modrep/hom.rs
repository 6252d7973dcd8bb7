use num_traits::Zero;
use std::sync::Arc;

use super::module::{Module, ModuleMap};
use crate::error::Result;
use crate::exactla::{Matrix, Scalar};

/// A basis of `Hom_A(M, N)` with fast coordinates.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: Arc<Module>,
    target: Arc<Module>,
    basis: Vec<ModuleMap>,
    coord_rows: Vec<usize>,
    coord_inv: Matrix,
}

/// Solves the intertwining equations `N(α) f_i = f_j M(α)`.
pub fn hom_space(m: &Arc<Module>, n: &Arc<Module>) -> Result<HomSpace> {
    m.same_algebra(n)?;
    let alg = m.algebra();
    let f = alg.field();
    let nv = alg.vertex_count();
    let mut off = Vec::with_capacity(nv + 1);
    let mut acc = 0;
    for v in 0..nv {
        off.push(acc);
        acc += n.dim_at(v) * m.dim_at(v);
    }
    let unknowns = acc;
    let mut rows: Vec<Vec<(usize, Scalar)>> = Vec::new();
    for (x, a) in alg.quiver().arrows.iter().enumerate() {
        let (i, j) = (a.source, a.target);
        let (na, ma) = (n.action(x), m.action(x));
        let (dmi, dmj, dnj, dni) = (m.dim_at(i), m.dim_at(j), n.dim_at(j), n.dim_at(i));
        for r in 0..dnj {
            for c in 0..dmi {
                let mut eq: Vec<(usize, Scalar)> = Vec::new();
                // (N(α) f_i)[r, c] = Σ_k N(α)[r, k] f_i[k, c]
                for k in 0..dni {
                    let v = &na[(r, k)];
                    if !v.is_zero() {
                        eq.push((off[i] + k * dmi + c, v.clone()));
                    }
                }
                // − (f_j M(α))[r, c] = − Σ_k f_j[r, k] M(α)[k, c]
                for k in 0..dmj {
                    let v = &ma[(k, c)];
                    if !v.is_zero() {
                        eq.push((off[j] + r * dmj + k, f.neg(v)));
                    }
                }
                if !eq.is_empty() {
                    rows.push(eq);
                }
            }
        }
    }
    let mut system = Matrix::zeros(f, rows.len(), unknowns);
    for (r, eq) in rows.iter().enumerate() {
        for (c, v) in eq {
            let cur = system[(r, *c)].clone();
            system[(r, *c)] = f.add(&cur, v);
        }
    }
    let kernel = if rows.is_empty() { Matrix::identity(f, unknowns) } else { system.kernel_basis() };
    Ok(HomSpace::from_columns(m.clone(), n.clone(), &kernel))
}

/// Dimension of `Hom_A(M, N)`.
pub fn hom_dim(m: &Arc<Module>, n: &Arc<Module>) -> Result<usize> {
    Ok(hom_space(m, n)?.dim())
}

impl HomSpace {
    /// Columns of `k` are vectorized maps (see [`ModuleMap::to_vector`]).
    pub(crate) fn from_columns(source: Arc<Module>, target: Arc<Module>, k: &Matrix) -> HomSpace {
        let f = source.field();
        let basis: Vec<ModuleMap> = (0..k.cols())
            .map(|c| ModuleMap::from_vector(source.clone(), target.clone(), &k.column(c)))
            .collect();
        let coord_rows = k.transpose().rref().pivots;
        let coord_inv = if k.cols() == 0 {
            Matrix::zeros(f, 0, 0)
        } else {
            k.select_rows(&coord_rows).inverse().expect("basis columns are independent")
        };
        HomSpace { source, target, basis, coord_rows, coord_inv }
    }

    pub fn source(&self) -> &Arc<Module> {
        &self.source
    }
    pub fn target(&self) -> &Arc<Module> {
        &self.target
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[ModuleMap] {
        &self.basis
    }

    /// Coordinates of a map known to lie in this space.
    pub fn coordinates(&self, map: &ModuleMap) -> Vec<Scalar> {
        let f = self.source.field();
        let v = map.to_vector();
        let sel: Vec<Scalar> = self.coord_rows.iter().map(|&r| v[r].clone()).collect();
        let col = Matrix::column_vector(f, &sel);
        if self.dim() == 0 {
            return Vec::new();
        }
        self.coord_inv.mul(&col).column(0)
    }

    pub fn element(&self, coeffs: &[Scalar]) -> ModuleMap {
        let mut out = ModuleMap::zero(self.source.clone(), self.target.clone());
        for (b, c) in self.basis.iter().zip(coeffs) {
            if !c.is_zero() {
                out = out.add(&b.scale(c));
            }
        }
        out
    }
}
