use std::sync::Arc;

use super::resolution::{cached_resolution, Resolution};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar};
use crate::modrep::{hom_space, HomSpace, Module, ModuleMap};

/// `Ext^i(M, N)` read off the cochain complex `Hom(P_•, N)`.
#[derive(Clone, Debug)]
pub struct ExtGroup {
    pub source: Arc<Module>,
    pub target: Arc<Module>,
    pub degree: usize,
    pub dimension: usize,
    /// Cocycles `P_i → N` whose classes form a basis.
    pub cocycles: Vec<ModuleMap>,
    pub resolution: Arc<Resolution>,
    cochains: Option<HomSpace>,
    coboundaries: Matrix,
    representatives: Matrix,
}

/// Matrix of `f ↦ f ∘ d` from `Hom(P_k, N)` to `Hom(P_{k+1}, N)`.
fn coboundary_matrix(from: &HomSpace, to: &HomSpace, d: &ModuleMap) -> Matrix {
    let f = from.source().field();
    let cols: Vec<Vec<Scalar>> = from.basis().iter().map(|g| to.coordinates(&g.compose(d))).collect();
    Matrix::from_columns(f, to.dim(), &cols)
}

pub fn ext(m: &Arc<Module>, n: &Arc<Module>, i: usize) -> Result<ExtGroup> {
    m.same_algebra(n)?;
    let res = cached_resolution(m, i + 1)?;
    ext_from_resolution(&res, n, i)
}

pub fn ext_dim(m: &Arc<Module>, n: &Arc<Module>, i: usize) -> Result<usize> {
    Ok(ext(m, n, i)?.dimension)
}

pub fn ext_from_resolution(res: &Arc<Resolution>, n: &Arc<Module>, i: usize) -> Result<ExtGroup> {
    let f = n.field();
    let m = res.module.clone();
    let empty = |res: &Arc<Resolution>| ExtGroup {
        source: m.clone(),
        target: n.clone(),
        degree: i,
        dimension: 0,
        cocycles: Vec::new(),
        resolution: res.clone(),
        cochains: None,
        coboundaries: Matrix::zeros(f, 0, 0),
        representatives: Matrix::zeros(f, 0, 0),
    };
    if res.terms.len() <= i {
        if res.truncated {
            return Err(Error::TruncationTooShallow(i));
        }
        return Ok(empty(res));
    }
    if res.terms.len() == i + 1 && res.truncated {
        return Err(Error::TruncationTooShallow(i + 1));
    }
    let ci = hom_space(&res.terms[i].module, n)?;
    let z = match res.terms.get(i + 1) {
        Some(next) => {
            let cn = hom_space(&next.module, n)?;
            let delta = coboundary_matrix(&ci, &cn, &res.differentials[i]);
            if cn.dim() == 0 { Matrix::identity(f, ci.dim()) } else { delta.kernel_basis() }
        }
        None => Matrix::identity(f, ci.dim()),
    };
    let b = if i == 0 {
        Matrix::zeros(f, ci.dim(), 0)
    } else {
        let cp = hom_space(&res.terms[i - 1].module, n)?;
        coboundary_matrix(&cp, &ci, &res.differentials[i - 1]).column_space()
    };
    let reps = b.complement_in(&z);
    let cocycles = (0..reps.cols()).map(|c| ci.element(&reps.column(c))).collect();
    Ok(ExtGroup {
        source: m,
        target: n.clone(),
        degree: i,
        dimension: reps.cols(),
        cocycles,
        resolution: res.clone(),
        cochains: Some(ci),
        coboundaries: b,
        representatives: reps,
    })
}

impl ExtGroup {
    /// Coordinates of the class of a cocycle `P_i → N` in the basis of
    /// `cocycles`; `None` when the map is not a cocycle.
    pub fn class_of(&self, cocycle: &ModuleMap) -> Option<Vec<Scalar>> {
        let ci = self.cochains.as_ref()?;
        let f = self.target.field();
        let coords = ci.coordinates(cocycle);
        let sys = self.representatives.hstack(&self.coboundaries);
        let x = sys.solve(&Matrix::column_vector(f, &coords)).ok()??;
        Some((0..self.dimension).map(|k| x[(k, 0)].clone()).collect())
    }

    pub fn cochain_space(&self) -> Option<&HomSpace> {
        self.cochains.as_ref()
    }
}
