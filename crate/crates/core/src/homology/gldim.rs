use serde::Serialize;
use std::sync::Arc;

use super::resolution::projective_cover;
use crate::algebra::{simple_module, PathAlgebra};
use crate::error::Result;
use crate::exactla::{FieldSpec, Matrix, Scalar};
use crate::modrep::{is_isomorphic, kernel, Module};

pub const DEFAULT_PROBE_BOUND: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum GlobalDimension {
    /// All simples have finite resolutions; the maximum length.
    Finite(usize),
    /// `Ω^{start+period} S_vertex ≅ Ω^{start} S_vertex`, with `Ω^0 S = S`.
    InfiniteCertified { vertex: usize, start: usize, period: usize },
    ExceedsBound(usize),
}

#[derive(Clone, Debug, Serialize)]
pub struct SimpleProbe {
    pub vertex: usize,
    /// Projective dimension when the resolution terminates.
    pub projective_dimension: Option<usize>,
    /// Dimension vectors of the syzygies computed, starting at `Ω^0`.
    pub syzygy_dims: Vec<Vec<usize>>,
    pub period: Option<(usize, usize)>,
}

fn probe_simple(alg: &Arc<PathAlgebra>, v: usize, bound: usize) -> Result<SimpleProbe> {
    let s = simple_module(alg, v)?;
    let mut syz: Vec<Arc<Module>> = vec![s];
    loop {
        let cur = syz.last().unwrap().clone();
        let (_, cover) = projective_cover(&cur)?;
        let (omega, _) = kernel(&cover)?;
        let k = syz.len();
        if omega.is_zero() {
            return Ok(SimpleProbe {
                vertex: v,
                projective_dimension: Some(k - 1),
                syzygy_dims: syz.iter().map(|m| m.dims().to_vec()).collect(),
                period: None,
            });
        }
        for (j, earlier) in syz.iter().enumerate() {
            if earlier.dims() == omega.dims() && is_isomorphic(earlier, &omega)? {
                syz.push(omega);
                return Ok(SimpleProbe {
                    vertex: v,
                    projective_dimension: None,
                    syzygy_dims: syz.iter().map(|m| m.dims().to_vec()).collect(),
                    period: Some((j, k - j)),
                });
            }
        }
        syz.push(omega);
        if k >= bound {
            return Ok(SimpleProbe {
                vertex: v,
                projective_dimension: None,
                syzygy_dims: syz.iter().map(|m| m.dims().to_vec()).collect(),
                period: None,
            });
        }
    }
}

pub fn probe_simples(alg: &Arc<PathAlgebra>, bound: usize) -> Result<Vec<SimpleProbe>> {
    (0..alg.vertex_count()).map(|v| probe_simple(alg, v, bound)).collect()
}

pub fn global_dimension_probe(alg: &Arc<PathAlgebra>, bound: usize) -> Result<GlobalDimension> {
    Ok(verdict(&probe_simples(alg, bound.max(1))?, bound))
}

pub fn verdict(probes: &[SimpleProbe], bound: usize) -> GlobalDimension {
    if let Some(p) = probes.iter().find(|p| p.period.is_some()) {
        let (start, period) = p.period.unwrap();
        return GlobalDimension::InfiniteCertified { vertex: p.vertex, start, period };
    }
    if probes.iter().all(|p| p.projective_dimension.is_some()) {
        return GlobalDimension::Finite(probes.iter().filter_map(|p| p.projective_dimension).max().unwrap_or(0));
    }
    GlobalDimension::ExceedsBound(bound)
}

/// `C[v][w] = dim (P_v)_w` as a field matrix.
pub fn cartan_matrix(alg: &PathAlgebra) -> Matrix {
    let f = alg.field();
    let c = alg.cartan_matrix();
    let rows: Vec<Vec<Scalar>> = c.iter().map(|r| r.iter().map(|&x| f.from_i64(x as i64)).collect()).collect();
    if rows.is_empty() {
        return Matrix::zeros(f, 0, 0);
    }
    Matrix::from_rows(f, &rows)
}

/// `⟨M, N⟩ = (dim M · C^{-1}) · dim N`, the Euler form on dimension vectors.
/// Computed over ℚ regardless of the base field; `None` when the Cartan
/// matrix is singular.
pub fn euler_form(alg: &PathAlgebra, dim_m: &[usize], dim_n: &[usize]) -> Option<Scalar> {
    let q = FieldSpec::Rationals;
    let c = alg.cartan_matrix();
    let rows: Vec<Vec<Scalar>> = c.iter().map(|r| r.iter().map(|&x| q.from_i64(x as i64)).collect()).collect();
    let cm = Matrix::from_rows(q, &rows);
    let inv = cm.inverse()?;
    let m = Matrix::from_rows(q, &[dim_m.iter().map(|&x| q.from_i64(x as i64)).collect()]);
    let n = Matrix::column_vector(q, &dim_n.iter().map(|&x| q.from_i64(x as i64)).collect::<Vec<_>>());
    Some(m.mul(&inv).mul(&n)[(0, 0)].clone())
}
