use std::sync::Arc;

use crate::algebra::{AlgElem, PathAlgebra};
use crate::exactla::{Matrix, Scalar};
use crate::homology::ProjTerm;
use crate::modrep::ModuleMap;

/// A map `⊕_i P_{src_i} → ⊕_j P_{tgt_j}`. Entry `(i, j)` lies in
/// `e_{src_i} A e_{tgt_j}` (paths `tgt_j → src_i`) and acts by right
/// multiplication, so `p ↦ p ∘ entry`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathMatrix {
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    pub entries: Vec<Vec<AlgElem>>,
}

impl PathMatrix {
    pub fn zero(src: &[usize], tgt: &[usize]) -> PathMatrix {
        PathMatrix {
            src: src.to_vec(),
            tgt: tgt.to_vec(),
            entries: vec![vec![AlgElem::zero(); tgt.len()]; src.len()],
        }
    }

    pub fn identity(alg: &PathAlgebra, vs: &[usize]) -> PathMatrix {
        let mut m = PathMatrix::zero(vs, vs);
        for (i, &v) in vs.iter().enumerate() {
            m.entries[i][i] = AlgElem::basis(alg.trivial(v));
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| r.iter().all(AlgElem::is_zero))
    }

    pub fn get(&self, i: usize, j: usize) -> &AlgElem {
        &self.entries[i][j]
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, alg: &PathAlgebra, other: &PathMatrix) -> PathMatrix {
        debug_assert_eq!(self.tgt, other.src);
        let f = alg.field();
        let mut out = PathMatrix::zero(&self.src, &other.tgt);
        for i in 0..self.src.len() {
            for j in 0..self.tgt.len() {
                let a = &self.entries[i][j];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.tgt.len() {
                    let b = &other.entries[j][k];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = alg.mul_elem(a, b);
                    out.entries[i][k] = out.entries[i][k].add(f, &prod);
                }
            }
        }
        out
    }

    pub fn add(&self, alg: &PathAlgebra, other: &PathMatrix) -> PathMatrix {
        let f = alg.field();
        let mut out = self.clone();
        for (r, orow) in out.entries.iter_mut().zip(&other.entries) {
            for (x, y) in r.iter_mut().zip(orow) {
                *x = x.add(f, y);
            }
        }
        out
    }

    pub fn scale(&self, alg: &PathAlgebra, s: &Scalar) -> PathMatrix {
        let f = alg.field();
        PathMatrix {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            entries: self.entries.iter().map(|r| r.iter().map(|x| x.scale(f, s)).collect()).collect(),
        }
    }

    pub fn neg(&self, alg: &PathAlgebra) -> PathMatrix {
        self.scale(alg, &alg.field().from_i64(-1))
    }

    /// Stacks sources: `[self; other]` from `src ++ other.src` to the common target.
    pub fn stack_sources(&self, other: &PathMatrix) -> PathMatrix {
        debug_assert_eq!(self.tgt, other.tgt);
        let mut src = self.src.clone();
        src.extend_from_slice(&other.src);
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        PathMatrix { src, tgt: self.tgt.clone(), entries }
    }

    /// Concatenates targets: from the common source to `tgt ++ other.tgt`.
    pub fn stack_targets(&self, other: &PathMatrix) -> PathMatrix {
        debug_assert_eq!(self.src, other.src);
        let mut tgt = self.tgt.clone();
        tgt.extend_from_slice(&other.tgt);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| {
                let mut r = a.clone();
                r.extend(b.iter().cloned());
                r
            })
            .collect();
        PathMatrix { src: self.src.clone(), tgt, entries }
    }

    pub fn block_diag(a: &PathMatrix, b: &PathMatrix) -> PathMatrix {
        let top = a.stack_targets(&PathMatrix::zero(&a.src, &b.tgt));
        let bottom = PathMatrix::zero(&b.src, &a.tgt).stack_targets(b);
        top.stack_sources(&bottom)
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> PathMatrix {
        PathMatrix {
            src: rows.iter().map(|&i| self.src[i]).collect(),
            tgt: cols.iter().map(|&j| self.tgt[j]).collect(),
            entries: rows.iter().map(|&i| cols.iter().map(|&j| self.entries[i][j].clone()).collect()).collect(),
        }
    }

    /// Every entry is a combination of parallel paths with the right endpoints.
    pub fn is_well_formed(&self, alg: &PathAlgebra) -> bool {
        self.entries.len() == self.src.len()
            && self.entries.iter().enumerate().all(|(i, r)| {
                r.len() == self.tgt.len() && r.iter().enumerate().all(|(j, x)| alg.is_in_corner(x, self.tgt[j], self.src[i]))
            })
    }

    /// The induced module map between the projective sums.
    pub fn to_module_map(&self, src: &ProjTerm, tgt: &ProjTerm) -> ModuleMap {
        let alg = src.module.algebra();
        let f = alg.field();
        let nv = alg.vertex_count();
        let mut blocks = Vec::with_capacity(nv);
        for w in 0..nv {
            let mut m = Matrix::zeros(f, tgt.module.dim_at(w), src.module.dim_at(w));
            let mut col = 0;
            for (i, &v) in src.vertices.iter().enumerate() {
                for &p in alg.paths_from_to(v, w) {
                    for (j, x) in self.entries[i].iter().enumerate() {
                        for (k, c) in &x.terms {
                            for (r, cc) in alg.mul(p, *k) {
                                let row = tgt.coordinate(j, *r);
                                let v = f.add(&m[(row, col)], &f.mul(c, cc));
                                m[(row, col)] = v;
                            }
                        }
                    }
                    col += 1;
                }
            }
            blocks.push(m);
        }
        ModuleMap::new_unchecked(src.module.clone(), tgt.module.clone(), blocks)
    }

    /// Reads off the entries of a module map between projective sums from
    /// the images of the summand generators.
    pub fn from_module_map(map: &ModuleMap, src: &ProjTerm, tgt: &ProjTerm) -> PathMatrix {
        let alg: &Arc<PathAlgebra> = src.module.algebra();
        let f = alg.field();
        let mut out = PathMatrix::zero(&src.vertices, &tgt.vertices);
        for (i, &v) in src.vertices.iter().enumerate() {
            let g = src.generator(i);
            let img = map.block(v).mul(&Matrix::column_vector(f, &g)).column(0);
            for j in 0..tgt.vertices.len() {
                out.entries[i][j] = tgt.component(j, v, &img);
            }
        }
        out
    }
}
