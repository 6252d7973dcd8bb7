use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::complex::{ChainMap, ProjComplex};
use super::pathmatrix::PathMatrix;
use crate::algebra::AlgElem;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar};

/// A basis element of `Hom^n(x, y)`: the path `path` as the `(i, j)` entry of
/// the component `x^p → y^{p+n}`.
type HomIndex = (i64, usize, usize, usize);

/// One degree of the total Hom complex and its cohomology.
#[derive(Clone, Debug)]
pub struct HomDegree {
    pub basis: Vec<HomIndex>,
    /// Cocycle basis as columns over `basis`.
    pub cocycles: Matrix,
    /// Coboundary basis as columns over `basis`.
    pub coboundaries: Matrix,
    /// Cocycles complementing the coboundaries; their classes form a basis.
    pub representatives: Matrix,
}

/// `⊕_l Hom(x, y[l])` computed as cohomology of the total Hom complex.
#[derive(Clone, Debug)]
pub struct GradedHom {
    pub source: ProjComplex,
    pub target: ProjComplex,
    pub dims: BTreeMap<i64, usize>,
    pub reps: BTreeMap<i64, Vec<ChainMap>>,
    pub degrees: BTreeMap<i64, HomDegree>,
}

impl GradedHom {
    pub fn dim(&self, n: i64) -> usize {
        self.dims.get(&n).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    /// Degrees with nonzero cohomology.
    pub fn nonzero(&self) -> BTreeMap<i64, usize> {
        self.dims.iter().filter(|(_, &d)| d > 0).map(|(&n, &d)| (n, d)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Class of a cocycle of degree `f.degree` in the representative basis.
    pub fn class_of(&self, f: &ChainMap) -> Option<Vec<Scalar>> {
        let Some(deg) = self.degrees.get(&f.degree) else {
            // no pair of terms meets in this degree, so the space is zero
            return f.is_zero().then(Vec::new);
        };
        let field = self.source.algebra().field();
        if !f.is_cocycle() {
            return None;
        }
        let v = vectorize(f, &deg.basis);
        let sys = deg.coboundaries.hstack(&deg.representatives);
        let sol = sys.solve(&Matrix::column_vector(field, &v)).ok()??;
        let b = deg.coboundaries.cols();
        Some((0..deg.representatives.cols()).map(|k| sol[(b + k, 0)].clone()).collect())
    }

    /// Whether a cocycle is null-homotopic.
    pub fn is_null_homotopic(&self, f: &ChainMap) -> Option<bool> {
        self.class_of(f).map(|c| c.iter().all(|x| x == &Scalar::from_integer(0.into())))
    }
}

fn basis_of(x: &ProjComplex, y: &ProjComplex, n: i64) -> Vec<HomIndex> {
    let alg = x.algebra();
    let mut out = Vec::new();
    for p in x.degrees() {
        let tx = x.term(p);
        let ty = y.term(p + n);
        for (i, &v) in tx.iter().enumerate() {
            for (j, &u) in ty.iter().enumerate() {
                for &path in alg.paths_from_to(u, v) {
                    out.push((p, i, j, path));
                }
            }
        }
    }
    out
}

fn vectorize(f: &ChainMap, basis: &[HomIndex]) -> Vec<Scalar> {
    basis
        .iter()
        .map(|&(p, i, j, path)| match f.components.get(&p) {
            Some(c) => c.entries[i][j].coefficient(path),
            None => Scalar::from_integer(0.into()),
        })
        .collect()
}

fn chain_map_from_vector(x: &ProjComplex, y: &ProjComplex, n: i64, basis: &[HomIndex], v: &[Scalar]) -> ChainMap {
    let f = x.algebra().field();
    let mut components: BTreeMap<i64, PathMatrix> = BTreeMap::new();
    for (&(p, i, j, path), c) in basis.iter().zip(v) {
        if c == &Scalar::from_integer(0.into()) {
            continue;
        }
        let m = components.entry(p).or_insert_with(|| PathMatrix::zero(x.term(p), y.term(p + n)));
        m.entries[i][j].add_term(f, path, c);
    }
    ChainMap { source: x.clone(), target: y.clone(), degree: n, components }
}

/// Matrix of `D(f) = d_y f − (−1)^n f d_x` from `Hom^n` to `Hom^{n+1}`.
fn differential(x: &ProjComplex, y: &ProjComplex, n: i64, src: &[HomIndex], tgt: &[HomIndex]) -> Matrix {
    let alg = x.algebra();
    let f = alg.field();
    let index: HashMap<HomIndex, usize> = tgt.iter().enumerate().map(|(k, &b)| (b, k)).collect();
    let sign = if n % 2 == 0 { f.from_i64(-1) } else { f.one() };
    let mut m = Matrix::zeros(f, tgt.len(), src.len());
    for (col, &(p, i, j, path)) in src.iter().enumerate() {
        let e = AlgElem::basis(path);
        let mut add = |key: HomIndex, c: &Scalar| {
            let row = index[&key];
            let v = f.add(&m[(row, col)], c);
            m[(row, col)] = v;
        };
        if let Some(dy) = y.diff_ref(p + n) {
            for (k, g) in dy.entries[j].iter().enumerate() {
                if g.is_zero() {
                    continue;
                }
                for (q, c) in &alg.mul_elem(&e, g).terms {
                    add((p, i, k, *q), c);
                }
            }
        }
        if let Some(dx) = x.diff_ref(p - 1) {
            for (s, row) in dx.entries.iter().enumerate() {
                let h = &row[i];
                if h.is_zero() {
                    continue;
                }
                for (q, c) in &alg.mul_elem(h, &e).terms {
                    add((p - 1, s, j, *q), &f.mul(&sign, c));
                }
            }
        }
    }
    m
}

pub fn graded_hom(x: &ProjComplex, y: &ProjComplex) -> Result<GradedHom> {
    if x.algebra().id() != y.algebra().id() {
        return Err(Error::AlgebraMismatch);
    }
    let mut out = GradedHom {
        source: x.clone(),
        target: y.clone(),
        dims: BTreeMap::new(),
        reps: BTreeMap::new(),
        degrees: BTreeMap::new(),
    };
    let (Some((xlo, xhi)), Some((ylo, yhi))) = (x.support(), y.support()) else {
        return Ok(out);
    };
    let (nlo, nhi) = (ylo - xhi, yhi - xlo);
    let bases: BTreeMap<i64, Vec<HomIndex>> = ((nlo - 1)..=(nhi + 1)).map(|n| (n, basis_of(x, y, n))).collect();
    let diffs: BTreeMap<i64, Matrix> = ((nlo - 1)..=nhi)
        .into_par_iter()
        .map(|n| (n, differential(x, y, n, &bases[&n], &bases[&(n + 1)])))
        .collect();
    for n in nlo..=nhi {
        let basis = bases[&n].clone();
        let cocycles = diffs[&n].kernel_basis();
        let coboundaries = diffs[&(n - 1)].column_space();
        let representatives = coboundaries.complement_in(&cocycles);
        let reps: Vec<ChainMap> = (0..representatives.cols())
            .map(|c| chain_map_from_vector(x, y, n, &basis, &representatives.column(c)))
            .collect();
        out.dims.insert(n, reps.len());
        out.reps.insert(n, reps);
        out.degrees.insert(n, HomDegree { basis, cocycles, coboundaries, representatives });
    }
    Ok(out)
}
