use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::pathmatrix::PathMatrix;
use crate::algebra::PathAlgebra;
use crate::error::{Error, Result};
use crate::homology::ProjTerm;
use crate::modrep::ModuleMap;

/// A bounded cochain complex of finitely generated projectives. Term `d` is
/// `⊕ P_v` over the vertex list `term(d)`; the differential `diff(d)` goes
/// from degree `d` to `d + 1`.
#[derive(Clone)]
pub struct ProjComplex {
    alg: Arc<PathAlgebra>,
    lo: i64,
    terms: Vec<Vec<usize>>,
    diffs: Vec<PathMatrix>,
}

impl fmt::Debug for ProjComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjComplex({})", self.describe())
    }
}

impl ProjComplex {
    /// Validates shapes, corner conditions and `d∘d = 0`, then trims zero
    /// terms at both ends.
    pub fn new(alg: &Arc<PathAlgebra>, lo: i64, terms: Vec<Vec<usize>>, diffs: Vec<PathMatrix>) -> Result<ProjComplex> {
        if terms.is_empty() {
            if !diffs.is_empty() {
                return Err(Error::InvalidComplex("differentials without terms".into()));
            }
            return Ok(ProjComplex::zero(alg));
        }
        if diffs.len() + 1 != terms.len() {
            return Err(Error::InvalidComplex(format!(
                "{} terms need {} differentials, got {}",
                terms.len(),
                terms.len() - 1,
                diffs.len()
            )));
        }
        let nv = alg.vertex_count();
        for t in &terms {
            if let Some(&v) = t.iter().find(|&&v| v >= nv) {
                return Err(Error::UnknownVertex(v.to_string()));
            }
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.src != terms[k] || d.tgt != terms[k + 1] {
                return Err(Error::InvalidComplex(format!("differential in degree {} has wrong shape", lo + k as i64)));
            }
            if !d.is_well_formed(alg) {
                return Err(Error::InvalidComplex(format!(
                    "differential in degree {} has an entry between the wrong vertices",
                    lo + k as i64
                )));
            }
        }
        for (k, w) in diffs.windows(2).enumerate() {
            if !w[0].then(alg, &w[1]).is_zero() {
                return Err(Error::InvalidComplex(format!("d∘d ≠ 0 at degree {}", lo + k as i64)));
            }
        }
        Ok(ProjComplex::new_unchecked(alg, lo, terms, diffs))
    }

    pub(crate) fn new_unchecked(alg: &Arc<PathAlgebra>, lo: i64, mut terms: Vec<Vec<usize>>, mut diffs: Vec<PathMatrix>) -> ProjComplex {
        let mut lo = lo;
        while terms.first().is_some_and(Vec::is_empty) {
            terms.remove(0);
            if !diffs.is_empty() {
                diffs.remove(0);
            }
            lo += 1;
        }
        while terms.last().is_some_and(Vec::is_empty) {
            terms.pop();
            diffs.pop();
        }
        if terms.is_empty() {
            return ProjComplex::zero(alg);
        }
        ProjComplex { alg: alg.clone(), lo, terms, diffs }
    }

    pub fn zero(alg: &Arc<PathAlgebra>) -> ProjComplex {
        ProjComplex { alg: alg.clone(), lo: 0, terms: Vec::new(), diffs: Vec::new() }
    }

    /// A single projective sum placed in degree `d`.
    pub fn stalk(alg: &Arc<PathAlgebra>, vertices: Vec<usize>, d: i64) -> ProjComplex {
        ProjComplex::new_unchecked(alg, d, vec![vertices], Vec::new())
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra> {
        &self.alg
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Inclusive degree range of the nonzero terms.
    pub fn support(&self) -> Option<(i64, i64)> {
        if self.terms.is_empty() {
            None
        } else {
            Some((self.lo, self.lo + self.terms.len() as i64 - 1))
        }
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.terms.len() as i64).map(move |k| self.lo + k)
    }

    pub fn term(&self, d: i64) -> &[usize] {
        let k = d - self.lo;
        if k < 0 || k >= self.terms.len() as i64 {
            &[]
        } else {
            &self.terms[k as usize]
        }
    }

    /// Differential from degree `d` to `d + 1` (zero outside the support).
    pub fn diff(&self, d: i64) -> PathMatrix {
        let k = d - self.lo;
        if k >= 0 && (k as usize) < self.diffs.len() {
            self.diffs[k as usize].clone()
        } else {
            PathMatrix::zero(self.term(d), self.term(d + 1))
        }
    }

    pub(crate) fn diff_ref(&self, d: i64) -> Option<&PathMatrix> {
        let k = d - self.lo;
        if k >= 0 && (k as usize) < self.diffs.len() {
            Some(&self.diffs[k as usize])
        } else {
            None
        }
    }

    pub fn total_rank(&self) -> usize {
        self.terms.iter().map(Vec::len).sum()
    }

    pub fn term_module(&self, d: i64) -> Result<ProjTerm> {
        ProjTerm::new(&self.alg, self.term(d).to_vec())
    }

    pub fn differential_map(&self, d: i64) -> Result<ModuleMap> {
        let s = self.term_module(d)?;
        let t = self.term_module(d + 1)?;
        Ok(self.diff(d).to_module_map(&s, &t))
    }

    /// Multiplicity vector of each term, indexed by degree.
    pub fn multiplicities(&self) -> BTreeMap<i64, Vec<usize>> {
        let nv = self.alg.vertex_count();
        self.degrees()
            .map(|d| {
                let mut m = vec![0; nv];
                for &v in self.term(d) {
                    m[v] += 1;
                }
                (d, m)
            })
            .collect()
    }

    /// `x[k]`: term `d` is `x^{d+k}`, differentials multiplied by `(−1)^k`.
    pub fn shift(&self, k: i64) -> ProjComplex {
        if self.is_zero() {
            return self.clone();
        }
        let diffs = if k % 2 == 0 { self.diffs.clone() } else { self.diffs.iter().map(|d| d.neg(&self.alg)).collect() };
        ProjComplex { alg: self.alg.clone(), lo: self.lo - k, terms: self.terms.clone(), diffs }
    }

    pub fn describe(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .degrees()
            .map(|d| {
                let t = self.term(d);
                let s = if t.is_empty() {
                    "0".to_string()
                } else {
                    t.iter().map(|&v| format!("P{}", self.alg.vertex_name(v))).collect::<Vec<_>>().join("⊕")
                };
                format!("{d}:{s}")
            })
            .collect();
        parts.join(" → ")
    }
}

pub fn shift(x: &ProjComplex, k: i64) -> ProjComplex {
    x.shift(k)
}

pub fn direct_sum_complexes(alg: &Arc<PathAlgebra>, xs: &[ProjComplex]) -> ProjComplex {
    let supports: Vec<(i64, i64)> = xs.iter().filter_map(ProjComplex::support).collect();
    if supports.is_empty() {
        return ProjComplex::zero(alg);
    }
    let lo = supports.iter().map(|s| s.0).min().unwrap();
    let hi = supports.iter().map(|s| s.1).max().unwrap();
    let terms: Vec<Vec<usize>> = (lo..=hi).map(|d| xs.iter().flat_map(|x| x.term(d).iter().copied()).collect()).collect();
    let diffs = (lo..hi)
        .map(|d| {
            let mut acc = PathMatrix::zero(&[], &[]);
            for x in xs {
                acc = PathMatrix::block_diag(&acc, &x.diff(d));
            }
            acc
        })
        .collect();
    ProjComplex::new_unchecked(alg, lo, terms, diffs)
}

/// A family of maps `x^p → y^{p+degree}`. With `degree = 0` a chain map must
/// commute with the differentials; in general it is a cocycle of the total
/// Hom complex when `d_y f = (−1)^degree f d_x`.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub source: ProjComplex,
    pub target: ProjComplex,
    pub degree: i64,
    pub components: BTreeMap<i64, PathMatrix>,
}

impl ChainMap {
    pub fn new(source: ProjComplex, target: ProjComplex, degree: i64, components: BTreeMap<i64, PathMatrix>) -> Result<ChainMap> {
        if source.algebra().id() != target.algebra().id() {
            return Err(Error::AlgebraMismatch);
        }
        for (&p, c) in &components {
            if c.src != source.term(p) || c.tgt != target.term(p + degree) || !c.is_well_formed(source.algebra()) {
                return Err(Error::InvalidMap(format!("component in degree {p} has the wrong shape")));
            }
        }
        let m = ChainMap { source, target, degree, components };
        if !m.is_cocycle() {
            return Err(Error::InvalidMap("does not commute with the differentials".into()));
        }
        Ok(m)
    }

    pub fn zero(source: ProjComplex, target: ProjComplex, degree: i64) -> ChainMap {
        ChainMap { source, target, degree, components: BTreeMap::new() }
    }

    pub fn identity(x: &ProjComplex) -> ChainMap {
        let components = x.degrees().map(|d| (d, PathMatrix::identity(x.algebra(), x.term(d)))).collect();
        ChainMap { source: x.clone(), target: x.clone(), degree: 0, components }
    }

    pub fn component(&self, p: i64) -> PathMatrix {
        self.components
            .get(&p)
            .cloned()
            .unwrap_or_else(|| PathMatrix::zero(self.source.term(p), self.target.term(p + self.degree)))
    }

    pub fn is_zero(&self) -> bool {
        self.components.values().all(PathMatrix::is_zero)
    }

    /// `d_y f − (−1)^n f d_x = 0`.
    pub fn is_cocycle(&self) -> bool {
        let alg = self.source.algebra();
        let n = self.degree;
        let (Some((xlo, xhi)), Some(_)) = (self.source.support(), self.target.support()) else {
            return true;
        };
        for p in (xlo - 1)..=xhi {
            let a = self.component(p).then(alg, &self.target.diff(p + n));
            let b = self.source.diff(p).then(alg, &self.component(p + 1));
            let b = if n % 2 == 0 { b } else { b.neg(alg) };
            if !a.add(alg, &b.neg(alg)).is_zero() {
                return false;
            }
        }
        true
    }

    /// `other ∘ self`, of degree `self.degree + other.degree`.
    pub fn then(&self, other: &ChainMap) -> ChainMap {
        let alg = self.source.algebra();
        let mut components = BTreeMap::new();
        for (&p, c) in &self.components {
            let g = other.component(p + self.degree);
            let prod = c.then(alg, &g);
            if !prod.is_zero() {
                components.insert(p, prod);
            }
        }
        ChainMap { source: self.source.clone(), target: other.target.clone(), degree: self.degree + other.degree, components }
    }

    pub fn add(&self, other: &ChainMap) -> ChainMap {
        let alg = self.source.algebra();
        let mut components = self.components.clone();
        for (&p, c) in &other.components {
            let v = match components.get(&p) {
                Some(old) => old.add(alg, c),
                None => c.clone(),
            };
            components.insert(p, v);
        }
        ChainMap { source: self.source.clone(), target: self.target.clone(), degree: self.degree, components }
    }

    pub fn scale(&self, s: &crate::exactla::Scalar) -> ChainMap {
        let alg = self.source.algebra();
        let components = self.components.iter().map(|(&p, c)| (p, c.scale(alg, s))).collect();
        ChainMap { source: self.source.clone(), target: self.target.clone(), degree: self.degree, components }
    }

    /// The same components read as a degree-0 chain map `x → y[n]`.
    pub fn into_target_shift(&self) -> ChainMap {
        ChainMap {
            source: self.source.clone(),
            target: self.target.shift(self.degree),
            degree: 0,
            components: self.components.clone(),
        }
    }

    /// The same components read as a degree-0 chain map `x[−n] → y`.
    pub fn into_source_shift(&self) -> ChainMap {
        let n = self.degree;
        ChainMap {
            source: self.source.shift(-n),
            target: self.target.clone(),
            degree: 0,
            components: self.components.iter().map(|(&p, c)| (p + n, c.clone())).collect(),
        }
    }

    /// Degree-0 maps `x_r → y` combined into `⊕ x_r → y`.
    pub fn from_source_sum(maps: &[ChainMap], target: &ProjComplex) -> ChainMap {
        let alg = target.algebra();
        let sources: Vec<ProjComplex> = maps.iter().map(|m| m.source.clone()).collect();
        let source = direct_sum_complexes(alg, &sources);
        let mut components = BTreeMap::new();
        for d in source.degrees() {
            let mut acc = PathMatrix::zero(&[], target.term(d));
            for m in maps {
                acc = acc.stack_sources(&m.component(d));
            }
            components.insert(d, acc);
        }
        ChainMap { source, target: target.clone(), degree: 0, components }
    }

    /// Degree-0 maps `x → y_r` combined into `x → ⊕ y_r`.
    pub fn into_target_sum(maps: &[ChainMap], source: &ProjComplex) -> ChainMap {
        let alg = source.algebra();
        let targets: Vec<ProjComplex> = maps.iter().map(|m| m.target.clone()).collect();
        let target = direct_sum_complexes(alg, &targets);
        let mut components = BTreeMap::new();
        for d in source.degrees() {
            let mut acc = PathMatrix::zero(source.term(d), &[]);
            for m in maps {
                acc = acc.stack_targets(&m.component(d));
            }
            components.insert(d, acc);
        }
        ChainMap { source: source.clone(), target, degree: 0, components }
    }
}

/// Mapping cone with its triangle `y → cone → x[1]`.
#[derive(Clone, Debug)]
pub struct Cone {
    pub complex: ProjComplex,
    pub inclusion: ChainMap,
    pub projection: ChainMap,
}

/// `cone(f)^d = x^{d+1} ⊕ y^d` with differential `(x, y) ↦ (−d x, f x + d y)`.
pub fn cone(f: &ChainMap) -> Result<Cone> {
    if f.degree != 0 {
        return Err(Error::InvalidMap("cone needs a degree-0 chain map".into()));
    }
    let x = &f.source;
    let y = &f.target;
    let alg = x.algebra();
    let sx = x.support();
    let sy = y.support();
    let (lo, hi) = match (sx, sy) {
        (None, None) => return Ok(Cone { complex: ProjComplex::zero(alg), inclusion: f.clone(), projection: f.clone() }),
        (Some((a, b)), None) => (a - 1, b - 1),
        (None, Some((a, b))) => (a, b),
        (Some((a, b)), Some((c, d))) => ((a - 1).min(c), (b - 1).max(d)),
    };
    let term = |d: i64| -> Vec<usize> {
        let mut t = x.term(d + 1).to_vec();
        t.extend_from_slice(y.term(d));
        t
    };
    let terms: Vec<Vec<usize>> = (lo..=hi).map(term).collect();
    let diffs: Vec<PathMatrix> = (lo..hi)
        .map(|d| {
            let top = x.diff(d + 1).neg(alg).stack_targets(&f.component(d + 1));
            let bottom = PathMatrix::zero(y.term(d), x.term(d + 2)).stack_targets(&y.diff(d));
            top.stack_sources(&bottom)
        })
        .collect();
    let complex = ProjComplex::new_unchecked(alg, lo, terms, diffs);
    let mut inc = BTreeMap::new();
    let mut proj = BTreeMap::new();
    for d in lo..=hi {
        let xs = x.term(d + 1);
        let ys = y.term(d);
        if !ys.is_empty() {
            inc.insert(d, PathMatrix::zero(ys, xs).stack_targets(&PathMatrix::identity(alg, ys)));
        }
        if !xs.is_empty() {
            proj.insert(d, PathMatrix::identity(alg, xs).stack_sources(&PathMatrix::zero(ys, xs)));
        }
    }
    let inclusion = ChainMap { source: y.clone(), target: complex.clone(), degree: 0, components: inc };
    let projection = ChainMap { source: complex.clone(), target: x.shift(1), degree: 0, components: proj };
    Ok(Cone { complex, inclusion, projection })
}
