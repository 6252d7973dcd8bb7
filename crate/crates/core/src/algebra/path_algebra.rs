use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use super::groebner::{RewriteSystem, Word, WordPoly};
use super::quiver::{Path, Quiver, Relation};
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Scalar};

pub const DEFAULT_LENGTH_BOUND: usize = 50;

static NEXT_ID: AtomicUsize = AtomicUsize::new(1);

/// A sparse element of a path algebra in the coordinates of its path basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgElem {
    pub terms: BTreeMap<usize, Scalar>,
}

impl AlgElem {
    pub fn zero() -> Self {
        AlgElem::default()
    }

    pub fn basis(i: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(i, Scalar::one());
        AlgElem { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, i: usize) -> Scalar {
        self.terms.get(&i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, field: FieldSpec, i: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.get(&i) {
            Some(old) => field.add(old, c),
            None => c.clone(),
        };
        if v.is_zero() {
            self.terms.remove(&i);
        } else {
            self.terms.insert(i, v);
        }
    }

    pub fn add(&self, field: FieldSpec, other: &AlgElem) -> AlgElem {
        let mut out = self.clone();
        for (i, c) in &other.terms {
            out.add_term(field, *i, c);
        }
        out
    }

    pub fn sub(&self, field: FieldSpec, other: &AlgElem) -> AlgElem {
        self.add(field, &other.scale(field, &field.neg(&Scalar::one())))
    }

    pub fn scale(&self, field: FieldSpec, s: &Scalar) -> AlgElem {
        if s.is_zero() {
            return AlgElem::zero();
        }
        AlgElem { terms: self.terms.iter().map(|(i, c)| (*i, field.mul(c, s))).collect() }
    }
}

/// A finite-dimensional quotient of a path algebra by admissible relations,
/// with its path basis and multiplication table.
pub struct PathAlgebra {
    id: usize,
    field: FieldSpec,
    quiver: Quiver,
    relations: Vec<Relation>,
    length_bound: usize,
    system: RewriteSystem,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    table: Vec<Vec<(usize, Scalar)>>,
    from_to: Vec<Vec<Vec<usize>>>,
}

impl fmt::Debug for PathAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PathAlgebra")
            .field("vertices", &self.quiver.vertices)
            .field("arrows", &self.quiver.arrows.len())
            .field("dim", &self.basis.len())
            .field("field", &self.field)
            .finish()
    }
}

impl PartialEq for PathAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Eq for PathAlgebra {}

/// Builds the algebra `kQ/(rels)`, certifying finite dimension.
pub fn build_path_algebra(
    quiver: Quiver,
    relations: Vec<Relation>,
    field: FieldSpec,
    length_bound: usize,
) -> Result<Arc<PathAlgebra>> {
    PathAlgebra::build(quiver, relations, field, length_bound).map(Arc::new)
}

impl PathAlgebra {
    pub fn build(
        quiver: Quiver,
        relations: Vec<Relation>,
        field: FieldSpec,
        length_bound: usize,
    ) -> Result<PathAlgebra> {
        if length_bound < 1 {
            return Err(Error::IllFormedRelation("length bound must be at least 1".to_string()));
        }
        quiver.validate()?;
        let mut gens = Vec::new();
        for rel in &relations {
            let mut poly = WordPoly::new();
            let mut ends: Option<(usize, usize)> = None;
            for (c, names) in &rel.terms {
                if names.len() < 2 {
                    return Err(Error::IllFormedRelation(format!(
                        "term {} has length {} (relations must be admissible)",
                        names.join(" "),
                        names.len()
                    )));
                }
                let p = quiver.path_from_names(names)?;
                match ends {
                    None => ends = Some((p.source, p.target)),
                    Some(e) if e != (p.source, p.target) => {
                        return Err(Error::IllFormedRelation(format!(
                            "terms are not parallel: {}",
                            names.join(" ")
                        )))
                    }
                    _ => {}
                }
                let c = field
                    .try_reduce(c.clone())
                    .ok_or_else(|| Error::IllFormedRelation("coefficient not in field".to_string()))?;
                let key = Word(p.arrows);
                let v = match poly.get(&key) {
                    Some(old) => field.add(old, &c),
                    None => c,
                };
                if v.is_zero() {
                    poly.remove(&key);
                } else {
                    poly.insert(key, v);
                }
            }
            if !poly.is_empty() {
                gens.push(poly);
            }
        }

        let mut cap = length_bound;
        loop {
            let system = RewriteSystem::complete(field, gens.clone(), cap);
            let basis = Self::enumerate_basis(&quiver, &system, length_bound)?;
            let max_len = basis.iter().map(Path::len).max().unwrap_or(0);
            if 2 * max_len > cap {
                cap = 2 * max_len;
                continue;
            }
            return Ok(Self::assemble(quiver, relations, field, length_bound, system, basis));
        }
    }

    fn enumerate_basis(quiver: &Quiver, system: &RewriteSystem, bound: usize) -> Result<Vec<Path>> {
        let mut basis: Vec<Path> = (0..quiver.vertex_count()).map(|v| quiver.trivial_path(v)).collect();
        let mut frontier: Vec<Vec<usize>> = Vec::new();
        for (i, _) in quiver.arrows.iter().enumerate() {
            frontier.push(vec![i]);
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in frontier {
                let p = quiver.path_from_arrows(w.clone())?;
                if p.len() >= bound {
                    return Err(Error::NotFiniteDimensional(quiver.path_name(&p)));
                }
                basis.push(p);
                let last = quiver.arrows[*w.last().unwrap()].target;
                for (x, a) in quiver.arrows.iter().enumerate() {
                    if a.source != last {
                        continue;
                    }
                    let mut nw = w.clone();
                    nw.push(x);
                    if !system.has_reducible_suffix(&nw) {
                        next.push(nw);
                    }
                }
            }
            frontier = next;
        }
        basis.sort();
        Ok(basis)
    }

    fn assemble(
        quiver: Quiver,
        relations: Vec<Relation>,
        field: FieldSpec,
        length_bound: usize,
        system: RewriteSystem,
        basis: Vec<Path>,
    ) -> PathAlgebra {
        let index: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let nv = quiver.vertex_count();
        let mut from_to = vec![vec![Vec::new(); nv]; nv];
        for (i, p) in basis.iter().enumerate() {
            from_to[p.source][p.target].push(i);
        }
        let mut alg = PathAlgebra {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            field,
            quiver,
            relations,
            length_bound,
            system,
            basis,
            index,
            table: Vec::new(),
            from_to,
        };
        let n = alg.basis.len();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let prod = match alg.basis[i].compose(&alg.basis[j]) {
                    None => Vec::new(),
                    Some(p) => alg.path_normal_form(&p).terms.into_iter().collect(),
                };
                table.push(prod);
            }
        }
        alg.table = table;
        alg
    }

    pub fn id(&self) -> usize {
        self.id
    }
    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }
    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }
    pub fn length_bound(&self) -> usize {
        self.length_bound
    }
    pub fn rewrite_system(&self) -> &RewriteSystem {
        &self.system
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }
    pub fn arrow_count(&self) -> usize {
        self.quiver.arrows.len()
    }
    pub fn basis(&self) -> &[Path] {
        &self.basis
    }
    pub fn basis_path(&self, i: usize) -> &Path {
        &self.basis[i]
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.quiver.vertex_index(name)
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.quiver.vertices[v]
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v.to_string()))
        }
    }

    pub fn index_of(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn trivial(&self, v: usize) -> usize {
        self.index[&self.quiver.trivial_path(v)]
    }

    pub fn arrow_basis(&self, a: usize) -> usize {
        let arr = &self.quiver.arrows[a];
        self.index[&Path { source: arr.source, target: arr.target, arrows: vec![a] }]
    }

    /// Basis indices of the paths from `v` to `w`.
    pub fn paths_from_to(&self, v: usize, w: usize) -> &[usize] {
        &self.from_to[v][w]
    }

    pub fn path_name(&self, i: usize) -> String {
        self.quiver.path_name(&self.basis[i])
    }

    pub fn path_normal_form(&self, p: &Path) -> AlgElem {
        if p.len() == 0 {
            return AlgElem::basis(self.index[p]);
        }
        let nf = self.system.normal_form(&p.arrows);
        let mut out = AlgElem::zero();
        for (Word(w), c) in nf {
            let q = Path { source: p.source, target: p.target, arrows: w };
            let i = *self.index.get(&q).expect("normal forms are basis paths");
            out.add_term(self.field, i, &c);
        }
        out
    }

    /// `basis[i] ∘ basis[j]` in basis coordinates.
    pub fn mul(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.basis.len() + j]
    }

    /// `x ∘ y`.
    pub fn mul_elem(&self, x: &AlgElem, y: &AlgElem) -> AlgElem {
        let f = self.field;
        let mut out = AlgElem::zero();
        for (i, a) in &x.terms {
            for (j, b) in &y.terms {
                let ab = f.mul(a, b);
                for (k, c) in self.mul(*i, *j) {
                    out.add_term(f, *k, &f.mul(&ab, c));
                }
            }
        }
        out
    }

    /// Elements of `e_w A e_v` (paths `v → w`) are parallel.
    pub fn is_in_corner(&self, x: &AlgElem, v: usize, w: usize) -> bool {
        x.terms.keys().all(|&i| self.basis[i].source == v && self.basis[i].target == w)
    }

    /// Checks associativity of the multiplication table on all basis triples.
    pub fn check_associativity(&self) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = AlgElem { terms: self.mul(i, j).iter().cloned().collect() };
                for k in 0..n {
                    let left = self.mul_elem(&ij, &AlgElem::basis(k));
                    let jk = AlgElem { terms: self.mul(j, k).iter().cloned().collect() };
                    let right = self.mul_elem(&AlgElem::basis(i), &jk);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The opposite algebra: arrows reversed, relation words reversed.
    pub fn opposite(&self) -> Result<Arc<PathAlgebra>> {
        let rels = self.relations.iter().map(Relation::reversed).collect();
        build_path_algebra(self.quiver.opposite(), rels, self.field, self.length_bound)
    }

    /// Same presentation over another field.
    pub fn with_field(&self, field: FieldSpec) -> Result<Arc<PathAlgebra>> {
        build_path_algebra(self.quiver.clone(), self.relations.clone(), field, self.length_bound)
    }

    /// Dimension matrix `C[v][w] = dim e_w A e_v` (paths `v → w`), i.e. the
    /// dimension vector of `P_v` in row `v`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        (0..n).map(|v| (0..n).map(|w| self.from_to[v][w].len()).collect()).collect()
    }
}

pub fn opposite_algebra(alg: &PathAlgebra) -> Result<Arc<PathAlgebra>> {
    alg.opposite()
}
