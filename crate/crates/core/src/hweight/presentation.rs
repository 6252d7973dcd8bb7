use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{build_path_algebra, AlgElem, PathAlgebra, Quiver, Relation, DEFAULT_LENGTH_BOUND};
use crate::derived::{graded_hom, ChainMap, GradedHom, ProjComplex};
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Matrix, Scalar};
use crate::modrep::{hom_space, HomSpace, Module, ModuleMap, StructureConstantAlgebra};

/// A finite-dimensional Hom space with a basis and coordinates.
pub trait MorSpace {
    type Mor: Clone;
    fn basis(&self) -> Vec<Self::Mor>;
    fn coords(&self, m: &Self::Mor) -> Vec<Scalar>;
}

/// A `𝕜`-linear category in which Hom spaces can be computed.
pub trait LinearCategory {
    type Obj: Clone;
    type Mor: Clone;
    type Space: MorSpace<Mor = Self::Mor>;
    fn field(&self) -> FieldSpec;
    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> Result<Self::Space>;
    /// `g ∘ f`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor;
    fn identity(&self, x: &Self::Obj) -> Self::Mor;
}

impl MorSpace for HomSpace {
    type Mor = ModuleMap;
    fn basis(&self) -> Vec<ModuleMap> {
        HomSpace::basis(self).to_vec()
    }
    fn coords(&self, m: &ModuleMap) -> Vec<Scalar> {
        self.coordinates(m)
    }
}

/// Finitely generated modules over one path algebra.
pub struct ModuleCategory(pub FieldSpec);

impl LinearCategory for ModuleCategory {
    type Obj = Arc<Module>;
    type Mor = ModuleMap;
    type Space = HomSpace;
    fn field(&self) -> FieldSpec {
        self.0
    }
    fn hom(&self, x: &Arc<Module>, y: &Arc<Module>) -> Result<HomSpace> {
        hom_space(x, y)
    }
    fn compose(&self, g: &ModuleMap, f: &ModuleMap) -> ModuleMap {
        g.compose(f)
    }
    fn identity(&self, x: &Arc<Module>) -> ModuleMap {
        ModuleMap::identity(x.clone())
    }
}

/// Degree-0 morphisms `Hom_D(x, y)` computed up to homotopy.
pub struct DegreeZero(pub GradedHom);

impl MorSpace for DegreeZero {
    type Mor = ChainMap;
    fn basis(&self) -> Vec<ChainMap> {
        self.0.reps.get(&0).cloned().unwrap_or_default()
    }
    fn coords(&self, m: &ChainMap) -> Vec<Scalar> {
        self.0.class_of(m).expect("degree-0 cocycle between the stored complexes")
    }
}

/// The bounded derived category, modelled by complexes of projectives.
pub struct DerivedCategory(pub FieldSpec);

impl LinearCategory for DerivedCategory {
    type Obj = ProjComplex;
    type Mor = ChainMap;
    type Space = DegreeZero;
    fn field(&self) -> FieldSpec {
        self.0
    }
    fn hom(&self, x: &ProjComplex, y: &ProjComplex) -> Result<DegreeZero> {
        Ok(DegreeZero(graded_hom(x, y)?))
    }
    fn compose(&self, g: &ChainMap, f: &ChainMap) -> ChainMap {
        f.then(g)
    }
    fn identity(&self, x: &ProjComplex) -> ChainMap {
        ChainMap::identity(x)
    }
}

/// `B = End(⊕ X_i)` with basis the union of bases of `Hom(X_j, X_i)`.
pub struct ObjectAlgebra<C: LinearCategory> {
    pub objects: Vec<C::Obj>,
    /// `spaces[i][j]` is `Hom(X_j, X_i)`.
    pub spaces: Vec<Vec<C::Space>>,
    /// `offsets[i][j]` is the first global index of block `(i, j)`.
    pub offsets: Vec<Vec<usize>>,
    pub algebra: StructureConstantAlgebra,
}

impl<C: LinearCategory> ObjectAlgebra<C> {
    pub fn new(cat: &C, objects: Vec<C::Obj>) -> Result<ObjectAlgebra<C>> {
        let f = cat.field();
        let n = objects.len();
        let mut spaces: Vec<Vec<C::Space>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                row.push(cat.hom(&objects[j], &objects[i])?);
            }
            spaces.push(row);
        }
        let bases: Vec<Vec<Vec<C::Mor>>> = spaces.iter().map(|r| r.iter().map(MorSpace::basis).collect()).collect();
        let mut offsets = vec![vec![0; n]; n];
        let mut blocks = Vec::new();
        let mut total = 0;
        for i in 0..n {
            for j in 0..n {
                offsets[i][j] = total;
                for k in 0..bases[i][j].len() {
                    blocks.push((i, j, k));
                }
                total += bases[i][j].len();
            }
        }
        let zero = vec![Scalar::zero(); total];
        let mut products = vec![vec![zero.clone(); total]; total];
        for (a, &(i, j, k)) in blocks.iter().enumerate() {
            for (b, &(i2, j2, k2)) in blocks.iter().enumerate() {
                if j != i2 {
                    continue;
                }
                let g = cat.compose(&bases[i][j][k], &bases[i2][j2][k2]);
                let c = spaces[i][j2].coords(&g);
                for (t, v) in c.into_iter().enumerate() {
                    products[a][b][offsets[i][j2] + t] = v;
                }
            }
        }
        let mut idempotents = Vec::with_capacity(n);
        let mut unit = zero.clone();
        for i in 0..n {
            let c = spaces[i][i].coords(&cat.identity(&objects[i]));
            let mut e = zero.clone();
            for (t, v) in c.into_iter().enumerate() {
                e[offsets[i][i] + t] = v.clone();
                unit[offsets[i][i] + t] = v;
            }
            idempotents.push(e);
        }
        let algebra = StructureConstantAlgebra::new(f, products, unit, idempotents);
        Ok(ObjectAlgebra { objects, spaces, offsets, algebra })
    }

    pub fn block_range(&self, i: usize, j: usize) -> std::ops::Range<usize> {
        let start = self.offsets[i][j];
        start..start + self.spaces[i][j].basis().len()
    }

    /// `Hom(X_i, y)` for every `i`, as a module over the basic presentation:
    /// an arrow `i → j` acts by precomposition with its map `X_j → X_i`.
    pub fn hom_functor(&self, cat: &C, pres: &BasicPresentation, y: &C::Obj) -> Result<Arc<Module>> {
        let f = cat.field();
        let n = self.objects.len();
        let spaces: Vec<C::Space> = (0..n).map(|i| cat.hom(&self.objects[i], y)).collect::<Result<_>>()?;
        let bases: Vec<Vec<C::Mor>> = spaces.iter().map(MorSpace::basis).collect();
        let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
        let mut action = Vec::new();
        for (x, a) in pres.algebra.quiver().arrows.iter().enumerate() {
            let (i, j) = (a.source, a.target);
            let coeffs = &pres.arrow_maps[x];
            let block: Vec<C::Mor> = self.spaces[i][j].basis();
            let range = self.block_range(i, j);
            let mut m = Matrix::zeros(f, dims[j], dims[i]);
            for (col, g) in bases[i].iter().enumerate() {
                for (k, h) in block.iter().enumerate() {
                    let c = &coeffs[range.start + k];
                    if c.is_zero() {
                        continue;
                    }
                    let v = spaces[j].coords(&cat.compose(g, h));
                    for (row, val) in v.iter().enumerate() {
                        let cur = f.add(&m[(row, col)], &f.mul(c, val));
                        m[(row, col)] = cur;
                    }
                }
            }
            action.push(m);
        }
        Ok(Arc::new(Module::new(pres.algebra.clone(), dims, action)?))
    }
}

/// A path-algebra presentation `Γ ≅ B^op` of a basic algebra `B` with
/// complete orthogonal idempotents; vertex `i` corresponds to `e_i`.
#[derive(Clone, Debug)]
pub struct BasicPresentation {
    pub algebra: Arc<PathAlgebra>,
    /// `B`-coordinates of the element attached to each arrow.
    pub arrow_maps: Vec<Vec<Scalar>>,
    pub loewy_length: usize,
}

fn span_products(alg: &StructureConstantAlgebra, a: &Matrix, b: &Matrix) -> Matrix {
    let f = alg.field();
    let mut cols = Vec::new();
    for x in a.columns() {
        let lx = alg.left_mult(&x);
        for y in b.columns() {
            cols.push(lx.mul(&Matrix::column_vector(f, &y)).column(0));
        }
    }
    Matrix::from_columns(f, alg.dim(), &cols).column_space()
}

fn project_block(m: &Matrix, range: &std::ops::Range<usize>) -> Matrix {
    let f = m.field();
    let cols: Vec<Vec<Scalar>> = m
        .columns()
        .into_iter()
        .map(|c| c.into_iter().enumerate().map(|(k, v)| if range.contains(&k) { v } else { Scalar::zero() }).collect())
        .collect();
    Matrix::from_columns(f, m.rows(), &cols).column_space()
}

/// Builds `Γ` from `B = End(⊕X_i)`: arrows `i → j` span a complement of
/// `e_i J² e_j` in `e_i J e_j`, and the relations are the kernel of the
/// evaluation of paths. Fails unless `B / J` is a product of copies of `𝕜`.
pub fn basic_presentation<C: LinearCategory>(oa: &ObjectAlgebra<C>, labels: &[String]) -> Result<BasicPresentation> {
    let b = &oa.algebra;
    let f = b.field();
    let n = oa.objects.len();
    let j1 = b.radical();
    if b.dim() - j1.cols() != n {
        return Err(Error::NotSplit(format!(
            "End algebra has semisimple quotient of dimension {} for {n} objects",
            b.dim() - j1.cols()
        )));
    }
    let mut powers = vec![j1.clone()];
    while powers.last().unwrap().cols() > 0 {
        let next = span_products(b, powers.last().unwrap(), &j1);
        powers.push(next);
        if powers.len() > b.dim() + 1 {
            return Err(Error::InvalidModule("radical is not nilpotent".into()));
        }
    }
    let loewy = powers.len();
    let j2 = powers.get(1).cloned().unwrap_or_else(|| Matrix::zeros(f, b.dim(), 0));
    let mut arrows: Vec<(usize, usize, Vec<Scalar>)> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let r = oa.block_range(i, j);
            let jb = project_block(&j1, &r);
            let j2b = project_block(&j2, &r);
            let comp = j2b.complement_in(&jb);
            for c in comp.columns() {
                arrows.push((i, j, c));
            }
        }
    }
    let names: Vec<String> = (1..=arrows.len()).map(|k| format!("x{k}")).collect();
    let triples: Vec<(&str, &str, &str)> =
        arrows.iter().zip(&names).map(|((i, j, _), nm)| (nm.as_str(), labels[*i].as_str(), labels[*j].as_str())).collect();
    let quiver = Quiver::new(labels, &triples)?;
    // enumerate paths in application order with their images
    let mut layer: Vec<(Vec<usize>, usize, Vec<Scalar>)> =
        arrows.iter().enumerate().map(|(k, (_, j, v))| (vec![k], *j, v.clone())).collect();
    let mut by_pair: BTreeMap<(usize, usize), Vec<(Vec<usize>, Vec<Scalar>)>> = BTreeMap::new();
    let mut len = 1;
    while !layer.is_empty() && len <= loewy {
        let mut next = Vec::new();
        for (word, end, img) in &layer {
            let start = arrows[word[0]].0;
            by_pair.entry((start, *end)).or_default().push((word.clone(), img.clone()));
            if len < loewy {
                for (k, (i, j, v)) in arrows.iter().enumerate() {
                    if i == end {
                        let mut w = word.clone();
                        w.push(k);
                        next.push((w, *j, b.mul(img, v)));
                    }
                }
            }
        }
        layer = next;
        len += 1;
    }
    let mut relations = Vec::new();
    for paths in by_pair.values() {
        let cols: Vec<Vec<Scalar>> = paths.iter().map(|(_, v)| v.clone()).collect();
        let m = Matrix::from_columns(f, b.dim(), &cols);
        let ker = m.kernel_basis();
        for c in ker.columns() {
            let terms: Vec<(Scalar, Vec<String>)> = c
                .iter()
                .zip(paths)
                .filter(|(x, _)| !x.is_zero())
                .map(|(x, (w, _))| (x.clone(), w.iter().rev().map(|&k| names[k].clone()).collect()))
                .collect();
            relations.push(Relation::new(terms));
        }
    }
    let algebra = build_path_algebra(quiver, relations, f, DEFAULT_LENGTH_BOUND.max(loewy + 1))?;
    if algebra.dim() != b.dim() {
        return Err(Error::InvalidModule(format!(
            "presentation has dimension {} but the endomorphism algebra has {}",
            algebra.dim(),
            b.dim()
        )));
    }
    Ok(BasicPresentation { algebra, arrow_maps: arrows.into_iter().map(|a| a.2).collect(), loewy_length: loewy })
}

/// `D M` over the opposite algebra: same spaces, transposed arrow maps.
pub fn dual_module(m: &Module, opposite: &Arc<PathAlgebra>) -> Result<Arc<Module>> {
    let action = m.actions().iter().map(Matrix::transpose).collect();
    Ok(Arc::new(Module::new(opposite.clone(), m.dims().to_vec(), action)?))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn arrow_assignments(g1: &PathAlgebra, g2: &PathAlgebra, pi: &[usize]) -> Option<Vec<Vec<usize>>> {
    // for each arrow of g1, the candidate arrows of g2 between the image vertices
    let q1 = &g1.quiver().arrows;
    let q2 = &g2.quiver().arrows;
    let mut groups: BTreeMap<(usize, usize), (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for (k, a) in q1.iter().enumerate() {
        groups.entry((pi[a.source], pi[a.target])).or_default().0.push(k);
    }
    for (k, a) in q2.iter().enumerate() {
        groups.entry((a.source, a.target)).or_default().1.push(k);
    }
    if groups.values().any(|(x, y)| x.len() != y.len()) {
        return None;
    }
    let mut assignments: Vec<Vec<usize>> = vec![vec![usize::MAX; q1.len()]];
    for (from, to) in groups.values() {
        let mut next = Vec::new();
        for a in &assignments {
            for p in permutations(to.len()) {
                let mut b = a.clone();
                for (idx, &k) in from.iter().enumerate() {
                    b[k] = to[p[idx]];
                }
                next.push(b);
            }
        }
        assignments = next;
        if assignments.len() > 5040 {
            break;
        }
    }
    Some(assignments)
}

fn relation_vanishes(g1: &PathAlgebra, g2: &PathAlgebra, pi: &[usize], arrows: &[usize], rel: &Relation) -> bool {
    let f = g2.field();
    let mut total = AlgElem::zero();
    for (c, word) in &rel.terms {
        let Ok(path) = g1.quiver().path_from_names(word) else { return false };
        let mut e = AlgElem::basis(g2.trivial(pi[path.source]));
        for &a in &path.arrows {
            e = g2.mul_elem(&AlgElem::basis(g2.arrow_basis(arrows[a])), &e);
        }
        total = total.add(f, &e.scale(f, c));
    }
    total.is_zero()
}

/// Decides `g1 ≅ g2` for basic algebras given by admissible presentations.
/// Dimension, Cartan and quiver data refute; a vertex and arrow bijection
/// under which every relation of `g1` vanishes certifies. Otherwise
/// `Undecided`.
pub fn algebras_isomorphic(g1: &PathAlgebra, g2: &PathAlgebra) -> Result<bool> {
    let n = g1.vertex_count();
    if n != g2.vertex_count() || g1.dim() != g2.dim() || g1.arrow_count() != g2.arrow_count() {
        return Ok(false);
    }
    let (c1, c2) = (g1.cartan_matrix(), g2.cartan_matrix());
    let mut candidates = 0;
    for pi in permutations(n) {
        if (0..n).any(|v| (0..n).any(|w| c1[v][w] != c2[pi[v]][pi[w]])) {
            continue;
        }
        let Some(assignments) = arrow_assignments(g1, g2, &pi) else { continue };
        candidates += 1;
        for arrows in assignments {
            if g1.relations().iter().all(|r| relation_vanishes(g1, g2, &pi, &arrows, r)) {
                return Ok(true);
            }
        }
    }
    if candidates == 0 {
        return Ok(false);
    }
    Err(Error::Undecided("no arrow bijection carries the relations across".into()))
}
