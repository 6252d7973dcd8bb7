use std::fmt;
use std::sync::Arc;

use crate::algebra::{AlgElem, Path, PathAlgebra};
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Matrix, Scalar};

/// A finite-dimensional left module: one vector space per vertex and one
/// matrix per arrow (rows indexed by the target vertex).
#[derive(Clone)]
pub struct Module {
    alg: Arc<PathAlgebra>,
    dims: Vec<usize>,
    action: Vec<Matrix>,
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Module").field("dims", &self.dims).field("action", &self.action).finish()
    }
}

impl Module {
    pub fn new(alg: Arc<PathAlgebra>, dims: Vec<usize>, action: Vec<Matrix>) -> Result<Module> {
        if dims.len() != alg.vertex_count() {
            return Err(Error::InvalidModule(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                alg.vertex_count()
            )));
        }
        if action.len() != alg.arrow_count() {
            return Err(Error::InvalidModule(format!(
                "{} matrices for {} arrows",
                action.len(),
                alg.arrow_count()
            )));
        }
        for (a, m) in alg.quiver().arrows.iter().zip(&action) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::InvalidModule(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    a.name,
                    dims[a.target],
                    dims[a.source],
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != alg.field() {
                return Err(Error::InvalidModule(format!("arrow {} matrix over another field", a.name)));
            }
        }
        let m = Module { alg, dims, action };
        m.check_relations()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(alg: Arc<PathAlgebra>, dims: Vec<usize>, action: Vec<Matrix>) -> Module {
        debug_assert_eq!(dims.len(), alg.vertex_count());
        Module { alg, dims, action }
    }

    fn check_relations(&self) -> Result<()> {
        let q = self.alg.quiver();
        let f = self.alg.field();
        for rel in self.alg.relations() {
            let mut acc: Option<Matrix> = None;
            for (c, names) in &rel.terms {
                let p = q.path_from_names(names)?;
                let term = self.path_action(&p).scale(&f.reduce(c.clone()));
                acc = Some(match acc {
                    None => term,
                    Some(a) => a.add(&term),
                });
            }
            if let Some(a) = acc {
                if !a.is_zero() {
                    let words: Vec<String> = rel.terms.iter().map(|(_, w)| w.join(" ")).collect();
                    return Err(Error::InvalidModule(format!(
                        "relation {} does not vanish",
                        words.join(" + ")
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn zero(alg: &Arc<PathAlgebra>) -> Module {
        let dims = vec![0; alg.vertex_count()];
        let action = alg.quiver().arrows.iter().map(|_| Matrix::zeros(alg.field(), 0, 0)).collect();
        Module { alg: alg.clone(), dims, action }
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra> {
        &self.alg
    }
    pub fn field(&self) -> FieldSpec {
        self.alg.field()
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }
    pub fn action(&self, arrow: usize) -> &Matrix {
        &self.action[arrow]
    }
    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    pub fn same_algebra(&self, other: &Module) -> Result<()> {
        if self.alg.id() == other.alg.id() {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Start of each vertex block in the concatenated coordinate vector.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dims.len() + 1);
        let mut acc = 0;
        for d in &self.dims {
            out.push(acc);
            acc += d;
        }
        out.push(acc);
        out
    }

    pub fn path_action(&self, p: &Path) -> Matrix {
        let f = self.field();
        let mut m = Matrix::identity(f, self.dims[p.source]);
        for &a in &p.arrows {
            m = self.action[a].mul(&m);
        }
        m
    }

    pub fn basis_action(&self, i: usize) -> Matrix {
        self.path_action(self.alg.basis_path(i))
    }

    /// Action of `x ∈ e_w A e_v`, as a map `M_v → M_w`.
    pub fn elem_action(&self, x: &AlgElem, v: usize, w: usize) -> Matrix {
        let f = self.field();
        let mut out = Matrix::zeros(f, self.dims[w], self.dims[v]);
        for (i, c) in &x.terms {
            let p = self.alg.basis_path(*i);
            debug_assert!(p.source == v && p.target == w);
            out = out.add(&self.path_action(p).scale(c));
        }
        out
    }

    /// Concatenated block-diagonal matrix of all arrows (dim × dim).
    pub fn arrow_total(&self, arrow: usize) -> Matrix {
        let off = self.offsets();
        let n = self.total_dim();
        let a = &self.alg.quiver().arrows[arrow];
        let mut m = Matrix::zeros(self.field(), n, n);
        m.set_block(off[a.target], off[a.source], &self.action[arrow]);
        m
    }

    pub fn dim_vector_string(&self) -> String {
        let parts: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

/// A homomorphism of modules given by one block per vertex.
#[derive(Clone)]
pub struct ModuleMap {
    source: Arc<Module>,
    target: Arc<Module>,
    blocks: Vec<Matrix>,
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModuleMap")
            .field("source", &self.source.dims)
            .field("target", &self.target.dims)
            .field("blocks", &self.blocks)
            .finish()
    }
}

impl ModuleMap {
    pub fn new(source: Arc<Module>, target: Arc<Module>, blocks: Vec<Matrix>) -> Result<ModuleMap> {
        source.same_algebra(&target)?;
        if blocks.len() != source.dims.len() {
            return Err(Error::InvalidMap("wrong number of blocks".to_string()));
        }
        for (v, b) in blocks.iter().enumerate() {
            if b.rows() != target.dims[v] || b.cols() != source.dims[v] {
                return Err(Error::InvalidMap(format!("block at vertex {v} has the wrong shape")));
            }
        }
        let map = ModuleMap { source, target, blocks };
        if !map.commutes() {
            return Err(Error::InvalidMap("map does not commute with the arrow action".to_string()));
        }
        Ok(map)
    }

    pub(crate) fn new_unchecked(source: Arc<Module>, target: Arc<Module>, blocks: Vec<Matrix>) -> ModuleMap {
        debug_assert!({
            let m = ModuleMap { source: source.clone(), target: target.clone(), blocks: blocks.clone() };
            m.commutes()
        });
        ModuleMap { source, target, blocks }
    }

    pub fn commutes(&self) -> bool {
        self.source.alg.quiver().arrows.iter().enumerate().all(|(x, a)| {
            self.target.action[x].mul(&self.blocks[a.source]) == self.blocks[a.target].mul(&self.source.action[x])
        })
    }

    pub fn zero(source: Arc<Module>, target: Arc<Module>) -> ModuleMap {
        let f = source.field();
        let blocks = (0..source.dims.len()).map(|v| Matrix::zeros(f, target.dims[v], source.dims[v])).collect();
        ModuleMap { source, target, blocks }
    }

    pub fn identity(m: Arc<Module>) -> ModuleMap {
        let f = m.field();
        let blocks = m.dims.iter().map(|&d| Matrix::identity(f, d)).collect();
        ModuleMap { source: m.clone(), target: m, blocks }
    }

    pub fn source(&self) -> &Arc<Module> {
        &self.source
    }
    pub fn target(&self) -> &Arc<Module> {
        &self.target
    }
    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }
    pub fn block(&self, v: usize) -> &Matrix {
        &self.blocks[v]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap) -> ModuleMap {
        debug_assert_eq!(other.target.dims, self.source.dims);
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.mul(b)).collect();
        ModuleMap { source: other.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect();
        ModuleMap { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn sub(&self, other: &ModuleMap) -> ModuleMap {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.sub(b)).collect();
        ModuleMap { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn scale(&self, s: &Scalar) -> ModuleMap {
        let blocks = self.blocks.iter().map(|a| a.scale(s)).collect();
        ModuleMap { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.dims == self.target.dims && self.blocks.iter().all(Matrix::is_invertible)
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    pub fn inverse(&self) -> Option<ModuleMap> {
        let blocks: Option<Vec<Matrix>> = self.blocks.iter().map(Matrix::inverse).collect();
        blocks.map(|blocks| ModuleMap { source: self.target.clone(), target: self.source.clone(), blocks })
    }

    /// Row-major concatenation of the vertex blocks.
    pub fn to_vector(&self) -> Vec<Scalar> {
        self.blocks.iter().flat_map(|b| b.data().iter().cloned()).collect()
    }

    pub fn from_vector(source: Arc<Module>, target: Arc<Module>, v: &[Scalar]) -> ModuleMap {
        let f = source.field();
        let mut blocks = Vec::with_capacity(source.dims.len());
        let mut pos = 0;
        for w in 0..source.dims.len() {
            let (r, c) = (target.dims[w], source.dims[w]);
            blocks.push(Matrix::from_vec(f, r, c, v[pos..pos + r * c].to_vec()));
            pos += r * c;
        }
        ModuleMap { source, target, blocks }
    }

    /// Block-diagonal matrix on concatenated coordinates.
    pub fn total_matrix(&self) -> Matrix {
        Matrix::block_diag(self.source.field(), &self.blocks)
    }

    pub fn pow(&self, e: u64) -> ModuleMap {
        let blocks = self.blocks.iter().map(|b| b.pow(e)).collect();
        ModuleMap { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn with_endpoints(&self, source: Arc<Module>, target: Arc<Module>) -> ModuleMap {
        ModuleMap { source, target, blocks: self.blocks.clone() }
    }
}
