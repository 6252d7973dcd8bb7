use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::algebra::{projective_module, AlgElem, PathAlgebra};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar};
use crate::modrep::{direct_sum, kernel, radical_subspace, Module, ModuleMap};

/// A direct sum `⊕ P_{v_i}` of indecomposable projectives, remembering the
/// summand order.
#[derive(Clone, Debug)]
pub struct ProjTerm {
    pub vertices: Vec<usize>,
    pub module: Arc<Module>,
}

impl ProjTerm {
    pub fn new(alg: &Arc<PathAlgebra>, vertices: Vec<usize>) -> Result<ProjTerm> {
        let ps: Vec<Arc<Module>> = vertices.iter().map(|&v| projective_module(alg, v)).collect::<Result<_>>()?;
        let module = direct_sum(alg, &ps)?.module;
        Ok(ProjTerm { vertices, module })
    }

    /// Multiplicity of `P_v` for each vertex `v`.
    pub fn multiplicities(&self, nv: usize) -> Vec<usize> {
        let mut out = vec![0; nv];
        for &v in &self.vertices {
            out[v] += 1;
        }
        out
    }

    /// Coordinate of basis path `path` of summand `s` at its target vertex.
    pub fn coordinate(&self, s: usize, path: usize) -> usize {
        let alg = self.module.algebra();
        let p = alg.basis_path(path);
        let w = p.target;
        let mut off = 0;
        for (t, &v) in self.vertices.iter().enumerate() {
            let paths = alg.paths_from_to(v, w);
            if t == s {
                return off + paths.iter().position(|&q| q == path).expect("path starts at summand vertex");
            }
            off += paths.len();
        }
        unreachable!("summand index out of range")
    }

    /// The generator `e_{v_s}` of summand `s`, as a vector at vertex `v_s`.
    pub fn generator(&self, s: usize) -> Vec<Scalar> {
        let alg = self.module.algebra();
        let v = self.vertices[s];
        let mut out = vec![Scalar::from_integer(0.into()); self.module.dim_at(v)];
        out[self.coordinate(s, alg.trivial(v))] = Scalar::from_integer(1.into());
        out
    }

    /// Reads the summand-`s` component of a vector at vertex `w` as an algebra
    /// element of `e_w A e_{v_s}`.
    pub fn component(&self, s: usize, w: usize, vec: &[Scalar]) -> AlgElem {
        let alg = self.module.algebra();
        let f = alg.field();
        let mut off = 0;
        for (t, &v) in self.vertices.iter().enumerate() {
            let paths = alg.paths_from_to(v, w);
            if t == s {
                let mut e = AlgElem::zero();
                for (k, &p) in paths.iter().enumerate() {
                    e.add_term(f, p, &vec[off + k]);
                }
                return e;
            }
            off += paths.len();
        }
        AlgElem::zero()
    }
}

/// The map `⊕ P_{v_s} → M` sending the generator of summand `s` to
/// `gens[s] ∈ M_{v_s}`: a path `p` goes to `M(p) gens[s]`.
pub fn map_from_generators(p: &ProjTerm, m: &Arc<Module>, gens: &[Vec<Scalar>]) -> ModuleMap {
    let alg = m.algebra();
    let f = alg.field();
    let nv = alg.vertex_count();
    let mut blocks = Vec::with_capacity(nv);
    for w in 0..nv {
        let mut cols: Vec<Vec<Scalar>> = Vec::new();
        for (s, &v) in p.vertices.iter().enumerate() {
            let g = Matrix::column_vector(f, &gens[s]);
            for &path in alg.paths_from_to(v, w) {
                cols.push(m.basis_action(path).mul(&g).column(0));
            }
        }
        blocks.push(Matrix::from_columns(f, m.dim_at(w), &cols));
    }
    ModuleMap::new_unchecked(p.module.clone(), m.clone(), blocks)
}

/// Projective cover: generators lifted from a basis of the top.
pub fn projective_cover(m: &Arc<Module>) -> Result<(ProjTerm, ModuleMap)> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let alg = m.algebra();
    let f = alg.field();
    let rad = radical_subspace(m);
    let mut vertices = Vec::new();
    let mut gens = Vec::new();
    for v in 0..alg.vertex_count() {
        let comp = rad[v].complement_in(&Matrix::identity(f, m.dim_at(v)));
        for c in 0..comp.cols() {
            vertices.push(v);
            gens.push(comp.column(c));
        }
    }
    let p = ProjTerm::new(alg, vertices)?;
    let epi = map_from_generators(&p, m, &gens);
    Ok((p, epi))
}

/// A minimal projective resolution `… → P_1 → P_0 → M`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub module: Arc<Module>,
    pub terms: Vec<ProjTerm>,
    /// `differentials[k]` is `d_{k+1}: P_{k+1} → P_k`.
    pub differentials: Vec<ModuleMap>,
    pub augmentation: ModuleMap,
    /// `syzygies[k]` is `Ω^k M`, with `Ω^0 M = M`.
    pub syzygies: Vec<Arc<Module>>,
    pub truncated: bool,
    pub max_len: usize,
}

impl Resolution {
    /// Largest index of a nonzero term (projective dimension when not truncated).
    pub fn length(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    pub fn term_multiplicities(&self) -> Vec<Vec<usize>> {
        let nv = self.module.algebra().vertex_count();
        self.terms.iter().map(|t| t.multiplicities(nv)).collect()
    }

    /// Each differential lands in the radical of its target.
    pub fn is_minimal(&self) -> bool {
        self.differentials.iter().all(|d| {
            let rad = radical_subspace(d.target());
            d.blocks().iter().zip(&rad).all(|(b, r)| r.hstack(b).rank() == r.cols())
        })
    }

    pub fn is_complex(&self) -> bool {
        let first = self.differentials.first().is_none_or(|d| self.augmentation.compose(d).is_zero());
        first && self.differentials.windows(2).all(|w| w[0].compose(&w[1]).is_zero())
    }

    pub fn is_exact(&self) -> bool {
        if !self.augmentation.is_surjective() {
            return false;
        }
        for (k, t) in self.terms.iter().enumerate() {
            let outgoing = if k == 0 { &self.augmentation } else { &self.differentials[k - 1] };
            let incoming_rank: Vec<usize> = match self.differentials.get(k) {
                Some(d) => d.blocks().iter().map(Matrix::rank).collect(),
                None => vec![0; t.module.dims().len()],
            };
            let out_rank: Vec<usize> = outgoing.blocks().iter().map(Matrix::rank).collect();
            for (v, &d) in t.module.dims().iter().enumerate() {
                let last_term = k + 1 == self.terms.len();
                if last_term && self.truncated {
                    continue;
                }
                if incoming_rank[v] + out_rank[v] != d {
                    return false;
                }
            }
        }
        true
    }
}

pub fn minimal_resolution(m: &Arc<Module>, max_len: usize) -> Result<Resolution> {
    let alg = m.algebra();
    if m.is_zero() {
        return Ok(Resolution {
            module: m.clone(),
            terms: Vec::new(),
            differentials: Vec::new(),
            augmentation: ModuleMap::zero(Arc::new(Module::zero(alg)), m.clone()),
            syzygies: vec![m.clone()],
            truncated: false,
            max_len,
        });
    }
    let (p0, aug) = projective_cover(m)?;
    let mut terms = vec![p0];
    let mut differentials = Vec::new();
    let mut syzygies = vec![m.clone()];
    let mut to_prev = aug.clone();
    let mut truncated = false;
    loop {
        let (omega, inc) = kernel(&to_prev)?;
        if omega.is_zero() {
            break;
        }
        syzygies.push(omega.clone());
        if terms.len() > max_len {
            truncated = true;
            break;
        }
        let (p, cover) = projective_cover(&omega)?;
        let d = inc.compose(&cover);
        terms.push(p);
        differentials.push(d.clone());
        to_prev = d;
    }
    Ok(Resolution { module: m.clone(), terms, differentials, augmentation: aug, syzygies, truncated, max_len })
}

type CacheKey = (usize, Vec<usize>, Vec<Scalar>);

fn cache_key(m: &Module) -> CacheKey {
    let data = m.actions().iter().flat_map(|a| a.data().iter().cloned()).collect();
    (m.algebra().id(), m.dims().to_vec(), data)
}

fn cache() -> &'static RwLock<HashMap<CacheKey, Arc<Resolution>>> {
    static CACHE: OnceLock<RwLock<HashMap<CacheKey, Arc<Resolution>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Memoized [`minimal_resolution`]: reuses any cached resolution that is
/// complete or at least as deep as requested.
pub fn cached_resolution(m: &Arc<Module>, max_len: usize) -> Result<Arc<Resolution>> {
    let key = cache_key(m);
    if let Some(r) = cache().read().expect("resolution cache poisoned").get(&key) {
        if !r.truncated || r.max_len >= max_len {
            return Ok(r.clone());
        }
    }
    let r = Arc::new(minimal_resolution(m, max_len)?);
    let mut w = cache().write().expect("resolution cache poisoned");
    let keep = match w.get(&key) {
        Some(old) => !old.truncated || old.max_len >= max_len,
        None => false,
    };
    if keep {
        return Ok(w[&key].clone());
    }
    w.insert(key, r.clone());
    Ok(r)
}
