use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::Zero;

use super::complex::{cone, ChainMap, ProjComplex};
use super::hom::graded_hom;
use super::pathmatrix::PathMatrix;
use crate::algebra::{injective_module, AlgElem, PathAlgebra};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar};
use crate::homology::{
    cached_resolution, global_dimension_probe, map_from_generators, projective_cover, GlobalDimension, ProjTerm,
    DEFAULT_PROBE_BOUND,
};
use crate::modrep::{direct_sum, kernel, quotient, Module, ModuleMap};

/// The minimal projective resolution of `m`, with `P_k` in degree `−k`.
pub fn complex_of_module(m: &Arc<Module>) -> Result<ProjComplex> {
    complex_of_module_bounded(m, DEFAULT_PROBE_BOUND)
}

pub fn complex_of_module_bounded(m: &Arc<Module>, max_len: usize) -> Result<ProjComplex> {
    let res = cached_resolution(m, max_len)?;
    if res.truncated {
        return Err(Error::TruncationTooShallow(max_len));
    }
    Ok(resolution_complex(m.algebra(), &res.terms, &res.differentials, res.terms.len()))
}

/// The brutal truncation `P_len → … → P_0` of the minimal resolution. Its
/// Hom into a module computes Ext in degrees below `len`.
pub fn truncated_resolution_complex(m: &Arc<Module>, len: usize) -> Result<ProjComplex> {
    let res = cached_resolution(m, len)?;
    let keep = res.terms.len().min(len + 1);
    Ok(resolution_complex(m.algebra(), &res.terms, &res.differentials, keep))
}

fn resolution_complex(alg: &Arc<PathAlgebra>, terms: &[ProjTerm], diffs: &[ModuleMap], keep: usize) -> ProjComplex {
    if keep == 0 {
        return ProjComplex::zero(alg);
    }
    let lo = -(keep as i64 - 1);
    let ts: Vec<Vec<usize>> = (0..keep).rev().map(|k| terms[k].vertices.clone()).collect();
    let ds: Vec<PathMatrix> = (0..keep - 1)
        .rev()
        .map(|k| PathMatrix::from_module_map(&diffs[k], &terms[k + 1], &terms[k]))
        .collect();
    ProjComplex::new_unchecked(alg, lo, ts, ds)
}

/// Pointwise ranks: `dim H^d(x)_v` per degree, nonzero degrees only.
pub fn cohomology_dims(x: &ProjComplex) -> Result<BTreeMap<i64, Vec<usize>>> {
    let mut out = BTreeMap::new();
    let Some((lo, hi)) = x.support() else { return Ok(out) };
    let mut ranks: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for d in (lo - 1)..=hi {
        let r = x.differential_map(d)?.blocks().iter().map(Matrix::rank).collect();
        ranks.insert(d, r);
    }
    for d in lo..=hi {
        let t = x.term_module(d)?;
        let dims: Vec<usize> =
            t.module.dims().iter().enumerate().map(|(v, &n)| n - ranks[&d][v] - ranks[&(d - 1)][v]).collect();
        if dims.iter().any(|&n| n > 0) {
            out.insert(d, dims);
        }
    }
    Ok(out)
}

pub fn is_acyclic(x: &ProjComplex) -> Result<bool> {
    Ok(cohomology_dims(x)?.is_empty())
}

/// `H^d(x) = ker d^d / im d^{d−1}` as representations, nonzero degrees only.
pub fn cohomology_modules(x: &ProjComplex) -> Result<BTreeMap<i64, Arc<Module>>> {
    let mut out = BTreeMap::new();
    let Some((lo, hi)) = x.support() else { return Ok(out) };
    for d in lo..=hi {
        let out_map = x.differential_map(d)?;
        let in_map = x.differential_map(d - 1)?;
        let (kmod, inc) = kernel(&out_map)?;
        let mut im_in_k = Vec::new();
        for (v, b) in in_map.blocks().iter().enumerate() {
            let img = b.column_space();
            let coords = inc.block(v).solve(&img)?.ok_or_else(|| Error::InvalidComplex("d∘d ≠ 0".into()))?;
            im_in_k.push(coords);
        }
        let (h, _, _) = quotient(&kmod, &im_in_k)?;
        if !h.is_zero() {
            out.insert(d, h);
        }
    }
    Ok(out)
}

/// Outermost degrees of nonzero cohomology; `None` for acyclic complexes.
pub fn standard_aisle_degrees(x: &ProjComplex) -> Result<Option<(i64, i64)>> {
    let dims = cohomology_dims(x)?;
    Ok(match (dims.keys().next(), dims.keys().next_back()) {
        (Some(&a), Some(&b)) => Some((a, b)),
        _ => None,
    })
}

/// Inverse of a unit `c·e_v + n` of the local ring `e_v A e_v`.
fn local_inverse(alg: &PathAlgebra, v: usize, u: &AlgElem) -> AlgElem {
    let f = alg.field();
    let ev = alg.trivial(v);
    let c = u.coefficient(ev);
    let cinv = f.inv(&c).expect("unit entry");
    let mut n = u.clone();
    n.add_term(f, ev, &f.neg(&c));
    let t = n.scale(f, &f.neg(&cinv));
    let mut acc = AlgElem::basis(ev);
    let mut pow = AlgElem::basis(ev);
    loop {
        pow = alg.mul_elem(&pow, &t);
        if pow.is_zero() {
            break;
        }
        acc = acc.add(f, &pow);
    }
    acc.scale(f, &cinv)
}

fn find_unit(alg: &PathAlgebra, x: &ProjComplex) -> Option<(i64, usize, usize)> {
    for d in x.degrees() {
        let Some(m) = x.diff_ref(d) else { continue };
        for (i, &v) in m.src.iter().enumerate() {
            for (j, &u) in m.tgt.iter().enumerate() {
                if u == v && !m.entries[i][j].coefficient(alg.trivial(v)).is_zero() {
                    return Some((d, i, j));
                }
            }
        }
    }
    None
}

/// Removes contractible summands `P --≅--> P` until every differential lands
/// in the radical. The result is homotopy equivalent to the input.
pub fn minimize(x: &ProjComplex) -> ProjComplex {
    let alg = x.algebra().clone();
    let f = alg.field();
    let mut cur = x.clone();
    while let Some((d, i, j)) = find_unit(&alg, &cur) {
        let Some((lo, hi)) = cur.support() else { break };
        let dm = cur.diff(d);
        let uinv = local_inverse(&alg, dm.src[i], &dm.entries[i][j]);
        let keep_src: Vec<usize> = (0..dm.src.len()).filter(|&s| s != i).collect();
        let keep_tgt: Vec<usize> = (0..dm.tgt.len()).filter(|&t| t != j).collect();
        let mut nd = dm.select(&keep_src, &keep_tgt);
        for (a, &s) in keep_src.iter().enumerate() {
            let left = alg.mul_elem(&dm.entries[s][j], &uinv);
            if left.is_zero() {
                continue;
            }
            for (b, &t) in keep_tgt.iter().enumerate() {
                let corr = alg.mul_elem(&left, &dm.entries[i][t]);
                nd.entries[a][b] = nd.entries[a][b].sub(f, &corr);
            }
        }
        let mut terms = Vec::new();
        let mut diffs = Vec::new();
        for e in lo..=hi {
            let mut t = cur.term(e).to_vec();
            if e == d {
                t.remove(i);
            } else if e == d + 1 {
                t.remove(j);
            }
            terms.push(t);
        }
        for e in lo..hi {
            let m = cur.diff(e);
            let nm = if e == d {
                nd.clone()
            } else if e == d - 1 {
                let cols: Vec<usize> = (0..m.tgt.len()).filter(|&t| t != i).collect();
                m.select(&(0..m.src.len()).collect::<Vec<_>>(), &cols)
            } else if e == d + 1 {
                let rows: Vec<usize> = (0..m.src.len()).filter(|&s| s != j).collect();
                m.select(&rows, &(0..m.tgt.len()).collect::<Vec<_>>())
            } else {
                m
            };
            diffs.push(nm);
        }
        cur = ProjComplex::new_unchecked(&alg, lo, terms, diffs);
    }
    cur
}

/// A bounded complex of modules, `maps[k]: modules[k] → modules[k+1]`.
#[derive(Clone, Debug)]
pub struct ModuleComplex {
    pub lo: i64,
    pub modules: Vec<Arc<Module>>,
    pub maps: Vec<ModuleMap>,
}

impl ModuleComplex {
    pub fn stalk(m: Arc<Module>, d: i64) -> ModuleComplex {
        ModuleComplex { lo: d, modules: vec![m], maps: Vec::new() }
    }

    fn module(&self, alg: &Arc<PathAlgebra>, d: i64) -> Arc<Module> {
        let k = d - self.lo;
        if k >= 0 && (k as usize) < self.modules.len() {
            self.modules[k as usize].clone()
        } else {
            Arc::new(Module::zero(alg))
        }
    }

    fn map(&self, alg: &Arc<PathAlgebra>, d: i64) -> ModuleMap {
        let k = d - self.lo;
        if k >= 0 && (k as usize) < self.maps.len() {
            self.maps[k as usize].clone()
        } else {
            ModuleMap::zero(self.module(alg, d), self.module(alg, d + 1))
        }
    }

    pub fn is_complex(&self) -> bool {
        self.maps.windows(2).all(|w| w[1].compose(&w[0]).is_zero())
    }
}

/// A complex of projectives with a quasi-isomorphism onto a module complex.
#[derive(Clone, Debug)]
pub struct ProjectiveModel {
    pub complex: ProjComplex,
    /// `quasi_iso[d]: complex^d → c^d`.
    pub quasi_iso: BTreeMap<i64, ModuleMap>,
}

/// Builds a projective model degree by degree from the top, keeping the
/// mapping cone exact above the current degree. Stops once the cone
/// kernel vanishes below the support; `max_extra` bounds the steps below it.
pub fn resolve_complex(alg: &Arc<PathAlgebra>, c: &ModuleComplex, max_extra: usize) -> Result<ProjectiveModel> {
    if c.modules.iter().any(|m| m.algebra().id() != alg.id()) {
        return Err(Error::AlgebraMismatch);
    }
    if c.modules.is_empty() {
        return Ok(ProjectiveModel { complex: ProjComplex::zero(alg), quasi_iso: BTreeMap::new() });
    }
    let f = alg.field();
    let nv = alg.vertex_count();
    let lo = c.lo;
    let hi = c.lo + c.modules.len() as i64 - 1;
    let empty = ProjTerm::new(alg, Vec::new())?;
    // state for degree n+1 and n+2
    let mut q_next = empty.clone();
    let mut q_next2 = empty.clone();
    let mut dq_next = ModuleMap::zero(q_next.module.clone(), q_next2.module.clone());
    let mut phi_next = ModuleMap::zero(q_next.module.clone(), c.module(alg, hi + 1));
    let mut terms: Vec<(i64, ProjTerm)> = Vec::new();
    let mut diffs: BTreeMap<i64, ModuleMap> = BTreeMap::new();
    let mut quasi: BTreeMap<i64, ModuleMap> = BTreeMap::new();
    let mut n = hi;
    loop {
        if n < lo - max_extra as i64 {
            return Err(Error::InfiniteGlobalDimension(format!("projective model not found within {max_extra} steps")));
        }
        let cn = c.module(alg, n);
        let cn1 = c.module(alg, n + 1);
        let src = direct_sum(alg, &[q_next.module.clone(), cn.clone()])?;
        let tgt = direct_sum(alg, &[q_next2.module.clone(), cn1.clone()])?;
        let dc = c.map(alg, n);
        let blocks: Vec<Matrix> = (0..nv)
            .map(|w| {
                let mut b = Matrix::zeros(f, tgt.module.dim_at(w), src.module.dim_at(w));
                b.set_block(0, 0, &dq_next.block(w).neg());
                b.set_block(q_next2.module.dim_at(w), 0, phi_next.block(w));
                b.set_block(q_next2.module.dim_at(w), q_next.module.dim_at(w), dc.block(w));
                b
            })
            .collect();
        let cone_d = ModuleMap::new_unchecked(src.module.clone(), tgt.module.clone(), blocks);
        let (kmod, inc) = kernel(&cone_d)?;
        if kmod.is_zero() && n < lo {
            break;
        }
        let dprev = c.map(alg, n - 1);
        let mut j_in_k = Vec::new();
        for w in 0..nv {
            let img = Matrix::zeros(f, q_next.module.dim_at(w), dprev.block(w).cols()).vstack(dprev.block(w));
            let coords = inc.block(w).solve(&img.column_space())?.ok_or_else(|| Error::InvalidComplex("not a complex".into()))?;
            j_in_k.push(coords);
        }
        let (qm, _, sect) = quotient(&kmod, &j_in_k)?;
        let (p, psi) = if qm.is_zero() {
            (empty.clone(), ModuleMap::zero(empty.module.clone(), src.module.clone()))
        } else {
            let (p, epi) = projective_cover(&qm)?;
            let gens: Vec<Vec<Scalar>> = p
                .vertices
                .iter()
                .enumerate()
                .map(|(s, &v)| {
                    let g = epi.block(v).mul(&Matrix::column_vector(f, &p.generator(s)));
                    inc.block(v).mul(&sect[v].mul(&g)).column(0)
                })
                .collect();
            let psi = map_from_generators(&p, &src.module, &gens);
            (p, psi)
        };
        let dq = src.projections[0].compose(&psi).scale(&f.from_i64(-1));
        let phi = src.projections[1].compose(&psi);
        diffs.insert(n, dq.clone());
        quasi.insert(n, phi.clone());
        terms.push((n, p.clone()));
        q_next2 = q_next;
        q_next = p;
        dq_next = dq;
        phi_next = phi;
        n -= 1;
    }
    terms.reverse();
    let bottom = terms.first().map_or(hi, |t| t.0);
    let mut ts = Vec::new();
    let mut ds = Vec::new();
    for (k, (d, t)) in terms.iter().enumerate() {
        ts.push(t.vertices.clone());
        if k + 1 < terms.len() {
            ds.push(PathMatrix::from_module_map(&diffs[d], t, &terms[k + 1].1));
        }
    }
    let complex = ProjComplex::new_unchecked(alg, bottom, ts, ds);
    Ok(ProjectiveModel { complex, quasi_iso: quasi })
}

fn gldim_cache() -> &'static RwLock<HashMap<usize, GlobalDimension>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, GlobalDimension>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn global_dimension(alg: &Arc<PathAlgebra>) -> Result<GlobalDimension> {
    if let Some(g) = gldim_cache().read().expect("cache poisoned").get(&alg.id()) {
        return Ok(g.clone());
    }
    let g = global_dimension_probe(alg, DEFAULT_PROBE_BOUND)?;
    gldim_cache().write().expect("cache poisoned").insert(alg.id(), g.clone());
    Ok(g)
}

/// The map `I_v → I_u` induced by `x ∈ e_v A e_u`: `φ ↦ φ(x ∘ −)`.
fn nakayama_block(alg: &PathAlgebra, v: usize, u: usize, x: &AlgElem, w: usize) -> Matrix {
    let f = alg.field();
    let rows = alg.paths_from_to(w, u);
    let cols = alg.paths_from_to(w, v);
    let mut m = Matrix::zeros(f, rows.len(), cols.len());
    for (r, &y) in rows.iter().enumerate() {
        for (k, c) in &x.terms {
            for (p, cc) in alg.mul(*k, y) {
                let col = cols.iter().position(|q| q == p).expect("product ends at v");
                let val = f.add(&m[(r, col)], &f.mul(c, cc));
                m[(r, col)] = val;
            }
        }
    }
    m
}

/// Applies `P_v ↦ I_v` termwise and returns a minimal projective model.
pub fn nakayama(x: &ProjComplex) -> Result<ProjComplex> {
    let alg = x.algebra();
    let bound = match global_dimension(alg)? {
        GlobalDimension::Finite(n) => n,
        g => return Err(Error::InfiniteGlobalDimension(format!("{g:?}"))),
    };
    let Some((lo, hi)) = x.support() else { return Ok(x.clone()) };
    let f = alg.field();
    let nv = alg.vertex_count();
    let mut sums = Vec::new();
    for d in lo..=hi {
        let is: Vec<Arc<Module>> = x.term(d).iter().map(|&v| injective_module(alg, v)).collect::<Result<_>>()?;
        sums.push(direct_sum(alg, &is)?);
    }
    let mut maps = Vec::new();
    for d in lo..hi {
        let dm = x.diff(d);
        let (s, t) = (&sums[(d - lo) as usize], &sums[(d - lo + 1) as usize]);
        let blocks: Vec<Matrix> = (0..nv)
            .map(|w| {
                let mut b = Matrix::zeros(f, t.module.dim_at(w), s.module.dim_at(w));
                let mut col = 0;
                for (i, &v) in dm.src.iter().enumerate() {
                    let mut row = 0;
                    let cw = alg.paths_from_to(w, v).len();
                    for (j, &u) in dm.tgt.iter().enumerate() {
                        let rw = alg.paths_from_to(w, u).len();
                        if !dm.entries[i][j].is_zero() {
                            b.set_block(row, col, &nakayama_block(alg, v, u, &dm.entries[i][j], w));
                        }
                        row += rw;
                    }
                    col += cw;
                }
                b
            })
            .collect();
        maps.push(ModuleMap::new_unchecked(s.module.clone(), t.module.clone(), blocks));
    }
    let mc = ModuleComplex { lo, modules: sums.into_iter().map(|s| s.module).collect(), maps };
    let model = resolve_complex(alg, &mc, bound + 2)?;
    Ok(minimize(&model.complex))
}

/// Decides `x ≅ y` in the homotopy category where possible. Minimal models
/// with different term multiplicities are never isomorphic; a degree-0 map
/// with acyclic cone certifies an isomorphism. Otherwise `Undecided`.
pub fn complexes_isomorphic(x: &ProjComplex, y: &ProjComplex) -> Result<bool> {
    if x.algebra().id() != y.algebra().id() {
        return Err(Error::AlgebraMismatch);
    }
    if cohomology_dims(x)? != cohomology_dims(y)? {
        return Ok(false);
    }
    let mx = minimize(x);
    let my = minimize(y);
    if mx.multiplicities() != my.multiplicities() {
        return Ok(false);
    }
    if mx.is_zero() {
        return Ok(true);
    }
    match find_homotopy_equivalence(&mx, &my)? {
        Some(_) => Ok(true),
        None => Err(Error::Undecided("no homotopy equivalence found among swept maps".into())),
    }
}

/// A degree-0 chain map `x → y` whose cone is acyclic, found by sweeping
/// combinations of a basis of `Hom(x, y)`.
pub fn find_homotopy_equivalence(x: &ProjComplex, y: &ProjComplex) -> Result<Option<ChainMap>> {
    let h = graded_hom(x, y)?;
    let reps = h.reps.get(&0).cloned().unwrap_or_default();
    if reps.is_empty() {
        return Ok(if x.is_zero() && y.is_zero() { Some(ChainMap::zero(x.clone(), y.clone(), 0)) } else { None });
    }
    let f = x.algebra().field();
    for coeffs in crate::modrep::sweep_coefficients(reps.len()) {
        let mut acc = ChainMap::zero(x.clone(), y.clone(), 0);
        for (r, &c) in reps.iter().zip(&coeffs) {
            if c != 0 {
                acc = acc.add(&r.scale(&f.from_i64(c)));
            }
        }
        if is_acyclic(&cone(&acc)?.complex)? {
            return Ok(Some(acc));
        }
    }
    Ok(None)
}

/// `Σ_d (−1)^d dim x^d` per vertex, the class of `x` in the Grothendieck group
/// in the basis of simples.
pub fn class_vector(x: &ProjComplex) -> Vec<i64> {
    let alg = x.algebra();
    let nv = alg.vertex_count();
    let mut out = vec![0i64; nv];
    for d in x.degrees() {
        let sign = if d % 2 == 0 { 1 } else { -1 };
        for &v in x.term(d) {
            for (w, o) in out.iter_mut().enumerate() {
                *o += sign * alg.paths_from_to(v, w).len() as i64;
            }
        }
    }
    out
}

/// `χ(x, y) = Σ_l (−1)^l dim Hom(x, y[l])`.
pub fn euler_pairing(x: &ProjComplex, y: &ProjComplex) -> Result<i64> {
    let h = graded_hom(x, y)?;
    Ok(h.dims.iter().map(|(&l, &d)| if l % 2 == 0 { d as i64 } else { -(d as i64) }).sum())
}
