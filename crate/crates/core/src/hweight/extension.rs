use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::exceptional::Verdict;
use crate::homology::{ext, ExtGroup};
use crate::modrep::{cokernel, direct_sum, hom_space, is_isomorphic, rad_hom, Module, ModuleMap};

/// `rad(E_i, E_j) = 0 = Ext^1(E_i, E_j)` for every `i ≥ j`.
pub fn is_standarizable(seq: &[Arc<Module>]) -> Result<Verdict> {
    let mut evidence = Vec::new();
    for w in seq.windows(2) {
        w[0].same_algebra(&w[1])?;
    }
    for i in 0..seq.len() {
        for j in 0..=i {
            let r = rad_hom(&seq[i], &seq[j])?;
            if r != 0 {
                evidence.push(format!("rad(E{}, E{}) has dimension {r}", i + 1, j + 1));
            }
            let e = ext(&seq[i], &seq[j], 1)?.dimension;
            if e != 0 {
                evidence.push(format!("Ext^1(E{}, E{}) has dimension {e}", i + 1, j + 1));
            }
        }
    }
    Ok(Verdict { holds: evidence.is_empty(), evidence })
}

/// A short exact sequence `0 → sub → middle → quotient → 0`.
#[derive(Clone, Debug)]
pub struct Extension {
    pub middle: Arc<Module>,
    pub inclusion: ModuleMap,
    pub projection: ModuleMap,
    /// Dimension of the Ext group that was killed.
    pub multiplicity: usize,
}

/// Sum of `inj_r ∘ blocks[r][s] ∘ proj_s` over a matrix of maps between
/// summands.
fn block_map(source: &crate::modrep::DirectSum, target: &crate::modrep::DirectSum, blocks: &[Vec<ModuleMap>]) -> ModuleMap {
    let mut total = ModuleMap::zero(source.module.clone(), target.module.clone());
    for (r, row) in blocks.iter().enumerate() {
        for (s, f) in row.iter().enumerate() {
            total = total.add(&target.injections[r].compose(f).compose(&source.projections[s]));
        }
    }
    total
}

fn presentation(g: &ExtGroup) -> Option<(Arc<Module>, Arc<Module>, ModuleMap)> {
    let res = &g.resolution;
    if res.terms.len() < 2 {
        return None;
    }
    Some((res.terms[1].module.clone(), res.terms[0].module.clone(), res.differentials[0].clone()))
}

fn trivial_extension(q: &Arc<Module>, t: &Arc<Module>) -> Result<Extension> {
    Ok(Extension {
        middle: q.clone(),
        inclusion: ModuleMap::zero(t.clone(), q.clone()),
        projection: ModuleMap::identity(q.clone()),
        multiplicity: 0,
    })
}

/// The universal extension `0 → t ⊗ Ext^1(q, t)^∨ → r → q → 0`, built as
/// `coker(P_1 → t^k ⊕ P_0)` from a presentation `P_1 → P_0 → q`. The
/// connecting map `Hom(t^k, t) → Ext^1(q, t)` is checked to be an
/// isomorphism.
pub fn universal_extension(q: &Arc<Module>, t: &Arc<Module>) -> Result<Extension> {
    q.same_algebra(t)?;
    let g = ext(q, t, 1)?;
    let k = g.dimension;
    let Some((p1, p0, d)) = presentation(&g).filter(|_| k > 0) else {
        let mut e = trivial_extension(q, t)?;
        e.inclusion = ModuleMap::zero(Arc::new(Module::zero(q.algebra())), q.clone());
        return Ok(e);
    };
    let alg = q.algebra();
    let tk = direct_sum(alg, &vec![t.clone(); k])?;
    let mut parts = vec![t.clone(); k];
    parts.push(p0.clone());
    let target = direct_sum(alg, &parts)?;
    let source = direct_sum(alg, std::slice::from_ref(&p1))?;
    let mut blocks: Vec<Vec<ModuleMap>> = g.cocycles.iter().map(|f| vec![f.clone()]).collect();
    blocks.push(vec![d.scale(&q.field().from_i64(-1))]);
    let phi = block_map(&source, &target, &blocks);
    let (r, pr) = cokernel(&phi)?;
    // t^k → r through the first k summands
    let mut inc = ModuleMap::zero(tk.module.clone(), r.clone());
    for s in 0..k {
        inc = inc.add(&pr.compose(&target.injections[s]).compose(&tk.projections[s]));
    }
    // r → q induced by the augmentation on P_0 and zero on t^k
    let aug = &g.resolution.augmentation;
    let mut from_target = ModuleMap::zero(target.module.clone(), q.clone());
    from_target = from_target.add(&aug.compose(&target.projections[k]));
    let proj = descend(&pr, &from_target)?;
    // connecting map Hom(t^k, t) → Ext^1(q, t), g ↦ [g ∘ F]
    let f_cols: Vec<Vec<ModuleMap>> = g.cocycles.iter().map(|f| vec![f.clone()]).collect();
    let big_f = block_map(&direct_sum(alg, std::slice::from_ref(&p1))?, &tk, &f_cols).with_endpoints(p1.clone(), tk.module.clone());
    let homs = hom_space(&tk.module, t)?;
    let mut cols = Vec::new();
    for h in homs.basis() {
        let c = g
            .class_of(&h.compose(&big_f))
            .ok_or_else(|| Error::InvalidMap("connecting map produced a non-cocycle".into()))?;
        cols.push(c);
    }
    let delta = Matrix::from_columns(q.field(), k, &cols);
    if delta.rows() != delta.cols() || delta.rank() != k {
        return Err(Error::InvalidMap(format!(
            "connecting map Hom(T^{k}, T) → Ext^1(Q, T) has rank {} on a space of dimension {}",
            delta.rank(),
            delta.cols()
        )));
    }
    Ok(Extension { middle: r, inclusion: inc, projection: proj, multiplicity: k })
}

/// Factors `g` through the surjection `p` (both out of the same module).
fn descend(p: &ModuleMap, g: &ModuleMap) -> Result<ModuleMap> {
    let mut blocks = Vec::new();
    for v in 0..p.blocks().len() {
        let pv = p.block(v);
        let gv = g.block(v);
        let x = pv
            .transpose()
            .solve(&gv.transpose())?
            .ok_or_else(|| Error::InvalidMap("map does not vanish on the kernel".into()))?;
        blocks.push(x.transpose());
    }
    ModuleMap::new(p.target().clone(), g.target().clone(), blocks)
}

/// The extension `0 → x → x' → q^k → 0` killing `Ext^1(q, x)`, built as
/// `coker(P_1^k → x ⊕ P_0^k)`. Afterwards `Ext^1(q, x') = 0` whenever
/// `Ext^1(q, q) = 0`.
pub fn killing_extension(q: &Arc<Module>, x: &Arc<Module>) -> Result<Extension> {
    q.same_algebra(x)?;
    let g = ext(q, x, 1)?;
    let k = g.dimension;
    let Some((p1, p0, d)) = presentation(&g).filter(|_| k > 0) else {
        return Ok(Extension {
            middle: x.clone(),
            inclusion: ModuleMap::identity(x.clone()),
            projection: ModuleMap::zero(x.clone(), Arc::new(Module::zero(x.algebra()))),
            multiplicity: 0,
        });
    };
    let alg = q.algebra();
    let source = direct_sum(alg, &vec![p1.clone(); k])?;
    let mut parts = vec![x.clone()];
    parts.extend(vec![p0.clone(); k]);
    let target = direct_sum(alg, &parts)?;
    let minus_d = d.scale(&q.field().from_i64(-1));
    let mut blocks: Vec<Vec<ModuleMap>> = vec![g.cocycles.clone()];
    for r in 0..k {
        blocks.push(
            (0..k).map(|s| if r == s { minus_d.clone() } else { ModuleMap::zero(p1.clone(), p0.clone()) }).collect(),
        );
    }
    let phi = block_map(&source, &target, &blocks);
    let (xp, pr) = cokernel(&phi)?;
    let inclusion = pr.compose(&target.injections[0]);
    let qk = direct_sum(alg, &vec![q.clone(); k])?;
    let aug = &g.resolution.augmentation;
    let mut from_target = ModuleMap::zero(target.module.clone(), qk.module.clone());
    for r in 0..k {
        from_target = from_target.add(&qk.injections[r].compose(aug).compose(&target.projections[r + 1]));
    }
    let projection = descend(&pr, &from_target)?;
    Ok(Extension { middle: xp, inclusion, projection, multiplicity: k })
}

/// One step of the recursion: `P_i = universal extension of Q_i by E_n`.
#[derive(Clone, Debug, Serialize)]
pub struct RecursionStep {
    /// Length of the prefix being extended by its last object.
    pub level: usize,
    pub index: usize,
    pub dim_q: usize,
    pub dim_e: usize,
    pub ext_dim: usize,
    pub dim_p: usize,
}

/// The iterated universal extension of a standarizable sequence.
#[derive(Clone, Debug)]
pub struct IteratedExtension {
    pub parts: Vec<Arc<Module>>,
    pub steps: Vec<RecursionStep>,
}

impl IteratedExtension {
    pub fn sum(&self) -> Result<Arc<Module>> {
        let alg = self.parts.first().ok_or(Error::ZeroModule)?.algebra().clone();
        Ok(direct_sum(&alg, &self.parts)?.module)
    }
}

fn iterate(seq: &[Arc<Module>], steps: &mut Vec<RecursionStep>) -> Result<Vec<Arc<Module>>> {
    let n = seq.len();
    if n <= 1 {
        return Ok(seq.to_vec());
    }
    let prefix = iterate(&seq[..n - 1], steps)?;
    let e = &seq[n - 1];
    let mut parts = Vec::with_capacity(n);
    for (i, q) in prefix.iter().enumerate() {
        let u = universal_extension(q, e)?;
        steps.push(RecursionStep {
            level: n,
            index: i + 1,
            dim_q: q.total_dim(),
            dim_e: e.total_dim(),
            ext_dim: u.multiplicity,
            dim_p: u.middle.total_dim(),
        });
        parts.push(u.middle);
    }
    parts.push(e.clone());
    Ok(parts)
}

/// `P_n = E_n` and `P_i = UE(Q_i, E_n)` with `Q_i` the parts of the prefix
/// `(E_1, …, E_{n-1})`.
pub fn iterated_universal_extension(seq: &[Arc<Module>]) -> Result<IteratedExtension> {
    let v = is_standarizable(seq)?;
    if !v.holds {
        return Err(Error::NotStandarizable(v.evidence.join("; ")));
    }
    let mut steps = Vec::new();
    let parts = iterate(seq, &mut steps)?;
    Ok(IteratedExtension { parts, steps })
}

/// Outcome of checking that a list of modules is a tilting generator.
#[derive(Clone, Debug, Serialize)]
pub struct TiltingCheck {
    pub passed: bool,
    pub self_orthogonal: bool,
    /// `None` when no sequence was supplied to reconstruct.
    pub generates: Option<bool>,
    /// Violations `Hom(P_i, P_j[l]) ≠ 0` with `l ≠ 0`.
    pub witnesses: Vec<String>,
    /// How each object of the sequence is recovered from the parts.
    pub chain: Vec<String>,
}

/// Checks `Hom(P_i, P_j[l]) = 0` for `1 ≤ l ≤ bound` and, when the
/// sequence is given, reconstructs each `E_i` from the parts by taking
/// cokernels of evaluation maps `E_n ⊗ Hom(E_n, P_i) → P_i`.
pub fn tilting_checks(parts: &[Arc<Module>], sequence: Option<&[Arc<Module>]>, bound: usize) -> Result<TiltingCheck> {
    use rayon::prelude::*;
    let n = parts.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let found: Vec<Option<String>> = pairs
        .par_iter()
        .map(|&(i, j)| -> Result<Option<String>> {
            for l in 1..=bound {
                let g = match ext(&parts[i], &parts[j], l) {
                    Ok(g) => g,
                    Err(Error::TruncationTooShallow(_)) => return Ok(None),
                    Err(e) => return Err(e),
                };
                if g.dimension != 0 {
                    return Ok(Some(format!("Hom(P{}, P{}[{l}]) has dimension {}", i + 1, j + 1, g.dimension)));
                }
                if g.resolution.terms.len() <= l && !g.resolution.truncated {
                    break;
                }
            }
            Ok(None)
        })
        .collect::<Result<_>>()?;
    let witnesses: Vec<String> = found.into_iter().flatten().collect();
    let self_orthogonal = witnesses.is_empty();
    let mut chain = Vec::new();
    let generates = match sequence {
        None => None,
        Some(seq) => Some(reconstruct(parts, seq, &mut chain)?),
    };
    Ok(TiltingCheck { passed: self_orthogonal && generates.unwrap_or(true), self_orthogonal, generates, witnesses, chain })
}

/// Evaluation `e ⊗ Hom(e, p) → p`.
fn evaluation(e: &Arc<Module>, p: &Arc<Module>) -> Result<(ModuleMap, usize)> {
    let h = hom_space(e, p)?;
    let k = h.dim();
    let alg = e.algebra();
    let src = direct_sum(alg, &vec![e.clone(); k])?;
    let mut total = ModuleMap::zero(src.module.clone(), p.clone());
    for (s, b) in h.basis().iter().enumerate() {
        total = total.add(&b.compose(&src.projections[s]));
    }
    Ok((total, k))
}

fn reconstruct(parts: &[Arc<Module>], seq: &[Arc<Module>], chain: &mut Vec<String>) -> Result<bool> {
    if parts.len() != seq.len() {
        chain.push(format!("{} parts for a sequence of length {}", parts.len(), seq.len()));
        return Ok(false);
    }
    let mut level: Vec<Arc<Module>> = parts.to_vec();
    let mut ok = true;
    for m in (0..seq.len()).rev() {
        let last = level[m].clone();
        let iso = is_isomorphic(&last, &seq[m])?;
        chain.push(if m + 1 == seq.len() {
            format!("E{} = P{}", m + 1, m + 1)
        } else {
            format!("E{} ≅ Q{} at depth {}", m + 1, m + 1, seq.len() - m - 1)
        });
        if !iso {
            chain.push(format!("E{} is not recovered", m + 1));
            ok = false;
            break;
        }
        for i in 0..m {
            let (ev, k) = evaluation(&last, &level[i])?;
            if !ev.is_injective() {
                chain.push(format!("evaluation E{}^{k} → Q{} is not injective", m + 1, i + 1));
                ok = false;
            }
            let (c, _) = cokernel(&ev)?;
            chain.push(format!("Q{} = Cone(E{}^{k} → Q{})", i + 1, m + 1, i + 1));
            level[i] = c;
        }
        if !ok {
            break;
        }
    }
    Ok(ok)
}
