use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::mutation::left_mutation_unchecked;
use crate::derived::{complex_of_module, graded_hom, ProjComplex};
use crate::error::{Error, Result};
use crate::modrep::Module;

/// A yes/no answer with human-readable reasons for a `false`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub evidence: Vec<String>,
}

impl Verdict {
    fn from_evidence(evidence: Vec<String>) -> Verdict {
        Verdict { holds: evidence.is_empty(), evidence }
    }
}

fn format_dims(d: &BTreeMap<i64, usize>) -> String {
    let parts: Vec<String> = d.iter().map(|(l, n)| format!("{l}:{n}")).collect();
    format!("{{{}}}", parts.join(", "))
}

/// `x` is exceptional when `Hom•(x, x)` is the field in degree 0.
pub fn is_exceptional(x: &ProjComplex) -> Result<Verdict> {
    if x.is_zero() {
        return Ok(Verdict { holds: false, evidence: vec!["zero object".into()] });
    }
    let h = graded_hom(x, x)?;
    let mut evidence = Vec::new();
    for (l, d) in h.nonzero() {
        if l != 0 {
            evidence.push(format!("Hom(X, X[{l}]) has dimension {d}"));
        }
    }
    if h.dim(0) != 1 {
        evidence.push(format!("End(X) has dimension {}", h.dim(0)));
    }
    Ok(Verdict::from_evidence(evidence))
}

pub fn is_exceptional_module(m: &Arc<Module>) -> Result<Verdict> {
    is_exceptional(&complex_of_module(m)?)
}

/// `(e, f)` is exceptional when both objects are and `Hom•(f, e) = 0`.
pub fn is_exceptional_pair(e: &ProjComplex, f: &ProjComplex) -> Result<Verdict> {
    let mut evidence = Vec::new();
    for (name, x) in [("first", e), ("second", f)] {
        for ev in is_exceptional(x)?.evidence {
            evidence.push(format!("{name} object: {ev}"));
        }
    }
    let back = graded_hom(f, e)?;
    if !back.is_zero() {
        evidence.push(format!("Hom•(second, first) = {}", format_dims(&back.nonzero())));
    }
    Ok(Verdict::from_evidence(evidence))
}

/// Nonzero graded dimensions of `Hom•(x_i, y_j)` for all index pairs.
pub type HomTable = BTreeMap<(usize, usize), BTreeMap<i64, usize>>;

/// `Hom•(x_i, y_j)` for all pairs, computed in parallel.
pub fn hom_table(xs: &[ProjComplex], ys: &[ProjComplex]) -> Result<HomTable> {
    let pairs: Vec<(usize, usize)> = (0..xs.len()).flat_map(|i| (0..ys.len()).map(move |j| (i, j))).collect();
    let results: Vec<Result<((usize, usize), BTreeMap<i64, usize>)>> = pairs
        .par_iter()
        .map(|&(i, j)| Ok(((i, j), graded_hom(&xs[i], &ys[j])?.nonzero())))
        .collect();
    results.into_iter().collect()
}

fn sequence_violations(objects: &[ProjComplex], table: &HomTable) -> Vec<String> {
    let mut evidence = Vec::new();
    for i in 0..objects.len() {
        let d = &table[&(i, i)];
        if d.len() != 1 || d.get(&0) != Some(&1) {
            evidence.push(format!("E{} is not exceptional: Hom•(E{0}, E{0}) = {}", i + 1, format_dims(d)));
        }
        for j in (i + 1)..objects.len() {
            let d = &table[&(j, i)];
            if !d.is_empty() {
                evidence.push(format!("Hom•(E{}, E{}) = {}", j + 1, i + 1, format_dims(d)));
            }
        }
    }
    evidence
}

pub fn is_exceptional_sequence(xs: &[ProjComplex]) -> Result<Verdict> {
    if xs.windows(2).any(|w| w[0].algebra().id() != w[1].algebra().id()) {
        return Err(Error::AlgebraMismatch);
    }
    let table = hom_table(xs, xs)?;
    Ok(Verdict::from_evidence(sequence_violations(xs, &table)))
}

/// A validated exceptional sequence `(E_1, …, E_n)` with its Hom table.
#[derive(Clone, Debug)]
pub struct ExceptionalSequence {
    pub objects: Vec<ProjComplex>,
    /// `homs[(i, j)]` is `Hom•(E_{i+1}, E_{j+1})`.
    pub homs: HomTable,
}

impl ExceptionalSequence {
    pub fn new(objects: Vec<ProjComplex>) -> Result<ExceptionalSequence> {
        if objects.is_empty() {
            return Err(Error::NotExceptionalSequence("empty sequence".into()));
        }
        if objects.windows(2).any(|w| w[0].algebra().id() != w[1].algebra().id()) {
            return Err(Error::AlgebraMismatch);
        }
        let homs = hom_table(&objects, &objects)?;
        let v = sequence_violations(&objects, &homs);
        if !v.is_empty() {
            return Err(Error::NotExceptionalSequence(v.join("; ")));
        }
        Ok(ExceptionalSequence { objects, homs })
    }

    pub fn from_modules(ms: &[Arc<Module>]) -> Result<ExceptionalSequence> {
        ExceptionalSequence::new(ms.iter().map(complex_of_module).collect::<Result<_>>()?)
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// `χ(E_i, E_j)`.
    pub fn gram_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.len();
        (0..n).map(|i| (0..n).map(|j| euler(&self.homs[&(i, j)])).collect()).collect()
    }
}

pub(crate) fn euler(d: &BTreeMap<i64, usize>) -> i64 {
    d.iter().map(|(&l, &n)| if l % 2 == 0 { n as i64 } else { -(n as i64) }).sum()
}

/// An exceptional sequence with its left dual `F_1 = E_1`,
/// `F_i = L_{E_1} ⋯ L_{E_{i−1}} E_i`.
#[derive(Clone, Debug)]
pub struct DualPair {
    pub sequence: ExceptionalSequence,
    /// `left_dual[i]` is `F_{i+1}`.
    pub left_dual: Vec<ProjComplex>,
    /// `pairing[(i, j)]` is `Hom•(E_{i+1}, F_{j+1})`.
    pub pairing: HomTable,
}

impl DualPair {
    /// The dual as an exceptional sequence `(F_n, …, F_1)`.
    pub fn dual_sequence(&self) -> Vec<ProjComplex> {
        self.left_dual.iter().rev().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.left_dual.len()
    }

    pub fn is_empty(&self) -> bool {
        self.left_dual.is_empty()
    }

    /// `χ(E_i, F_j)`.
    pub fn pairing_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.len();
        (0..n).map(|i| (0..n).map(|j| euler(&self.pairing[&(i, j)])).collect()).collect()
    }
}

pub fn left_dual_sequence(eps: &ExceptionalSequence) -> Result<DualPair> {
    let es = &eps.objects;
    let left_dual: Vec<ProjComplex> = (0..es.len())
        .into_par_iter()
        .map(|i| {
            let mut x = es[i].clone();
            for k in (0..i).rev() {
                x = left_mutation_unchecked(&es[k], &x)?;
            }
            Ok(x)
        })
        .collect::<Result<_>>()?;
    let pairing = hom_table(es, &left_dual)?;
    Ok(DualPair { sequence: eps.clone(), left_dual, pairing })
}

/// Checks `Hom(E_i, F_j[l]) = 𝕜` for `l = 0, i = j` and zero otherwise.
pub fn verify_hom_duality(pair: &DualPair) -> Verdict {
    let mut evidence = Vec::new();
    for (&(i, j), d) in &pair.pairing {
        let expected: BTreeMap<i64, usize> = if i == j { [(0, 1)].into_iter().collect() } else { BTreeMap::new() };
        if d != &expected {
            evidence.push(format!("Hom•(E{}, F{}) = {}", i + 1, j + 1, format_dims(d)));
        }
    }
    Verdict::from_evidence(evidence)
}
