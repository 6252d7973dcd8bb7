//! Regression suite over the bundled examples.

use std::collections::BTreeMap;
use std::sync::Arc;

use hwglue::algebra::builtins::{a2, a3, builtin, kalck, z2, BUILTIN_NAMES};
use hwglue::algebra::{injective_module, projective_module, regular_module, simple_module, PathAlgebra};
use hwglue::derived::{
    cohomology_modules, complex_of_module, complexes_isomorphic, graded_hom, nakayama, truncated_resolution_complex,
    ProjComplex,
};
use hwglue::exceptional::{
    fullness_necessary_conditions, glued_aisle_membership, is_exceptional, is_exceptional_sequence,
    left_dual_sequence, left_mutation, restriction_hypotheses, right_mutation, verify_hom_duality, DualPair,
    ExceptionalSequence,
};
use hwglue::homology::{ext, global_dimension_probe, minimal_resolution, GlobalDimension};
use hwglue::hweight::{
    algebras_isomorphic, bijection_check, characteristic_tilting, heart_presentation, hw_criterion,
    iterated_universal_extension, ringel_dual, ringel_dual_of, tilting_package, verify_hw_axioms,
};
use hwglue::modrep::{direct_sum, hom_dim, is_isomorphic, Module};
use hwglue::{FieldSpec, Result};

use crate::format::{emit_algebra, parse_algebra};
use crate::oracle::{run_oracle, ORACLE_PAIRS, ORACLE_SEED};
use crate::report::{Report, Status};

const Q: FieldSpec = FieldSpec::Rationals;

#[derive(Clone, Debug, serde::Serialize)]
pub struct Check {
    pub criterion: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(criterion: u8, name: &'static str, r: Result<(bool, String)>) -> Check {
    match r {
        Ok((passed, detail)) => Check { criterion, name, passed, detail },
        Err(e) => Check { criterion, name, passed: false, detail: format!("error: {e}") },
    }
}

fn cx(m: &Arc<Module>) -> Result<ProjComplex> {
    complex_of_module(m)
}

fn s(a: &Arc<PathAlgebra>, v: usize) -> Result<Arc<Module>> {
    simple_module(a, v)
}

fn p(a: &Arc<PathAlgebra>, v: usize) -> Result<Arc<Module>> {
    projective_module(a, v)
}

fn i(a: &Arc<PathAlgebra>, v: usize) -> Result<Arc<Module>> {
    injective_module(a, v)
}

fn pair_of(ms: &[Arc<Module>]) -> Result<DualPair> {
    left_dual_sequence(&ExceptionalSequence::from_modules(ms)?)
}

fn dims(pairs: &[(i64, usize)]) -> BTreeMap<i64, usize> {
    pairs.iter().copied().collect()
}

/// `σ = (S3, P2, P1)` and its dual pair.
pub fn kalck_sigma(k: &Arc<PathAlgebra>) -> Result<Vec<Arc<Module>>> {
    Ok(vec![s(k, 2)?, p(k, 1)?, p(k, 0)?])
}

fn resolution_terms(m: &Arc<Module>) -> Result<Vec<Vec<usize>>> {
    let r = minimal_resolution(m, 16)?;
    Ok(r.terms.iter().map(|t| t.vertices.clone()).collect())
}

fn kalck_checks(out: &mut Vec<Check>) -> Result<()> {
    let k = kalck(Q)?;
    let sigma = kalck_sigma(&k)?;
    out.push(check(1, "sigma exceptional and full conditions", (|| {
        let xs: Vec<ProjComplex> = sigma.iter().map(cx).collect::<Result<_>>()?;
        let v = is_exceptional_sequence(&xs)?;
        let full = fullness_necessary_conditions(&ExceptionalSequence::new(xs)?);
        Ok((v.holds && full.passed, format!("exceptional {}, {}", v.holds, full.label)))
    })()));
    out.push(check(1, "Hom(S3, P2) graded", (|| {
        let h = graded_hom(&cx(&s(&k, 2)?)?, &cx(&p(&k, 1)?)?)?.nonzero();
        Ok((h == dims(&[(0, 1), (2, 1)]), format!("{h:?}")))
    })()));
    out.push(check(1, "dim Hom(P2, P1)", (|| {
        let d = hom_dim(&p(&k, 1)?, &p(&k, 0)?)?;
        Ok((d == 2, d.to_string()))
    })()));
    out.push(check(1, "left mutation of P2 through S3", (|| {
        let l = left_mutation(&cx(&s(&k, 2)?)?, &cx(&p(&k, 1)?)?)?;
        let h = cohomology_modules(&l)?;
        let ok = h.keys().copied().collect::<Vec<_>>() == vec![0, 1]
            && is_isomorphic(&h[&0], &s(&k, 1)?)?
            && is_isomorphic(&h[&1], &s(&k, 2)?)?;
        Ok((ok, l.describe()))
    })()));
    out.push(check(1, "right mutation of P2 through P1", (|| {
        let r = right_mutation(&cx(&p(&k, 0)?)?, &cx(&p(&k, 1)?)?)?;
        let h = cohomology_modules(&r)?;
        Ok((h.get(&1).is_some_and(|m| !m.is_zero()), r.describe()))
    })()));
    out.push(check(1, "resolutions of S1 and S2", (|| {
        let r1 = resolution_terms(&s(&k, 0)?)?;
        let r2 = resolution_terms(&s(&k, 1)?)?;
        let ok = r1 == vec![vec![0], vec![1, 1], vec![2], vec![0], vec![1]] && r2 == vec![vec![1], vec![2], vec![0], vec![1]];
        Ok((ok, format!("{r1:?} {r2:?}")))
    })()));
    out.push(check(1, "Hom(S1, S3) and Hom(S2, S3) graded", (|| {
        let s3 = cx(&s(&k, 2)?)?;
        let a = graded_hom(&cx(&s(&k, 0)?)?, &s3)?.nonzero();
        let b = graded_hom(&cx(&s(&k, 1)?)?, &s3)?.nonzero();
        Ok((a == dims(&[(2, 1)]) && b == dims(&[(1, 1)]), format!("{a:?} {b:?}")))
    })()));
    let pair = pair_of(&sigma)?;
    out.push(check(1, "simples lie in the glued heart", (|| {
        let mut ok = true;
        for v in 0..3 {
            ok &= glued_aisle_membership(&cx(&s(&k, v)?)?, &pair)?.in_heart;
        }
        Ok((ok, String::new()))
    })()));
    out.push(check(1, "tau fails through Ext^2(S3, S2)", (|| {
        let e = ext(&s(&k, 2)?, &s(&k, 1)?, 2)?.dimension;
        let tau = [cx(&i(&k, 0)?)?, cx(&s(&k, 1)?)?, cx(&s(&k, 2)?)?];
        let v = is_exceptional_sequence(&tau)?;
        let order: Vec<&String> = v.evidence.iter().filter(|w| !w.contains("is not exceptional")).collect();
        let ok = e == 1 && !v.holds && order == ["Hom•(E3, E2) = {2:1}"];
        Ok((ok, format!("Ext^2 = {e}, {:?}", v.evidence)))
    })()));
    out.push(check(1, "dual of sigma is not module concentrated", (|| {
        let r = restriction_hypotheses(&pair)?;
        Ok((!r.strong && r.evidence.iter().any(|e| e.starts_with('F')), r.evidence.join("; ")))
    })()));
    out.push(check(3, "criterion on the Kalck pair fails on the dual side", (|| {
        let v = hw_criterion(&pair)?;
        let ok = !v.holds && v.evidence.iter().any(|e| e == "Hom(F2, F1[-1]) has dimension 1");
        Ok((ok, v.evidence.join("; ")))
    })()));
    out.push(check(4, "universal extensions on sigma", match iterated_universal_extension(&sigma) {
            Ok(it) => {
                let ok = it.steps.iter().all(|st| st.dim_p == st.dim_q + st.dim_e * st.ext_dim);
                Ok((ok, format!("{} steps", it.steps.len())))
            }
            Err(hwglue::Error::NotStandarizable(m)) => Ok((true, format!("not standarizable: {m}"))),
            Err(e) => Err(e),
        }));
    Ok(())
}

fn directed_checks(out: &mut Vec<Check>) -> Result<()> {
    let a = a3(Q)?;
    let ps = vec![p(&a, 2)?, p(&a, 1)?, p(&a, 0)?];
    let ss = vec![s(&a, 0)?, s(&a, 1)?, s(&a, 2)?];
    let is = vec![i(&a, 2)?, i(&a, 1)?, i(&a, 0)?];
    let pair_p = pair_of(&ps)?;
    let pair_s = pair_of(&ss)?;
    let pair_i = pair_of(&is)?;
    out.push(check(2, "left duals P → S → I", (|| {
        let mut ok = true;
        for (x, m) in pair_p.dual_sequence().iter().zip(&ss) {
            ok &= complexes_isomorphic(x, &cx(m)?)?;
        }
        for (x, m) in pair_s.dual_sequence().iter().zip(&is) {
            ok &= complexes_isomorphic(x, &cx(m)?)?;
        }
        Ok((ok, String::new()))
    })()));
    out.push(check(2, "hom duality for the three pairs", Ok((
        [&pair_p, &pair_s, &pair_i].iter().all(|q| verify_hom_duality(q).holds),
        String::new(),
    ))));
    out.push(check(2, "bijection round trips", (|| {
        let b1 = bijection_check(&a, &pair_p)?;
        let b2 = bijection_check(&a, &pair_s)?;
        Ok((b1.holds && b2.holds, format!("{:?} {:?}", b1.evidence, b2.evidence)))
    })()));
    out.push(check(2, "orders are mutually inverse", (|| {
        let l1 = heart_presentation(&pair_p)?.labels;
        let mut l2 = heart_presentation(&pair_s)?.labels;
        l2.reverse();
        Ok((l1 == l2, format!("{l1:?}")))
    })()));
    out.push(check(3, "criterion on the A3 pairs", (|| {
        Ok((hw_criterion(&pair_p)?.holds && hw_criterion(&pair_s)?.holds, String::new()))
    })()));
    out.push(check(3, "heart of simples", (|| {
        let mut h = heart_presentation(&pair_s)?;
        let sum = direct_sum(&a, &h.parts)?.module;
        let reg = regular_module(&a)?;
        let iso = is_isomorphic(&sum, &reg)?;
        let dim = h.presentation.algebra.dim();
        let ax = verify_hw_axioms(&mut h)?;
        Ok((iso && dim == 6 && ax.passed, format!("dim B {dim}, axioms {}", ax.passed)))
    })()));
    out.push(check(4, "universal extensions on A2 and A3", (|| {
        let b = a2(Q)?;
        let seqs = vec![ps.clone(), ss.clone(), is.clone(), vec![p(&b, 1)?, p(&b, 0)?], vec![s(&b, 0)?, s(&b, 1)?]];
        let mut ok = true;
        let mut n = 0;
        for q in &seqs {
            let it = iterated_universal_extension(q)?;
            n += it.steps.len();
            ok &= it.steps.iter().all(|st| st.dim_p == st.dim_q + st.dim_e * st.ext_dim);
        }
        Ok((ok, format!("{n} steps")))
    })()));
    out.push(check(5, "Ringel duality on A3", (|| {
        let mut h = heart_presentation(&pair_s)?;
        verify_hw_axioms(&mut h)?;
        let t = characteristic_tilting(&h)?;
        let inj = direct_sum(&t.sum.algebra().clone(), &(0..3).map(|v| i(t.sum.algebra(), v)).collect::<Result<Vec<_>>>()?)?.module;
        let t_ok = is_isomorphic(&t.sum, &inj)?;
        let rd = ringel_dual(&h, &t)?;
        let rev = algebras_isomorphic(&rd.presentation.algebra, &*a.opposite()?)?;
        let t2 = tilting_package(&rd.structure)?;
        let dd = ringel_dual_of(&rd.structure, &t2)?;
        let back = algebras_isomorphic(&dd.presentation.algebra, h.algebra())?;
        Ok((t_ok && rev && back, format!("T ≅ ⊕I {t_ok}, reversed {rev}, double dual {back}")))
    })()));
    out.push(check(5, "double duals are Serre images", (|| {
        let b = a2(Q)?;
        let mut ok = true;
        for seq in [ps.clone(), vec![p(&b, 1)?, p(&b, 0)?]] {
            let first = pair_of(&seq)?;
            let second = left_dual_sequence(&ExceptionalSequence::new(first.dual_sequence())?)?;
            for (x, m) in second.dual_sequence().iter().zip(&seq) {
                ok &= complexes_isomorphic(x, &nakayama(&cx(m)?)?)?;
            }
        }
        Ok((ok, String::new()))
    })()));
    Ok(())
}

fn singular_checks(out: &mut Vec<Check>) -> Result<()> {
    let z = z2(Q)?;
    out.push(check(6, "global dimension of Z2", (|| {
        let g = global_dimension_probe(&z, 64)?;
        Ok((matches!(g, GlobalDimension::InfiniteCertified { period: 2, .. }), format!("{g:?}")))
    })()));
    out.push(check(6, "simples of Z2 are not exceptional", (|| {
        let mut ok = true;
        let mut detail = Vec::new();
        for v in 0..2 {
            let x = truncated_resolution_complex(&s(&z, v)?, 4)?;
            let e = is_exceptional(&x)?;
            ok &= !e.holds && e.evidence.iter().any(|w| w.starts_with("Hom(X, X[") && !w.starts_with("Hom(X, X[-"));
            detail.extend(e.evidence);
        }
        Ok((ok, detail.join("; ")))
    })()));
    Ok(())
}

fn round_trips(out: &mut Vec<Check>) {
    out.push(check(8, "algebra files round trip", (|| {
        let mut ok = true;
        for name in BUILTIN_NAMES {
            let a = builtin(name, Q).expect("builtin exists")?;
            let b = parse_algebra(&emit_algebra(&a))?;
            ok &= a.basis() == b.basis() && (0..a.dim()).all(|x| (0..a.dim()).all(|y| a.mul(x, y) == b.mul(x, y)));
        }
        Ok((ok, String::new()))
    })()));
}

/// Every check, in criterion order.
pub fn corpus_checks(oracle_pairs: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for (c, f) in [(1u8, kalck_checks as fn(&mut Vec<Check>) -> Result<()>), (2, directed_checks), (6, singular_checks)] {
        if let Err(e) = f(&mut out) {
            out.push(Check { criterion: c, name: "setup", passed: false, detail: format!("error: {e}") });
        }
    }
    out.push(check(7, "graded Hom agrees with Ext", (|| {
        let cases = run_oracle(ORACLE_SEED, oracle_pairs)?;
        let bad: Vec<String> = cases
            .iter()
            .filter(|c| !c.agrees())
            .map(|c| format!("{} {:?} {:?}: {:?} vs {:?}", c.algebra, c.source_dims, c.target_dims, c.hom_dims, c.ext_dims))
            .collect();
        Ok((bad.is_empty(), format!("{} pairs, {} disagreements {}", cases.len(), bad.len(), bad.join("; "))))
    })()));
    round_trips(&mut out);
    out.sort_by_key(|c| c.criterion);
    out
}

pub fn corpus_report() -> Report {
    let checks = corpus_checks(ORACLE_PAIRS);
    let mut r = Report::new("corpus");
    for c in &checks {
        let mark = if c.passed { "pass" } else { "FAIL" };
        if c.detail.is_empty() {
            r.line(format!("[{mark}] {}: {}", c.criterion, c.name));
        } else {
            r.line(format!("[{mark}] {}: {} ({})", c.criterion, c.name, c.detail));
        }
        r.demand(Status::from_bool(c.passed));
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    r.line(format!("{passed}/{} checks passed", checks.len()));
    r.set("checks", &checks);
    r
}
