//! Acceptance criteria, each checked at exact equality. Runs without the
//! libtest harness so every criterion prints its line; exits nonzero when
//! any criterion fails.

use std::collections::BTreeMap;
use std::process::Command;
use std::sync::Arc;

use hwglue::algebra::builtins::{a2, a3, kalck, z2};
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
use hwglue_cli::oracle::{run_oracle, ORACLE_MAX_DEGREE, ORACLE_PAIRS, ORACLE_SEED};

const Q: FieldSpec = FieldSpec::Rationals;

type Failures = Vec<String>;

fn cx(m: &Arc<Module>) -> ProjComplex {
    complex_of_module(m).unwrap()
}

fn s(a: &Arc<PathAlgebra>, v: usize) -> Arc<Module> {
    simple_module(a, v).unwrap()
}

fn p(a: &Arc<PathAlgebra>, v: usize) -> Arc<Module> {
    projective_module(a, v).unwrap()
}

fn i(a: &Arc<PathAlgebra>, v: usize) -> Arc<Module> {
    injective_module(a, v).unwrap()
}

fn pair_of(ms: &[Arc<Module>]) -> DualPair {
    left_dual_sequence(&ExceptionalSequence::from_modules(ms).unwrap()).unwrap()
}

fn dims(pairs: &[(i64, usize)]) -> BTreeMap<i64, usize> {
    pairs.iter().copied().collect()
}

fn expect(out: &mut Failures, ok: bool, what: impl Into<String>) {
    if !ok {
        out.push(what.into());
    }
}

fn vertices(m: &Arc<Module>) -> Vec<Vec<usize>> {
    let r = minimal_resolution(m, 16).unwrap();
    assert!(!r.truncated);
    r.terms.iter().map(|t| t.vertices.clone()).collect()
}

fn kalck_corpus() -> Result<Failures> {
    let mut f = Failures::new();
    let k = kalck(Q)?;
    let sigma = [s(&k, 2), p(&k, 1), p(&k, 0)];
    let xs: Vec<ProjComplex> = sigma.iter().map(cx).collect();

    // (a)
    let v = is_exceptional_sequence(&xs)?;
    expect(&mut f, v.holds, format!("(a) sigma not exceptional: {:?}", v.evidence));
    let full = fullness_necessary_conditions(&ExceptionalSequence::new(xs.clone())?);
    expect(&mut f, full.passed, format!("(a) fullness conditions: {}", full.label));

    // (b)
    let h = graded_hom(&xs[0], &xs[1])?.nonzero();
    expect(&mut f, h == dims(&[(0, 1), (2, 1)]), format!("(b) Hom•(S3, P2) = {h:?}"));

    // (c)
    let d = hom_dim(&p(&k, 1), &p(&k, 0))?;
    expect(&mut f, d == 2, format!("(c) dim Hom(P2, P1) = {d}"));

    // (d)
    let l = left_mutation(&xs[0], &xs[1])?;
    let hl = cohomology_modules(&l)?;
    expect(&mut f, hl.keys().copied().collect::<Vec<_>>() == vec![0, 1], format!("(d) H•(L_S3 P2) in {:?}", hl.keys()));
    expect(&mut f, hl.get(&0).is_some_and(|m| is_isomorphic(m, &s(&k, 1)).unwrap()), "(d) H^0 ≇ S2");
    expect(&mut f, hl.get(&1).is_some_and(|m| is_isomorphic(m, &s(&k, 2)).unwrap()), "(d) H^1 ≇ S3");

    // (e)
    let r = right_mutation(&xs[2], &xs[1])?;
    let hr = cohomology_modules(&r)?;
    expect(&mut f, hr.get(&1).is_some_and(|m| !m.is_zero()), "(e) H^1(R_P1 P2) = 0");

    // (f): 0 ← S1 ← P1 ← P2⊕P2 ← P3 ← P1 ← P2 ← 0 and 0 ← S2 ← P2 ← P3 ← P1 ← P2 ← 0
    let r1 = vertices(&s(&k, 0));
    let r2 = vertices(&s(&k, 1));
    expect(&mut f, r1 == vec![vec![0], vec![1, 1], vec![2], vec![0], vec![1]], format!("(f) resolution of S1: {r1:?}"));
    expect(&mut f, r2 == vec![vec![1], vec![2], vec![0], vec![1]], format!("(f) resolution of S2: {r2:?}"));

    // (g)
    let g1 = graded_hom(&cx(&s(&k, 0)), &xs[0])?.nonzero();
    let g2 = graded_hom(&cx(&s(&k, 1)), &xs[0])?.nonzero();
    expect(&mut f, g1 == dims(&[(2, 1)]), format!("(g) Hom•(S1, S3) = {g1:?}"));
    expect(&mut f, g2 == dims(&[(1, 1)]), format!("(g) Hom•(S2, S3) = {g2:?}"));

    // (h)
    let pair = left_dual_sequence(&ExceptionalSequence::new(xs.clone())?)?;
    for v in 0..3 {
        let m = glued_aisle_membership(&cx(&s(&k, v)), &pair)?;
        expect(&mut f, m.in_heart, format!("(h) S{} outside the heart: {:?}", v + 1, m.evidence));
    }

    // (i): H^0(M) is the nonsplit extension of S3 by S1, which is I1.
    let e = ext(&s(&k, 2), &s(&k, 1), 2)?.dimension;
    expect(&mut f, e == 1, format!("(i) Ext^2(S3, S2) = {e}"));
    let h0m = i(&k, 0);
    expect(&mut f, h0m.dims() == [1, 0, 1], format!("(i) H^0(M) dims {:?}", h0m.dims()));
    let tau = [cx(&h0m), cx(&s(&k, 1)), cx(&s(&k, 2))];
    let v = is_exceptional_sequence(&tau)?;
    let order: Vec<&String> = v.evidence.iter().filter(|w| !w.contains("is not exceptional")).collect();
    expect(&mut f, !v.holds && order == ["Hom•(E3, E2) = {2:1}"], format!("(i) tau ordering witnesses: {:?}", v.evidence));
    let objects: Vec<&String> = v.evidence.iter().filter(|w| w.contains("is not exceptional")).collect();
    expect(&mut f, objects == ["E2 is not exceptional: Hom•(E2, E2) = {0:1, 3:1}"], format!("(i) tau object witnesses: {objects:?}"));

    // (j)
    let rh = restriction_hypotheses(&pair)?;
    expect(&mut f, !rh.strong, "(j) dual of sigma reported module concentrated");
    expect(&mut f, rh.f_degrees[1] == Some((0, 1)), format!("(j) F2 degrees {:?}", rh.f_degrees[1]));
    Ok(f)
}

fn directed_algebras() -> Result<Failures> {
    let mut f = Failures::new();
    let a = a3(Q)?;
    let ps = vec![p(&a, 2), p(&a, 1), p(&a, 0)];
    let ss = vec![s(&a, 0), s(&a, 1), s(&a, 2)];
    let is = vec![i(&a, 2), i(&a, 1), i(&a, 0)];
    let pair_p = pair_of(&ps);
    let d1 = pair_p.dual_sequence();
    for (x, m) in d1.iter().zip(&ss) {
        expect(&mut f, complexes_isomorphic(x, &cx(m))?, format!("left dual of (P3, P2, P1) is not (S1, S2, S3) at {}", x.describe()));
    }
    let pair_s = left_dual_sequence(&ExceptionalSequence::new(d1)?)?;
    let d2 = pair_s.dual_sequence();
    for (x, m) in d2.iter().zip(&is) {
        expect(&mut f, complexes_isomorphic(x, &cx(m))?, format!("left dual of (S1, S2, S3) is not (I3, I2, I1) at {}", x.describe()));
    }
    let pair_i = left_dual_sequence(&ExceptionalSequence::new(d2)?)?;
    for (name, q) in [("P", &pair_p), ("S", &pair_s), ("I", &pair_i)] {
        let v = verify_hom_duality(q);
        expect(&mut f, v.holds, format!("hom duality for the {name} pair: {:?}", v.evidence));
    }
    let pair_s = pair_of(&ss);
    for (name, q) in [("P/S", &pair_p), ("S/I", &pair_s)] {
        let b = bijection_check(&a, q)?;
        expect(&mut f, b.applicable && b.holds, format!("{name} bijection: {:?} {:?}", b.obstruction, b.evidence));
    }
    let ord_ps = heart_presentation(&pair_p)?.labels;
    let ord_si = heart_presentation(&pair_s)?.labels;
    let mut inv = ord_si.clone();
    inv.reverse();
    expect(&mut f, ord_ps == vec!["3", "2", "1"] && ord_ps == inv, format!("orders {ord_ps:?} and {ord_si:?}"));
    Ok(f)
}

fn criterion_theorem() -> Result<Failures> {
    let mut f = Failures::new();
    let a = a3(Q)?;
    let pair_p = pair_of(&[p(&a, 2), p(&a, 1), p(&a, 0)]);
    let pair_s = pair_of(&[s(&a, 0), s(&a, 1), s(&a, 2)]);
    for (name, q) in [("A3 projectives", &pair_p), ("A3 simples", &pair_s)] {
        let v = hw_criterion(q)?;
        expect(&mut f, v.holds, format!("criterion on {name}: {:?}", v.evidence));
    }
    let k = kalck(Q)?;
    let kp = pair_of(&[s(&k, 2), p(&k, 1), p(&k, 0)]);
    let v = hw_criterion(&kp)?;
    expect(&mut f, v.holds, format!("criterion on the Kalck pair: {:?}", v.evidence));

    let mut h = heart_presentation(&pair_s)?;
    let sum = direct_sum(&a, &h.parts)?.module;
    expect(&mut f, is_isomorphic(&sum, &regular_module(&a)?)?, "⊕P_i ≇ A");
    let b = h.presentation.algebra.clone();
    expect(&mut f, b.dim() == 6, format!("dim B = {}", b.dim()));
    expect(&mut f, h.endomorphism.semisimple_dim() == b.vertex_count(), "B is not basic");
    let ax = verify_hw_axioms(&mut h)?;
    expect(&mut f, ax.st1 && ax.st2 && ax.cost1 && ax.cost2, format!("axioms: {:?}", ax.evidence));
    Ok(f)
}

fn universal_extensions() -> Result<Failures> {
    let mut f = Failures::new();
    let a = a3(Q)?;
    let b = a2(Q)?;
    let k = kalck(Q)?;
    let corpus: Vec<(&str, Vec<Arc<Module>>)> = vec![
        ("A3 projectives", vec![p(&a, 2), p(&a, 1), p(&a, 0)]),
        ("A3 simples", vec![s(&a, 0), s(&a, 1), s(&a, 2)]),
        ("A3 injectives", vec![i(&a, 2), i(&a, 1), i(&a, 0)]),
        ("A2 projectives", vec![p(&b, 1), p(&b, 0)]),
        ("A2 simples", vec![s(&b, 0), s(&b, 1)]),
        ("Kalck sigma", vec![s(&k, 2), p(&k, 1), p(&k, 0)]),
    ];
    for (name, seq) in corpus {
        match iterated_universal_extension(&seq) {
            Ok(it) => {
                expect(&mut f, !it.steps.is_empty() || seq.len() == 1, format!("{name}: no recursion steps"));
                for st in &it.steps {
                    expect(
                        &mut f,
                        st.dim_p == st.dim_q + st.dim_e * st.ext_dim,
                        format!("{name}: step {}.{} gives {} ≠ {} + {}·{}", st.level, st.index, st.dim_p, st.dim_q, st.dim_e, st.ext_dim),
                    );
                }
            }
            Err(e) => f.push(format!("{name}: {e}")),
        }
    }
    Ok(f)
}

fn ringel_duality() -> Result<Failures> {
    let mut f = Failures::new();
    let a = a3(Q)?;
    let pair_s = pair_of(&[s(&a, 0), s(&a, 1), s(&a, 2)]);
    let mut h = heart_presentation(&pair_s)?;
    verify_hw_axioms(&mut h)?;
    let t = characteristic_tilting(&h)?;
    let g = h.algebra().clone();
    let inj = direct_sum(&g, &(0..3).map(|v| i(&g, v)).collect::<Vec<_>>())?.module;
    expect(&mut f, is_isomorphic(&t.sum, &inj)?, "T ≇ ⊕I_i");
    let rd = ringel_dual(&h, &t)?;
    expect(&mut f, algebras_isomorphic(&rd.presentation.algebra, &*a.opposite()?)?, "Ringel dual ≇ A3 reversed");
    let t2 = tilting_package(&rd.structure)?;
    let dd = ringel_dual_of(&rd.structure, &t2)?;
    expect(&mut f, algebras_isomorphic(&dd.presentation.algebra, &g)?, "double Ringel dual ≇ B");

    let b = a2(Q)?;
    for (name, seq) in [("A2", vec![p(&b, 1), p(&b, 0)]), ("A3", vec![p(&a, 2), p(&a, 1), p(&a, 0)])] {
        let first = pair_of(&seq);
        let second = left_dual_sequence(&ExceptionalSequence::new(first.dual_sequence())?)?;
        for (x, m) in second.dual_sequence().iter().zip(&seq) {
            let nu = nakayama(&cx(m))?;
            expect(&mut f, complexes_isomorphic(x, &nu)?, format!("{name}: double dual {} vs Serre image {}", x.describe(), nu.describe()));
        }
    }
    Ok(f)
}

fn negative_control() -> Result<Failures> {
    let mut f = Failures::new();
    let z = z2(Q)?;
    let g = global_dimension_probe(&z, 64)?;
    expect(&mut f, matches!(g, GlobalDimension::InfiniteCertified { period: 2, .. }), format!("gldim Z2: {g:?}"));
    for v in 0..2 {
        let sv = s(&z, v);
        expect(&mut f, complex_of_module(&sv).is_err(), format!("S{} has a finite projective model", v + 1));
        let x = truncated_resolution_complex(&sv, 4)?;
        let e = is_exceptional(&x)?;
        let positive = e.evidence.iter().any(|w| w.starts_with("Hom(X, X[") && !w.starts_with("Hom(X, X[-"));
        expect(&mut f, !e.holds && positive, format!("S{} self-Hom witness: {:?}", v + 1, e.evidence));
        let e2 = ext(&sv, &sv, 2)?.dimension;
        expect(&mut f, e2 == 1, format!("Ext^2(S{0}, S{0}) = {e2}", v + 1));
    }
    Ok(f)
}

fn oracle_equivalence() -> Result<Failures> {
    let mut f = Failures::new();
    let cases = run_oracle(ORACLE_SEED, ORACLE_PAIRS)?;
    expect(&mut f, cases.len() == ORACLE_PAIRS, format!("{} pairs", cases.len()));
    for c in &cases {
        expect(&mut f, c.hom_dims.len() == ORACLE_MAX_DEGREE + 1, "degree range");
        expect(
            &mut f,
            c.agrees(),
            format!("{} {:?} → {:?}: graded Hom {:?}, Ext {:?}", c.algebra, c.source_dims, c.target_dims, c.hom_dims, c.ext_dims),
        );
    }
    Ok(f)
}

fn exactness_properties() -> Result<Failures> {
    let mut f = Failures::new();
    let out = Command::new(env!("CARGO_BIN_EXE_hwglue")).arg("corpus").output().expect("binary runs");
    let text = String::from_utf8_lossy(&out.stdout);
    expect(&mut f, out.status.code() == Some(0), format!("corpus exit {:?}: {}", out.status.code(), text.lines().filter(|l| l.contains("FAIL")).collect::<Vec<_>>().join("; ")));
    Ok(f)
}

fn main() {
    let criteria: [(&str, fn() -> Result<Failures>); 8] = [
        ("Kalck corpus", kalck_corpus),
        ("directed algebras", directed_algebras),
        ("criterion theorem", criterion_theorem),
        ("universal extensions", universal_extensions),
        ("Ringel duality", ringel_duality),
        ("negative control", negative_control),
        ("oracle equivalence", oracle_equivalence),
        ("exactness properties", exactness_properties),
    ];
    let mut red = Vec::new();
    for (n, (name, run)) in criteria.iter().enumerate() {
        let failures = match std::panic::catch_unwind(run) {
            Ok(Ok(f)) => f,
            Ok(Err(e)) => vec![format!("error: {e}")],
            Err(_) => vec!["panicked".to_string()],
        };
        if failures.is_empty() {
            println!("criterion {}: pass ({name})", n + 1);
        } else {
            println!("criterion {}: FAIL ({name}): {}", n + 1, failures.join("; "));
            red.push(n + 1);
        }
    }
    if !red.is_empty() {
        eprintln!("criteria failing: {red:?}");
        std::process::exit(1);
    }
}
