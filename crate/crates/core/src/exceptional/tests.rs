use std::sync::Arc;

use super::*;
use crate::algebra::builtins::{a2, a3, kalck, z2};
use crate::algebra::{injective_module, projective_module, simple_module, PathAlgebra};
use crate::derived::{
    class_vector, cohomology_modules, complex_of_module, complexes_isomorphic, euler_pairing, nakayama,
    standard_aisle_degrees, ProjComplex,
};
use crate::exactla::FieldSpec;
use crate::modrep::{is_isomorphic, Module};

const Q: FieldSpec = FieldSpec::Rationals;

fn cx(m: &Arc<Module>) -> ProjComplex {
    complex_of_module(m).unwrap()
}

fn s(alg: &Arc<PathAlgebra>, v: usize) -> ProjComplex {
    cx(&simple_module(alg, v).unwrap())
}

fn p(alg: &Arc<PathAlgebra>, v: usize) -> ProjComplex {
    cx(&projective_module(alg, v).unwrap())
}

fn inj(alg: &Arc<PathAlgebra>, v: usize) -> ProjComplex {
    cx(&injective_module(alg, v).unwrap())
}

fn sigma(k: &Arc<PathAlgebra>) -> ExceptionalSequence {
    ExceptionalSequence::new(vec![s(k, 2), p(k, 1), p(k, 0)]).unwrap()
}

fn iso(x: &ProjComplex, y: &ProjComplex) -> bool {
    complexes_isomorphic(x, y).unwrap()
}

#[test]
fn exceptional_objects() {
    let k = kalck(Q).unwrap();
    assert!(is_exceptional(&s(&k, 2)).unwrap().holds);
    let z = z2(Q).unwrap();
    let v = is_exceptional_module(&simple_module(&z, 0).unwrap());
    assert!(v.is_err() || !v.unwrap().holds);
    let trunc = crate::derived::truncated_resolution_complex(&simple_module(&z, 0).unwrap(), 4).unwrap();
    let v = is_exceptional(&trunc).unwrap();
    assert!(!v.holds);
    assert!(!is_exceptional(&ProjComplex::zero(&k)).unwrap().holds);
}

#[test]
fn exceptional_sequences() {
    let k = kalck(Q).unwrap();
    assert!(is_exceptional_sequence(&sigma(&k).objects).unwrap().holds);
    let tau = [inj(&k, 0), s(&k, 1), s(&k, 2)];
    let v = is_exceptional_sequence(&tau).unwrap();
    assert!(!v.holds);
    assert!(v.evidence.iter().any(|e| e == "Hom•(E3, E2) = {2:1}"), "{:?}", v.evidence);
    assert!(ExceptionalSequence::new(tau.to_vec()).is_err());
    let a = a3(Q).unwrap();
    assert!(is_exceptional_sequence(&[p(&a, 2), p(&a, 1), p(&a, 0)]).unwrap().holds);
    assert!(!is_exceptional_sequence(&[p(&a, 0), p(&a, 1)]).unwrap().holds);
}

#[test]
fn mutations() {
    let k = kalck(Q).unwrap();
    let l = left_mutation(&s(&k, 2), &p(&k, 1)).unwrap();
    let h = cohomology_modules(&l).unwrap();
    assert_eq!(h.keys().copied().collect::<Vec<_>>(), vec![0, 1]);
    assert!(is_isomorphic(&h[&0], &simple_module(&k, 1).unwrap()).unwrap());
    assert!(is_isomorphic(&h[&1], &simple_module(&k, 2).unwrap()).unwrap());
    assert_eq!(standard_aisle_degrees(&l).unwrap(), Some((0, 1)));
    let r = right_mutation(&p(&k, 0), &p(&k, 1)).unwrap();
    assert!(cohomology_modules(&r).unwrap().contains_key(&1));
    assert!(matches!(left_mutation(&p(&k, 1), &s(&k, 2)), Err(crate::Error::NotExceptionalPair(_))));

    let a = a2(Q).unwrap();
    let l = left_mutation(&p(&a, 1), &p(&a, 0)).unwrap();
    assert!(iso(&l, &s(&a, 0)));
    let r = right_mutation(&p(&a, 0), &p(&a, 1)).unwrap();
    assert!(iso(&r, &s(&a, 0).shift(-1)));
}

#[test]
fn mutation_classes_are_additive() {
    let k = kalck(Q).unwrap();
    let a = a3(Q).unwrap();
    let pairs = [
        (s(&k, 2), p(&k, 1)),
        (p(&k, 1), p(&k, 0)),
        (s(&k, 2), p(&k, 0)),
        (p(&a, 2), p(&a, 0)),
        (s(&a, 0), s(&a, 2)),
    ];
    for (e, f) in &pairs {
        let chi = euler_pairing(e, f).unwrap();
        let (ce, cf) = (class_vector(e), class_vector(f));
        let l = class_vector(&left_mutation(e, f).unwrap());
        let r = class_vector(&right_mutation(f, e).unwrap());
        for v in 0..ce.len() {
            assert_eq!(l[v], cf[v] - chi * ce[v]);
            assert_eq!(r[v], ce[v] - chi * cf[v]);
        }
    }
}

#[test]
fn duals_on_a3() {
    let a = a3(Q).unwrap();
    let eps = ExceptionalSequence::new(vec![p(&a, 2), p(&a, 1), p(&a, 0)]).unwrap();
    let pair = left_dual_sequence(&eps).unwrap();
    let dual = pair.dual_sequence();
    for (x, v) in dual.iter().zip(0..3) {
        assert!(iso(x, &s(&a, v)));
    }
    assert!(verify_hom_duality(&pair).holds);
    let eps2 = ExceptionalSequence::new(dual).unwrap();
    let pair2 = left_dual_sequence(&eps2).unwrap();
    let dual2 = pair2.dual_sequence();
    for (x, v) in dual2.iter().zip([2, 1, 0]) {
        assert!(iso(x, &inj(&a, v)));
    }
    assert!(verify_hom_duality(&pair2).holds);
    let single = ExceptionalSequence::new(vec![s(&a, 1)]).unwrap();
    let sp = left_dual_sequence(&single).unwrap();
    assert!(iso(&sp.left_dual[0], &s(&a, 1)));
    assert!(verify_hom_duality(&sp).holds);
}

#[test]
fn kalck_dual_pair() {
    let k = kalck(Q).unwrap();
    let pair = left_dual_sequence(&sigma(&k)).unwrap();
    assert!(verify_hom_duality(&pair).holds);
    assert!(iso(&pair.left_dual[0], &s(&k, 2)));
    let f2 = cohomology_modules(&pair.left_dual[1]).unwrap();
    assert!(is_isomorphic(&f2[&0], &simple_module(&k, 1).unwrap()).unwrap());
    let f3 = cohomology_modules(&pair.left_dual[2]).unwrap();
    assert!(is_isomorphic(&f3[&0], &injective_module(&k, 0).unwrap()).unwrap());
    assert!(f3.keys().all(|&d| d >= 0));
    for v in 0..3 {
        let m = glued_aisle_membership(&s(&k, v), &pair).unwrap();
        assert!(m.in_heart, "{:?}", m.evidence);
    }
    // F_2 has H^1 = S_3 = F_1, which obstructs the aisle test
    let m = glued_aisle_membership(&pair.left_dual[1], &pair).unwrap();
    assert!(m.in_geq0 && !m.in_leq0);
    assert_eq!(m.evidence, vec!["Hom(X, F1[-1]) has dimension 1".to_string()]);
    assert!(glued_aisle_membership(&pair.left_dual[0], &pair).unwrap().in_heart);
    assert!(glued_aisle_membership(&pair.left_dual[2], &pair).unwrap().in_heart);
    for e in &pair.sequence.objects {
        let m = glued_aisle_membership(&e.shift(1), &pair).unwrap();
        assert!(m.in_leq0 && !m.in_geq0);
    }
    let r = restriction_hypotheses(&pair).unwrap();
    assert!(r.weak);
    assert!(!r.strong);
}

#[test]
fn restriction_reports() {
    let a = a3(Q).unwrap();
    let eps = ExceptionalSequence::new(vec![p(&a, 2), p(&a, 1), p(&a, 0)]).unwrap();
    let pair = left_dual_sequence(&eps).unwrap();
    let r = restriction_hypotheses(&pair).unwrap();
    assert!(r.weak && r.strong);
    for x in pair.left_dual.iter().chain(&pair.sequence.objects) {
        assert!(glued_aisle_membership(x, &pair).unwrap().in_heart);
    }
    let shifted = ExceptionalSequence::new(eps.objects.iter().map(|x| x.shift(1)).collect()).unwrap();
    let r = restriction_hypotheses(&left_dual_sequence(&shifted).unwrap()).unwrap();
    assert!(!r.weak && !r.strong);
}

#[test]
fn fullness_conditions() {
    let k = kalck(Q).unwrap();
    let rep = fullness_necessary_conditions(&sigma(&k));
    assert!(rep.passed);
    assert_eq!(rep.label, "necessary conditions passed");
    let a = a3(Q).unwrap();
    let short = ExceptionalSequence::new(vec![p(&a, 2), p(&a, 1)]).unwrap();
    assert!(!fullness_necessary_conditions(&short).passed);
    let full = ExceptionalSequence::new(vec![p(&a, 2), p(&a, 1), p(&a, 0)]).unwrap();
    let rep = fullness_necessary_conditions(&full);
    assert!(rep.passed);
    assert_eq!(rep.determinant, Some(-1));
}

#[test]
fn gram_and_pairing_matrices() {
    let k = kalck(Q).unwrap();
    let a = a3(Q).unwrap();
    let aa = a2(Q).unwrap();
    let seqs = [
        sigma(&k),
        ExceptionalSequence::new(vec![p(&a, 2), p(&a, 1), p(&a, 0)]).unwrap(),
        ExceptionalSequence::new(vec![s(&a, 0), s(&a, 1), s(&a, 2)]).unwrap(),
        ExceptionalSequence::new(vec![p(&aa, 1), p(&aa, 0)]).unwrap(),
    ];
    for eps in &seqs {
        let g = eps.gram_matrix();
        let n = g.len();
        for i in 0..n {
            assert_eq!(g[i][i], 1);
            for j in 0..i {
                assert_eq!(g[i][j], 0);
            }
        }
        let pair = left_dual_sequence(eps).unwrap();
        let pm = pair.pairing_matrix();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(pm[i][j], i64::from(i == j));
            }
        }
    }
}

#[test]
fn double_dual_is_serre() {
    for alg in [a2(Q).unwrap(), a3(Q).unwrap()] {
        let n = alg.vertex_count();
        let candidates = [
            (0..n).rev().map(|v| p(&alg, v)).collect::<Vec<_>>(),
            (0..n).map(|v| s(&alg, v)).collect::<Vec<_>>(),
        ];
        for objs in candidates {
            let eps = ExceptionalSequence::new(objs).unwrap();
            let d1 = left_dual_sequence(&eps).unwrap();
            let d2 = left_dual_sequence(&ExceptionalSequence::new(d1.dual_sequence()).unwrap()).unwrap();
            for (x, e) in d2.dual_sequence().iter().zip(&eps.objects) {
                assert!(iso(x, &nakayama(e).unwrap()));
            }
        }
    }
}

