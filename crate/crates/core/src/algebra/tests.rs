use super::builtins::{a2, a3, kalck, z2};
use super::*;
use crate::error::Error;
use crate::exactla::FieldSpec;

const Q: FieldSpec = FieldSpec::Rationals;

fn names(alg: &PathAlgebra) -> Vec<String> {
    (0..alg.dim()).map(|i| alg.path_name(i)).collect()
}

#[test]
fn kalck_basis() {
    let k = kalck(Q).unwrap();
    // e1 e2 e3 a b c d, and the two surviving length-two paths c∘a, b∘d
    assert_eq!(k.dim(), 9);
    let mut n = names(&k);
    n.sort();
    let mut expect: Vec<String> =
        ["e1", "e2", "e3", "a", "b", "c", "d", "c∘a", "b∘d"].iter().map(|s| s.to_string()).collect();
    expect.sort();
    assert_eq!(n, expect);
    let dims: Vec<usize> = (0..3).map(|v| projective_module(&k, v).unwrap().total_dim()).collect();
    assert_eq!(dims, vec![4, 2, 3]);
    assert_eq!(projective_module(&k, 0).unwrap().dims(), &[1, 2, 1]);
    assert_eq!(projective_module(&k, 1).unwrap().dims(), &[0, 1, 1]);
    assert_eq!(projective_module(&k, 2).unwrap().dims(), &[1, 1, 1]);
    assert!(k.check_associativity());
}

#[test]
fn small_algebras() {
    let a = a2(Q).unwrap();
    assert_eq!(a.dim(), 3);
    let p1 = projective_module(&a, 0).unwrap();
    assert_eq!(p1.dims(), &[1, 1]);
    assert!(p1.action(0).is_identity());
    assert_eq!(a3(Q).unwrap().dim(), 6);
    let z = z2(Q).unwrap();
    let mut n = names(&z);
    n.sort();
    assert_eq!(n, vec!["a", "b", "e1", "e2"]);
}

#[test]
fn simples_and_injectives() {
    let k = kalck(Q).unwrap();
    assert_eq!(simple_module(&k, 2).unwrap().dims(), &[0, 0, 1]);
    assert_eq!(injective_module(&k, 0).unwrap().dims(), &[1, 0, 1]);
    let a = a2(Q).unwrap();
    assert_eq!(simple_module(&a, 0).unwrap().dims(), &[1, 0]);
    assert_eq!(injective_module(&a, 1).unwrap().dims(), &[1, 1]);
    let i1 = injective_module(&a, 0).unwrap();
    assert_eq!(i1.dims(), &[1, 0]);
    assert_eq!(simple_module(&z2(Q).unwrap(), 1).unwrap().dims(), &[0, 1]);
    assert!(matches!(simple_module(&a, 5), Err(Error::UnknownVertex(_))));
}

#[test]
fn opposite_reverses_arrows_and_relations() {
    let a = a2(Q).unwrap();
    let op = a.opposite().unwrap();
    let arr = &op.quiver().arrows[0];
    assert_eq!((arr.source, arr.target), (1, 0));
    let k = kalck(Q).unwrap();
    let kop = k.opposite().unwrap();
    let words: Vec<Vec<String>> = kop.relations().iter().map(|r| r.terms[0].1.clone()).collect();
    assert_eq!(words, vec![vec!["d", "a"], vec!["b", "c"], vec!["c", "d"]]);
    assert_eq!(kop.dim(), k.dim());
    let back = kop.opposite().unwrap();
    assert_eq!(back.quiver(), k.quiver());
    assert_eq!(back.relations(), k.relations());
    assert_eq!(names(&back), names(&k));
}

#[test]
fn projective_dimensions_sum_to_algebra_dimension() {
    for alg in [kalck(Q).unwrap(), a2(Q).unwrap(), a3(Q).unwrap(), z2(Q).unwrap()] {
        let total: usize = (0..alg.vertex_count()).map(|v| projective_module(&alg, v).unwrap().total_dim()).sum();
        assert_eq!(total, alg.dim());
        let total: usize = (0..alg.vertex_count()).map(|v| injective_module(&alg, v).unwrap().total_dim()).sum();
        assert_eq!(total, alg.dim());
        assert!(alg.check_associativity());
    }
}

#[test]
fn construction_failures() {
    let loop_q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
    match build_path_algebra(loop_q.clone(), vec![], Q, 6) {
        Err(Error::NotFiniteDimensional(w)) => assert_eq!(w, "x∘x∘x∘x∘x∘x"),
        other => panic!("unexpected {other:?}"),
    }
    let x3 = build_path_algebra(loop_q, vec![Relation::monomial(&["x", "x", "x"])], Q, 50).unwrap();
    assert_eq!(x3.dim(), 3);
    let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
    let bad = Relation::new(vec![(Q.one(), vec!["a".into(), "b".into()]), (Q.one(), vec!["b".into(), "a".into()])]);
    assert!(matches!(build_path_algebra(q.clone(), vec![bad], Q, 50), Err(Error::IllFormedRelation(_))));
    let short = Relation::new(vec![(Q.one(), vec!["a".into()])]);
    assert!(matches!(build_path_algebra(q, vec![short], Q, 50), Err(Error::IllFormedRelation(_))));
}

#[test]
fn commutative_square_completes() {
    // 1 → 2 → 4 and 1 → 3 → 4 with c∘a = d∘b
    let q = Quiver::new(&["1", "2", "3", "4"], &[("a", "1", "2"), ("b", "1", "3"), ("c", "2", "4"), ("d", "3", "4")])
        .unwrap();
    let rel = Relation::new(vec![
        (Q.one(), vec!["c".into(), "a".into()]),
        (Q.from_i64(-1), vec!["d".into(), "b".into()]),
    ]);
    let alg = build_path_algebra(q, vec![rel], Q, 50).unwrap();
    assert_eq!(alg.dim(), 9);
    assert!(alg.check_associativity());
}
