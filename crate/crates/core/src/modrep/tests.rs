use std::sync::Arc;

use super::*;
use crate::algebra::builtins::{a2, a3, kalck, z2};
use crate::algebra::{injective_module, projective_module, regular_module, simple_module, PathAlgebra};
use crate::error::Error;
use crate::exactla::{FieldSpec, Matrix};

const Q: FieldSpec = FieldSpec::Rationals;

fn p(alg: &Arc<PathAlgebra>, v: usize) -> Arc<Module> {
    projective_module(alg, v).unwrap()
}
fn s(alg: &Arc<PathAlgebra>, v: usize) -> Arc<Module> {
    simple_module(alg, v).unwrap()
}

#[test]
fn hom_dimensions() {
    let k = kalck(Q).unwrap();
    assert_eq!(hom_dim(&p(&k, 1), &p(&k, 0)).unwrap(), 2);
    assert_eq!(hom_dim(&s(&k, 2), &p(&k, 1)).unwrap(), 1);
    let m = p(&k, 0);
    let h = hom_space(&m, &m).unwrap();
    let id = ModuleMap::identity(m.clone());
    let c = h.coordinates(&id);
    assert_eq!(h.element(&c).blocks(), id.blocks());
    for b in h.basis() {
        assert!(b.commutes());
    }
}

#[test]
fn hom_between_projectives_counts_paths() {
    for alg in [kalck(Q).unwrap(), a3(Q).unwrap(), z2(Q).unwrap()] {
        for i in 0..alg.vertex_count() {
            for j in 0..alg.vertex_count() {
                let d = hom_dim(&p(&alg, i), &p(&alg, j)).unwrap();
                assert_eq!(d, alg.paths_from_to(j, i).len());
            }
        }
    }
}

#[test]
fn yoneda_for_projectives() {
    for alg in [kalck(Q).unwrap(), a3(Q).unwrap(), z2(Q).unwrap(), a2(Q).unwrap()] {
        let mut ms = Vec::new();
        for v in 0..alg.vertex_count() {
            ms.push(p(&alg, v));
            ms.push(s(&alg, v));
            ms.push(injective_module(&alg, v).unwrap());
        }
        for m in &ms {
            for v in 0..alg.vertex_count() {
                assert_eq!(hom_dim(&p(&alg, v), m).unwrap(), m.dim_at(v));
            }
        }
    }
}

#[test]
fn kernels_and_cokernels() {
    let a = a2(Q).unwrap();
    let p1 = p(&a, 0);
    let id = ModuleMap::identity(p1.clone());
    assert!(kernel(&id).unwrap().0.is_zero());
    assert!(cokernel(&id).unwrap().0.is_zero());
    let (t, proj) = top(&p1).unwrap();
    assert_eq!(t.dims(), &[1, 0]);
    let (ker, inc) = kernel(&proj).unwrap();
    assert_eq!(ker.dims(), &[0, 1]);
    assert!(is_isomorphic(&ker, &s(&a, 1)).unwrap());
    assert!(inc.commutes());
    let (im, _, _) = image(&proj).unwrap();
    assert_eq!(ker.total_dim() + im.total_dim(), p1.total_dim());

    let k = kalck(Q).unwrap();
    let (_, proj) = top(&p(&k, 2)).unwrap();
    let (ker, _) = kernel(&proj).unwrap();
    assert_eq!(ker.dims(), &[1, 1, 0]);
}

#[test]
fn sums_and_radicals() {
    let a = a2(Q).unwrap();
    assert!(direct_sum(&a, &[]).unwrap().module.is_zero());
    let sum = direct_sum(&a, &[s(&a, 0), s(&a, 1)]).unwrap();
    assert_eq!(sum.module.dims(), &[1, 1]);
    assert!(sum.module.action(0).is_zero());
    for (i, pr) in sum.injections.iter().zip(&sum.projections) {
        assert!(pr.compose(i).blocks().iter().all(Matrix::is_identity));
    }
    let a3 = a3(Q).unwrap();
    assert_eq!(regular_module(&a3).unwrap().total_dim(), 6);

    let k = kalck(Q).unwrap();
    for v in 0..3 {
        assert!(radical(&s(&k, v)).unwrap().0.is_zero());
        assert_eq!(top(&s(&k, v)).unwrap().0.dims(), s(&k, v).dims());
    }
    let p1 = p(&k, 0);
    assert!(is_isomorphic(&top(&p1).unwrap().0, &s(&k, 0)).unwrap());
    assert_eq!(radical(&p1).unwrap().0.dims(), &[0, 2, 1]);
    let (soc, _) = socle(&p(&a, 0)).unwrap();
    assert!(is_isomorphic(&soc, &s(&a, 1)).unwrap());
}

#[test]
fn radical_homomorphisms() {
    let k = kalck(Q).unwrap();
    assert_eq!(rad_hom(&s(&k, 0), &s(&k, 0)).unwrap(), 0);
    assert_eq!(rad_hom(&p(&k, 1), &p(&k, 0)).unwrap(), 2);
    assert_eq!(rad_hom(&p(&k, 0), &p(&k, 1)).unwrap(), 0);
    let sum = direct_sum(&k, &[s(&k, 0), s(&k, 1)]).unwrap().module;
    assert!(matches!(rad_hom(&sum, &s(&k, 0)), Err(Error::DecomposableInput(_))));
    for alg in [k.clone(), a3(Q).unwrap()] {
        for v in 0..alg.vertex_count() {
            for x in [p(&alg, v), s(&alg, v), injective_module(&alg, v).unwrap()] {
                let end = hom_dim(&x, &x).unwrap();
                let (sca, _) = endomorphism_algebra(&x).unwrap();
                if sca.semisimple_dim() == 1 {
                    assert_eq!(rad_hom(&x, &x).unwrap(), end - 1);
                }
            }
        }
    }
}

#[test]
fn isomorphism_decisions() {
    let a = a2(Q).unwrap();
    let p1 = p(&a, 0);
    assert!(is_isomorphic(&p1, &p1).unwrap());
    assert!(!is_isomorphic(&s(&a, 0), &s(&a, 1)).unwrap());
    // the (1,1) module with α = 2 is the nonsplit extension
    let m = Arc::new(Module::new(a.clone(), vec![1, 1], vec![Matrix::from_i64(Q, &[&[2]])]).unwrap());
    assert!(is_isomorphic(&m, &p1).unwrap());
    let split = direct_sum(&a, &[s(&a, 0), s(&a, 1)]).unwrap().module;
    assert!(!is_isomorphic(&split, &p1).unwrap());
    assert!(find_isomorphism(&m, &p1).unwrap().unwrap().is_isomorphism());
    let k = kalck(Q).unwrap();
    assert!(matches!(is_isomorphic(&p1, &s(&k, 0)), Err(Error::AlgebraMismatch)));
}

#[test]
fn endomorphism_algebras_and_decomposition() {
    let a = a2(Q).unwrap();
    let (e, _) = endomorphism_algebra(&s(&a, 0)).unwrap();
    assert_eq!(e.dim(), 1);
    assert!(e.is_associative());

    let a3 = a3(Q).unwrap();
    let reg = regular_module(&a3).unwrap();
    let parts = decompose(&reg).unwrap();
    assert_eq!(parts.len(), 3);
    for v in 0..3 {
        let pv = p(&a3, v);
        let hits: Vec<_> = parts.iter().filter(|(x, _)| is_isomorphic(x, &pv).unwrap()).collect();
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].1, 1);
    }

    let k = kalck(Q).unwrap();
    let m = direct_sum(&k, &[p(&k, 0), p(&k, 1)]).unwrap().module;
    let (e, _) = endomorphism_algebra(&m).unwrap();
    assert_eq!(e.dim(), 4);
    assert!(e.is_associative());
}

#[test]
fn decomposition_resums_to_input() {
    let k = kalck(Q).unwrap();
    let inputs = [
        direct_sum(&k, &[p(&k, 0), s(&k, 1), p(&k, 0), injective_module(&k, 0).unwrap()]).unwrap().module,
        regular_module(&k).unwrap(),
    ];
    for m in inputs {
        let parts = decompose(&m).unwrap();
        let mut all = Vec::new();
        for (x, mult) in &parts {
            assert!(is_indecomposable(x).unwrap());
            for _ in 0..*mult {
                all.push(x.clone());
            }
        }
        let back = direct_sum(&k, &all).unwrap().module;
        assert!(is_isomorphic(&back, &m).unwrap());
    }
}

#[test]
fn radical_over_small_prime_fields() {
    let f2 = FieldSpec::prime(2).unwrap();
    // End(S ⊕ S) = M_2(𝔽2) is semisimple although its trace form vanishes
    let a = a2(f2).unwrap();
    let ss = direct_sum(&a, &[s(&a, 0), s(&a, 0)]).unwrap().module;
    let (e, _) = endomorphism_algebra(&ss).unwrap();
    assert_eq!(e.radical_method(), RadicalMethod::IteratedTraces);
    assert_eq!(e.radical().cols(), 0);
    let z = z2(f2).unwrap();
    let (e, _) = endomorphism_algebra(&regular_module(&z).unwrap()).unwrap();
    assert_eq!(e.radical().cols(), 2);
    let a3 = a3(f2).unwrap();
    let (e, _) = endomorphism_algebra(&regular_module(&a3).unwrap()).unwrap();
    assert_eq!(e.radical().cols(), 3);
    assert_eq!(decompose(&regular_module(&a3).unwrap()).unwrap().len(), 3);
}

#[test]
fn invalid_modules_are_rejected() {
    let z = z2(Q).unwrap();
    let one = Matrix::from_i64(Q, &[&[1]]);
    assert!(matches!(Module::new(z.clone(), vec![1, 1], vec![one.clone(), one]), Err(Error::InvalidModule(_))));
    assert!(Module::new(z, vec![1, 1], vec![Matrix::from_i64(Q, &[&[1]]), Matrix::zeros(Q, 1, 1)]).is_ok());
}
