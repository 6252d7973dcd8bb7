//! Structural invariants over the builtin algebras and seeded random modules.

use std::sync::Arc;

use hwglue::algebra::builtins::{a2, a3, builtin, kalck, z2};
use hwglue::algebra::{projective_module, simple_module, PathAlgebra};
use hwglue::derived::{cohomology_dims, complex_of_module, cone, graded_hom, nakayama, ProjComplex};
use hwglue::exceptional::{left_dual_sequence, ExceptionalSequence};
use hwglue::homology::{euler_form, ext, map_from_generators, minimal_resolution, ProjTerm};
use hwglue::hweight::{delta_filtration, heart_presentation, verify_hw_axioms, HWReport};
use hwglue::modrep::{
    cokernel, decompose, direct_sum, hom_dim, hom_space, image, is_isomorphic, kernel, rad_hom, Module, ModuleMap,
};
use hwglue::{FieldSpec, Scalar};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const Q: FieldSpec = FieldSpec::Rationals;
const NAMES: [&str; 5] = ["kalck", "a2", "a3", "z2", "pt"];
const FINITE: [&str; 4] = ["kalck", "a2", "a3", "pt"];

fn alg(name: &str) -> Arc<PathAlgebra> {
    builtin(name, Q).unwrap().unwrap()
}

fn projective_term(a: &Arc<PathAlgebra>, rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> ProjTerm {
    let n = rng.gen_range(lo..=hi);
    let vs = (0..n).map(|_| rng.gen_range(0..a.vertex_count())).collect();
    ProjTerm::new(a, vs).unwrap()
}

fn random_map(a: &Arc<PathAlgebra>, rng: &mut ChaCha8Rng, p: &ProjTerm, m: &Arc<Module>) -> ModuleMap {
    let gens: Vec<Vec<Scalar>> = p
        .vertices
        .iter()
        .map(|&v| (0..m.dim_at(v)).map(|_| a.field().from_i64(rng.gen_range(-2..=2))).collect())
        .collect();
    map_from_generators(p, m, &gens)
}

fn random_module(a: &Arc<PathAlgebra>, rng: &mut ChaCha8Rng) -> Arc<Module> {
    let p0 = projective_term(a, rng, 1, 2);
    let p1 = projective_term(a, rng, 0, 2);
    let f = random_map(a, rng, &p1, &p0.module);
    cokernel(&f).unwrap().0
}

fn cx(m: &Arc<Module>) -> ProjComplex {
    complex_of_module(m).unwrap()
}

fn euler_char(x: &ProjComplex, nv: usize) -> Vec<i64> {
    let mut out = vec![0i64; nv];
    for (d, dims) in cohomology_dims(x).unwrap() {
        let sign = if d.rem_euclid(2) == 0 { 1 } else { -1 };
        for (v, n) in dims.iter().enumerate() {
            out[v] += sign * *n as i64;
        }
    }
    out
}

#[test]
fn projectives_sum_to_the_algebra_and_multiplication_is_associative() {
    for name in NAMES {
        let a = alg(name);
        let total: usize = (0..a.vertex_count()).map(|v| projective_module(&a, v).unwrap().total_dim()).sum();
        assert_eq!(total, a.dim(), "{name}");
        assert_eq!(a.basis().len(), a.dim());
        assert!(a.check_associativity(), "{name}");
    }
}

#[test]
fn homs_between_projectives_count_paths() {
    for name in NAMES {
        let a = alg(name);
        for i in 0..a.vertex_count() {
            for j in 0..a.vertex_count() {
                let (pi, pj) = (projective_module(&a, i).unwrap(), projective_module(&a, j).unwrap());
                assert_eq!(hom_dim(&pi, &pj).unwrap(), a.paths_from_to(j, i).len(), "{name} P{i} P{j}");
            }
        }
    }
}

#[test]
fn bricks_have_no_radical_endomorphisms() {
    for name in NAMES {
        let a = alg(name);
        for v in 0..a.vertex_count() {
            let s = simple_module(&a, v).unwrap();
            assert_eq!(rad_hom(&s, &s).unwrap(), hom_dim(&s, &s).unwrap() - 1);
        }
    }
    let b = a3(Q).unwrap();
    for v in 0..3 {
        let p = projective_module(&b, v).unwrap();
        assert_eq!(hom_dim(&p, &p).unwrap(), 1);
        assert_eq!(rad_hom(&p, &p).unwrap(), 0);
    }
}

#[test]
fn euler_characteristic_matches_the_cartan_form() {
    for a in [kalck(Q).unwrap(), a2(Q).unwrap(), a3(Q).unwrap()] {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..12 {
            let m = random_module(&a, &mut rng);
            let n = random_module(&a, &mut rng);
            let res = minimal_resolution(&m, 16).unwrap();
            assert!(!res.truncated);
            let chi: i64 = (0..=res.length())
                .map(|i| {
                    let d = ext(&m, &n, i).unwrap().dimension as i64;
                    if i % 2 == 0 { d } else { -d }
                })
                .sum();
            assert_eq!(euler_form(&a, m.dims(), n.dims()).unwrap(), Scalar::from_integer(chi.into()));
        }
    }
}

#[test]
fn dual_pairs_have_unitriangular_gram_matrices() {
    let k = kalck(Q).unwrap();
    let b = a3(Q).unwrap();
    let seqs = vec![
        vec![cx(&simple_module(&k, 2).unwrap()), cx(&projective_module(&k, 1).unwrap()), cx(&projective_module(&k, 0).unwrap())],
        (0..3).rev().map(|v| cx(&projective_module(&b, v).unwrap())).collect(),
        (0..3).map(|v| cx(&simple_module(&b, v).unwrap())).collect(),
    ];
    for objs in seqs {
        let eps = ExceptionalSequence::new(objs).unwrap();
        let g = eps.gram_matrix();
        let n = g.len();
        for i in 0..n {
            assert_eq!(g[i][i], 1);
            for j in 0..i {
                assert_eq!(g[i][j], 0);
            }
        }
        let pm = left_dual_sequence(&eps).unwrap().pairing_matrix();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(pm[i][j], i64::from(i == j));
            }
        }
    }
}

#[test]
fn serre_functor_dualizes_graded_hom() {
    for a in [a2(Q).unwrap(), a3(Q).unwrap()] {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let x = cx(&random_module(&a, &mut rng));
            let y = cx(&random_module(&a, &mut rng));
            let sx = nakayama(&x).unwrap();
            let left: usize = graded_hom(&x, &y).unwrap().dims.values().sum();
            let right: usize = graded_hom(&y, &sx).unwrap().dims.values().sum();
            assert_eq!(left, right);
        }
    }
}

fn reports() -> Vec<HWReport> {
    let b = a3(Q).unwrap();
    let ps: Vec<Arc<Module>> = (0..3).rev().map(|v| projective_module(&b, v).unwrap()).collect();
    let ss: Vec<Arc<Module>> = (0..3).map(|v| simple_module(&b, v).unwrap()).collect();
    [ps, ss]
        .iter()
        .map(|seq| {
            let pair = left_dual_sequence(&ExceptionalSequence::from_modules(seq).unwrap()).unwrap();
            let mut r = heart_presentation(&pair).unwrap();
            assert!(verify_hw_axioms(&mut r).unwrap().passed);
            r
        })
        .collect()
}

#[test]
fn heart_reports_satisfy_their_invariants() {
    for r in reports() {
        for st in &r.steps {
            assert_eq!(st.dim_p, st.dim_q + st.dim_e * st.ext_dim);
        }
        let p = cx(&direct_sum(r.parts[0].algebra(), &r.parts).unwrap().module);
        for (f, c) in r.pair.left_dual.iter().zip(r.costandards()) {
            let h = graded_hom(&p, f).unwrap();
            assert_eq!(h.nonzero().keys().copied().collect::<Vec<_>>(), vec![0]);
            assert_eq!(h.dim(0), c.total_dim());
        }
        let g = r.algebra().clone();
        let (ds, ns) = (r.standards(), r.costandards());
        let n = ds.len();
        // projectives of Γ carry Δ-filtrations whose factors add up to them
        for v in 0..n {
            let pv = projective_module(&g, v).unwrap();
            let w = delta_filtration(&pv, ds).unwrap().expect("projectives are Δ-filtered");
            let mut sum = vec![0usize; g.vertex_count()];
            for &mu in &w {
                for (s, d) in sum.iter_mut().zip(ds[mu].dims()) {
                    *s += d;
                }
            }
            assert_eq!(sum, pv.dims());
        }
        for i in 0..n {
            for j in 0..n {
                let chi: i64 = (0..4)
                    .map(|l| {
                        let d = ext(&ds[i], &ds[j], l).unwrap().dimension as i64;
                        if l % 2 == 0 { d } else { -d }
                    })
                    .sum();
                if i == j {
                    assert_eq!(chi, 1);
                } else if i > j {
                    assert_eq!(chi, 0);
                }
                for l in 0..4 {
                    let e = ext(&ds[i], &ns[j], l).unwrap().dimension;
                    assert_eq!(e, usize::from(i == j && l == 0), "Ext^{l}(Δ{i}, ∇{j})");
                }
            }
        }
        let t = r.structure.tilting_modules().unwrap();
        for tl in &t.parts {
            for mu in 0..n {
                assert_eq!(ext(&ds[mu], tl, 1).unwrap().dimension, 0);
                assert_eq!(ext(tl, &ns[mu], 1).unwrap().dimension, 0);
            }
        }
    }
}

fn algebra_and_seed() -> impl Strategy<Value = (usize, u64)> {
    (0..NAMES.len(), any::<u64>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kernel_image_cokernel_dimensions((k, seed) in algebra_and_seed()) {
        let a = alg(NAMES[k]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&a, &mut rng);
        let p = projective_term(&a, &mut rng, 1, 3);
        let f = random_map(&a, &mut rng, &p, &m);
        let (ker, _) = kernel(&f).unwrap();
        let (im, _, _) = image(&f).unwrap();
        let (cok, _) = cokernel(&f).unwrap();
        for v in 0..a.vertex_count() {
            prop_assert_eq!(ker.dim_at(v) + im.dim_at(v), p.module.dim_at(v));
            prop_assert_eq!(cok.dim_at(v) + im.dim_at(v), m.dim_at(v));
        }
    }

    #[test]
    fn yoneda_for_projectives((k, seed) in algebra_and_seed()) {
        let a = alg(NAMES[k]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&a, &mut rng);
        for v in 0..a.vertex_count() {
            let pv = projective_module(&a, v).unwrap();
            prop_assert_eq!(hom_space(&pv, &m).unwrap().dim(), m.dim_at(v));
        }
    }

    #[test]
    fn decomposition_resums_to_the_input((k, seed) in algebra_and_seed()) {
        let a = alg(NAMES[k]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&a, &mut rng);
        let parts = decompose(&m).unwrap();
        let mut all = Vec::new();
        for (x, mult) in parts {
            all.extend(std::iter::repeat_n(x, mult));
        }
        let sum = direct_sum(&a, &all).unwrap().module;
        prop_assert!(is_isomorphic(&sum, &m).unwrap());
    }

    #[test]
    fn ext_zero_is_hom_and_resolutions_are_minimal((k, seed) in algebra_and_seed()) {
        let a = alg(NAMES[k]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&a, &mut rng);
        let n = random_module(&a, &mut rng);
        prop_assert_eq!(ext(&m, &n, 0).unwrap().dimension, hom_dim(&m, &n).unwrap());
        let res = minimal_resolution(&m, 8).unwrap();
        prop_assert!(res.is_minimal());
        prop_assert!(res.is_complex());
    }

    #[test]
    fn graded_hom_commutes_with_shifts((k, seed) in (0..FINITE.len(), any::<u64>()), l in -3i64..4) {
        let a = alg(FINITE[k]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = cx(&random_module(&a, &mut rng));
        let y = cx(&random_module(&a, &mut rng));
        let h = graded_hom(&x, &y).unwrap().nonzero();
        let hs = graded_hom(&x, &y.shift(l)).unwrap().nonzero();
        let moved: std::collections::BTreeMap<i64, usize> = h.iter().map(|(&d, &n)| (d - l, n)).collect();
        prop_assert_eq!(hs, moved);
    }

    #[test]
    fn cones_are_additive_on_euler_characteristics((k, seed) in (0..FINITE.len(), any::<u64>())) {
        let a = alg(FINITE[k]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = cx(&random_module(&a, &mut rng));
        let y = cx(&random_module(&a, &mut rng));
        let h = graded_hom(&x, &y).unwrap();
        let nv = a.vertex_count();
        let (ex, ey) = (euler_char(&x, nv), euler_char(&y, nv));
        for f in h.reps.get(&0).into_iter().flatten() {
            let c = cone(f).unwrap().complex;
            let ec = euler_char(&c, nv);
            for v in 0..nv {
                prop_assert_eq!(ec[v], ey[v] - ex[v]);
            }
        }
    }
}

#[test]
fn infinite_resolutions_stay_minimal() {
    let z = z2(Q).unwrap();
    for v in 0..2 {
        let res = minimal_resolution(&simple_module(&z, v).unwrap(), 10).unwrap();
        assert!(res.truncated && res.is_minimal() && res.is_exact());
    }
}
