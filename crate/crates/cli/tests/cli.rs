//! Command surface: exit codes, report text, JSON stability and the algebra
//! file format.

use std::process::Command;

use hwglue::algebra::builtins::{builtin, BUILTIN_NAMES};
use hwglue::algebra::{build_path_algebra, Quiver, Relation, DEFAULT_LENGTH_BOUND};
use hwglue::{Error, FieldSpec};
use hwglue_cli::descriptor::{parse_descriptor, parse_sequence};
use hwglue_cli::format::{emit_algebra, parse_algebra, parse_algebra_with, parse_element};
use hwglue_cli::run;
use proptest::prelude::*;

fn hw(args: &[&str]) -> (String, i32) {
    let o = run(std::iter::once("hwglue").chain(args.iter().copied()));
    (o.output, o.exit_code)
}

fn binary(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_hwglue")).args(args).output().expect("binary runs");
    (String::from_utf8_lossy(&out.stdout).into_owned(), out.status.code().unwrap_or(-1))
}

const KALCK_FILE: &str = "\
# relation words compose right to left
FIELD q
VERTICES 1 2 3
ARROWS
a: 1 -> 2
b: 1 -> 2
c: 2 -> 3
d: 3 -> 1
RELATIONS
a d = 0
c b = 0
d c = 0
";

#[test]
fn bundled_files_parse_to_the_expected_dimensions() {
    assert_eq!(parse_algebra(KALCK_FILE).unwrap().dim(), 9);
    let a3 = "FIELD q\nVERTICES 1 2 3\nARROWS\na: 1 -> 2\nb: 2 -> 3\n";
    assert_eq!(parse_algebra(a3).unwrap().dim(), 6);
}

#[test]
fn malformed_files_report_positions() {
    let bad = "FIELD q\nVERTICES 1 2\nARROWS\na: 1 -> 2\nb: 2 -> 1\nRELATIONS\na - b a = 0\n";
    assert!(matches!(parse_algebra(bad), Err(Error::IllFormedRelation(_))));
    let unknown = "FIELD q\nVERTICES 1 2\nARROWS\na: 1 -> 2\nRELATIONS\na z = 0\n";
    match parse_algebra(unknown) {
        Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (6, 3)),
        other => panic!("{other:?}"),
    }
    match parse_algebra("FIELD fp:4\nVERTICES 1\n") {
        Err(Error::Parse { line, col, msg }) => assert_eq!((line, col, msg.contains("not prime")), (1, 7, true)),
        other => panic!("{other:?}"),
    }
    let cyclic = "FIELD q\nVERTICES 1\nARROWS\nx: 1 -> 1\nBOUND 6\n";
    assert!(matches!(parse_algebra(cyclic), Err(Error::NotFiniteDimensional(_))));
}

#[test]
fn field_override_applies_to_files() {
    let a = parse_algebra_with(KALCK_FILE, Some(FieldSpec::prime(5).unwrap())).unwrap();
    assert_eq!(a.field(), FieldSpec::PrimeField(5));
    assert_eq!(a.dim(), 9);
}

#[test]
fn builtins_round_trip_through_the_file_format() {
    for name in BUILTIN_NAMES {
        let a = builtin(name, FieldSpec::Rationals).unwrap().unwrap();
        let text = emit_algebra(&a);
        let b = parse_algebra(&text).unwrap();
        assert_eq!(a.basis(), b.basis(), "{name}");
        for x in 0..a.dim() {
            for y in 0..a.dim() {
                assert_eq!(a.mul(x, y), b.mul(x, y), "{name}");
            }
        }
        assert_eq!(emit_algebra(&b), text);
    }
}

/// Acyclic quivers with arrows `i → j`, `i < j`, and a random set of zero
/// and commutativity relations.
fn small_algebra() -> impl Strategy<Value = (usize, Vec<(usize, usize)>, Vec<usize>, Vec<i64>)> {
    (2usize..5).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect();
        let m = pairs.len();
        (
            Just(n),
            prop::collection::vec(prop::sample::select(pairs), 1..=m + 1),
            prop::collection::vec(0usize..64, 0..3),
            prop::collection::vec(-2i64..3, 0..3),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn emitted_files_reproduce_basis_and_multiplication((n, arrows, picks, coeffs) in small_algebra()) {
        let vnames: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
        let names: Vec<String> = (0..arrows.len()).map(|i| format!("x{i}")).collect();
        let specs: Vec<(&str, &str, &str)> = arrows
            .iter()
            .zip(&names)
            .map(|(&(s, t), nm)| (nm.as_str(), vnames[s].as_str(), vnames[t].as_str()))
            .collect();
        let q = Quiver::new(&vnames, &specs).unwrap();
        let f = FieldSpec::Rationals;
        // composable pairs b∘a give candidate relations
        let mut comp = Vec::new();
        for (i, x) in q.arrows.iter().enumerate() {
            for (j, y) in q.arrows.iter().enumerate() {
                if x.target == y.source {
                    comp.push((j, i));
                }
            }
        }
        let mut rels = Vec::new();
        for (k, &pick) in picks.iter().enumerate() {
            if comp.is_empty() {
                break;
            }
            let (j, i) = comp[pick % comp.len()];
            let c = coeffs.get(k).copied().unwrap_or(1);
            let mut terms = vec![(f.one(), vec![names[j].clone(), names[i].clone()])];
            if let Some(other) = comp.iter().find(|&&(b, a)| (b, a) != (j, i)
                && q.arrows[a].source == q.arrows[i].source && q.arrows[b].target == q.arrows[j].target) {
                if c != 0 {
                    terms.push((f.from_i64(c), vec![names[other.0].clone(), names[other.1].clone()]));
                }
            }
            rels.push(Relation::new(terms));
        }
        let a = build_path_algebra(q, rels, f, DEFAULT_LENGTH_BOUND).unwrap();
        let b = parse_algebra(&emit_algebra(&a)).unwrap();
        prop_assert_eq!(a.basis(), b.basis());
        for x in 0..a.dim() {
            for y in 0..a.dim() {
                prop_assert_eq!(a.mul(x, y), b.mul(x, y));
            }
        }
    }
}

#[test]
fn elements_and_descriptors_parse() {
    let k = builtin("kalck", FieldSpec::Rationals).unwrap().unwrap();
    let e = parse_element(&k, "2 c a - e1").unwrap();
    assert!(!e.is_zero());
    assert!(parse_element(&k, "q").is_err());
    let m = parse_descriptor(&k, "module:{\"dims\":[1,1,0],\"arrows\":{\"a\":[[1]],\"b\":[[\"1/2\"]]}}").unwrap();
    assert_eq!(m.module().unwrap().dims(), &[1, 1, 0]);
    let bad = parse_descriptor(&k, "module:{\"dims\":[0,1,1],\"arrows\":{\"c\":[[1]]}}");
    assert!(bad.is_ok());
    let zero_rel = parse_descriptor(&k, "module:{\"dims\":[1,1,1],\"arrows\":{\"b\":[[1]],\"c\":[[1]]}}");
    assert!(zero_rel.is_err(), "c∘b = 0 must hold");
    let shifted = parse_descriptor(&k, "s3[1]").unwrap();
    assert!(shifted.module().is_none());
    let c = parse_descriptor(&k, "complex:{\"lo\":-1,\"terms\":[[\"3\"],[\"2\"]],\"diffs\":[[[\"c\"]]]}").unwrap();
    assert!(c.module().is_none());
    let seq = parse_sequence(&k, "simple:3, proj:2,p1").unwrap();
    assert_eq!(seq.iter().map(|d| d.name.as_str()).collect::<Vec<_>>(), ["S3", "P2", "P1"]);
}

#[test]
fn kalck_examples() {
    let (out, code) = hw(&["exc-check", "--algebra", "kalck", "--sequence", "s3,p2,p1"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("is exceptional"));
    let (out, code) = hw(&["mutate", "left", "--algebra", "kalck", "s3", "p2"]);
    assert_eq!(code, 0);
    assert!(out.contains("H^0 ≅ S2, H^1 ≅ S3"), "{out}");
    let (out, code) = hw(&["mutate", "right", "--algebra", "kalck", "p1", "p2"]);
    assert_eq!(code, 0);
    assert!(out.contains("H^1 ≅"), "{out}");
    let (out, code) = hw(&["exc-check", "--algebra", "kalck", "--sequence", "i1,s2,s3"]);
    assert_eq!(code, 1);
    assert!(out.contains("witness: Ext^2(S3, S2) = 1"), "{out}");
    let (out, code) = hw(&["hw-criterion", "--algebra", "kalck", "--sequence", "s3,p2,p1"]);
    assert_eq!(code, 1);
    assert!(out.contains("Hom(F2, F1[-1]) has dimension 1"), "{out}");
    let (out, code) = hw(&["restrict-check", "--algebra", "kalck", "--sequence", "s3,p2,p1"]);
    assert_eq!(code, 1);
    assert!(out.contains("F2 is not a module"), "{out}");
    let (out, code) = hw(&["aisle", "--algebra", "kalck", "--sequence", "s3,p2,p1", "s1"]);
    assert_eq!(code, 0, "{out}");
    let (out, code) = hw(&["resolve", "--algebra", "kalck", "s1"]);
    assert_eq!(code, 0);
    assert!(out.contains("S1 ← P1 ← P2⊕P2 ← P3 ← P1 ← P2"), "{out}");
    let (out, _) = hw(&["hom", "--algebra", "kalck", "s3", "p2"]);
    assert!(out.contains("Hom•(S3, P2) = {0:1, 2:1}"), "{out}");
}

#[test]
fn singular_example() {
    let (out, code) = hw(&["gldim", "--algebra", "z2"]);
    assert_eq!(code, 0);
    assert!(out.contains("InfiniteCertified") && out.contains("period 2"), "{out}");
    let (_, code) = hw(&["resolve", "--algebra", "z2", "--bound", "4", "s1"]);
    assert_eq!(code, 2);
    let (out, code) = hw(&["ext", "--algebra", "z2", "s1", "s1", "--degree", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("Ext^2(S1, S1) = 1"), "{out}");
    let (_, code) = hw(&["exc-check", "--algebra", "z2", "--sequence", "s1"]);
    assert_eq!(code, 2, "an infinite resolution is undecided in the derived model");
}

#[test]
fn directed_examples() {
    let (out, code) = hw(&["hom-duality", "--algebra", "a3", "--sequence", "p3,p2,p1"]);
    assert_eq!(code, 0);
    assert!(out.contains("  {0:1} 0 0\n  0 {0:1} 0\n  0 0 {0:1}\n"), "{out}");
    for cmd in ["heart", "axioms", "char-tilting", "ringel-dual", "bijection", "dualize", "hw-criterion"] {
        let (out, code) = hw(&[cmd, "--algebra", "a3", "--sequence", "s1,s2,s3"]);
        assert_eq!(code, 0, "{cmd}: {out}");
    }
    let (out, code) = hw(&["bijection", "--algebra", "kalck", "--sequence", "s3,p2,p1"]);
    assert_eq!(code, 1);
    assert!(out.contains("not applicable"), "{out}");
}

#[test]
fn empty_graded_hom_prints_zero() {
    let (out, code) = hw(&["hom", "--algebra", "a3", "s1", "s3"]);
    assert_eq!(code, 0);
    assert!(out.contains("Hom•(S1, S3) = 0\n"), "{out}");
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(hw(&["frobnicate"]).1, 64);
    assert_eq!(hw(&["hom", "--algebra", "nosuch.txt", "s1", "s2"]).1, 64);
    assert_eq!(hw(&["hom", "--algebra", "a3", "s9", "s1"]).1, 64);
    assert_eq!(hw(&["hom", "--algebra", "a3", "--field", "fp:6", "s1", "s1"]).1, 64);
    assert_eq!(hw(&["exc-check", "--algebra", "a3"]).1, 64);
    assert_eq!(hw(&["--help"]).1, 0);
}

#[test]
fn json_reports_are_stable_and_complete() {
    let args = ["exc-check", "--json", "--algebra", "kalck", "--sequence", "i1,s2,s3"];
    let (a, code) = binary(&args);
    let (b, _) = binary(&args);
    assert_eq!(code, 1);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["command"], "exc-check");
    assert_eq!(v["exit_code"], 1);
    assert!(v["result"]["witnesses"].as_array().unwrap().iter().any(|w| w == "Ext^2(S3, S2) = 1"));
    let (text, _) = binary(&args[..1].iter().chain(&args[2..]).copied().collect::<Vec<_>>());
    for line in v["lines"].as_array().unwrap() {
        assert!(text.contains(line.as_str().unwrap()));
    }
    let (a, _) = binary(&["heart", "--json", "--algebra", "a3", "--sequence", "s1,s2,s3"]);
    let (b, _) = binary(&["heart", "--json", "--algebra", "a3", "--sequence", "s1,s2,s3"]);
    assert_eq!(a, b);
}

#[test]
fn sequence_files_are_read() {
    let dir = std::env::temp_dir().join(format!("hwglue-seq-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sigma.txt");
    std::fs::write(&path, "# sigma\nsimple:3\nproj:2\nproj:1\n").unwrap();
    let alg = dir.join("kalck.alg");
    std::fs::write(&alg, KALCK_FILE).unwrap();
    let (out, code) = hw(&["exc-check", "--algebra", alg.to_str().unwrap(), "--sequence", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn corpus_passes() {
    let (out, code) = binary(&["corpus"]);
    assert_eq!(code, 0, "{out}");
    assert!(!out.contains("FAIL"));
}
