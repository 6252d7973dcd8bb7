use num_traits::ToPrimitive;
use serde::Serialize;

use super::sequence::{DualPair, ExceptionalSequence};
use crate::derived::{class_vector, graded_hom, standard_aisle_degrees, ProjComplex};
use crate::error::Result;
use crate::exactla::{FieldSpec, Matrix};

/// Hom-vanishing tests for the t-structure glued along a dual pair:
/// `x ∈ D^{≤0}` iff `Hom(x, F_s[l]) = 0` for `l < 0`, and `x ∈ D^{≥0}` iff
/// `Hom(E_s, x[l]) = 0` for `l < 0`. Conclusive for `x` in the subcategory
/// generated by the sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AisleMembership {
    pub in_leq0: bool,
    pub in_geq0: bool,
    pub in_heart: bool,
    pub evidence: Vec<String>,
}

pub fn glued_aisle_membership(x: &ProjComplex, pair: &DualPair) -> Result<AisleMembership> {
    let mut evidence = Vec::new();
    let mut in_leq0 = true;
    for (s, f) in pair.left_dual.iter().enumerate() {
        let h = graded_hom(x, f)?;
        for (l, d) in h.nonzero() {
            if l < 0 {
                in_leq0 = false;
                evidence.push(format!("Hom(X, F{}[{l}]) has dimension {d}", s + 1));
            }
        }
    }
    let mut in_geq0 = true;
    for (s, e) in pair.sequence.objects.iter().enumerate() {
        let h = graded_hom(e, x)?;
        for (l, d) in h.nonzero() {
            if l < 0 {
                in_geq0 = false;
                evidence.push(format!("Hom(E{}, X[{l}]) has dimension {d}", s + 1));
            }
        }
    }
    Ok(AisleMembership { in_leq0, in_geq0, in_heart: in_leq0 && in_geq0, evidence })
}

/// `weak`: every `E_i` has cohomology in degrees `≤ 0` and every `F_i` in
/// degrees `≥ 0`. `strong`: all `E_i` and `F_i` are modules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictionReport {
    pub weak: bool,
    pub strong: bool,
    pub e_degrees: Vec<Option<(i64, i64)>>,
    pub f_degrees: Vec<Option<(i64, i64)>>,
    pub evidence: Vec<String>,
}

pub fn restriction_hypotheses(pair: &DualPair) -> Result<RestrictionReport> {
    let e_degrees: Vec<Option<(i64, i64)>> =
        pair.sequence.objects.iter().map(standard_aisle_degrees).collect::<Result<_>>()?;
    let f_degrees: Vec<Option<(i64, i64)>> = pair.left_dual.iter().map(standard_aisle_degrees).collect::<Result<_>>()?;
    let mut evidence = Vec::new();
    let mut weak = true;
    let mut strong = true;
    for (i, d) in e_degrees.iter().enumerate() {
        match d {
            Some((lo, hi)) => {
                if *hi > 0 {
                    weak = false;
                    evidence.push(format!("E{} has cohomology in degree {hi} > 0", i + 1));
                }
                if (*lo, *hi) != (0, 0) {
                    strong = false;
                    evidence.push(format!("E{} is not a module: cohomology in degrees {lo}..{hi}", i + 1));
                }
            }
            None => {
                strong = false;
                evidence.push(format!("E{} is acyclic", i + 1));
            }
        }
    }
    for (i, d) in f_degrees.iter().enumerate() {
        match d {
            Some((lo, hi)) => {
                if *lo < 0 {
                    weak = false;
                    evidence.push(format!("F{} has cohomology in degree {lo} < 0", i + 1));
                }
                if (*lo, *hi) != (0, 0) {
                    strong = false;
                    evidence.push(format!("F{} is not a module: cohomology in degrees {lo}..{hi}", i + 1));
                }
            }
            None => {
                strong = false;
                evidence.push(format!("F{} is acyclic", i + 1));
            }
        }
    }
    Ok(RestrictionReport { weak, strong: strong && weak, e_degrees, f_degrees, evidence })
}

/// Necessary conditions for fullness: one object per simple and a
/// unimodular class matrix. Passing never certifies fullness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FullnessReport {
    pub length: usize,
    pub simples: usize,
    pub class_matrix: Vec<Vec<i64>>,
    pub determinant: Option<i64>,
    pub passed: bool,
    pub label: String,
}

pub fn fullness_necessary_conditions(eps: &ExceptionalSequence) -> FullnessReport {
    let alg = eps.objects[0].algebra();
    let simples = alg.vertex_count();
    let class_matrix: Vec<Vec<i64>> = eps.objects.iter().map(class_vector).collect();
    let determinant = if class_matrix.len() == simples {
        let rows: Vec<&[i64]> = class_matrix.iter().map(Vec::as_slice).collect();
        Matrix::from_i64(FieldSpec::Rationals, &rows).determinant().and_then(|d| d.to_integer().to_i64())
    } else {
        None
    };
    let passed = eps.len() == simples && matches!(determinant, Some(1) | Some(-1));
    let label = if passed { "necessary conditions passed" } else { "necessary conditions failed" }.to_string();
    FullnessReport { length: eps.len(), simples, class_matrix, determinant, passed, label }
}
