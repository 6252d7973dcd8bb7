//! Fixtures shared by the benchmarks.

use std::sync::Arc;

use hwglue::algebra::builtins::{a3, kalck, linear};
use hwglue::algebra::{projective_module, simple_module, PathAlgebra};
use hwglue::derived::{complex_of_module, ProjComplex};
use hwglue::exceptional::{left_dual_sequence, DualPair, ExceptionalSequence};
use hwglue::modrep::Module;
use hwglue::FieldSpec;

pub const Q: FieldSpec = FieldSpec::Rationals;

pub fn kalck_sigma() -> (Arc<PathAlgebra>, Vec<ProjComplex>) {
    let k = kalck(Q).expect("builtin");
    let ms = [simple_module(&k, 2), projective_module(&k, 1), projective_module(&k, 0)];
    let xs = ms.into_iter().map(|m| complex_of_module(&m.expect("module")).expect("finite")).collect();
    (k, xs)
}

pub fn pair(xs: Vec<ProjComplex>) -> DualPair {
    left_dual_sequence(&ExceptionalSequence::new(xs).expect("exceptional")).expect("dual")
}

/// Simples of the linear quiver on `n` vertices, an exceptional sequence.
pub fn linear_simples(n: usize) -> Vec<Arc<Module>> {
    let a = linear(n, Q).expect("builtin");
    (0..n).map(|v| simple_module(&a, v).expect("simple")).collect()
}

pub fn a3_simples() -> Vec<Arc<Module>> {
    let a = a3(Q).expect("builtin");
    (0..3).map(|v| simple_module(&a, v).expect("simple")).collect()
}
