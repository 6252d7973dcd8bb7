//! Two independent routes to `Ext`: graded Hom between projective models
//! and cochains on a minimal resolution, compared on seeded random modules.

use std::sync::Arc;

use hwglue::algebra::builtins::builtin;
use hwglue::algebra::PathAlgebra;
use hwglue::derived::{complex_of_module, graded_hom, truncated_resolution_complex, ProjComplex};
use hwglue::homology::{ext, global_dimension_probe, map_from_generators, GlobalDimension, ProjTerm};
use hwglue::modrep::{cokernel, Module};
use hwglue::{FieldSpec, Result, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const ORACLE_SEED: u64 = 0x5eed_0007;
pub const ORACLE_PAIRS: usize = 200;
pub const ORACLE_MAX_DEGREE: usize = 6;
pub const ORACLE_ALGEBRAS: [&str; 5] = ["kalck", "a2", "a3", "z2", "pt"];

/// Length of the projective model of the source when the algebra has
/// infinite global dimension; Hom out of it computes Ext below this degree.
const SOURCE_TRUNCATION: usize = 8;
const TARGET_TRUNCATION: usize = 16;

/// The cokernel of a random map between sums of indecomposable projectives.
pub fn random_module(alg: &Arc<PathAlgebra>, rng: &mut impl Rng) -> Result<Arc<Module>> {
    let nv = alg.vertex_count();
    let f = alg.field();
    loop {
        let n0 = rng.gen_range(1..=2);
        let n1 = rng.gen_range(0..=2);
        let p0 = ProjTerm::new(alg, (0..n0).map(|_| rng.gen_range(0..nv)).collect())?;
        let p1 = ProjTerm::new(alg, (0..n1).map(|_| rng.gen_range(0..nv)).collect())?;
        let gens: Vec<Vec<Scalar>> = p1
            .vertices
            .iter()
            .map(|&v| (0..p0.module.dim_at(v)).map(|_| f.from_i64(rng.gen_range(-2..=2))).collect())
            .collect();
        let map = map_from_generators(&p1, &p0.module, &gens);
        let (m, _) = cokernel(&map)?;
        if !m.is_zero() {
            return Ok(m);
        }
    }
}

#[derive(Clone, Debug)]
pub struct OracleCase {
    pub algebra: &'static str,
    pub source_dims: Vec<usize>,
    pub target_dims: Vec<usize>,
    pub hom_dims: Vec<usize>,
    pub ext_dims: Vec<usize>,
}

impl OracleCase {
    pub fn agrees(&self) -> bool {
        self.hom_dims == self.ext_dims
    }
}

fn model(m: &Arc<Module>, finite: bool, len: usize) -> Result<ProjComplex> {
    if finite {
        complex_of_module(m)
    } else {
        truncated_resolution_complex(m, len)
    }
}

pub fn compare(name: &'static str, finite: bool, x: &Arc<Module>, y: &Arc<Module>) -> Result<OracleCase> {
    let cx = model(x, finite, SOURCE_TRUNCATION)?;
    let cy = model(y, finite, TARGET_TRUNCATION)?;
    let h = graded_hom(&cx, &cy)?;
    let hom_dims = (0..=ORACLE_MAX_DEGREE).map(|i| h.dim(i as i64)).collect();
    let ext_dims = (0..=ORACLE_MAX_DEGREE).map(|i| ext(x, y, i).map(|e| e.dimension)).collect::<Result<_>>()?;
    Ok(OracleCase { algebra: name, source_dims: x.dims().to_vec(), target_dims: y.dims().to_vec(), hom_dims, ext_dims })
}

/// `pairs` seeded random module pairs spread over the builtin algebras.
pub fn run_oracle(seed: u64, pairs: usize) -> Result<Vec<OracleCase>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut algs = Vec::new();
    for name in ORACLE_ALGEBRAS {
        let alg = builtin(name, FieldSpec::Rationals).expect("builtin exists")?;
        let finite = matches!(global_dimension_probe(&alg, 16)?, GlobalDimension::Finite(_));
        algs.push((name, alg, finite));
    }
    let mut out = Vec::with_capacity(pairs);
    for k in 0..pairs {
        let (name, alg, finite) = &algs[k % algs.len()];
        let x = random_module(alg, &mut rng)?;
        let y = random_module(alg, &mut rng)?;
        out.push(compare(name, *finite, &x, &y)?);
    }
    Ok(out)
}
