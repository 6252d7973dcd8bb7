use super::sequence::is_exceptional_pair;
use crate::derived::{cone, graded_hom, minimize, ChainMap, ProjComplex};
use crate::error::{Error, Result};

fn require_pair(e: &ProjComplex, f: &ProjComplex) -> Result<()> {
    let v = is_exceptional_pair(e, f)?;
    if v.holds {
        Ok(())
    } else {
        Err(Error::NotExceptionalPair(v.evidence.join("; ")))
    }
}

/// `L_E F`, the cone of the evaluation `⊕_l Hom(E, F[l]) ⊗ E[−l] → F`.
pub fn left_mutation(e: &ProjComplex, f: &ProjComplex) -> Result<ProjComplex> {
    require_pair(e, f)?;
    left_mutation_unchecked(e, f)
}

pub fn left_mutation_unchecked(e: &ProjComplex, f: &ProjComplex) -> Result<ProjComplex> {
    let h = graded_hom(e, f)?;
    let maps: Vec<ChainMap> = h.reps.values().flatten().map(ChainMap::into_source_shift).collect();
    if maps.is_empty() {
        return Ok(minimize(f));
    }
    let ev = ChainMap::from_source_sum(&maps, f);
    Ok(minimize(&cone(&ev)?.complex))
}

/// `R_F E`, the cone of the coevaluation `E → ⊕_l F[l] ⊗ Hom(E, F[l])^∨`
/// shifted by `[−1]`. Here `(e, f)` is the exceptional pair.
pub fn right_mutation(f: &ProjComplex, e: &ProjComplex) -> Result<ProjComplex> {
    require_pair(e, f)?;
    right_mutation_unchecked(f, e)
}

pub fn right_mutation_unchecked(f: &ProjComplex, e: &ProjComplex) -> Result<ProjComplex> {
    let h = graded_hom(e, f)?;
    let maps: Vec<ChainMap> = h.reps.values().flatten().map(ChainMap::into_target_shift).collect();
    if maps.is_empty() {
        return Ok(minimize(e));
    }
    let coev = ChainMap::into_target_sum(&maps, e);
    Ok(minimize(&cone(&coev)?.complex.shift(-1)))
}
