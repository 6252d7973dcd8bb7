use std::sync::Arc;

use serde::Serialize;

use crate::algebra::PathAlgebra;
use crate::derived::{cohomology_dims, cohomology_modules, complex_of_module, graded_hom, ProjComplex};
use crate::error::{Error, Result};
use crate::exceptional::{hom_table, left_dual_sequence, verify_hom_duality, DualPair, ExceptionalSequence, HomTable, Verdict};
use crate::homology::DEFAULT_PROBE_BOUND;
use crate::modrep::{top_dims, Module, StructureConstantAlgebra};

use super::extension::{iterated_universal_extension, tilting_checks, RecursionStep, TiltingCheck};
use super::presentation::{
    algebras_isomorphic, basic_presentation, BasicPresentation, DerivedCategory, ModuleCategory, ObjectAlgebra,
};
use super::structure::{same_iso_classes, verify_structure_axioms, AxiomReport, HwStructure, TiltingModules};

fn negative_violations(table: &HomTable, name: &str, out: &mut Vec<String>) {
    for (&(i, j), d) in table {
        for (&l, &n) in d.range(..0) {
            out.push(format!("Hom({name}{}, {name}{}[{l}]) has dimension {n}", i + 1, j + 1));
        }
    }
}

/// `Hom(⊕E_i, ⊕E_i[l]) = 0` and `Hom(⊕F_i, ⊕F_i[l]) = 0` for all `l < 0`.
pub fn hw_criterion(pair: &DualPair) -> Result<Verdict> {
    let mut evidence = Vec::new();
    negative_violations(&pair.sequence.homs, "E", &mut evidence);
    let f_table = hom_table(&pair.left_dual, &pair.left_dual)?;
    negative_violations(&f_table, "F", &mut evidence);
    Ok(Verdict { holds: evidence.is_empty(), evidence })
}

/// The module `H^0(x)` when `x` has cohomology only in degree 0.
pub fn as_module(x: &ProjComplex) -> Result<Option<Arc<Module>>> {
    let dims = cohomology_dims(x)?;
    if dims.keys().any(|&d| d != 0) {
        return Ok(None);
    }
    let mut h = cohomology_modules(x)?;
    Ok(Some(h.remove(&0).unwrap_or_else(|| Arc::new(Module::zero(x.algebra())))))
}

fn modules_of(xs: &[ProjComplex], name: &str) -> Result<std::result::Result<Vec<Arc<Module>>, String>> {
    let mut out = Vec::with_capacity(xs.len());
    for (i, x) in xs.iter().enumerate() {
        match as_module(x)? {
            Some(m) => out.push(m),
            None => {
                let degrees: Vec<i64> = cohomology_dims(x)?.keys().copied().collect();
                return Ok(Err(format!("{name}{} has cohomology in degrees {degrees:?}", i + 1)));
            }
        }
    }
    Ok(Ok(out))
}

/// Names for the weights: the vertex of a simple top when every object has
/// one and they are distinct, positions otherwise.
fn weight_labels(alg: &PathAlgebra, ms: &[Arc<Module>]) -> Vec<String> {
    let tops: Vec<Option<usize>> = ms
        .iter()
        .map(|m| {
            let t = top_dims(m);
            (t.iter().sum::<usize>() == 1).then(|| t.iter().position(|&x| x == 1).unwrap())
        })
        .collect();
    let mut seen: Vec<usize> = tops.iter().flatten().copied().collect();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() == ms.len() && tops.iter().all(Option::is_some) {
        tops.iter().map(|t| alg.vertex_name(t.unwrap()).to_string()).collect()
    } else {
        (1..=ms.len()).map(|i| i.to_string()).collect()
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Certification {
    pub criterion: bool,
    pub tilting: bool,
    pub axioms: bool,
}

/// The highest weight package of a dual pair of module sequences.
#[derive(Clone, Debug)]
pub struct HWReport {
    pub pair: DualPair,
    /// `E_i` as modules.
    pub sequence: Vec<Arc<Module>>,
    /// Tilting generator parts `P_i`.
    pub parts: Vec<Arc<Module>>,
    pub steps: Vec<RecursionStep>,
    pub tilting: TiltingCheck,
    /// `B = End(⊕P_i)`.
    pub endomorphism: StructureConstantAlgebra,
    /// A path algebra `Γ` with `mod-Γ` equivalent to the heart.
    pub presentation: BasicPresentation,
    /// `Δ_i = Hom(P, E_i)` and `∇_i = Hom(P, F_i)` over `Γ`, in sequence order.
    pub structure: HwStructure,
    pub labels: Vec<String>,
    pub criterion: Verdict,
    pub axioms: Option<AxiomReport>,
    pub flags: Certification,
    pub order_note: String,
}

impl HWReport {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra> {
        &self.presentation.algebra
    }

    pub fn standards(&self) -> &[Arc<Module>] {
        &self.structure.standards
    }

    pub fn costandards(&self) -> &[Arc<Module>] {
        &self.structure.costandards
    }

    /// `dim Hom(P_i, E_j)` and `dim Hom(P_i, F_j)` as one table per side.
    pub fn dimension_table(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let side = |ms: &[Arc<Module>]| ms.iter().map(|m| m.dims().to_vec()).collect();
        (side(self.standards()), side(self.costandards()))
    }
}

/// Builds `P` by iterated universal extension of the `E_i`, presents
/// `End(P)`, and reads off `Δ_i = Hom(P, E_i)` and `∇_i = Hom(P, F_i)`.
pub fn heart_presentation(pair: &DualPair) -> Result<HWReport> {
    let criterion = hw_criterion(pair)?;
    if !criterion.holds {
        return Err(Error::CriterionNotCertified(criterion.evidence.join("; ")));
    }
    let es = modules_of(&pair.sequence.objects, "E")?.map_err(Error::NonModuleStandard)?;
    let alg = es[0].algebra().clone();
    let f = alg.field();
    let it = iterated_universal_extension(&es)?;
    let tilting = tilting_checks(&it.parts, Some(&es), DEFAULT_PROBE_BOUND)?;
    let cat = DerivedCategory(f);
    let objects: Vec<ProjComplex> = it.parts.iter().map(complex_of_module).collect::<Result<_>>()?;
    let oa = ObjectAlgebra::new(&cat, objects.clone())?;
    let labels = weight_labels(&alg, &es);
    let presentation = basic_presentation(&oa, &labels)?;
    let mut standards = Vec::with_capacity(es.len());
    for e in &pair.sequence.objects {
        standards.push(oa.hom_functor(&cat, &presentation, e)?);
    }
    let mut costandards = Vec::with_capacity(es.len());
    for (i, fi) in pair.left_dual.iter().enumerate() {
        for (j, p) in objects.iter().enumerate() {
            let h = graded_hom(p, fi)?;
            if let Some(l) = h.nonzero().keys().find(|&&l| l != 0) {
                return Err(Error::InvalidComplex(format!("Hom(P{}, F{}[{l}]) is nonzero", j + 1, i + 1)));
            }
        }
        costandards.push(oa.hom_functor(&cat, &presentation, fi)?);
    }
    let n = es.len();
    let structure = HwStructure::new(&presentation.algebra, (0..n).collect(), standards, costandards)?;
    let flags = Certification { criterion: true, tilting: tilting.passed, axioms: false };
    Ok(HWReport {
        pair: pair.clone(),
        sequence: es,
        parts: it.parts,
        steps: it.steps,
        tilting,
        endomorphism: oa.algebra,
        presentation,
        structure,
        labels,
        criterion,
        axioms: None,
        flags,
        order_note: "total order (a refinement of Λ)".into(),
    })
}

/// Runs the axiom checks inside `mod-Γ` and records the outcome.
pub fn verify_hw_axioms(report: &mut HWReport) -> Result<AxiomReport> {
    if report.structure.len() != report.len() {
        return Err(Error::ReportIncomplete("weights and parts disagree".into()));
    }
    let r = verify_structure_axioms(&report.structure)?;
    report.flags.axioms = r.passed;
    report.axioms = Some(r.clone());
    Ok(r)
}

/// The characteristic tilting module and its endomorphism algebra.
#[derive(Clone, Debug)]
pub struct TiltingPackage {
    pub modules: TiltingModules,
    pub sum: Arc<Module>,
    /// `End(T)` with basis adapted to the parts `T(λ)`.
    pub ringel: StructureConstantAlgebra,
    pub ringel_presentation: BasicPresentation,
}

fn labels_of(alg: &PathAlgebra) -> Vec<String> {
    (0..alg.vertex_count()).map(|v| alg.vertex_name(v).to_string()).collect()
}

/// Tilting modules of `s` with the presentation of their endomorphism algebra.
pub fn tilting_package(s: &HwStructure) -> Result<TiltingPackage> {
    let modules = s.tilting_modules()?;
    let sum = crate::modrep::direct_sum(&s.algebra, &modules.parts)?.module;
    let cat = ModuleCategory(s.algebra.field());
    let oa = ObjectAlgebra::new(&cat, modules.parts.clone())?;
    let ringel_presentation = basic_presentation(&oa, &labels_of(&s.algebra))?;
    Ok(TiltingPackage { modules, sum, ringel: oa.algebra, ringel_presentation })
}

fn require_certified(report: &HWReport) -> Result<()> {
    if !report.flags.criterion || !report.flags.tilting {
        return Err(Error::ReportIncomplete("criterion or tilting checks not certified".into()));
    }
    if report.axioms.is_some() && !report.flags.axioms {
        return Err(Error::ReportIncomplete("highest weight axioms failed".into()));
    }
    Ok(())
}

pub fn characteristic_tilting(report: &HWReport) -> Result<TiltingPackage> {
    require_certified(report)?;
    tilting_package(&report.structure)
}

/// `End(T)` with the predicted standards `Hom(T, ∇(λ))` in the reversed
/// order.
#[derive(Clone, Debug)]
pub struct RingelDual {
    pub algebra: StructureConstantAlgebra,
    pub presentation: BasicPresentation,
    pub structure: HwStructure,
    /// The predicted standards agree with those the reversed order defines.
    pub standards_match: bool,
    /// Comparison with the heart glued along `(F_n, …, F_1)`, when that
    /// sequence consists of modules.
    pub cross_check: Option<bool>,
    pub evidence: Vec<String>,
}

/// The Ringel dual of a highest weight structure.
pub fn ringel_dual_of(s: &HwStructure, tilting: &TiltingPackage) -> Result<RingelDual> {
    let cat = ModuleCategory(s.algebra.field());
    let oa = ObjectAlgebra::new(&cat, tilting.modules.parts.clone())?;
    let presentation = tilting.ringel_presentation.clone();
    let g = &presentation.algebra;
    let standards: Vec<Arc<Module>> =
        s.costandards.iter().map(|c| oa.hom_functor(&cat, &presentation, c)).collect::<Result<_>>()?;
    let rank = s.reversed_rank();
    let intrinsic = HwStructure::intrinsic(g, rank.clone())?;
    let mut evidence = Vec::new();
    let mut standards_match = true;
    for (v, (a, b)) in standards.iter().zip(&intrinsic.standards).enumerate() {
        if !(a.dims() == b.dims() && crate::modrep::is_isomorphic(a, b)?) {
            standards_match = false;
            evidence.push(format!("Hom(T, ∇({})) differs from the standard module at {}", v + 1, g.vertex_name(v)));
        }
    }
    let structure = HwStructure::new(g, rank, standards, intrinsic.costandards)?;
    Ok(RingelDual {
        algebra: oa.algebra,
        presentation,
        structure,
        standards_match,
        cross_check: None,
        evidence,
    })
}

pub fn ringel_dual(report: &HWReport, tilting: &TiltingPackage) -> Result<RingelDual> {
    require_certified(report)?;
    let mut r = ringel_dual_of(&report.structure, tilting)?;
    let dual = report.pair.dual_sequence();
    if modules_of(&dual, "F")?.is_ok() {
        let other = ExceptionalSequence::new(dual).and_then(|s| left_dual_sequence(&s)).and_then(|p| heart_presentation(&p));
        match other {
            Ok(h) => match algebras_isomorphic(&h.presentation.algebra, &r.presentation.algebra) {
                Ok(b) => {
                    if !b {
                        r.evidence.push("heart along the dual sequence is not isomorphic to End(T)".into());
                    }
                    r.cross_check = Some(b);
                }
                Err(Error::Undecided(m)) => r.evidence.push(format!("cross-check undecided: {m}")),
                Err(e) => return Err(e),
            },
            Err(e) => r.evidence.push(format!("dual heart unavailable: {e}")),
        }
    }
    Ok(r)
}

/// Round trip between module dual pairs and highest weight structures.
#[derive(Clone, Debug, Serialize)]
pub struct BijectionReport {
    pub applicable: bool,
    pub obstruction: Option<String>,
    /// The heart standards are the standards the order defines.
    pub forward: bool,
    /// `(Δ, ∇)` over `Γ` is again a dual pair with `∇` its left dual.
    pub backward: bool,
    pub holds: bool,
    pub evidence: Vec<String>,
}

impl BijectionReport {
    fn obstructed(msg: String) -> BijectionReport {
        BijectionReport { applicable: false, obstruction: Some(msg), forward: false, backward: false, holds: false, evidence: Vec::new() }
    }
}

pub fn bijection_check(alg: &Arc<PathAlgebra>, pair: &DualPair) -> Result<BijectionReport> {
    if pair.sequence.objects.iter().chain(&pair.left_dual).any(|x| x.algebra().id() != alg.id()) {
        return Err(Error::AlgebraMismatch);
    }
    if let Err(m) = modules_of(&pair.sequence.objects, "E")? {
        return Ok(BijectionReport::obstructed(m));
    }
    if let Err(m) = modules_of(&pair.left_dual, "F")? {
        return Ok(BijectionReport::obstructed(format!("left dual leaves the module category: {m}")));
    }
    let report = match heart_presentation(pair) {
        Ok(r) => r,
        Err(e @ (Error::CriterionNotCertified(_) | Error::NotStandarizable(_))) => {
            return Ok(BijectionReport::obstructed(e.to_string()));
        }
        Err(e) => return Err(e),
    };
    let s = &report.structure;
    let intrinsic = HwStructure::intrinsic(&s.algebra, s.rank.clone())?;
    let mut evidence = Vec::new();
    let forward = same_iso_classes(&s.standards, &intrinsic.standards)?
        && same_iso_classes(&s.costandards, &intrinsic.costandards)?;
    if !forward {
        evidence.push("heart standards differ from those defined by the order".into());
    }
    let deltas: Vec<ProjComplex> = s.standards.iter().map(complex_of_module).collect::<Result<_>>()?;
    let back = left_dual_sequence(&ExceptionalSequence::new(deltas)?)?;
    let duality = verify_hom_duality(&back);
    evidence.extend(duality.evidence.iter().cloned());
    let mut backward = duality.holds;
    match modules_of(&back.left_dual, "∇")? {
        Ok(ms) => {
            if !same_iso_classes(&ms, &s.costandards)? {
                backward = false;
                evidence.push("left dual of the standards is not the costandards".into());
            }
        }
        Err(m) => {
            backward = false;
            evidence.push(m);
        }
    }
    Ok(BijectionReport { applicable: true, obstruction: None, forward, backward, holds: forward && backward, evidence })
}
