//! Highest weight categories from exceptional sequences: universal
//! extensions, heart presentations, characteristic tilting modules and
//! Ringel duality.

mod extension;
mod heart;
mod presentation;
mod structure;

pub use presentation::{
    algebras_isomorphic, basic_presentation, dual_module, BasicPresentation, DegreeZero, DerivedCategory,
    LinearCategory, ModuleCategory, MorSpace, ObjectAlgebra,
};
pub use extension::{
    is_standarizable, iterated_universal_extension, killing_extension, tilting_checks, universal_extension, Extension,
    IteratedExtension, RecursionStep, TiltingCheck,
};
pub use structure::{
    delta_filtration, equivalent_structures, same_iso_classes, verify_structure_axioms, AxiomReport, HwStructure,
    TiltingModules,
};
pub use heart::{
    as_module, bijection_check, characteristic_tilting, heart_presentation, hw_criterion, ringel_dual, ringel_dual_of,
    tilting_package,
    verify_hw_axioms, BijectionReport, Certification, HWReport, RingelDual, TiltingPackage,
};
