//! Bounded complexes of projectives as a model of the derived category.

mod complex;
mod hom;
mod ops;
mod pathmatrix;


pub use complex::{cone, direct_sum_complexes, shift, ChainMap, Cone, ProjComplex};
pub use hom::{graded_hom, GradedHom, HomDegree};
pub use ops::{
    class_vector, cohomology_dims, cohomology_modules, euler_pairing, complex_of_module, complex_of_module_bounded, complexes_isomorphic,
    find_homotopy_equivalence, is_acyclic, minimize, nakayama, resolve_complex, standard_aisle_degrees,
    truncated_resolution_complex, ModuleComplex, ProjectiveModel,
};
pub use pathmatrix::PathMatrix;
