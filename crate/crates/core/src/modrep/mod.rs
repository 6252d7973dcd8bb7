//! The category of finite-dimensional modules: maps, Hom spaces, kernels and
//! cokernels, radical layers and Krull–Schmidt decomposition.

mod abelian;
mod decompose;
mod endo;
mod hom;
mod module;

pub use abelian::{
    cokernel, direct_sum, full_subspace, generated_submodule, image, image_subspace, intersect_subspaces,
    kernel, quotient, radical, radical_layers, radical_subspace, socle, socle_subspace, submodule,
    subspace_dims, sum_subspaces, top, top_dims, zero_subspace, DirectSum, Subspace,
};
pub use decompose::{decompose, find_isomorphism, is_indecomposable, is_isomorphic, rad_hom, split_once, SplitOutcome};
#[allow(unused_imports)]
pub(crate) use decompose::sweep_coefficients;
pub use endo::{endomorphism_algebra, RadicalMethod, StructureConstantAlgebra};
#[allow(unused_imports)]
pub(crate) use endo::algebra_from_hom_basis;
pub use hom::{hom_dim, hom_space, HomSpace};
pub use module::{Module, ModuleMap};

#[cfg(test)]
mod tests;
