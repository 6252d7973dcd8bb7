//! Quivers with relations, their path bases and the standard modules.

pub mod builtins;
mod groebner;
mod path_algebra;
mod quiver;
mod standard;

pub use groebner::{RewriteSystem, Rule};
pub use path_algebra::{build_path_algebra, opposite_algebra, AlgElem, PathAlgebra, DEFAULT_LENGTH_BOUND};
pub use quiver::{Arrow, Path, Quiver, Relation};
pub use standard::{injective_module, projective_module, regular_module, simple_module};

#[cfg(test)]
mod tests;
