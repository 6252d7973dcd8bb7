//! Exact computations with exceptional sequences, glued t-structures and
//! highest weight categories over finite-dimensional path algebras.
//!
//! Paths compose like functions: `p∘q` means "first `q`, then `p`", and
//! relation words are spelled in that order. Modules are left modules: an
//! arrow `α: i → j` acts as a linear map `M_i → M_j`.

pub mod error;
pub mod algebra;
pub mod derived;
pub mod exactla;
pub mod exceptional;
pub mod homology;
pub mod hweight;
pub mod modrep;

pub use error::{Error, Result};
pub use exactla::{FieldSpec, Matrix, Scalar};
