//! Exact linear algebra over ℚ and prime fields.

mod field;
mod matrix;
mod poly;

pub use field::{parse_scalar, FieldSpec, Scalar};
pub use matrix::{Matrix, Rref};
pub use poly::{minimal_polynomial, rational_roots, Poly};

#[cfg(test)]
mod proptests;
