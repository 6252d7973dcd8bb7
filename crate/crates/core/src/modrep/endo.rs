use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use std::sync::Arc;

use super::hom::{hom_space, HomSpace};
use super::module::Module;
use crate::error::Result;
use crate::exactla::{FieldSpec, Matrix, Scalar};

/// A finite-dimensional associative algebra given by structure constants
/// `b_i b_j = Σ_k c_ij^k b_k`.
#[derive(Clone, Debug)]
pub struct StructureConstantAlgebra {
    field: FieldSpec,
    dim: usize,
    /// `left[i]` is the matrix of `x ↦ b_i x`.
    left: Vec<Matrix>,
    unit: Vec<Scalar>,
    idempotents: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub enum RadicalMethod {
    TraceForm,
    IteratedTraces,
}

impl StructureConstantAlgebra {
    /// `products[i][j]` = coordinates of `b_i b_j`.
    pub fn new(
        field: FieldSpec,
        products: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
        idempotents: Vec<Vec<Scalar>>,
    ) -> StructureConstantAlgebra {
        let dim = products.len();
        let left = products
            .iter()
            .map(|row| Matrix::from_columns(field, dim, row))
            .collect();
        StructureConstantAlgebra { field, dim, left, unit, idempotents }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }
    pub fn idempotents(&self) -> &[Vec<Scalar>] {
        &self.idempotents
    }
    pub fn basis_left(&self, i: usize) -> &Matrix {
        &self.left[i]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        (0..self.dim).map(|k| if k == i { Scalar::one() } else { Scalar::zero() }).collect()
    }

    pub fn left_mult(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.left[i].scale(c));
            }
        }
        m
    }

    pub fn right_mult(&self, y: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|i| self.left[i].mul(&Matrix::column_vector(self.field, y)).column(0)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.left_mult(x).mul(&Matrix::column_vector(self.field, y)).column(0)
    }

    pub fn product_coords(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.left[i].column(j)
    }

    pub fn is_associative(&self) -> bool {
        // L_{b_i b_j} = L_{b_i} L_{b_j}
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| self.left_mult(&self.product_coords(i, j)) == self.left[i].mul(&self.left[j]))
        })
    }

    pub fn check_idempotents(&self) -> bool {
        let f = self.field;
        let mut sum = vec![Scalar::zero(); self.dim];
        for (a, e) in self.idempotents.iter().enumerate() {
            for (b, g) in self.idempotents.iter().enumerate() {
                let p = self.mul(e, g);
                let expect: Vec<Scalar> = if a == b { e.clone() } else { vec![Scalar::zero(); self.dim] };
                if p != expect {
                    return false;
                }
            }
            sum = sum.iter().zip(e).map(|(x, y)| f.add(x, y)).collect();
        }
        self.idempotents.is_empty() || sum == self.unit
    }

    /// Opposite multiplication `x ∗ y = y x`.
    pub fn opposite(&self) -> StructureConstantAlgebra {
        let products =
            (0..self.dim).map(|i| (0..self.dim).map(|j| self.product_coords(j, i)).collect()).collect();
        StructureConstantAlgebra::new(self.field, products, self.unit.clone(), self.idempotents.clone())
    }

    pub fn radical_method(&self) -> RadicalMethod {
        match self.field.characteristic() {
            0 => RadicalMethod::TraceForm,
            p if p as usize > self.dim => RadicalMethod::TraceForm,
            _ => RadicalMethod::IteratedTraces,
        }
    }

    /// Columns spanning the Jacobson radical.
    pub fn radical(&self) -> Matrix {
        match self.radical_method() {
            RadicalMethod::TraceForm => self.radical_trace_form(),
            RadicalMethod::IteratedTraces => self.radical_iterated(),
        }
    }

    fn radical_trace_form(&self) -> Matrix {
        let n = self.dim;
        let mut g = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                g[(i, j)] = self.left[i].mul(&self.left[j]).trace();
            }
        }
        g.kernel_basis()
    }

    /// Iterated integer-lift trace conditions for small characteristic
    /// (experimental).
    fn radical_iterated(&self) -> Matrix {
        let f = self.field;
        let p = f.characteristic();
        let n = self.dim;
        let mut current = self.radical_trace_form();
        let mut i = 1u32;
        while (p as u128).pow(i) <= n as u128 {
            if current.cols() == 0 {
                break;
            }
            let mats: Vec<Matrix> = (0..current.cols()).map(|k| self.left_mult(&current.column(k))).collect();
            let mut cond = Matrix::zeros(f, n, current.cols());
            for (k, bk) in mats.iter().enumerate() {
                for l in 0..n {
                    let z = bk.mul(&self.left[l]);
                    cond[(l, k)] = f.from_i64(lifted_trace_digit(&z, p, i));
                }
            }
            let ker = cond.kernel_basis();
            current = current.mul(&ker);
            i += 1;
        }
        current
    }

    pub fn semisimple_dim(&self) -> usize {
        self.dim - self.radical().cols()
    }
}

/// `(tr(Z^{p^i}) mod p^{i+1}) / p^i` for an integer lift `Z` of an 𝔽p matrix.
fn lifted_trace_digit(z: &Matrix, p: u64, i: u32) -> i64 {
    let modulus = BigInt::from(p).pow(i + 1);
    let n = z.rows();
    let lift: Vec<Vec<BigInt>> =
        (0..n).map(|r| (0..n).map(|c| z[(r, c)].numer().mod_floor(&modulus)).collect()).collect();
    let mul = |a: &Vec<Vec<BigInt>>, b: &Vec<Vec<BigInt>>| -> Vec<Vec<BigInt>> {
        (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let mut s = BigInt::zero();
                        for k in 0..n {
                            s += &a[r][k] * &b[k][c];
                        }
                        s.mod_floor(&modulus)
                    })
                    .collect()
            })
            .collect()
    };
    let mut e = BigInt::from(p).pow(i);
    let mut base = lift;
    let mut acc: Vec<Vec<BigInt>> =
        (0..n).map(|r| (0..n).map(|c| if r == c { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    let two = BigInt::from(2);
    while !e.is_zero() {
        if (&e % &two).is_one() {
            acc = mul(&acc, &base);
        }
        e /= &two;
        if !e.is_zero() {
            base = mul(&base, &base);
        }
    }
    let mut tr = BigInt::zero();
    for r in 0..n {
        tr += &acc[r][r];
    }
    let tr = tr.mod_floor(&modulus);
    let digit = tr / BigInt::from(p).pow(i);
    digit.to_i64().unwrap_or(0)
}

/// `End_A(M)` with multiplication `b_i b_j = f_i ∘ f_j`, together with the
/// Hom basis used for its coordinates.
pub fn endomorphism_algebra(m: &Arc<Module>) -> Result<(StructureConstantAlgebra, HomSpace)> {
    let h = hom_space(m, m)?;
    Ok((algebra_from_hom_basis(&h), h))
}

pub(crate) fn algebra_from_hom_basis(h: &HomSpace) -> StructureConstantAlgebra {
    let f = h.source().field();
    let products: Vec<Vec<Vec<Scalar>>> = h
        .basis()
        .iter()
        .map(|a| h.basis().iter().map(|b| h.coordinates(&a.compose(b))).collect())
        .collect();
    let unit = h.coordinates(&super::module::ModuleMap::identity(h.source().clone()));
    StructureConstantAlgebra::new(f, products, unit, Vec::new())
}
