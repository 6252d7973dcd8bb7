use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{FieldSpec, Scalar};
use super::matrix::Matrix;

/// Univariate polynomial, coefficients from the constant term upwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub field: FieldSpec,
    pub coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let f = self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let f = self.field;
        let n = m.rows();
        let mut acc = Matrix::zeros(f, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m).add(&Matrix::identity(f, n).scale(c));
        }
        acc
    }
}

/// Minimal polynomial of a square matrix via linear dependence of its powers.
pub fn minimal_polynomial(m: &Matrix) -> Poly {
    assert!(m.is_square());
    let f = m.field();
    let n = m.rows();
    let mut power = Matrix::identity(f, n);
    let mut columns: Vec<Vec<Scalar>> = Vec::new();
    loop {
        let v = power.to_vector();
        if !columns.is_empty() {
            let a = Matrix::from_columns(f, n * n, &columns);
            let b = Matrix::column_vector(f, &v);
            if let Some(x) = a.solve(&b).expect("shapes agree") {
                let mut coeffs: Vec<Scalar> = (0..columns.len()).map(|i| f.neg(&x[(i, 0)])).collect();
                coeffs.push(Scalar::one());
                return Poly { field: f, coeffs };
            }
        } else if n == 0 {
            return Poly { field: f, coeffs: vec![Scalar::one()] };
        }
        columns.push(v);
        power = power.mul(m);
    }
}

const TRIAL_LIMIT: u64 = 1 << 20;

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if d > TRIAL_LIMIT {
            return None;
        }
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d != n / d {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// Distinct roots of `p` lying in the base field, in increasing order of
/// their canonical representative. Over ℚ uses the rational root theorem;
/// over 𝔽p searches the field when it is small. Roots whose candidate set
/// is too large to enumerate are not reported.
pub fn rational_roots(p: &Poly) -> Vec<Scalar> {
    let f = p.field;
    let Some(deg) = p.degree() else { return Vec::new() };
    if deg == 0 {
        return Vec::new();
    }
    match f {
        FieldSpec::PrimeField(q) => {
            if q > TRIAL_LIMIT {
                return Vec::new();
            }
            (0..q as i64)
                .map(|x| f.from_i64(x))
                .filter(|x| p.eval(x).is_zero())
                .collect()
        }
        FieldSpec::Rationals => {
            let lcm = p.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            let ints: Vec<BigInt> =
                p.coeffs[..=deg].iter().map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer()).collect();
            let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
            let mut roots = Vec::new();
            if low > 0 {
                roots.push(Scalar::zero());
            }
            if low == deg {
                return roots;
            }
            let (Some(num), Some(den)) = (divisors(&ints[low]), divisors(&ints[deg])) else {
                return roots;
            };
            let mut cands = Vec::new();
            for a in &num {
                for b in &den {
                    let r = Scalar::new(a.clone(), b.clone());
                    cands.push(r.clone());
                    cands.push(-r);
                }
            }
            cands.sort();
            cands.dedup();
            roots.extend(cands.into_iter().filter(|x| p.eval(x).is_zero()));
            roots.sort();
            roots
        }
    }
}
