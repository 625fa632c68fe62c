//! Seifert matrices and the classical invariants read off from them.
//!
//! Convention: `S[i][j] = lk(a_i, a_j^+)` with the positive push-off. The
//! opposite convention transposes `S`, which fixes the Alexander polynomial
//! but may flip the sign of every signature.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::laurent::LaurentPolynomial;
use crate::linalg::{det_bareiss, rational_signature, transpose};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SeifertError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix dimension {0} is odd")]
    OddDimension(usize),
    #[error("det(S - S^T) = {0}, expected 1")]
    NonUnimodularSkewPart(BigInt),
}

/// A `2g x 2g` integer matrix whose skew part `S - S^T` has determinant 1.
/// The empty matrix models the unknot.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertMatrix {
    entries: Vec<Vec<BigInt>>,
}

impl SeifertMatrix {
    pub fn validate(raw: Vec<Vec<BigInt>>) -> Result<Self, SeifertError> {
        let n = raw.len();
        if raw.iter().any(|row| row.len() != n) {
            return Err(SeifertError::NotSquare);
        }
        if n % 2 == 1 {
            return Err(SeifertError::OddDimension(n));
        }
        let skew: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| &raw[i][j] - &raw[j][i]).collect())
            .collect();
        let det = det_bareiss(&skew);
        if !det.is_one() {
            return Err(SeifertError::NonUnimodularSkewPart(det));
        }
        Ok(Self { entries: raw })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self, SeifertError> {
        Self::validate(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect())
    }

    pub fn unknot() -> Self {
        Self { entries: Vec::new() }
    }

    pub fn genus(&self) -> usize {
        self.entries.len() / 2
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    /// Alexander polynomial `det(S - t S^T)`, normalized to be symmetric
    /// under `t -> 1/t` with value 1 at `t = 1`.
    pub fn alexander(&self) -> LaurentPolynomial {
        let n = self.dim();
        if n == 0 {
            return LaurentPolynomial::one();
        }
        // det(S - k S^T) for k = 0..=n pins down the degree-n polynomial.
        let st = transpose(&self.entries);
        let values: Vec<BigRational> = (0..=n as i64)
            .map(|k| {
                let k = BigInt::from(k);
                let m: Vec<Vec<BigInt>> = (0..n)
                    .map(|i| (0..n).map(|j| &self.entries[i][j] - &k * &st[i][j]).collect())
                    .collect();
                BigRational::from_integer(det_bareiss(&m))
            })
            .collect();
        let coeffs = interpolate_integer_nodes(&values);
        let half = self.genus() as i64;
        LaurentPolynomial::from_dense(-half, coeffs).normalized()
    }

    /// `|Delta(-1)|`.
    pub fn determinant(&self) -> BigInt {
        self.alexander().eval_minus_one().abs()
    }

    /// 0 iff `Delta(-1) = +-1 (mod 8)`.
    pub fn arf(&self) -> u8 {
        let r = (self.alexander().eval_minus_one() % BigInt::from(8))
            .to_i64()
            .expect("residue fits")
            .rem_euclid(8);
        if r == 1 || r == 7 { 0 } else { 1 }
    }

    /// Block sum, modelling connected sum.
    pub fn connected_sum(&self, other: &Self) -> Self {
        let (a, b) = (self.dim(), other.dim());
        let mut entries = vec![vec![BigInt::zero(); a + b]; a + b];
        for i in 0..a {
            entries[i][..a].clone_from_slice(&self.entries[i]);
        }
        for i in 0..b {
            entries[a + i][a..].clone_from_slice(&other.entries[i]);
        }
        Self { entries }
    }

    /// Concordance inverse (mirror image with reversed orientation): `-S^T`.
    pub fn inverse(&self) -> Self {
        let entries = transpose(&self.entries)
            .into_iter()
            .map(|row| row.into_iter().map(|v| -v).collect())
            .collect();
        Self { entries }
    }

    /// Signature of the symmetrization `S + S^T`.
    pub fn ordinary_signature(&self) -> i64 {
        let n = self.dim();
        let m = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| BigRational::from_integer(&self.entries[i][j] + &self.entries[j][i]))
                    .collect()
            })
            .collect();
        rational_signature(m)
    }
}

/// Coefficients (ascending) of the polynomial taking `values[k]` at
/// `x = k`, via Newton divided differences. The values come from an
/// integer polynomial, so every coefficient is integral.
fn interpolate_integer_nodes(values: &[BigRational]) -> Vec<BigInt> {
    let n = values.len();
    let mut dd = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / BigRational::from_integer(BigInt::from(level));
        }
    }
    // Horner on the Newton form: p = dd0 + (x - 0)(dd1 + (x - 1)(dd2 + ...))
    let mut poly: Vec<BigRational> = vec![dd[n - 1].clone()];
    for i in (0..n - 1).rev() {
        let node = BigRational::from_integer(BigInt::from(i));
        let mut next = vec![BigRational::zero(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * &node;
        }
        next[0] += &dd[i];
        poly = next;
    }
    poly.into_iter()
        .map(|c| {
            assert!(c.is_integer(), "interpolated coefficient {c} is not integral");
            c.to_integer()
        })
        .collect()
}

/// Alexander polynomial of a satellite with companion `dJ`, pattern
/// polynomial `dK` and winding number `w`: `dK(t) dJ(t^w)`, renormalized.
pub fn infection_alexander(
    d_k: &LaurentPolynomial,
    d_j: &LaurentPolynomial,
    w: i64,
) -> LaurentPolynomial {
    d_k.mul(&d_j.substitute_power(w)).normalized()
}
