//! The multiquadratic field `Q(xi_1, ..., xi_n)` with `xi_j^2 = -p_j (p_j - 2)`.
//!
//! Elements are dense vectors over the basis of square-free monomials
//! `prod_{j in T} xi_j`, indexed by the bitmask of `T`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::FieldError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiQuadField {
    primes: Vec<u64>,
    /// `prod_{j in mask} xi_j^2` for every mask.
    square_products: Vec<BigInt>,
}

impl MultiQuadField {
    /// `primes` must be strictly increasing odd primes `>= 3`.
    pub fn new(primes: &[u64]) -> Result<Arc<Self>, FieldError> {
        if primes.len() > 16 {
            return Err(FieldError::InvalidField(format!("{} generators is too many", primes.len())));
        }
        for (i, &p) in primes.iter().enumerate() {
            if p < 3 || !super::is_prime(p) {
                return Err(FieldError::InvalidField(format!("{p} is not an odd prime")));
            }
            if i > 0 && primes[i - 1] >= p {
                return Err(FieldError::InvalidField("primes must be strictly increasing".into()));
            }
        }
        let radicands: Vec<BigInt> = primes.iter().map(|&p| radicand(p)).collect();
        let square_products = (0..1usize << primes.len())
            .map(|mask| {
                radicands
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| mask >> j & 1 == 1)
                    .fold(BigInt::one(), |acc, (_, r)| acc * r)
            })
            .collect();
        Ok(Arc::new(Self { primes: primes.to_vec(), square_products }))
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn rank(&self) -> usize {
        self.primes.len()
    }

    pub fn dimension(&self) -> usize {
        1 << self.primes.len()
    }
}

/// `xi^2 = -p (p - 2)`.
pub fn radicand(p: u64) -> BigInt {
    -(BigInt::from(p) * BigInt::from(p - 2))
}

#[derive(Clone, Debug)]
pub struct MultiQuadElement {
    field: Arc<MultiQuadField>,
    coords: Vec<BigRational>,
}

impl PartialEq for MultiQuadElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other) && self.coords == other.coords
    }
}

impl MultiQuadElement {
    pub fn zero(field: &Arc<MultiQuadField>) -> Self {
        Self { field: field.clone(), coords: vec![BigRational::zero(); field.dimension()] }
    }

    pub fn from_rational(field: &Arc<MultiQuadField>, q: BigRational) -> Self {
        let mut e = Self::zero(field);
        e.coords[0] = q;
        e
    }

    pub fn one(field: &Arc<MultiQuadField>) -> Self {
        Self::from_rational(field, BigRational::one())
    }

    /// The generator `xi_j`, zero-based.
    pub fn generator(field: &Arc<MultiQuadField>, j: usize) -> Self {
        assert!(j < field.rank(), "generator index out of range");
        let mut e = Self::zero(field);
        e.coords[1 << j] = BigRational::one();
        e
    }

    /// `sum coords[mask] prod_{j in mask} xi_j`.
    pub fn from_coords(field: &Arc<MultiQuadField>, coords: Vec<BigRational>) -> Result<Self, FieldError> {
        if coords.len() != field.dimension() {
            return Err(FieldError::MismatchedField);
        }
        Ok(Self { field: field.clone(), coords })
    }

    pub fn field(&self) -> &Arc<MultiQuadField> {
        &self.field
    }

    pub fn coord(&self, mask: usize) -> &BigRational {
        &self.coords[mask]
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    fn same_field(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field == other.field
    }

    fn check(&self, other: &Self) -> Result<(), FieldError> {
        if self.same_field(other) {
            Ok(())
        } else {
            Err(FieldError::MismatchedField)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(Self { field: self.field.clone(), coords })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Ok(Self { field: self.field.clone(), coords })
    }

    pub fn neg(&self) -> Self {
        Self { field: self.field.clone(), coords: self.coords.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self { field: self.field.clone(), coords: self.coords.iter().map(|a| a * q).collect() }
    }

    /// Product, reducing `xi_j^2 = -p_j (p_j - 2)`.
    pub fn mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        let mut out = vec![BigRational::zero(); self.coords.len()];
        for (a, ca) in self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (b, cb) in other.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let k = &self.field.square_products[a & b];
                out[a ^ b] += ca * cb * BigRational::from_integer(k.clone());
            }
        }
        Ok(Self { field: self.field.clone(), coords: out })
    }

    pub fn square(&self) -> Self {
        self.mul(self).expect("same field")
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Complex conjugation: every `xi_j` is purely imaginary, so monomials of
    /// odd degree change sign.
    pub fn conj(&self) -> Self {
        let coords = self
            .coords
            .iter()
            .enumerate()
            .map(|(mask, c)| if mask.count_ones() % 2 == 1 { -c } else { c.clone() })
            .collect();
        Self { field: self.field.clone(), coords }
    }

    /// True iff the element is fixed by conjugation.
    pub fn is_real(&self) -> bool {
        self.coords
            .iter()
            .enumerate()
            .all(|(mask, c)| mask.count_ones() % 2 == 0 || c.is_zero())
    }
}

pub fn mq_mul(u: &MultiQuadElement, v: &MultiQuadElement) -> Result<MultiQuadElement, FieldError> {
    u.mul(v)
}

pub fn mq_conj(u: &MultiQuadElement) -> MultiQuadElement {
    u.conj()
}

pub fn mq_is_real(u: &MultiQuadElement) -> bool {
    u.is_real()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::int;

    #[test]
    fn generator_squares_to_radicand() {
        let f = MultiQuadField::new(&[5]).unwrap();
        let xi = MultiQuadElement::generator(&f, 0);
        assert_eq!(xi.square(), MultiQuadElement::from_rational(&f, int(-15)));
    }

    #[test]
    fn conjugate_pair_product() {
        let f = MultiQuadField::new(&[5]).unwrap();
        let xi = MultiQuadElement::generator(&f, 0);
        let (a, b) = (int(3), int(2));
        let u = MultiQuadElement::from_rational(&f, a.clone()).add(&xi.scale(&b)).unwrap();
        let v = MultiQuadElement::from_rational(&f, a.clone()).sub(&xi.scale(&b)).unwrap();
        let expected = &a * &a + int(15) * &b * &b;
        assert_eq!(u.mul(&v).unwrap(), MultiQuadElement::from_rational(&f, expected));
        assert_eq!(u.conj(), v);
    }

    #[test]
    fn reality_by_degree() {
        let f = MultiQuadField::new(&[5, 13]).unwrap();
        let x1 = MultiQuadElement::generator(&f, 0);
        let x2 = MultiQuadElement::generator(&f, 1);
        assert!(MultiQuadElement::one(&f).is_real());
        assert!(!x2.is_real());
        assert!(x1.mul(&x2).unwrap().is_real());
        assert_eq!(x1.mul(&x2).unwrap().square(), MultiQuadElement::from_rational(&f, int(15 * 143)));
    }

    #[test]
    fn mismatched_fields_rejected() {
        let f = MultiQuadField::new(&[5]).unwrap();
        let g = MultiQuadField::new(&[13]).unwrap();
        let err = MultiQuadElement::one(&f).mul(&MultiQuadElement::one(&g));
        assert_eq!(err, Err(FieldError::MismatchedField));
        // structurally equal contexts interoperate
        let f2 = MultiQuadField::new(&[5]).unwrap();
        assert!(MultiQuadElement::one(&f).mul(&MultiQuadElement::one(&f2)).is_ok());
    }

    #[test]
    fn field_construction_checks() {
        assert!(MultiQuadField::new(&[5, 5]).is_err());
        assert!(MultiQuadField::new(&[13, 5]).is_err());
        assert!(MultiQuadField::new(&[9]).is_err());
        assert!(MultiQuadField::new(&[]).is_ok());
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let f = MultiQuadField::new(&[5, 13]).unwrap();
        let u = MultiQuadElement::from_rational(&f, int(1))
            .add(&MultiQuadElement::generator(&f, 1))
            .unwrap();
        let mut acc = MultiQuadElement::one(&f);
        for _ in 0..7 {
            acc = acc.mul(&u).unwrap();
        }
        assert_eq!(u.pow(7), acc);
        assert!(u.pow(0).is_one());
    }
}
