//! Real quadratic extensions `Q(sqrt d)`, ordered by the positive square
//! root.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::FieldError;
use crate::linalg::OrderedField;
use crate::rat::rational_sqrt;

/// `a + b sqrt(d)` for the `d` of the surrounding [`QuadField`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadReal {
    pub a: BigRational,
    pub b: BigRational,
}

impl QuadReal {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Self { a, b }
    }

    pub fn rational(a: BigRational) -> Self {
        Self { a, b: BigRational::zero() }
    }

    pub fn zero() -> Self {
        Self::rational(BigRational::zero())
    }
}

/// Arithmetic context for `Q(sqrt d)` with `d > 0`.
///
/// When `d` is the square of a rational `r` the extension is trivial; the
/// context then folds every element to `a + b r` with `b = 0` so that
/// equality stays component-wise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadField {
    d: BigRational,
    root: Option<BigRational>,
}

impl QuadField {
    pub fn new(d: BigRational) -> Result<Self, FieldError> {
        if !d.is_positive() {
            return Err(FieldError::NonPositiveRadicand(d.to_string()));
        }
        let root = rational_sqrt(&d);
        Ok(Self { d, root })
    }

    pub fn radicand(&self) -> &BigRational {
        &self.d
    }

    pub fn is_split(&self) -> bool {
        self.root.is_some()
    }

    /// Canonical form of `a + b sqrt(d)` in this context.
    pub fn element(&self, a: BigRational, b: BigRational) -> QuadReal {
        match &self.root {
            Some(r) => QuadReal::rational(a + b * r),
            None => QuadReal::new(a, b),
        }
    }

    /// `sqrt(d)` itself.
    pub fn sqrt(&self) -> QuadReal {
        self.element(BigRational::zero(), BigRational::from_integer(1.into()))
    }

    pub fn neg(&self, x: &QuadReal) -> QuadReal {
        QuadReal::new(-&x.a, -&x.b)
    }
}

/// Exact sign of `a + b sqrt(d)` for `d > 0`, by comparing `a^2` with
/// `b^2 d`.
pub fn quad_sign(x: &QuadReal, d: &BigRational) -> Ordering {
    let zero = BigRational::zero();
    let sa = x.a.cmp(&zero);
    let sb = x.b.cmp(&zero);
    match (sa, sb) {
        (s, Ordering::Equal) => s,
        (Ordering::Equal, s) => s,
        (s, t) if s == t => s,
        (sa, _) => {
            let a2 = &x.a * &x.a;
            let b2d = &x.b * &x.b * d;
            // a and b sqrt(d) have opposite signs; the larger magnitude wins
            match a2.cmp(&b2d) {
                Ordering::Greater => sa,
                Ordering::Less => sa.reverse(),
                Ordering::Equal => Ordering::Equal,
            }
        }
    }
}

impl OrderedField for QuadField {
    type Elem = QuadReal;

    fn zero(&self) -> QuadReal {
        QuadReal::zero()
    }

    fn is_zero(&self, x: &QuadReal) -> bool {
        x.a.is_zero() && x.b.is_zero()
    }

    fn add(&self, x: &QuadReal, y: &QuadReal) -> QuadReal {
        QuadReal::new(&x.a + &y.a, &x.b + &y.b)
    }

    fn sub(&self, x: &QuadReal, y: &QuadReal) -> QuadReal {
        QuadReal::new(&x.a - &y.a, &x.b - &y.b)
    }

    fn mul(&self, x: &QuadReal, y: &QuadReal) -> QuadReal {
        if x.b.is_zero() && y.b.is_zero() {
            return QuadReal::rational(&x.a * &y.a);
        }
        let a = &x.a * &y.a + &x.b * &y.b * &self.d;
        let b = &x.a * &y.b + &x.b * &y.a;
        QuadReal::new(a, b)
    }

    fn div(&self, x: &QuadReal, y: &QuadReal) -> QuadReal {
        if y.b.is_zero() {
            return QuadReal::new(&x.a / &y.a, &x.b / &y.a);
        }
        // x / y = x * conj(y) / (a^2 - b^2 d); the norm is nonzero because
        // d is not a rational square whenever b != 0 survives folding.
        let norm = &y.a * &y.a - &y.b * &y.b * &self.d;
        let conj = QuadReal::new(y.a.clone(), -&y.b);
        let num = self.mul(x, &conj);
        QuadReal::new(num.a / &norm, num.b / &norm)
    }

    fn sign(&self, x: &QuadReal) -> Ordering {
        quad_sign(x, &self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::inertia;
    use crate::rat::{int, ratio};

    #[test]
    fn signs() {
        let d = int(2);
        assert_eq!(quad_sign(&QuadReal::zero(), &d), Ordering::Equal);
        assert_eq!(quad_sign(&QuadReal::new(int(1), int(-1)), &d), Ordering::Less);
        assert_eq!(quad_sign(&QuadReal::new(int(-1), int(1)), &d), Ordering::Greater);
        assert_eq!(quad_sign(&QuadReal::new(int(-2), int(-1)), &d), Ordering::Less);
        // 3 - 2 sqrt 2 > 0 by a hair
        assert_eq!(quad_sign(&QuadReal::new(int(3), int(-2)), &d), Ordering::Greater);
        // 7 - 5 sqrt 2 < 0 since 49 < 50
        assert_eq!(quad_sign(&QuadReal::new(int(7), int(-5)), &d), Ordering::Less);
    }

    #[test]
    fn field_ops() {
        let f = QuadField::new(int(3)).unwrap();
        let x = f.element(int(1), int(1));
        let y = f.element(int(2), int(-1));
        let p = f.mul(&x, &y);
        // (1 + s)(2 - s) = 2 - 3 + s = -1 + s
        assert_eq!(p, QuadReal::new(int(-1), int(1)));
        assert_eq!(f.div(&p, &y), x);
        assert!(QuadField::new(int(0)).is_err());
    }

    #[test]
    fn square_radicand_folds() {
        let f = QuadField::new(ratio(9, 16)).unwrap();
        assert!(f.is_split());
        assert_eq!(f.sqrt(), QuadReal::rational(ratio(3, 4)));
        assert_eq!(f.element(int(1), int(4)), QuadReal::rational(int(4)));
    }

    #[test]
    fn inertia_over_extension() {
        // [[1, s], [s, 1]] with s = sqrt 2 has eigenvalues 1 +- sqrt 2
        let f = QuadField::new(int(2)).unwrap();
        let one = QuadReal::rational(int(1));
        let s = f.sqrt();
        let i = inertia(&f, vec![vec![one.clone(), s.clone()], vec![s, one]]);
        assert_eq!((i.positive, i.negative), (1, 1));
    }
}
