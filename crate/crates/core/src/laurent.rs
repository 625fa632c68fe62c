//! Integer Laurent polynomials in one variable `t`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial `sum c_k t^k` with arbitrary-precision integer
/// coefficients. Only nonzero coefficients are stored, so structural
/// equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    /// Builds `sum coeffs[i] t^(low + i)`.
    pub fn from_dense(low: i64, coeffs: impl IntoIterator<Item = BigInt>) -> Self {
        let mut p = Self::zero();
        for (i, c) in coeffs.into_iter().enumerate() {
            p.add_term(low + i as i64, c);
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Sum of coefficients, i.e. the value at `t = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Value at `t = -1`.
    pub fn eval_minus_one(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|(e, c)| if e.rem_euclid(2) == 0 { c.clone() } else { -c })
            .sum()
    }

    /// True iff `coeff(k) == coeff(-k)` for all `k`.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(e, c)| self.coeffs.get(&-e) == Some(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }

    /// `p(t) -> p(t^w)`.
    pub fn substitute_power(&self, w: i64) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(e, c)| (e * w, c.clone())))
    }

    /// Multiplies by `±t^k` so the result is centred on exponent zero and
    /// has a positive value at `t = 1`.
    ///
    /// A polynomial whose exponent span is odd cannot be centred; it is
    /// shifted so the lowest exponent is `-(span / 2)`.
    pub fn normalized(&self) -> Self {
        let (Some(lo), Some(hi)) = (self.min_exp(), self.max_exp()) else {
            return Self::zero();
        };
        let shift = -(lo + (hi - lo) / 2);
        let negate = self.eval_one().is_negative();
        Self::from_terms(self.coeffs.iter().map(|(e, c)| {
            let c = if negate { -c } else { c.clone() };
            (e + shift, c)
        }))
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Canonical form: ascending exponents, explicit signs, `t^-1` for
    /// negative powers and unit coefficients suppressed on non-constant
    /// terms, e.g. `2t^-1-3+2t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let mag = c.abs();
            if *e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if *e == 1 {
                f.write_str("t")?;
            } else {
                write!(f, "t^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(low: i64, cs: &[i64]) -> LaurentPolynomial {
        LaurentPolynomial::from_dense(low, cs.iter().map(|&c| BigInt::from(c)))
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(lp(-1, &[2, -3, 2]).to_string(), "2t^-1-3+2t");
        assert_eq!(lp(-1, &[1, -1, 1]).to_string(), "t^-1-1+t");
        assert_eq!(LaurentPolynomial::one().to_string(), "1");
        assert_eq!(lp(-2, &[-1, 0, 3, 0, -1]).to_string(), "-t^-2+3-t^2");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn normalization_centres_and_fixes_sign() {
        // -2t^2 + 5t - 2  ->  -2t^-1 + 5 - 2t
        let p = lp(0, &[-2, 5, -2]).normalized();
        assert_eq!(p, lp(-1, &[-2, 5, -2]));
        // -(t - 1 + t^-1) shifted by t^3
        let q = lp(2, &[-1, 1, -1]).normalized();
        assert_eq!(q, lp(-1, &[1, -1, 1]));
        assert!(q.is_symmetric());
    }

    #[test]
    fn evaluation_and_substitution() {
        let p = lp(-1, &[2, -3, 2]);
        assert_eq!(p.eval_one(), BigInt::from(1));
        assert_eq!(p.eval_minus_one(), BigInt::from(-7));
        let q = p.substitute_power(2);
        assert_eq!(q, lp(-2, &[2, 0, -3, 0, 2]));
        assert_eq!(p.substitute_power(0), LaurentPolynomial::one());
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = lp(0, &[1, 1]).mul(&lp(0, &[1, -1]));
        assert_eq!(p, lp(0, &[1, 0, -1]));
        assert_eq!(p.terms().count(), 2);
    }
}
