//! Exact arithmetic kernels: real quadratic extensions and the
//! multiquadratic fields used by the independence check.

mod multiquad;
mod quad;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use multiquad::{mq_conj, mq_is_real, mq_mul, radicand, MultiQuadElement, MultiQuadField};
pub use quad::{quad_sign, QuadField, QuadReal};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("operands belong to different fields")]
    MismatchedField,
    #[error("zero has no square class")]
    ZeroInput,
    #[error("radicand {0} is not positive")]
    NonPositiveRadicand(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization of `|n|` by trial division, ascending primes with
/// multiplicities.
pub fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        let mut e = 0;
        loop {
            let (q, r) = n.div_rem(&d);
            if !r.is_zero() {
                break;
            }
            n = q;
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d += if d == BigInt::from(2) { BigInt::one() } else { BigInt::from(2) };
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

/// The square class of `n` in `Q*/Q*^2` as the set of primes with odd
/// exponent, with `-1` standing for the sign.
pub fn square_class(n: &BigInt) -> Result<BTreeSet<BigInt>, FieldError> {
    if n.is_zero() {
        return Err(FieldError::ZeroInput);
    }
    let mut class: BTreeSet<BigInt> = factorize(n)
        .into_iter()
        .filter(|(_, e)| e % 2 == 1)
        .map(|(p, _)| p)
        .collect();
    if n.is_negative() {
        class.insert(BigInt::from(-1));
    }
    Ok(class)
}

/// Rank over `F_2` of the square classes of `integers` in `Q*/Q*^2`.
pub fn square_class_rank(integers: &[BigInt]) -> Result<usize, FieldError> {
    // Gaussian elimination over F_2 on sets, pivoting on the largest prime.
    let mut basis: Vec<BTreeSet<BigInt>> = Vec::new();
    for n in integers {
        let mut v = square_class(n)?;
        loop {
            let Some(top) = v.iter().next_back().cloned() else { break };
            match basis.iter().find(|b| b.iter().next_back() == Some(&top)) {
                Some(b) => v = v.symmetric_difference(b).cloned().collect(),
                None => {
                    basis.push(v);
                    break;
                }
            }
        }
    }
    Ok(basis.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize(&BigInt::from(360)), vec![
            (BigInt::from(2), 3),
            (BigInt::from(3), 2),
            (BigInt::from(5), 1)
        ]);
        assert_eq!(factorize(&BigInt::from(-143)), vec![(BigInt::from(11), 1), (BigInt::from(13), 1)]);
        assert!(factorize(&BigInt::from(1)).is_empty());
        assert!(is_prime(17) && !is_prime(15) && !is_prime(1));
    }

    #[test]
    fn ranks() {
        assert_eq!(square_class_rank(&ints(&[15])), Ok(1));
        assert_eq!(square_class_rank(&ints(&[15, 143])), Ok(2));
        assert_eq!(square_class_rank(&ints(&[15, 60])), Ok(1));
        assert_eq!(square_class_rank(&ints(&[4, 9])), Ok(0));
        // 6 = 2 * 3 depends on 2 and 3
        assert_eq!(square_class_rank(&ints(&[2, 3, 6])), Ok(2));
        assert_eq!(square_class_rank(&ints(&[-1, -15, 15])), Ok(2));
        assert_eq!(square_class_rank(&ints(&[3, 0])), Err(FieldError::ZeroInput));
    }
}
